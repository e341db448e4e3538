#include "numdec/dictionary.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "numdec/errors.hpp"
#include "numdec/text.hpp"

namespace numdec {

namespace {

std::string_view rtrim(std::string_view s) {
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r' ||
                        s.back() == '\n' || s.back() == '\f' || s.back() == '\v')) {
    s.remove_suffix(1);
  }
  return s;
}

std::int64_t parse_number(std::string_view text, std::size_t line_no) {
  std::int64_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw ParseError("line " + std::to_string(line_no) + ": not a decimal number: '" +
                     std::string(text) + "'");
  }
  return value;
}

std::vector<std::pair<std::int64_t, std::string>> parse_tsv(std::string_view content) {
  std::vector<std::pair<std::int64_t, std::string>> entries;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= content.size()) {
    const std::size_t eol = content.find('\n', pos);
    std::string_view line = (eol == std::string_view::npos) ? content.substr(pos)
                                                            : content.substr(pos, eol - pos);
    pos = (eol == std::string_view::npos) ? content.size() + 1 : eol + 1;
    ++line_no;
    if (rtrim(line).empty()) continue;
    const std::size_t tab = line.find('\t');
    if (tab == std::string_view::npos) {
      throw ParseError("line " + std::to_string(line_no) + ": missing TAB separator");
    }
    const std::int64_t number = parse_number(line.substr(0, tab), line_no);
    const std::string_view numeral = rtrim(line.substr(tab + 1));
    if (numeral.empty()) {
      throw ParseError("line " + std::to_string(line_no) + ": empty numeral");
    }
    entries.emplace_back(number, std::string(numeral));
  }
  return entries;
}

std::vector<std::pair<std::int64_t, std::string>> parse_json(std::string_view content,
                                                             std::string& language_id) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(content);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON dictionary: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("entries") || !doc["entries"].is_object()) {
    throw ParseError("JSON dictionary must be an object with an \"entries\" object");
  }
  if (language_id.empty() && doc.contains("language") && doc["language"].is_string()) {
    language_id = doc["language"].get<std::string>();
  }
  std::vector<std::pair<std::int64_t, std::string>> entries;
  std::size_t item_no = 0;
  for (const auto& [key, value] : doc["entries"].items()) {
    ++item_no;
    if (!value.is_string()) {
      throw ParseError("entry " + std::to_string(item_no) + ": numeral must be a string");
    }
    const std::int64_t number = parse_number(key, item_no);
    const std::string numeral{rtrim(value.get<std::string>())};
    if (numeral.empty()) {
      throw ParseError("entry " + std::to_string(item_no) + ": empty numeral");
    }
    entries.emplace_back(number, numeral);
  }
  return entries;
}

}  // namespace

NumeralDictionary::NumeralDictionary(std::string language_id,
                                     std::vector<std::pair<std::int64_t, std::string>> entries)
    : language_id_(std::move(language_id)) {
  if (entries.empty()) throw ParseError("empty dataset");
  for (const auto& [number, numeral] : entries) {
    if (number < 1) {
      throw ParseError("number " + std::to_string(number) + " is not positive");
    }
    if (numeral.empty()) throw ParseError("empty numeral for " + std::to_string(number));
    const auto [it, inserted] = forward_.emplace(number, numeral);
    if (!inserted) {
      if (it->second == numeral) continue;  // exact repeat of an existing record
      throw ParseError("number " + std::to_string(number) + " maps to two numerals: '" +
                       it->second + "' and '" + numeral + "'");
    }
  }
  // Reverse index; a numeral naming several numbers keeps the smallest and is
  // reported as a duplicate.
  std::map<std::u32string, std::vector<std::int64_t>> by_numeral;
  for (const auto& [number, numeral] : forward_) {
    by_numeral[decode_utf8(numeral)].push_back(number);
  }
  for (auto& [numeral, numbers] : by_numeral) {
    std::sort(numbers.begin(), numbers.end());
    reverse_.emplace(numeral, numbers.front());
    if (numbers.size() > 1) {
      duplicates_.push_back(Duplicate{encode_utf8(numeral), numbers});
    }
  }
}

std::optional<std::int64_t> NumeralDictionary::value_of(std::u32string_view numeral) const {
  const auto it = reverse_.find(std::u32string(numeral));
  if (it == reverse_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::int64_t> NumeralDictionary::value_of(std::string_view numeral_utf8) const {
  return value_of(decode_utf8(numeral_utf8));
}

std::string NumeralDictionary::to_tsv() const {
  std::string out;
  for (const auto& [number, numeral] : forward_) {
    out += std::to_string(number);
    out += '\t';
    out += numeral;
    out += '\n';
  }
  return out;
}

NumeralDictionary parse_dictionary(std::string_view content, std::string language_id,
                                   const LoadOptions& options) {
  std::size_t first = content.find_first_not_of(" \t\r\n");
  std::vector<std::pair<std::int64_t, std::string>> entries;
  if (first != std::string_view::npos && content[first] == '{') {
    entries = parse_json(content, language_id);
  } else {
    entries = parse_tsv(content);
  }
  if (options.normalize_nfc) {
    for (auto& [number, numeral] : entries) numeral = normalize_nfc(numeral);
  }
  return NumeralDictionary(std::move(language_id), std::move(entries));
}

NumeralDictionary load_dictionary(const std::filesystem::path& path, std::string language_id,
                                  const LoadOptions& options) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_dictionary(buffer.str(), std::move(language_id), options);
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

}  // namespace numdec
