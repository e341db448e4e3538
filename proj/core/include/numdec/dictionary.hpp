#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace numdec {

/// A numeral string that names more than one number in the source data.
/// Such collisions are surfaced, not rejected; lookups resolve to the
/// smallest colliding number.
struct Duplicate {
  std::string numeral;
  std::vector<std::int64_t> numbers;  // ascending

  friend bool operator==(const Duplicate&, const Duplicate&) = default;
};

struct LoadOptions {
  bool normalize_nfc = false;
};

/// Immutable two-way map between numbers and numeral words for one language.
/// Safe to share across concurrent decomposition runs.
class NumeralDictionary {
 public:
  /// `entries` must have unique numbers >= 1 and nonempty numerals.
  NumeralDictionary(std::string language_id,
                    std::vector<std::pair<std::int64_t, std::string>> entries);

  const std::string& language_id() const { return language_id_; }
  std::size_t size() const { return forward_.size(); }

  /// number -> numeral (UTF-8, verbatim as loaded).
  const std::map<std::int64_t, std::string>& forward() const { return forward_; }

  /// Codepoint-exact reverse lookup. Absent is a normal outcome; a collision
  /// resolves to the smallest number.
  std::optional<std::int64_t> value_of(std::u32string_view numeral) const;
  std::optional<std::int64_t> value_of(std::string_view numeral_utf8) const;

  const std::vector<Duplicate>& duplicates() const { return duplicates_; }

  /// TSV rendering, sorted by number; reloading it reproduces this dictionary.
  std::string to_tsv() const;

 private:
  std::string language_id_;
  std::map<std::int64_t, std::string> forward_;
  std::unordered_map<std::u32string, std::int64_t> reverse_;
  std::vector<Duplicate> duplicates_;
};

/// Parses dictionary content. Two formats are accepted and sniffed from the
/// first non-space byte:
///   - TSV: one "<number>\t<numeral>" record per line;
///   - JSON: {"language": "...", "entries": {"<number>": "<numeral>", ...}}.
/// Only trailing line whitespace is trimmed; numerals are otherwise verbatim.
NumeralDictionary parse_dictionary(std::string_view content, std::string language_id,
                                   const LoadOptions& options = {});

NumeralDictionary load_dictionary(const std::filesystem::path& path, std::string language_id,
                                  const LoadOptions& options = {});

}  // namespace numdec
