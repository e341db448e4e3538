#include "numdec/eval.hpp"

#include <algorithm>
#include <future>
#include <set>

#include "numdec/errors.hpp"
#include "numdec/text.hpp"

namespace numdec {

LanguageEvaluation evaluate_language_full(const NumeralDictionary& dict, EngineVersion engine) {
  std::vector<Decomposition> decompositions;
  decompositions.reserve(dict.size());
  for (const auto& [number, numeral] : dict.forward()) {
    decompositions.push_back(decompose_with_value(dict, numeral, number, engine));
  }
  LanguageEvaluation evaluation;
  evaluation.entries = build_lexicon(decompositions);
  evaluation.outcomes.reserve(evaluation.entries.size());
  for (const LexiconEntry& entry : evaluation.entries) {
    evaluation.outcomes.push_back(fit_affine(entry.samples, entry.arity()));
  }

  LanguageReport& report = evaluation.report;
  report.language_id = dict.language_id();
  report.engine = engine;
  report.dataset_size = dict.size();
  report.lexicon_size = evaluation.entries.size();
  for (std::size_t i = 0; i < evaluation.entries.size(); ++i) {
    if (!evaluation.outcomes[i].exact()) {
      report.fit_failures.push_back(
          FitFailure{evaluation.entries[i].root.rendered(), evaluation.outcomes[i].status});
    }
  }
  report.duplicate_flags = dict.duplicates();
  report.degenerate = report.lexicon_size == report.dataset_size;
  return evaluation;
}

LanguageReport evaluate_language(const NumeralDictionary& dict, EngineVersion engine) {
  return evaluate_language_full(dict, engine).report;
}

std::string format_ratio(std::uint64_t numerator, std::uint64_t denominator) {
  const std::uint64_t scaled = numerator * 10000;
  std::uint64_t quotient = scaled / denominator;
  if (2 * (scaled % denominator) >= denominator) ++quotient;
  std::string fraction = std::to_string(quotient % 10000);
  fraction.insert(0, 4 - fraction.size(), '0');
  return std::to_string(quotient / 10000) + "." + fraction;
}

std::string ComparisonRow::ratio() const { return format_ratio(size_v6, size_v2); }

ComparisonRow compare_versions(const NumeralDictionary& dict) {
  ComparisonRow row;
  row.language_id = dict.language_id();
  row.size_v2 = evaluate_language(dict, EngineVersion::V2).lexicon_size;
  row.size_v6 = evaluate_language(dict, EngineVersion::V6).lexicon_size;
  return row;
}

std::map<std::string, std::vector<std::pair<std::string, std::string>>> classify_failures(
    std::span<const LanguageReport> reports) {
  std::map<std::string, std::vector<std::pair<std::string, std::string>>> buckets;
  for (const LanguageReport& report : reports) {
    for (const FitFailure& failure : report.fit_failures) {
      const char* bucket = failure.status == FitStatus::Conflict
                               ? "incorrect input data"
                               : "misinterpretation or bad decomposition";
      buckets[bucket].emplace_back(report.language_id, failure.root);
    }
  }
  return buckets;
}

// ---------------------------------------------------------------------------

NumeralDictionary synth_language(int base, const std::vector<std::string>& digit_words,
                                 const SynthRules& rules) {
  if (base < 3) {
    throw GenerationError("synth_language: base must be at least 3; a base-2 system sits on "
                          "the doubling criterion's boundary");
  }
  if (digit_words.size() != static_cast<std::size_t>(base - 1)) {
    throw GenerationError("synth_language: need one digit word per digit 1.." +
                          std::to_string(base - 1));
  }
  for (const std::string& word : digit_words) {
    if (word.empty()) throw GenerationError("synth_language: empty digit word");
  }
  for (std::size_t i = 0; i < digit_words.size(); ++i) {
    for (std::size_t j = 0; j < digit_words.size(); ++j) {
      if (i != j && digit_words[j].find(digit_words[i]) != std::string::npos) {
        throw GenerationError("synth_language: digit word '" + digit_words[i] +
                              "' overlaps '" + digit_words[j] + "'");
      }
    }
  }

  const auto digit = [&](std::int64_t d) { return digit_words[static_cast<std::size_t>(d - 1)]; };
  const std::int64_t b = base;
  std::vector<std::pair<std::int64_t, std::string>> entries;
  const auto numeral_of = [&](std::int64_t n) {
    const std::int64_t hundreds = n / (b * b);
    const std::int64_t rest = n % (b * b);
    const std::int64_t tens = rest / b;
    const std::int64_t units = rest % b;
    std::string word;
    if (hundreds > 0) {
      word = digit(hundreds) + rules.hundreds_suffix;
      if (rest > 0) word += rules.joiner;
    }
    if (tens > 0) {
      word += digit(tens) + rules.tens_suffix;
      if (units > 0) word += rules.joiner;
    }
    if (units > 0) word += digit(units);
    return word;
  };
  for (std::int64_t n = 1; n < b * b * b; ++n) entries.emplace_back(n, numeral_of(n));

  NumeralDictionary dict("synthetic", std::move(entries));

  // Every dictionary-resolvable substring of every numeral must be one of the
  // constituents implied by the construction (digits, suffixed digits, the
  // trailing sub-numeral, and the structural prefixes that are themselves
  // numerals); any other hit is an accidental embedding the oracle must not
  // contain.
  const auto cp_len = [](const std::string& s) { return decode_utf8(s).size(); };
  const std::size_t joiner_len = cp_len(rules.joiner);
  const std::size_t tens_suffix_len = cp_len(rules.tens_suffix);
  for (const auto& [n, word] : dict.forward()) {
    const std::u32string u32 = decode_utf8(word);
    const std::size_t len = u32.size();
    const std::int64_t hundreds = n / (b * b);
    const std::int64_t rest = n % (b * b);
    const std::int64_t tens = rest / b;
    const std::int64_t units = rest % b;
    std::set<std::pair<std::size_t, std::size_t>> expected;
    expected.emplace(0, len);
    std::size_t rest_off = 0;
    if (hundreds > 0) {
      const std::size_t digit_len = cp_len(digit(hundreds));
      const std::size_t h_end = digit_len + cp_len(rules.hundreds_suffix);
      expected.emplace(0, digit_len);
      expected.emplace(0, h_end);
      if (rest > 0) {
        rest_off = h_end + joiner_len;
        expected.emplace(rest_off, len);
      }
    }
    if (rest > 0) {
      if (tens > 0) {
        const std::size_t digit_len = cp_len(digit(tens));
        const std::size_t t_end = rest_off + digit_len + tens_suffix_len;
        expected.emplace(rest_off, rest_off + digit_len);
        expected.emplace(rest_off, t_end);
        if (hundreds > 0) {
          expected.emplace(0, rest_off + digit_len);  // hundreds + bare digit
          expected.emplace(0, t_end);                 // hundreds + tens
        }
        if (units > 0) expected.emplace(t_end + joiner_len, len);
      } else {
        expected.emplace(rest_off, len);
      }
    }
    for (std::size_t start = 0; start < len; ++start) {
      for (std::size_t end = start + 1; end <= len; ++end) {
        if (!dict.value_of(std::u32string_view(u32).substr(start, end - start))) continue;
        if (!expected.count({start, end})) {
          throw GenerationError("synth_language: accidental sub-numeral '" +
                                encode_utf8(std::u32string_view(u32).substr(start, end - start)) +
                                "' inside '" + word + "'");
        }
      }
    }
  }
  return dict;
}

// ---------------------------------------------------------------------------

std::vector<std::pair<std::string, std::filesystem::path>> discover_languages(
    const std::filesystem::path& data_dir) {
  std::vector<std::pair<std::string, std::filesystem::path>> found;
  if (!std::filesystem::is_directory(data_dir)) {
    throw ParseError("not a data directory: " + data_dir.string());
  }
  for (const auto& entry : std::filesystem::directory_iterator(data_dir)) {
    if (!entry.is_regular_file()) continue;
    const auto ext = entry.path().extension();
    if (ext != ".tsv" && ext != ".json") continue;
    found.emplace_back(entry.path().stem().string(), entry.path());
  }
  std::sort(found.begin(), found.end());
  return found;
}

namespace {

// Runs `work` over languages with at most `jobs` concurrent tasks and sorted,
// concurrency-independent results.
template <typename Result, typename Work>
std::pair<std::vector<Result>, std::vector<SkippedFile>> run_languages(
    const std::filesystem::path& data_dir, const LoadOptions& options, unsigned jobs,
    Work&& work) {
  const auto languages = discover_languages(data_dir);
  std::vector<std::optional<Result>> results(languages.size());
  std::vector<std::optional<SkippedFile>> skips(languages.size());
  const auto task = [&](std::size_t i) {
    const auto& [language_id, path] = languages[i];
    try {
      NumeralDictionary dict = load_dictionary(path, language_id, options);
      results[i] = work(dict);
    } catch (const ParseError& e) {
      skips[i] = SkippedFile{language_id, e.what()};
    }
  };
  if (jobs <= 1) {
    for (std::size_t i = 0; i < languages.size(); ++i) task(i);
  } else {
    std::vector<std::future<void>> pending;
    for (std::size_t i = 0; i < languages.size(); ++i) {
      pending.push_back(std::async(std::launch::async, task, i));
      if (pending.size() == jobs) {
        for (auto& f : pending) f.get();
        pending.clear();
      }
    }
    for (auto& f : pending) f.get();
  }
  std::pair<std::vector<Result>, std::vector<SkippedFile>> out;
  for (std::size_t i = 0; i < languages.size(); ++i) {
    if (results[i]) out.first.push_back(std::move(*results[i]));
    if (skips[i]) out.second.push_back(std::move(*skips[i]));
  }
  return out;
}

}  // namespace

CorpusEvaluation evaluate_directory(const std::filesystem::path& data_dir, EngineVersion engine,
                                    const LoadOptions& options, unsigned jobs) {
  auto [evaluations, skipped] = run_languages<LanguageEvaluation>(
      data_dir, options, jobs,
      [&](const NumeralDictionary& dict) { return evaluate_language_full(dict, engine); });
  return CorpusEvaluation{std::move(evaluations), std::move(skipped)};
}

CorpusComparison compare_directory(const std::filesystem::path& data_dir,
                                   const LoadOptions& options, unsigned jobs) {
  auto [rows, skipped] = run_languages<ComparisonRow>(
      data_dir, options, jobs,
      [&](const NumeralDictionary& dict) { return compare_versions(dict); });
  return CorpusComparison{std::move(rows), std::move(skipped)};
}

}  // namespace numdec
