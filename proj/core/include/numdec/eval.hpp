#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "numdec/decompose.hpp"
#include "numdec/dictionary.hpp"
#include "numdec/fitter.hpp"
#include "numdec/lexicon.hpp"

namespace numdec {

struct FitFailure {
  std::string root;  // rendered
  FitStatus status = FitStatus::Inconsistent;

  friend bool operator==(const FitFailure&, const FitFailure&) = default;
};

struct LanguageReport {
  std::string language_id;
  EngineVersion engine = EngineVersion::V6;
  std::size_t dataset_size = 0;
  std::size_t lexicon_size = 0;
  std::vector<FitFailure> fit_failures;   // non-exact outcomes only
  std::vector<Duplicate> duplicate_flags;
  bool degenerate = false;  // lexicon_size == dataset_size
};

/// Report plus the fitted lexicon it was computed from.
struct LanguageEvaluation {
  LanguageReport report;
  std::vector<LexiconEntry> entries;   // sorted (arity, rendered root)
  std::vector<FitOutcome> outcomes;    // parallel to entries
};

LanguageEvaluation evaluate_language_full(const NumeralDictionary& dict, EngineVersion engine);
LanguageReport evaluate_language(const NumeralDictionary& dict, EngineVersion engine);

struct ComparisonRow {
  std::string language_id;
  std::size_t size_v2 = 0;
  std::size_t size_v6 = 0;

  /// size_v6 / size_v2, exactly rounded half-up to four decimals.
  std::string ratio() const;

  friend bool operator==(const ComparisonRow&, const ComparisonRow&) = default;
};

ComparisonRow compare_versions(const NumeralDictionary& dict);

/// Exact 4-decimal rendering of numerator/denominator (denominator > 0).
std::string format_ratio(std::uint64_t numerator, std::uint64_t denominator);

/// Buckets non-exact outcomes for human review:
///   Conflict                    -> "incorrect input data"
///   Inconsistent/NonIntegerOnly -> "misinterpretation or bad decomposition"
/// Values are (language_id, rendered root) pairs. Clean reports map to {}.
std::map<std::string, std::vector<std::pair<std::string, std::string>>> classify_failures(
    std::span<const LanguageReport> reports);

// ---------------------------------------------------------------------------
// Synthetic oracle language: a fully regular positional system whose correct
// decomposition is known by construction.

struct SynthRules {
  std::string tens_suffix = "-t";
  std::string hundreds_suffix = "-h";
  std::string joiner = " ";
};

/// Generates numerals 1 .. base^3 - 1 over `digit_words` (one word per digit
/// 1..base-1). Throws GenerationError when base < 3, when the digit list has
/// the wrong size, or when any word overlaps another (such accidents would
/// plant unintended sub-numerals, which the oracle must exclude).
NumeralDictionary synth_language(int base, const std::vector<std::string>& digit_words,
                                 const SynthRules& rules = {});

// ---------------------------------------------------------------------------
// Directory runs (the CLI's evaluate/compare). Languages are discovered as
// <data_dir>/<language_id>.tsv or .json and may be processed concurrently;
// all results are sorted by language_id, so concurrency never changes output.

struct SkippedFile {
  std::string language_id;
  std::string reason;
};

std::vector<std::pair<std::string, std::filesystem::path>> discover_languages(
    const std::filesystem::path& data_dir);

struct CorpusEvaluation {
  std::vector<LanguageEvaluation> evaluations;  // sorted by language_id
  std::vector<SkippedFile> skipped;             // sorted by language_id
};

CorpusEvaluation evaluate_directory(const std::filesystem::path& data_dir, EngineVersion engine,
                                    const LoadOptions& options = {}, unsigned jobs = 1);

struct CorpusComparison {
  std::vector<ComparisonRow> rows;
  std::vector<SkippedFile> skipped;
};

CorpusComparison compare_directory(const std::filesystem::path& data_dir,
                                   const LoadOptions& options = {}, unsigned jobs = 1);

}  // namespace numdec
