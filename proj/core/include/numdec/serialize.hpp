#pragma once

#include <span>
#include <string>

#include "numdec/decompose.hpp"
#include "numdec/dictionary.hpp"
#include "numdec/eval.hpp"

namespace numdec {

// All output is UTF-8 with LF line ends and stable field order, so repeated
// runs are byte-identical.

/// "root(arg1, arg2)" presentation, e.g. "_ty-_(6, 9)" or "veinticinco()".
std::string decomposition_text(const Decomposition& d);

std::string decomposition_json(const Decomposition& d, std::string_view language_id,
                               bool include_trace);

/// One compact JSON object per trace row, newline-terminated.
std::string trace_json_lines(std::span<const TraceRow> rows);

/// Human-readable step table mirroring the row layout of the trace.
std::string trace_table(std::span<const TraceRow> rows);

/// [{"numeral": ..., "numbers": [...]}, ...]
std::string duplicate_report_json(const NumeralDictionary& dict);

/// Lexicon with fitted equations:
/// {"language", "engine", "entries": [{root, arity, samples, sources, fit}]}.
std::string lexicon_json(std::string_view language_id, EngineVersion engine,
                         std::span<const LexiconEntry> entries,
                         std::span<const FitOutcome> outcomes);

/// header: language,engine,dataset_size,lexicon_size,failures,degenerate,status
std::string report_csv(std::span<const LanguageEvaluation> evaluations,
                       std::span<const SkippedFile> skipped);

/// header: language,size_v2,size_v6,ratio,status
std::string comparison_csv(std::span<const ComparisonRow> rows,
                           std::span<const SkippedFile> skipped);

}  // namespace numdec
