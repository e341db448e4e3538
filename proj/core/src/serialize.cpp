#include "numdec/serialize.hpp"

#include <algorithm>
#include <sstream>

#include <nlohmann/json.hpp>

namespace numdec {

namespace {

using Json = nlohmann::ordered_json;

Json trace_row_json(const TraceRow& row) {
  Json j;
  j["start"] = row.span.start;
  j["end"] = row.span.end;
  j["text"] = row.text;
  j["criterion"] = row.criterion;
  j["verdict"] = row.verdict;
  j["cp_before"] = row.cp_before;
  j["cp_after"] = row.cp_after;
  j["unpacked"] = row.unpacked;
  return j;
}

Json sample_json(const Sample& sample) {
  Json j;
  j["args"] = sample.args;
  j["value"] = sample.value;
  return j;
}

Json fit_json(const FitOutcome& outcome) {
  Json j;
  j["status"] = std::string(to_string(outcome.status));
  if (outcome.equation) {
    j["c0"] = outcome.equation->constant;
    j["coeffs"] = outcome.equation->coefficients;
  }
  return j;
}

std::string csv_field(std::string_view text) {
  if (text.find_first_of(",\"\n") == std::string_view::npos) return std::string(text);
  std::string quoted = "\"";
  for (char c : text) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

}  // namespace

std::string decomposition_text(const Decomposition& d) {
  std::string out = d.root.rendered();
  out += '(';
  for (std::size_t i = 0; i < d.args.size(); ++i) {
    if (i > 0) out += ", ";
    out += std::to_string(d.args[i].value);
  }
  out += ')';
  return out;
}

std::string decomposition_json(const Decomposition& d, std::string_view language_id,
                               bool include_trace) {
  Json j;
  j["word"] = d.word;
  j["value"] = d.value;
  j["language"] = std::string(language_id);
  j["engine"] = std::string(engine_name(d.engine));
  j["root"] = d.root.rendered();
  j["arity"] = d.args.size();
  j["args"] = Json::array();
  for (const DecompositionArg& arg : d.args) {
    Json a;
    a["start"] = arg.span.start;
    a["end"] = arg.span.end;
    a["text"] = arg.text;
    a["value"] = arg.value;
    j["args"].push_back(std::move(a));
  }
  if (include_trace) {
    j["trace"] = Json::array();
    for (const TraceRow& row : d.trace) j["trace"].push_back(trace_row_json(row));
  }
  return j.dump(2) + "\n";
}

std::string trace_json_lines(std::span<const TraceRow> rows) {
  std::string out;
  for (const TraceRow& row : rows) {
    out += trace_row_json(row).dump();
    out += '\n';
  }
  return out;
}

std::string trace_table(std::span<const TraceRow> rows) {
  std::ostringstream out;
  out << "span\tsubstring\tcriterion\tverdict\tcheckpoint\tunpacked\n";
  for (const TraceRow& row : rows) {
    out << '[' << row.span.start << ',' << row.span.end << ")\t" << row.text << '\t'
        << row.criterion << '\t' << (row.verdict ? "yes" : "no") << '\t' << row.cp_before
        << "->" << row.cp_after << "\t{";
    for (std::size_t i = 0; i < row.unpacked.size(); ++i) {
      if (i > 0) out << ", ";
      out << row.unpacked[i];
    }
    out << "}\n";
  }
  return out.str();
}

std::string duplicate_report_json(const NumeralDictionary& dict) {
  Json j = Json::array();
  for (const Duplicate& dup : dict.duplicates()) {
    Json d;
    d["numeral"] = dup.numeral;
    d["numbers"] = dup.numbers;
    j.push_back(std::move(d));
  }
  return j.dump(2) + "\n";
}

std::string lexicon_json(std::string_view language_id, EngineVersion engine,
                         std::span<const LexiconEntry> entries,
                         std::span<const FitOutcome> outcomes) {
  Json j;
  j["language"] = std::string(language_id);
  j["engine"] = std::string(engine_name(engine));
  j["entries"] = Json::array();
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const LexiconEntry& entry = entries[i];
    Json e;
    e["root"] = entry.root.rendered();
    e["arity"] = entry.arity();
    e["samples"] = Json::array();
    for (const Sample& sample : entry.samples) e["samples"].push_back(sample_json(sample));
    e["sources"] = entry.source_words;
    if (entry.has_conflict()) e["conflicts"] = entry.conflicts;
    if (i < outcomes.size()) e["fit"] = fit_json(outcomes[i]);
    j["entries"].push_back(std::move(e));
  }
  return j.dump(2) + "\n";
}

std::string report_csv(std::span<const LanguageEvaluation> evaluations,
                       std::span<const SkippedFile> skipped) {
  struct Row {
    std::string language;
    std::string text;
  };
  std::vector<Row> rows;
  rows.reserve(evaluations.size() + skipped.size());
  for (const LanguageEvaluation& evaluation : evaluations) {
    const LanguageReport& r = evaluation.report;
    std::string line = csv_field(r.language_id);
    line += ',';
    line += engine_name(r.engine);
    line += ',' + std::to_string(r.dataset_size);
    line += ',' + std::to_string(r.lexicon_size);
    line += ',' + std::to_string(r.fit_failures.size());
    line += r.degenerate ? ",true" : ",false";
    line += ",ok";
    rows.push_back(Row{r.language_id, std::move(line)});
  }
  for (const SkippedFile& skip : skipped) {
    rows.push_back(Row{skip.language_id, csv_field(skip.language_id) + ",,,,,,skipped"});
  }
  std::sort(rows.begin(), rows.end(),
            [](const Row& a, const Row& b) { return a.language < b.language; });
  std::string out = "language,engine,dataset_size,lexicon_size,failures,degenerate,status\n";
  for (const Row& row : rows) {
    out += row.text;
    out += '\n';
  }
  return out;
}

std::string comparison_csv(std::span<const ComparisonRow> rows,
                           std::span<const SkippedFile> skipped) {
  struct Line {
    std::string language;
    std::string text;
  };
  std::vector<Line> lines;
  lines.reserve(rows.size() + skipped.size());
  for (const ComparisonRow& row : rows) {
    lines.push_back(Line{row.language_id,
                         csv_field(row.language_id) + ',' + std::to_string(row.size_v2) + ',' +
                             std::to_string(row.size_v6) + ',' + row.ratio() + ",ok"});
  }
  for (const SkippedFile& skip : skipped) {
    lines.push_back(Line{skip.language_id, csv_field(skip.language_id) + ",,,,skipped"});
  }
  std::sort(lines.begin(), lines.end(),
            [](const Line& a, const Line& b) { return a.language < b.language; });
  std::string out = "language,size_v2,size_v6,ratio,status\n";
  for (const Line& line : lines) {
    out += line.text;
    out += '\n';
  }
  return out;
}

}  // namespace numdec
