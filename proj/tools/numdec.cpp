// numdec: decompose numeral words, build root lexicons with fitted integer
// affine equations, and report lexicon sizes across whole language datasets.
//
// Commands: validate, decompose, lexicon, evaluate, compare.
// Exit codes: 0 success, 1 environment or data error, 2 domain error
// (e.g. a word the dictionary does not contain).

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "numdec/decompose.hpp"
#include "numdec/dictionary.hpp"
#include "numdec/errors.hpp"
#include "numdec/eval.hpp"
#include "numdec/serialize.hpp"
#include "numdec/text.hpp"

namespace {

using namespace numdec;

struct CommonOptions {
  std::string data_dir = "data";
  bool normalize_nfc = false;

  LoadOptions load_options() const { return LoadOptions{normalize_nfc}; }
};

void add_common(CLI::App* cmd, CommonOptions& common) {
  cmd->add_option("--data", common.data_dir, "Directory with <language>.tsv/.json datasets")
      ->capture_default_str();
  cmd->add_flag("--normalize-nfc", common.normalize_nfc,
                "Apply Unicode NFC to numerals at load time");
}

NumeralDictionary load_language(const CommonOptions& common, const std::string& language) {
  const std::filesystem::path dir{common.data_dir};
  for (const char* ext : {".tsv", ".json"}) {
    const auto path = dir / (language + ext);
    if (std::filesystem::exists(path)) {
      return load_dictionary(path, language, common.load_options());
    }
  }
  throw ParseError("no dataset for language '" + language + "' under " + dir.string());
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write " + path.string());
  out << content;
  if (!out) throw ParseError("failed writing " + path.string());
}

EngineVersion parse_engine(const std::string& name) {
  const auto engine = engine_from_name(name);
  if (!engine || *engine == EngineVersion::V1) {
    throw ParseError("unsupported engine '" + name + "' (use v2 or v6)");
  }
  return *engine;
}

int cmd_validate(const CommonOptions& common, const std::string& language) {
  std::vector<std::pair<std::string, std::filesystem::path>> files;
  if (!language.empty()) {
    files.emplace_back(language, "");
  } else {
    files = discover_languages(common.data_dir);
  }
  std::string out = "[";
  bool first = true;
  for (const auto& [lang, path] : files) {
    const auto dict = path.empty() ? load_language(common, lang)
                                   : load_dictionary(path, lang, common.load_options());
    std::string report = duplicate_report_json(dict);
    if (!report.empty() && report.back() == '\n') report.pop_back();
    out += first ? "\n" : ",\n";
    out += "  {\"language\": \"" + lang + "\", \"entries\": " + std::to_string(dict.size()) +
           ", \"duplicates\": " + report + "}";
    first = false;
  }
  out += first ? "]\n" : "\n]\n";
  std::cout << out;
  return 0;
}

int cmd_decompose(const CommonOptions& common, const std::string& language,
                  const std::string& word, const std::string& engine_opt, bool trace,
                  bool json) {
  const auto dict = load_language(common, language);
  const EngineVersion engine = parse_engine(engine_opt);
  const std::string query = common.normalize_nfc ? normalize_nfc(word) : word;
  const auto d = decompose(dict, query, engine, trace ? TraceMode::On : TraceMode::Off);
  if (json) {
    std::cout << decomposition_json(d, language, trace);
  } else {
    if (trace) std::cout << trace_table(d.trace);
    std::cout << decomposition_text(d) << "\n";
  }
  return 0;
}

int cmd_lexicon(const CommonOptions& common, const std::string& language,
                const std::string& engine_opt, std::string out_path) {
  const auto dict = load_language(common, language);
  const EngineVersion engine = parse_engine(engine_opt);
  const auto evaluation = evaluate_language_full(dict, engine);
  if (out_path.empty()) out_path = language + ".lexicon.json";
  write_file(out_path,
             lexicon_json(language, engine, evaluation.entries, evaluation.outcomes));
  std::cout << evaluation.entries.size() << " entries\n";
  return 0;
}

int cmd_evaluate(const CommonOptions& common, const std::string& engine_opt,
                 const std::string& out_path, const std::string& lexicon_dir, unsigned jobs) {
  const EngineVersion engine = parse_engine(engine_opt);
  const auto result = evaluate_directory(common.data_dir, engine, common.load_options(), jobs);
  for (const auto& skip : result.skipped) {
    std::cerr << "warning: skipping " << skip.language_id << ": " << skip.reason << "\n";
  }
  write_file(out_path, report_csv(result.evaluations, result.skipped));
  if (!lexicon_dir.empty()) {
    std::filesystem::create_directories(lexicon_dir);
    for (const auto& evaluation : result.evaluations) {
      const auto& report = evaluation.report;
      write_file(std::filesystem::path(lexicon_dir) /
                     (report.language_id + "." + engine_opt + ".lexicon.json"),
                 lexicon_json(report.language_id, engine, evaluation.entries,
                              evaluation.outcomes));
    }
  }
  std::cout << result.evaluations.size() << " languages, " << result.skipped.size()
            << " skipped -> " << out_path << "\n";
  return 0;
}

int cmd_compare(const CommonOptions& common, const std::string& out_path, unsigned jobs) {
  const auto result = compare_directory(common.data_dir, common.load_options(), jobs);
  for (const auto& skip : result.skipped) {
    std::cerr << "warning: skipping " << skip.language_id << ": " << skip.reason << "\n";
  }
  write_file(out_path, comparison_csv(result.rows, result.skipped));
  std::cout << result.rows.size() << " languages, " << result.skipped.size() << " skipped -> "
            << out_path << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"numeral word decomposer and lexicon builder"};
  app.require_subcommand(1);

  CommonOptions common;
  std::string language;
  std::string word;
  std::string engine = "v6";
  std::string out_path;
  std::string lexicon_dir;
  bool trace = false;
  bool json = false;
  unsigned jobs = 1;

  CLI::App* validate = app.add_subcommand("validate", "Load datasets and report duplicates");
  add_common(validate, common);
  validate->add_option("--lang", language, "Only this language");

  CLI::App* decompose_cmd = app.add_subcommand("decompose", "Decompose a single numeral word");
  add_common(decompose_cmd, common);
  decompose_cmd->add_option("--lang", language, "Language id")->required();
  decompose_cmd->add_option("--word", word, "Numeral word")->required();
  decompose_cmd->add_option("--engine", engine, "Engine version (v2|v6)")->capture_default_str();
  decompose_cmd->add_flag("--trace", trace, "Print the step-by-step scan table");
  decompose_cmd->add_flag("--json", json, "Emit JSON instead of text");

  CLI::App* lexicon_cmd = app.add_subcommand("lexicon", "Build the fitted lexicon of a language");
  add_common(lexicon_cmd, common);
  lexicon_cmd->add_option("--lang", language, "Language id")->required();
  lexicon_cmd->add_option("--engine", engine, "Engine version (v2|v6)")->capture_default_str();
  lexicon_cmd->add_option("--out", out_path, "Output file (default <lang>.lexicon.json)");

  CLI::App* evaluate_cmd =
      app.add_subcommand("evaluate", "Evaluate every language in the data directory");
  add_common(evaluate_cmd, common);
  evaluate_cmd->add_option("--engine", engine, "Engine version (v2|v6)")->capture_default_str();
  evaluate_cmd->add_option("--out", out_path, "Report CSV path")->default_val("report.csv");
  evaluate_cmd->add_option("--lexicon-dir", lexicon_dir, "Also write per-language lexicons here");
  evaluate_cmd->add_option("--jobs", jobs, "Concurrent languages")->capture_default_str();

  CLI::App* compare_cmd =
      app.add_subcommand("compare", "Compare v2 and v6 lexicon sizes per language");
  add_common(compare_cmd, common);
  compare_cmd->add_option("--out", out_path, "Comparison CSV path")->default_val("compare.csv");
  compare_cmd->add_option("--jobs", jobs, "Concurrent languages")->capture_default_str();

  try {
    app.parse(argc, argv);
    if (validate->parsed()) return cmd_validate(common, language);
    if (decompose_cmd->parsed()) {
      return cmd_decompose(common, language, word, engine, trace, json);
    }
    if (lexicon_cmd->parsed()) return cmd_lexicon(common, language, engine, out_path);
    if (evaluate_cmd->parsed()) return cmd_evaluate(common, engine, out_path, lexicon_dir, jobs);
    if (compare_cmd->parsed()) return cmd_compare(common, out_path, jobs);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const UnknownNumeralError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
