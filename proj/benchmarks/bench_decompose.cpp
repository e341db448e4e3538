#include <benchmark/benchmark.h>

#include "numdec/decompose.hpp"
#include "numdec/dictionary.hpp"
#include "numdec/eval.hpp"
#include "numdec/fitter.hpp"
#include "numdec/lexicon.hpp"

namespace {

using namespace numdec;

const NumeralDictionary& english() {
  static const NumeralDictionary dict =
      load_dictionary(std::filesystem::path(NUMDEC_DATA_DIR) / "en.tsv", "en");
  return dict;
}

void BM_decompose_word(benchmark::State& state) {
  const auto& dict = english();
  const EngineVersion engine =
      state.range(0) == 2 ? EngineVersion::V2 : EngineVersion::V6;
  for (auto _ : state) {
    auto d = decompose(dict, "nine hundred and ninety-nine", engine);
    benchmark::DoNotOptimize(d);
  }
}
BENCHMARK(BM_decompose_word)->Arg(2)->Arg(6);

void BM_decompose_corpus(benchmark::State& state) {
  const auto& dict = english();
  const EngineVersion engine =
      state.range(0) == 2 ? EngineVersion::V2 : EngineVersion::V6;
  for (auto _ : state) {
    for (const auto& [n, w] : dict.forward()) {
      auto d = decompose_with_value(dict, w, n, engine);
      benchmark::DoNotOptimize(d);
    }
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                          static_cast<std::int64_t>(dict.size()));
}
BENCHMARK(BM_decompose_corpus)->Arg(2)->Arg(6);

void BM_fit_lexicon(benchmark::State& state) {
  const auto& dict = english();
  std::vector<Decomposition> ds;
  for (const auto& [n, w] : dict.forward()) {
    ds.push_back(decompose_with_value(dict, w, n, EngineVersion::V6));
  }
  const auto entries = build_lexicon(ds);
  for (auto _ : state) {
    for (const auto& entry : entries) {
      auto outcome = fit_affine(entry.samples, entry.arity());
      benchmark::DoNotOptimize(outcome);
    }
  }
}
BENCHMARK(BM_fit_lexicon);

void BM_evaluate_language(benchmark::State& state) {
  const auto& dict = english();
  for (auto _ : state) {
    auto report = evaluate_language(dict, EngineVersion::V6);
    benchmark::DoNotOptimize(report);
  }
}
BENCHMARK(BM_evaluate_language);

}  // namespace

BENCHMARK_MAIN();
