// Microbenchmarks for the hot paths: preprocessing, layout construction,
// and query execution over both layouts. These are development aids; the
// protocol-driven measurements live in the bench module and the CLI.
#include <benchmark/benchmark.h>

#include <cstdint>
#include <string>
#include <vector>

#include "topkbench/bench.hpp"
#include "topkbench/corpus.hpp"
#include "topkbench/engine.hpp"
#include "topkbench/preprocess.hpp"

namespace {

using namespace topkbench;

const std::vector<TweetRecord>& corpus_1k() {
  static const std::vector<TweetRecord> corpus =
      generate_corpus(ScaleFactor{0.001});
  return corpus;
}

void BM_Preprocess(benchmark::State& state) {
  const std::string raw =
      "Amanda's car is too much for my headache #mondays @amanda "
      "http://t.co/xyz and we're going downtown tomorrow";
  std::uint64_t terms = 0;
  for (auto _ : state) {
    PreprocessOutput out = preprocess(raw);
    terms += out.words.size();
    benchmark::DoNotOptimize(out);
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()));
  benchmark::DoNotOptimize(terms);
}
BENCHMARK(BM_Preprocess);

void BM_GenerateCorpus(benchmark::State& state) {
  const ScaleFactor sf{static_cast<double>(state.range(0)) * 1e-6};
  for (auto _ : state) {
    std::vector<TweetRecord> corpus = generate_corpus(sf);
    benchmark::DoNotOptimize(corpus);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_GenerateCorpus)->Arg(100)->Arg(1000);

void BM_BuildRelational(benchmark::State& state) {
  const std::vector<TweetRecord>& corpus = corpus_1k();
  for (auto _ : state) {
    RelationalLayout layout = build_relational(corpus);
    benchmark::DoNotOptimize(layout);
  }
}
BENCHMARK(BM_BuildRelational);

QuerySpec sampled_spec(QueryId query, Scheme scheme) {
  BenchPlan plan;
  SplitMix64 sampler(2026);
  return sample_spec(query, sampler, plan, scheme);
}

void BM_ExecuteRelational(benchmark::State& state) {
  const RelationalLayout layout = build_relational(corpus_1k());
  const QuerySpec spec = sampled_spec(
      static_cast<QueryId>(state.range(0)),
      state.range(1) == 0 ? Scheme::tfidf : Scheme::okapi);
  for (auto _ : state) {
    TopKResult result = execute(layout, spec);
    benchmark::DoNotOptimize(result);
  }
}
BENCHMARK(BM_ExecuteRelational)
    ->ArgsProduct({{0, 1, 2, 3}, {0, 1}})
    ->ArgNames({"query", "scheme"});

void BM_ExecuteDocument(benchmark::State& state) {
  const DocumentLayout layout = build_document(corpus_1k());
  const Strategy strategy =
      state.range(1) == 0 ? Strategy::native_aggregation : Strategy::map_reduce;
  const QuerySpec spec =
      sampled_spec(static_cast<QueryId>(state.range(0)), Scheme::tfidf);
  for (auto _ : state) {
    TopKResult result = execute(layout, spec, strategy);
    benchmark::DoNotOptimize(result);
  }
}
BENCHMARK(BM_ExecuteDocument)
    ->ArgsProduct({{0, 1, 2, 3}, {0, 1}})
    ->ArgNames({"query", "strategy"});

}  // namespace

BENCHMARK_MAIN();
