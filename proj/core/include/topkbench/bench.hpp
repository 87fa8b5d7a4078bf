#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "topkbench/corpus.hpp"
#include "topkbench/engine.hpp"

namespace topkbench {

/// What to measure: the cross product of these axes, minus combinations the
/// engine does not support (okapi through native aggregation).
struct BenchPlan {
  std::vector<double> scale_factors = {0.001};
  std::vector<QueryId> queries = {QueryId::q1, QueryId::q2, QueryId::q3, QueryId::q4};
  std::vector<Scheme> schemes = {Scheme::tfidf, Scheme::okapi};
  std::vector<LayoutKind> layouts = {LayoutKind::relational, LayoutKind::document};
  std::vector<Strategy> strategies = {Strategy::native_aggregation, Strategy::map_reduce};
  std::uint32_t runs_per_query = 40;
  std::uint64_t parameter_sampler_seed = kDefaultSeed;
  /// false: every measured run draws fresh parameters; true: one binding is
  /// drawn per configuration and reused for all runs.
  bool fixed_binding = false;
  std::uint32_t k = 10;
  StatsScope scope = StatsScope::filtered;
  SchemeParams params;
};

void validate_plan(const BenchPlan& plan);

struct BenchRow {
  double sf = 0.0;
  QueryId query_id = QueryId::q1;
  Scheme scheme = Scheme::tfidf;
  LayoutKind layout = LayoutKind::relational;
  std::optional<Strategy> strategy;  // empty for the relational layout
  std::uint32_t run_index = 0;
  double elapsed_ms = 0.0;
  std::uint64_t matched_docs = 0;

  friend bool operator==(const BenchRow&, const BenchRow&) = default;
};

struct BenchAggregate {
  double sf = 0.0;
  QueryId query_id = QueryId::q1;
  Scheme scheme = Scheme::tfidf;
  LayoutKind layout = LayoutKind::relational;
  std::optional<Strategy> strategy;
  std::uint32_t runs = 0;
  double mean_ms = 0.0;
  double stddev_ms = 0.0;
  bool degenerate = false;  // fewer than two samples
  std::string error;        // nonempty when the configuration was aborted

  friend bool operator==(const BenchAggregate&, const BenchAggregate&) = default;
};

struct BenchReport {
  std::uint64_t parameter_sampler_seed = kDefaultSeed;
  bool fixed_binding = false;
  std::vector<BenchRow> rows;
  std::vector<BenchAggregate> aggregates;
};

struct Stats {
  double mean = 0.0;
  double stddev = 0.0;
  bool degenerate = false;
};

/// Mean and sample (n-1) standard deviation. A single sample reports
/// stddev 0 and is flagged degenerate. Throws std::invalid_argument on
/// empty input.
Stats stats(std::span<const double> samples);

/// Recomputes per-configuration aggregates from the raw rows, preserving
/// row grouping order. Error annotations are not recoverable from rows and
/// come back empty.
std::vector<BenchAggregate> recompute_aggregates(const BenchReport& report);

/// Supplies the corpus for a scale factor.
using CorpusSource = std::function<std::vector<TweetRecord>(ScaleFactor)>;

CorpusSource generated_source(std::uint64_t seed = kDefaultSeed,
                              PreprocessOptions options = {});
CorpusSource fixed_source(std::vector<TweetRecord> corpus);

/// Test seams: a replaceable monotonic clock (milliseconds) and an observer
/// called before every engine execution with its query and cold/measured
/// role.
struct RunnerHooks {
  std::function<double()> now_ms;
  std::function<void(QueryId, bool is_cold)> on_execute;
};

/// Executes the measurement protocol: per (sf, scheme, layout, strategy)
/// group one unmeasured cold pass of Q1-Q4 primes the engine, then each
/// query in the plan is measured runs_per_query times with parameters drawn
/// from the domain sampler. Unsupported combinations are skipped during
/// expansion. A per-run failure aborts its configuration and is recorded on
/// the aggregate.
BenchReport run_bench(const BenchPlan& plan, const CorpusSource& source,
                      const RunnerHooks& hooks = {});

/// Draws the concrete parameters of one query from the attribute domains.
/// Exposed for sampler determinism tests.
QuerySpec sample_spec(QueryId query, SplitMix64& sampler, const BenchPlan& plan,
                      Scheme scheme);

}  // namespace topkbench
