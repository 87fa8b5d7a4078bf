#include "topkbench/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <memory>
#include <stdexcept>
#include <tuple>
#include <utility>

#include "topkbench/errors.hpp"

namespace topkbench {

namespace {

double steady_now_ms() {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

template <typename T>
bool has_duplicates(const std::vector<T>& values) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    for (std::size_t j = i + 1; j < values.size(); ++j) {
      if (values[i] == values[j]) return true;
    }
  }
  return false;
}

bool supported_combo(LayoutKind layout, std::optional<Strategy> strategy,
                     Scheme scheme) {
  if (layout == LayoutKind::document &&
      strategy == Strategy::native_aggregation && scheme == Scheme::okapi) {
    return false;
  }
  return true;
}

struct GroupKey {
  double sf;
  int query;
  int scheme;
  int layout;
  int strategy;  // -1 when absent

  friend bool operator<(const GroupKey& a, const GroupKey& b) {
    return std::tie(a.sf, a.query, a.scheme, a.layout, a.strategy) <
           std::tie(b.sf, b.query, b.scheme, b.layout, b.strategy);
  }
};

GroupKey key_of(const BenchRow& row) {
  return GroupKey{row.sf, static_cast<int>(row.query_id),
                  static_cast<int>(row.scheme), static_cast<int>(row.layout),
                  row.strategy ? static_cast<int>(*row.strategy) : -1};
}

}  // namespace

void validate_plan(const BenchPlan& plan) {
  if (plan.scale_factors.empty()) throw ValidationError("plan has no scale factors");
  for (double sf : plan.scale_factors) {
    if (!(sf > 0.0) || ScaleFactor{sf}.tweet_count() < 1) {
      throw ValidationError("scale factor must map to at least one tweet");
    }
  }
  if (plan.queries.empty()) throw ValidationError("plan has no queries");
  if (plan.schemes.empty()) throw ValidationError("plan has no schemes");
  if (plan.layouts.empty()) throw ValidationError("plan has no layouts");
  bool wants_document =
      std::find(plan.layouts.begin(), plan.layouts.end(), LayoutKind::document) !=
      plan.layouts.end();
  if (wants_document && plan.strategies.empty()) {
    throw ValidationError("document layout requires at least one strategy");
  }
  if (has_duplicates(plan.scale_factors) || has_duplicates(plan.queries) ||
      has_duplicates(plan.schemes) || has_duplicates(plan.layouts) ||
      has_duplicates(plan.strategies)) {
    throw ValidationError("plan axes must not contain duplicates");
  }
  if (plan.runs_per_query < 1) throw ValidationError("runs_per_query must be at least 1");
  if (plan.k < 1) throw ValidationError("k must be at least 1");
  if (!(plan.params.k >= 0.0 && plan.params.k < 1.0)) {
    throw ValidationError("smoothing constant must lie in [0, 1)");
  }
  bool wants_okapi = std::find(plan.schemes.begin(), plan.schemes.end(),
                               Scheme::okapi) != plan.schemes.end();
  if (wants_okapi) {
    if (!(plan.params.k1 >= 1.2 && plan.params.k1 <= 2.0)) {
      throw ValidationError("k1 must lie in [1.2, 2.0]");
    }
    if (!(plan.params.b >= 0.0 && plan.params.b <= 1.0)) {
      throw ValidationError("b must lie in [0, 1]");
    }
  }
}

Stats stats(std::span<const double> samples) {
  if (samples.empty()) throw std::invalid_argument("stats of an empty sample set");
  double sum = 0.0;
  for (double s : samples) sum += s;
  const double mean = sum / static_cast<double>(samples.size());
  if (samples.size() == 1) return Stats{mean, 0.0, true};
  double sq = 0.0;
  for (double s : samples) {
    const double d = s - mean;
    sq += d * d;
  }
  const double variance = sq / static_cast<double>(samples.size() - 1);
  return Stats{mean, std::sqrt(variance), false};
}

std::vector<BenchAggregate> recompute_aggregates(const BenchReport& report) {
  std::vector<BenchAggregate> out;
  std::vector<std::vector<double>> samples;
  std::map<GroupKey, std::size_t> index;
  for (const BenchRow& row : report.rows) {
    const GroupKey key = key_of(row);
    auto it = index.find(key);
    if (it == index.end()) {
      it = index.emplace(key, out.size()).first;
      BenchAggregate agg;
      agg.sf = row.sf;
      agg.query_id = row.query_id;
      agg.scheme = row.scheme;
      agg.layout = row.layout;
      agg.strategy = row.strategy;
      out.push_back(std::move(agg));
      samples.emplace_back();
    }
    samples[it->second].push_back(row.elapsed_ms);
  }
  for (std::size_t i = 0; i < out.size(); ++i) {
    const Stats st = stats(samples[i]);
    out[i].runs = static_cast<std::uint32_t>(samples[i].size());
    out[i].mean_ms = st.mean;
    out[i].stddev_ms = st.stddev;
    out[i].degenerate = st.degenerate;
  }
  return out;
}

CorpusSource generated_source(std::uint64_t seed, PreprocessOptions options) {
  return [seed, options = std::move(options)](ScaleFactor sf) {
    GeneratorOptions generator_options;
    generator_options.seed = seed;
    generator_options.preprocess = options;
    return generate_corpus(sf, generator_options);
  };
}

CorpusSource fixed_source(std::vector<TweetRecord> corpus) {
  auto shared = std::make_shared<const std::vector<TweetRecord>>(std::move(corpus));
  return [shared](ScaleFactor) { return *shared; };
}

QuerySpec sample_spec(QueryId query, SplitMix64& sampler, const BenchPlan& plan,
                      Scheme scheme) {
  QuerySpec spec;
  spec.query_id = query;
  spec.k = plan.k;
  spec.scheme = scheme;
  spec.scope = plan.scope;
  spec.params = plan.params;
  spec.gender = (sampler.next() & 1ull) == 0 ? Gender::male : Gender::female;
  const bool wants_date = query == QueryId::q2 || query == QueryId::q4;
  const bool wants_geo = query == QueryId::q3 || query == QueryId::q4;
  if (wants_date) {
    std::int64_t a = sampler.next_int(domain::date_min, domain::date_max);
    std::int64_t b = sampler.next_int(domain::date_min, domain::date_max);
    while (b == a) b = sampler.next_int(domain::date_min, domain::date_max);
    if (a > b) std::swap(a, b);
    spec.date_range = DateRange{a, b};
  }
  if (wants_geo) {
    double x1 = sampler.next_in(domain::x_min, domain::x_max);
    double x2 = sampler.next_in(domain::x_min, domain::x_max);
    while (x2 == x1) x2 = sampler.next_in(domain::x_min, domain::x_max);
    if (x1 > x2) std::swap(x1, x2);
    double y1 = sampler.next_in(domain::y_min, domain::y_max);
    double y2 = sampler.next_in(domain::y_min, domain::y_max);
    while (y2 == y1) y2 = sampler.next_in(domain::y_min, domain::y_max);
    if (y1 > y2) std::swap(y1, y2);
    spec.geo_box = GeoBox{x1, x2, y1, y2};
  }
  return spec;
}

namespace {

struct BuiltLayouts {
  std::unique_ptr<RelationalLayout> relational;
  std::unique_ptr<DocumentLayout> document;
};

TopKResult execute_on(const BuiltLayouts& layouts, LayoutKind layout,
                      std::optional<Strategy> strategy, const QuerySpec& spec) {
  if (layout == LayoutKind::relational) return execute(*layouts.relational, spec);
  return execute(*layouts.document, spec, *strategy);
}

}  // namespace

BenchReport run_bench(const BenchPlan& plan, const CorpusSource& source,
                      const RunnerHooks& hooks) {
  validate_plan(plan);
  const auto now_ms = hooks.now_ms ? hooks.now_ms : steady_now_ms;

  BenchReport report;
  report.parameter_sampler_seed = plan.parameter_sampler_seed;
  report.fixed_binding = plan.fixed_binding;

  SplitMix64 sampler_root(plan.parameter_sampler_seed);
  std::uint64_t group_index = 0;

  for (double sf : plan.scale_factors) {
    std::vector<TweetRecord> corpus = source(ScaleFactor{sf});
    BuiltLayouts layouts;
    const bool wants_relational =
        std::find(plan.layouts.begin(), plan.layouts.end(),
                  LayoutKind::relational) != plan.layouts.end();
    const bool wants_document =
        std::find(plan.layouts.begin(), plan.layouts.end(),
                  LayoutKind::document) != plan.layouts.end();
    if (wants_relational) {
      layouts.relational =
          std::make_unique<RelationalLayout>(build_relational(corpus));
    }
    if (wants_document) {
      layouts.document =
          std::make_unique<DocumentLayout>(build_document(std::move(corpus)));
    }

    for (Scheme scheme : plan.schemes) {
      for (LayoutKind layout : plan.layouts) {
        std::vector<std::optional<Strategy>> strategies;
        if (layout == LayoutKind::relational) {
          strategies.push_back(std::nullopt);
        } else {
          for (Strategy s : plan.strategies) strategies.emplace_back(s);
        }
        for (std::optional<Strategy> strategy : strategies) {
          // Substream assignment counts skipped groups too, so any one
          // group's parameter sequence is independent of which other
          // combinations the plan enables.
          SplitMix64 sampler = sampler_root;
          SplitMix64 group_sampler = sampler.split(group_index);
          ++group_index;
          if (!supported_combo(layout, strategy, scheme)) continue;

          std::string group_error;
          for (QueryId cold_query : {QueryId::q1, QueryId::q2, QueryId::q3,
                                     QueryId::q4}) {
            QuerySpec spec = sample_spec(cold_query, group_sampler, plan, scheme);
            try {
              if (hooks.on_execute) hooks.on_execute(cold_query, true);
              execute_on(layouts, layout, strategy, spec);
            } catch (const std::exception& e) {
              group_error = std::string("cold pass failed: ") + e.what();
              break;
            }
          }

          for (QueryId query : plan.queries) {
            BenchAggregate agg;
            agg.sf = sf;
            agg.query_id = query;
            agg.scheme = scheme;
            agg.layout = layout;
            agg.strategy = strategy;
            if (!group_error.empty()) {
              agg.degenerate = true;
              agg.error = group_error;
              report.aggregates.push_back(std::move(agg));
              continue;
            }

            QuerySpec fixed;
            if (plan.fixed_binding) {
              fixed = sample_spec(query, group_sampler, plan, scheme);
            }
            std::vector<double> samples;
            samples.reserve(plan.runs_per_query);
            for (std::uint32_t run = 0; run < plan.runs_per_query; ++run) {
              QuerySpec spec = plan.fixed_binding
                                   ? fixed
                                   : sample_spec(query, group_sampler, plan,
                                                 scheme);
              try {
                if (hooks.on_execute) hooks.on_execute(query, false);
                const double t0 = now_ms();
                const TopKResult result = execute_on(layouts, layout, strategy,
                                                     spec);
                const double t1 = now_ms();
                BenchRow row;
                row.sf = sf;
                row.query_id = query;
                row.scheme = scheme;
                row.layout = layout;
                row.strategy = strategy;
                row.run_index = run;
                row.elapsed_ms = t1 - t0;
                row.matched_docs = result.matched_docs;
                samples.push_back(row.elapsed_ms);
                report.rows.push_back(std::move(row));
              } catch (const std::exception& e) {
                agg.error = e.what();
                break;
              }
            }

            agg.runs = static_cast<std::uint32_t>(samples.size());
            if (!samples.empty()) {
              const Stats st = stats(samples);
              agg.mean_ms = st.mean;
              agg.stddev_ms = st.stddev;
              agg.degenerate = st.degenerate;
            } else {
              agg.degenerate = true;
            }
            report.aggregates.push_back(std::move(agg));
          }
        }
      }
    }
  }
  return report;
}

}  // namespace topkbench
