#include "topkbench/engine.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <unordered_map>
#include <utility>

#include "topkbench/errors.hpp"

namespace topkbench {

namespace {

template <typename T>
T parse_enum(std::string_view text,
             std::initializer_list<std::pair<std::string_view, T>> values,
             std::string_view what) {
  for (const auto& [name, value] : values) {
    if (name == text) return value;
  }
  throw ValidationError("unknown " + std::string(what) + ": '" + std::string(text) + "'");
}

}  // namespace

std::string_view to_string(QueryId id) {
  switch (id) {
    case QueryId::q1: return "Q1";
    case QueryId::q2: return "Q2";
    case QueryId::q3: return "Q3";
    default: return "Q4";
  }
}

std::string_view to_string(LayoutKind kind) {
  return kind == LayoutKind::relational ? "relational" : "document";
}

std::string_view to_string(Strategy strategy) {
  return strategy == Strategy::native_aggregation ? "na" : "mr";
}

QueryId query_id_from_string(std::string_view text) {
  return parse_enum<QueryId>(text,
                             {{"Q1", QueryId::q1}, {"Q2", QueryId::q2},
                              {"Q3", QueryId::q3}, {"Q4", QueryId::q4},
                              {"q1", QueryId::q1}, {"q2", QueryId::q2},
                              {"q3", QueryId::q3}, {"q4", QueryId::q4}},
                             "query id");
}

LayoutKind layout_from_string(std::string_view text) {
  return parse_enum<LayoutKind>(
      text, {{"relational", LayoutKind::relational}, {"document", LayoutKind::document}},
      "layout");
}

Strategy strategy_from_string(std::string_view text) {
  return parse_enum<Strategy>(
      text, {{"na", Strategy::native_aggregation}, {"mr", Strategy::map_reduce}},
      "strategy");
}

Scheme scheme_from_string(std::string_view text) {
  return parse_enum<Scheme>(text, {{"tfidf", Scheme::tfidf}, {"okapi", Scheme::okapi}},
                            "scheme");
}

StatsScope scope_from_string(std::string_view text) {
  return parse_enum<StatsScope>(
      text, {{"filtered", StatsScope::filtered}, {"global", StatsScope::global}}, "scope");
}

LogBase log_base_from_string(std::string_view text) {
  return parse_enum<LogBase>(
      text, {{"natural", LogBase::natural}, {"base10", LogBase::base10}}, "log base");
}

void validate_spec(const QuerySpec& spec) {
  const bool wants_date = spec.query_id == QueryId::q2 || spec.query_id == QueryId::q4;
  const bool wants_geo = spec.query_id == QueryId::q3 || spec.query_id == QueryId::q4;
  const auto name = std::string(to_string(spec.query_id));

  if (wants_date != spec.date_range.has_value()) {
    throw ValidationError(name + (wants_date ? " requires a date range"
                                             : " does not take a date range"));
  }
  if (wants_geo != spec.geo_box.has_value()) {
    throw ValidationError(name +
                          (wants_geo ? " requires a geo box" : " does not take a geo box"));
  }
  if (spec.date_range && spec.date_range->start >= spec.date_range->end) {
    throw ValidationError(name + ": date range start must precede end");
  }
  if (spec.geo_box) {
    if (spec.geo_box->start_x >= spec.geo_box->end_x ||
        spec.geo_box->start_y >= spec.geo_box->end_y) {
      throw ValidationError(name + ": geo box bounds must be strictly increasing");
    }
  }
  if (spec.k == 0) throw ValidationError(name + ": k must be positive");
  if (!(spec.params.k >= 0.0 && spec.params.k < 1.0)) {
    throw ValidationError(name + ": K must lie in [0, 1)");
  }
  if (spec.scheme == Scheme::okapi) {
    if (!(spec.params.k1 >= 1.2 && spec.params.k1 <= 2.0)) {
      throw ValidationError(name + ": k1 must lie in [1.2, 2.0]");
    }
    if (!(spec.params.b >= 0.0 && spec.params.b <= 1.0)) {
      throw ValidationError(name + ": b must lie in [0, 1]");
    }
  }
}

bool result_order(const TopKEntry& a, const TopKEntry& b) {
  if (a.weight != b.weight) return a.weight > b.weight;
  return a.word < b.word;
}

RelationalLayout build_relational(const std::vector<TweetRecord>& corpus) {
  RelationalLayout layout;

  std::unordered_map<std::string, std::uint32_t> gender_ids;
  std::unordered_map<std::uint64_t, std::uint32_t> author_rows;
  std::map<std::pair<double, double>, std::uint32_t> geo_rows;
  std::unordered_map<std::string, std::uint32_t> word_rows;

  layout.vocab_offsets.push_back(0);
  for (const auto& record : corpus) {
    validate_record(record);

    const std::string gender_name{to_string(record.author.gender)};
    auto [git, gnew] = gender_ids.try_emplace(
        gender_name, static_cast<std::uint32_t>(layout.genders.type.size()));
    if (gnew) layout.genders.type.push_back(gender_name);
    const std::uint32_t gender_id = git->second;

    auto [ait, anew] = author_rows.try_emplace(
        record.author.id, static_cast<std::uint32_t>(layout.authors.id.size()));
    if (anew) {
      layout.authors.id.push_back(record.author.id);
      layout.authors.first_name.push_back(record.author.first_name);
      layout.authors.last_name.push_back(record.author.last_name);
      layout.authors.age.push_back(record.author.age);
      layout.authors.gender_id.push_back(gender_id);
    } else {
      const std::uint32_t row = ait->second;
      if (layout.authors.first_name[row] != record.author.first_name ||
          layout.authors.last_name[row] != record.author.last_name ||
          layout.authors.age[row] != record.author.age ||
          layout.authors.gender_id[row] != gender_id) {
        throw ValidationError("author " + std::to_string(record.author.id) +
                              " has conflicting attributes across records");
      }
    }

    auto [geo_it, geo_new] = geo_rows.try_emplace(
        std::make_pair(record.geo.x, record.geo.y),
        static_cast<std::uint32_t>(layout.geo_location.x.size()));
    if (geo_new) {
      layout.geo_location.x.push_back(record.geo.x);
      layout.geo_location.y.push_back(record.geo.y);
    }

    layout.documents.id.push_back(record.id);
    layout.documents.raw_text.push_back(record.raw_text);
    layout.documents.clean_text.push_back(record.clean_text);
    layout.documents.lemma_text.push_back(record.lemma_text);
    layout.documents.lemma_text_length.push_back(record.lemma_text_length);
    layout.documents.date.push_back(record.date);
    layout.documents.geo_id.push_back(geo_it->second);
    layout.documents_authors.push_back(ait->second);

    for (const auto& entry : record.words) {
      auto [wit, wnew] = word_rows.try_emplace(
          entry.word, static_cast<std::uint32_t>(layout.words.word.size()));
      if (wnew) layout.words.word.push_back(entry.word);
      layout.vocabulary.word_id.push_back(wit->second);
      layout.vocabulary.count.push_back(entry.count);
      layout.vocabulary.tf.push_back(entry.tf);
    }
    layout.vocab_offsets.push_back(layout.vocabulary.word_id.size());
  }

  layout.docs_by_id.resize(corpus.size());
  for (std::uint32_t i = 0; i < layout.docs_by_id.size(); ++i) layout.docs_by_id[i] = i;
  std::sort(layout.docs_by_id.begin(), layout.docs_by_id.end(),
            [&](std::uint32_t a, std::uint32_t b) {
              return layout.documents.id[a] < layout.documents.id[b];
            });
  for (std::size_t i = 1; i < layout.docs_by_id.size(); ++i) {
    if (layout.documents.id[layout.docs_by_id[i - 1]] ==
        layout.documents.id[layout.docs_by_id[i]]) {
      throw ValidationError(
          "duplicate _id " +
          std::to_string(layout.documents.id[layout.docs_by_id[i]]));
    }
  }
  return layout;
}

DocumentLayout build_document(std::vector<TweetRecord> corpus) {
  DocumentLayout layout;
  for (const auto& record : corpus) validate_record(record);
  layout.collection = std::move(corpus);
  layout.by_id.resize(layout.collection.size());
  for (std::uint32_t i = 0; i < layout.by_id.size(); ++i) layout.by_id[i] = i;
  std::sort(layout.by_id.begin(), layout.by_id.end(), [&](std::uint32_t a, std::uint32_t b) {
    return layout.collection[a].id < layout.collection[b].id;
  });
  for (std::size_t i = 1; i < layout.by_id.size(); ++i) {
    if (layout.collection[layout.by_id[i - 1]].id == layout.collection[layout.by_id[i]].id) {
      throw ValidationError("duplicate _id " +
                            std::to_string(layout.collection[layout.by_id[i]].id));
    }
  }
  return layout;
}

namespace {

bool date_in_range(std::int64_t date, const std::optional<DateRange>& range) {
  return !range || (date >= range->start && date <= range->end);
}

bool geo_in_box(const GeoPoint& point, const std::optional<GeoBox>& box) {
  return !box || (point.x >= box->start_x && point.x <= box->end_x &&
                  point.y >= box->start_y && point.y <= box->end_y);
}

TopKResult finalize_entries(std::vector<TopKEntry> entries, std::uint32_t k,
                            std::uint64_t matched) {
  std::sort(entries.begin(), entries.end(), result_order);
  if (entries.size() > k) entries.resize(k);
  TopKResult result;
  result.entries = std::move(entries);
  result.matched_docs = matched;
  return result;
}

/// Per-word idf memo for the relational path; values are computed on first
/// use so every posting of a word sees the identical double.
class IdfCache {
 public:
  IdfCache(std::size_t words, std::uint64_t n_docs, const std::vector<std::uint32_t>& df,
           LogBase log_base)
      : values_(words, 0.0), ready_(words, 0), n_docs_(n_docs), df_(df),
        log_base_(log_base) {}

  double get(std::uint32_t word_id) {
    if (!ready_[word_id]) {
      values_[word_id] = idf_value(n_docs_, df_[word_id], log_base_);
      ready_[word_id] = 1;
    }
    return values_[word_id];
  }

 private:
  std::vector<double> values_;
  std::vector<char> ready_;
  std::uint64_t n_docs_;
  const std::vector<std::uint32_t>& df_;
  LogBase log_base_;
};

}  // namespace

TopKResult execute(const RelationalLayout& layout, const QuerySpec& spec) {
  validate_spec(spec);

  std::uint32_t target_gender = std::numeric_limits<std::uint32_t>::max();
  for (std::uint32_t i = 0; i < layout.genders.type.size(); ++i) {
    if (layout.genders.type[i] == to_string(spec.gender)) {
      target_gender = i;
      break;
    }
  }

  std::vector<std::uint32_t> selected;
  for (const std::uint32_t row : layout.docs_by_id) {
    const std::uint32_t author_row = layout.documents_authors[row];
    if (layout.authors.gender_id[author_row] != target_gender) continue;
    if (!date_in_range(layout.documents.date[row], spec.date_range)) continue;
    const std::uint32_t geo = layout.documents.geo_id[row];
    if (!geo_in_box({layout.geo_location.x[geo], layout.geo_location.y[geo]}, spec.geo_box)) {
      continue;
    }
    selected.push_back(row);
  }

  TopKResult empty;
  empty.matched_docs = selected.size();
  if (selected.empty()) return empty;

  // Collection statistics under the configured scope.
  const std::size_t word_count = layout.words.word.size();
  std::vector<std::uint32_t> df(word_count, 0);
  std::uint64_t stats_docs = 0;
  std::uint64_t total_len = 0;
  auto fold_stats = [&](const std::vector<std::uint32_t>& rows) {
    stats_docs = rows.size();
    for (const std::uint32_t row : rows) {
      total_len += layout.documents.lemma_text_length[row];
      for (std::uint64_t i = layout.vocab_offsets[row]; i < layout.vocab_offsets[row + 1];
           ++i) {
        ++df[layout.vocabulary.word_id[i]];
      }
    }
  };
  fold_stats(spec.scope == StatsScope::filtered ? selected : layout.docs_by_id);
  const double avg_doc_len =
      static_cast<double>(total_len) / static_cast<double>(stats_docs);

  IdfCache idf_cache(word_count, stats_docs, df, spec.params.log_base);
  std::vector<double> acc(word_count, 0.0);
  std::vector<char> seen(word_count, 0);
  std::vector<std::uint32_t> touched;
  for (const std::uint32_t row : selected) {
    const std::uint32_t doc_len = layout.documents.lemma_text_length[row];
    for (std::uint64_t i = layout.vocab_offsets[row]; i < layout.vocab_offsets[row + 1];
         ++i) {
      const std::uint32_t word_id = layout.vocabulary.word_id[i];
      const double tf = layout.vocabulary.tf[i];
      const double idf_weight = idf_cache.get(word_id);
      const double weight =
          spec.scheme == Scheme::tfidf
              ? tfidf(tf, idf_weight)
              : okapi_value(tf, idf_weight, doc_len, avg_doc_len, spec.params.k1,
                            spec.params.b);
      if (!seen[word_id]) {
        seen[word_id] = 1;
        touched.push_back(word_id);
      }
      acc[word_id] += weight;
    }
  }

  std::vector<TopKEntry> entries;
  entries.reserve(touched.size());
  for (const std::uint32_t word_id : touched) {
    entries.push_back({layout.words.word[word_id], acc[word_id]});
  }
  return finalize_entries(std::move(entries), spec.k, selected.size());
}

namespace {

struct DocumentStats {
  std::uint64_t n_docs = 0;
  double avg_doc_len = 0.0;
  std::unordered_map<std::string_view, std::uint64_t> doc_freq;
  std::unordered_map<std::string_view, double> idf_memo;

  double idf_of(std::string_view word, LogBase log_base) {
    auto it = idf_memo.find(word);
    if (it != idf_memo.end()) return it->second;
    const double value = idf_value(n_docs, doc_freq.at(word), log_base);
    idf_memo.emplace(word, value);
    return value;
  }
};

DocumentStats document_stats(const DocumentLayout& layout,
                             const std::vector<std::uint32_t>& scope_rows) {
  DocumentStats stats;
  stats.n_docs = scope_rows.size();
  std::uint64_t total_len = 0;
  for (const std::uint32_t row : scope_rows) {
    const auto& doc = layout.collection[row];
    total_len += doc.lemma_text_length;
    for (const auto& entry : doc.words) {
      ++stats.doc_freq[entry.word];
    }
  }
  stats.avg_doc_len = static_cast<double>(total_len) / static_cast<double>(stats.n_docs);
  return stats;
}

double posting_weight(const QuerySpec& spec, DocumentStats& stats,
                      const VocabularyEntry& entry, std::uint32_t doc_len) {
  const double idf_weight = stats.idf_of(entry.word, spec.params.log_base);
  if (spec.scheme == Scheme::tfidf) return tfidf(entry.tf, idf_weight);
  return okapi_value(entry.tf, idf_weight, doc_len, stats.avg_doc_len, spec.params.k1,
                     spec.params.b);
}

/// Fused filter+group+sum, the shape a native aggregation pipeline takes.
TopKResult run_native_aggregation(const DocumentLayout& layout, const QuerySpec& spec,
                                  const std::vector<std::uint32_t>& selected,
                                  DocumentStats& stats) {
  std::unordered_map<std::string_view, double> acc;
  std::vector<std::string_view> touched;
  for (const std::uint32_t row : selected) {
    const auto& doc = layout.collection[row];
    for (const auto& entry : doc.words) {
      const double weight = posting_weight(spec, stats, entry, doc.lemma_text_length);
      auto [it, inserted] = acc.try_emplace(entry.word, 0.0);
      if (inserted) touched.push_back(entry.word);
      it->second += weight;
    }
  }
  std::vector<TopKEntry> entries;
  entries.reserve(touched.size());
  for (const auto word : touched) entries.push_back({std::string(word), acc[word]});
  return finalize_entries(std::move(entries), spec.k, selected.size());
}

/// Explicit map -> shuffle -> reduce -> finalize stages.
TopKResult run_map_reduce(const DocumentLayout& layout, const QuerySpec& spec,
                          const std::vector<std::uint32_t>& selected,
                          DocumentStats& stats) {
  struct Emission {
    std::string_view word;
    std::uint64_t doc_id;
    double weight;
  };

  // Map: one (word, doc_id, weight) emission per posting of a selected doc.
  std::vector<Emission> emissions;
  for (const std::uint32_t row : selected) {
    const auto& doc = layout.collection[row];
    for (const auto& entry : doc.words) {
      emissions.push_back(
          {entry.word, doc.id, posting_weight(spec, stats, entry, doc.lemma_text_length)});
    }
  }

  // Shuffle: group by word.
  std::unordered_map<std::string_view, std::vector<Emission>> groups;
  std::vector<std::string_view> touched;
  for (const auto& emission : emissions) {
    auto [it, inserted] = groups.try_emplace(emission.word);
    if (inserted) touched.push_back(emission.word);
    it->second.push_back(emission);
  }

  // Reduce: per word, sum in ascending document id order. Reducers make no
  // ordering promises, so the order is pinned here before summing.
  std::vector<TopKEntry> entries;
  entries.reserve(touched.size());
  std::vector<double> weights;
  for (const auto word : touched) {
    auto& group = groups[word];
    std::sort(group.begin(), group.end(),
              [](const Emission& a, const Emission& b) { return a.doc_id < b.doc_id; });
    weights.clear();
    for (const auto& emission : group) weights.push_back(emission.weight);
    entries.push_back({std::string(word), sum_weights(weights)});
  }
  return finalize_entries(std::move(entries), spec.k, selected.size());
}

}  // namespace

TopKResult execute(const DocumentLayout& layout, const QuerySpec& spec, Strategy strategy) {
  validate_spec(spec);
  if (strategy == Strategy::native_aggregation && spec.scheme == Scheme::okapi) {
    throw UnsupportedStrategyError(
        "okapi is not available through native aggregation; use map_reduce");
  }

  std::vector<std::uint32_t> selected;
  for (const std::uint32_t row : layout.by_id) {
    const auto& doc = layout.collection[row];
    if (doc.author.gender != spec.gender) continue;
    if (!date_in_range(doc.date, spec.date_range)) continue;
    if (!geo_in_box(doc.geo, spec.geo_box)) continue;
    selected.push_back(row);
  }

  TopKResult empty;
  empty.matched_docs = selected.size();
  if (selected.empty()) return empty;

  std::vector<std::uint32_t> scope_rows =
      spec.scope == StatsScope::filtered ? selected : layout.by_id;
  DocumentStats stats = document_stats(layout, scope_rows);

  if (strategy == Strategy::native_aggregation) {
    return run_native_aggregation(layout, spec, selected, stats);
  }
  return run_map_reduce(layout, spec, selected, stats);
}

}  // namespace topkbench
