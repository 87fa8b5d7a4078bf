#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "topkbench/corpus.hpp"
#include "topkbench/scoring.hpp"

namespace topkbench {

enum class QueryId { q1, q2, q3, q4 };
enum class LayoutKind { relational, document };
enum class Strategy { native_aggregation, map_reduce };

std::string_view to_string(QueryId id);
std::string_view to_string(LayoutKind kind);
std::string_view to_string(Strategy strategy);
QueryId query_id_from_string(std::string_view text);
LayoutKind layout_from_string(std::string_view text);
Strategy strategy_from_string(std::string_view text);
Scheme scheme_from_string(std::string_view text);
StatsScope scope_from_string(std::string_view text);
LogBase log_base_from_string(std::string_view text);

struct DateRange {
  std::int64_t start = 0;  // Unix seconds, inclusive
  std::int64_t end = 0;

  friend bool operator==(const DateRange&, const DateRange&) = default;
};

struct GeoBox {
  double start_x = 0.0;
  double end_x = 0.0;
  double start_y = 0.0;
  double end_y = 0.0;

  friend bool operator==(const GeoBox&, const GeoBox&) = default;
};

/// One top-k keywords query. Q1 constrains gender only; Q2 adds the date
/// range; Q3 adds the geo box instead; Q4 uses all three constraints.
struct QuerySpec {
  QueryId query_id = QueryId::q1;
  Gender gender = Gender::male;
  std::optional<DateRange> date_range;
  std::optional<GeoBox> geo_box;
  std::uint32_t k = 10;
  Scheme scheme = Scheme::tfidf;
  StatsScope scope = StatsScope::filtered;
  SchemeParams params;

  friend bool operator==(const QuerySpec&, const QuerySpec&) = default;
};

/// Throws ValidationError when constraints and query id disagree, bounds are
/// inverted, k is zero, or scheme parameters leave their valid ranges.
void validate_spec(const QuerySpec& spec);

struct TopKEntry {
  std::string word;
  double weight = 0.0;

  friend bool operator==(const TopKEntry&, const TopKEntry&) = default;
};

struct TopKResult {
  std::vector<TopKEntry> entries;  // weight descending, then word ascending
  std::uint64_t matched_docs = 0;
};

/// Canonical result ordering: weight descending, ties broken by word.
bool result_order(const TopKEntry& a, const TopKEntry& b);

/// Normalized relational-style storage: one columnar table per entity, rows
/// addressed by surrogate indexes.
struct RelationalLayout {
  struct AuthorsTable {
    std::vector<std::uint64_t> id;
    std::vector<std::string> first_name;
    std::vector<std::string> last_name;
    std::vector<std::uint32_t> age;
    std::vector<std::uint32_t> gender_id;
  };
  struct GendersTable {
    std::vector<std::string> type;  // row index is the surrogate id
  };
  struct DocumentsTable {
    std::vector<std::uint64_t> id;
    std::vector<std::string> raw_text;
    std::vector<std::string> clean_text;
    std::vector<std::string> lemma_text;
    std::vector<std::uint32_t> lemma_text_length;
    std::vector<std::int64_t> date;
    std::vector<std::uint32_t> geo_id;
  };
  struct GeoLocationTable {
    std::vector<double> x;
    std::vector<double> y;
  };
  struct WordsTable {
    std::vector<std::string> word;
  };
  struct VocabularyTable {
    std::vector<std::uint32_t> word_id;
    std::vector<std::uint32_t> count;
    std::vector<double> tf;
  };

  AuthorsTable authors;
  GendersTable genders;
  DocumentsTable documents;
  std::vector<std::uint32_t> documents_authors;  // document row -> author row
  GeoLocationTable geo_location;
  WordsTable words;
  VocabularyTable vocabulary;       // grouped by document row
  std::vector<std::uint64_t> vocab_offsets;  // per document row, size + 1
  std::vector<std::uint32_t> docs_by_id;     // document rows ordered by id
};

/// Single-collection storage mirroring the JSONL documents.
struct DocumentLayout {
  std::vector<TweetRecord> collection;
  std::vector<std::uint32_t> by_id;  // collection indexes ordered by id
};

RelationalLayout build_relational(const std::vector<TweetRecord>& corpus);
DocumentLayout build_document(std::vector<TweetRecord> corpus);

TopKResult execute(const RelationalLayout& layout, const QuerySpec& spec);

/// Document-layout execution. native_aggregation supports tfidf only and
/// throws UnsupportedStrategyError for okapi; map_reduce supports both.
TopKResult execute(const DocumentLayout& layout, const QuerySpec& spec, Strategy strategy);

}  // namespace topkbench
