#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "topkbench/engine.hpp"

namespace topkbench {

enum class Dialect { ansi_sql, mapreduce_plan };

std::string_view to_string(Dialect dialect);

struct CompiledQuery {
  Dialect dialect = Dialect::ansi_sql;
  std::string text;
  std::vector<std::string> placeholders;  // canonical binding order

  friend bool operator==(const CompiledQuery&, const CompiledQuery&) = default;
};

/// Renders the query as one portable parameterized SELECT over the
/// relational schema (see relational_schema_sql). Deterministic text.
CompiledQuery to_sql(const QuerySpec& spec);

/// Renders the query as a language-neutral map/reduce/finalize plan in a
/// JSON envelope, including the statistics pre-pass. Deterministic text.
CompiledQuery to_mapreduce(const QuerySpec& spec);

/// The shape recovered from a compiled artifact: everything except the
/// constraint values, which arrive later as bindings.
struct ParsedQuery {
  Dialect dialect = Dialect::ansi_sql;
  QueryId query_id = QueryId::q1;
  Scheme scheme = Scheme::tfidf;
  StatsScope scope = StatsScope::filtered;
  std::uint32_t k = 10;
  SchemeParams params;
  std::vector<std::string> placeholders;
};

/// Recovers the query shape from compiled text and verifies it by
/// re-rendering: anything that does not round-trip byte-for-byte is
/// rejected. Throws ParseError.
ParsedQuery parse_compiled(const CompiledQuery& compiled);

/// Placeholder names for the active constraints of a query, in canonical
/// binding order.
std::vector<std::string> placeholder_names(QueryId id);

/// DDL of the external relational schema the SQL dialect targets.
std::string_view relational_schema_sql();

}  // namespace topkbench
