#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <string>
#include <vector>

#include "testenv.hpp"
#include "topkbench/errors.hpp"
#include "topkbench/qcompile.hpp"

using namespace topkbench;

namespace {

QuerySpec shape_spec(QueryId query, Scheme scheme,
                     StatsScope scope = StatsScope::filtered) {
  QuerySpec spec;
  spec.query_id = query;
  spec.scheme = scheme;
  spec.scope = scope;
  if (query == QueryId::q2 || query == QueryId::q4) {
    spec.date_range = DateRange{domain::date_min, domain::date_max};
  }
  if (query == QueryId::q3 || query == QueryId::q4) {
    spec.geo_box =
        GeoBox{domain::x_min, domain::x_max, domain::y_min, domain::y_max};
  }
  return spec;
}

std::size_t count_occurrences(const std::string& text, const std::string& needle) {
  std::size_t count = 0;
  for (std::size_t pos = text.find(needle); pos != std::string::npos;
       pos = text.find(needle, pos + needle.size())) {
    ++count;
  }
  return count;
}

std::string golden_path(const std::string& name) {
  return std::string(TOPKBENCH_GOLDEN_DIR) + "/" + name;
}

const std::vector<QueryId> kAllQueries = {QueryId::q1, QueryId::q2, QueryId::q3,
                                          QueryId::q4};
const std::vector<Scheme> kAllSchemes = {Scheme::tfidf, Scheme::okapi};

std::string lower_label(QueryId id) {
  std::string label(to_string(id));
  for (char& c : label) c = static_cast<char>(std::tolower(c));
  return label;
}

}  // namespace

TEST_CASE("placeholder catalogs") {
  CHECK(placeholder_names(QueryId::q1) == std::vector<std::string>{"pGender"});
  CHECK(placeholder_names(QueryId::q2) ==
        std::vector<std::string>{"pGender", "pStartDate", "pEndDate"});
  CHECK(placeholder_names(QueryId::q3) ==
        std::vector<std::string>{"pGender", "pStartX", "pEndX", "pStartY",
                                 "pEndY"});
  CHECK(placeholder_names(QueryId::q4) ==
        std::vector<std::string>{"pGender", "pStartDate", "pEndDate",
                                 "pStartX", "pEndX", "pStartY", "pEndY"});
}

TEST_CASE("sql text is deterministic and structurally sound") {
  for (const QueryId query : kAllQueries) {
    for (const Scheme scheme : kAllSchemes) {
      for (const StatsScope scope : {StatsScope::filtered, StatsScope::global}) {
        const QuerySpec spec = shape_spec(query, scheme, scope);
        const CompiledQuery compiled = to_sql(spec);
        CAPTURE(compiled.text);
        CHECK(compiled.dialect == Dialect::ansi_sql);
        CHECK(compiled.placeholders == placeholder_names(query));
        CHECK(to_sql(spec).text == compiled.text);

        const std::size_t joins = count_occurrences(compiled.text, "JOIN ");
        if (query == QueryId::q1 || query == QueryId::q2) {
          CHECK(joins == 5);
        } else {
          CHECK(joins == 6);
        }
        for (const std::string& placeholder : compiled.placeholders) {
          CHECK(count_occurrences(compiled.text, ":" + placeholder) == 1);
        }
        CHECK(compiled.text.find("GROUP BY w.word") != std::string::npos);
        CHECK(compiled.text.find("ORDER BY weight DESC, word ASC") !=
              std::string::npos);
        CHECK(compiled.text.find("LIMIT 10;") != std::string::npos);
        if (scope == StatsScope::filtered) {
          CHECK(compiled.text.find("WITH filtered_documents AS (") !=
                std::string::npos);
        } else {
          CHECK(compiled.text.find("WITH") == std::string::npos);
        }
        if (scheme == Scheme::okapi) {
          CHECK(compiled.text.find("AVG(") != std::string::npos);
        }
      }
    }
  }
}

TEST_CASE("mapreduce plans carry the full envelope") {
  for (const QueryId query : kAllQueries) {
    for (const Scheme scheme : kAllSchemes) {
      const QuerySpec spec = shape_spec(query, scheme);
      const CompiledQuery compiled = to_mapreduce(spec);
      CHECK(compiled.dialect == Dialect::mapreduce_plan);
      CHECK(compiled.placeholders == placeholder_names(query));
      CHECK(to_mapreduce(spec).text == compiled.text);

      const nlohmann::json plan = nlohmann::json::parse(compiled.text);
      CHECK(plan.at("query").get<std::string>() == to_string(query));
      CHECK(plan.at("scheme").get<std::string>() == to_string(scheme));
      CHECK(plan.at("k").get<std::uint32_t>() == 10);
      CHECK(plan.at("map").at("source").get<std::string>().find("emit(") !=
            std::string::npos);
      CHECK(plan.at("reduce")
                .at("source")
                .get<std::string>()
                .find("doc_id ascending") != std::string::npos);
      CHECK(plan.at("finalize")
                .at("source")
                .get<std::string>()
                .find("weight descending") != std::string::npos);
      const auto computes =
          plan.at("prepass").at("computes").get<std::vector<std::string>>();
      const auto computes_has = [&computes](const std::string& name) {
        return std::find(computes.begin(), computes.end(), name) !=
               computes.end();
      };
      CHECK(computes_has("n_docs"));
      CHECK(computes_has("doc_freq"));
      if (scheme == Scheme::okapi) {
        CHECK(computes_has("avg_doc_len"));
        CHECK(plan.at("params").contains("k1"));
        CHECK(plan.at("params").contains("b"));
      } else {
        CHECK_FALSE(computes_has("avg_doc_len"));
      }
      const auto placeholders =
          plan.at("placeholders").get<std::vector<std::string>>();
      CHECK(placeholders == compiled.placeholders);
    }
  }
}

TEST_CASE("compiled artifacts match their golden files") {
  for (const QueryId query : kAllQueries) {
    for (const Scheme scheme : kAllSchemes) {
      const QuerySpec spec = shape_spec(query, scheme);
      const std::string base =
          lower_label(query) + "_" + std::string(to_string(scheme));
      CAPTURE(base);
      CHECK(to_sql(spec).text == topkbench::testing::read_file(
                                     golden_path(base + "_filtered.sql")));
      CHECK(to_mapreduce(spec).text ==
            topkbench::testing::read_file(golden_path(base + "_filtered.json")));
    }
  }
  for (const Scheme scheme : kAllSchemes) {
    const QuerySpec spec = shape_spec(QueryId::q1, scheme, StatsScope::global);
    const std::string base = "q1_" + std::string(to_string(scheme));
    CHECK(to_sql(spec).text ==
          topkbench::testing::read_file(golden_path(base + "_global.sql")));
    CHECK(to_mapreduce(spec).text ==
          topkbench::testing::read_file(golden_path(base + "_global.json")));
  }
}

TEST_CASE("parse_compiled recovers the query shape") {
  for (const QueryId query : kAllQueries) {
    for (const Scheme scheme : kAllSchemes) {
      for (const StatsScope scope : {StatsScope::filtered, StatsScope::global}) {
        QuerySpec spec = shape_spec(query, scheme, scope);
        spec.k = 17;
        spec.params.k1 = 1.6;
        spec.params.b = 0.3;
        spec.params.log_base = LogBase::base10;
        for (const CompiledQuery& compiled :
             {to_sql(spec), to_mapreduce(spec)}) {
          const ParsedQuery parsed = parse_compiled(compiled);
          CHECK(parsed.dialect == compiled.dialect);
          CHECK(parsed.query_id == query);
          CHECK(parsed.scheme == scheme);
          CHECK(parsed.scope == scope);
          CHECK(parsed.k == 17);
          CHECK(parsed.params.log_base == LogBase::base10);
          if (scheme == Scheme::okapi) {
            CHECK(parsed.params.k1 == 1.6);
            CHECK(parsed.params.b == 0.3);
          }
          CHECK(parsed.placeholders == placeholder_names(query));
        }
      }
    }
  }
}

TEST_CASE("parse_compiled rejects tampered artifacts") {
  const QuerySpec spec = shape_spec(QueryId::q2, Scheme::tfidf);
  CompiledQuery sql = to_sql(spec);

  SUBCASE("text edits break the round trip") {
    sql.text += " -- trailing";
    CHECK_THROWS_AS(parse_compiled(sql), ParseError);
  }
  SUBCASE("emptied text") {
    sql.text.clear();
    CHECK_THROWS_AS(parse_compiled(sql), ParseError);
  }
  SUBCASE("placeholder list mismatch") {
    sql.placeholders.pop_back();
    CHECK_THROWS_AS(parse_compiled(sql), ParseError);
  }
  SUBCASE("mapreduce text under the sql dialect") {
    CompiledQuery mr = to_mapreduce(spec);
    mr.dialect = Dialect::ansi_sql;
    CHECK_THROWS_AS(parse_compiled(mr), ParseError);
  }
  SUBCASE("broken json plan") {
    CompiledQuery mr = to_mapreduce(spec);
    mr.text.pop_back();
    CHECK_THROWS_AS(parse_compiled(mr), ParseError);
  }
  SUBCASE("invalid recovered values") {
    CompiledQuery mr = to_mapreduce(spec);
    nlohmann::ordered_json plan = nlohmann::ordered_json::parse(mr.text);
    plan["k"] = 0;
    mr.text = plan.dump(2) + "\n";
    CHECK_THROWS_AS(parse_compiled(mr), ParseError);
  }
}

TEST_CASE("relational schema ddl") {
  const std::string ddl(relational_schema_sql());
  for (const std::string table :
       {"genders", "authors", "geo_location", "documents", "documents_authors",
        "words", "vocabulary"}) {
    CAPTURE(table);
    CHECK(ddl.find("CREATE TABLE " + table) != std::string::npos);
  }
}
