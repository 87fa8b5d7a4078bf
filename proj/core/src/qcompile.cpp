#include "topkbench/qcompile.hpp"

#include <charconv>
#include <cstdint>

#include <json.hpp>

#include "topkbench/errors.hpp"

namespace topkbench {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string format_double(double value) {
  char buf[32];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, ptr);
}

double parse_double(std::string_view text) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ParseError("bad number '" + std::string(text) + "'");
  }
  return value;
}

bool uses_date(QueryId id) { return id == QueryId::q2 || id == QueryId::q4; }
bool uses_geo(QueryId id) { return id == QueryId::q3 || id == QueryId::q4; }

std::string_view log_fn(LogBase base) {
  return base == LogBase::natural ? "LN" : "LOG10";
}

/// WHERE block over the given aliases; `indent` prefixes every line.
std::string where_block(QueryId id, std::string_view indent) {
  std::string out;
  out += indent;
  out += "WHERE g.type = :pGender\n";
  if (uses_date(id)) {
    out += indent;
    out += "  AND d.date >= :pStartDate AND d.date <= :pEndDate\n";
  }
  if (uses_geo(id)) {
    out += indent;
    out += "  AND gl.x >= :pStartX AND gl.x <= :pEndX\n";
    out += indent;
    out += "  AND gl.y >= :pStartY AND gl.y <= :pEndY\n";
  }
  return out;
}

std::string join_chain(QueryId id, std::string_view indent) {
  std::string out;
  out += indent;
  out += "JOIN documents_authors da ON da.document_id = d.id\n";
  out += indent;
  out += "JOIN authors a ON a.id = da.author_id\n";
  out += indent;
  out += "JOIN genders g ON g.id = a.gender_id\n";
  if (uses_geo(id)) {
    out += indent;
    out += "JOIN geo_location gl ON gl.id = d.geo_id\n";
  }
  return out;
}

std::string weight_expression(const QuerySpec& spec) {
  const bool filtered = spec.scope == StatsScope::filtered;
  const std::string n_docs =
      filtered ? "CAST((SELECT COUNT(*) FROM filtered_documents fd2) AS DOUBLE PRECISION)"
               : "CAST((SELECT COUNT(*) FROM documents d2) AS DOUBLE PRECISION)";
  const std::string doc_freq =
      filtered ? "(SELECT COUNT(*) FROM vocabulary v2 WHERE v2.word_id = v.word_id AND "
                 "v2.document_id IN (SELECT fd3.id FROM filtered_documents fd3))"
               : "(SELECT COUNT(*) FROM vocabulary v2 WHERE v2.word_id = v.word_id)";
  const std::string idf = "(1.0 + " + std::string(log_fn(spec.params.log_base)) + "(" +
                          n_docs + " / " + doc_freq + "))";
  if (spec.scheme == Scheme::tfidf) {
    return "v.tf * " + idf;
  }
  const std::string avg_len =
      filtered
          ? "(SELECT AVG(CAST(fd4.lemma_text_length AS DOUBLE PRECISION)) FROM "
            "filtered_documents fd4)"
          : "(SELECT AVG(CAST(d3.lemma_text_length AS DOUBLE PRECISION)) FROM documents d3)";
  const std::string doc_len = filtered ? "fd.lemma_text_length" : "d.lemma_text_length";
  const std::string k1 = format_double(spec.params.k1);
  const std::string b = format_double(spec.params.b);
  return "(v.tf * " + idf + " * (" + k1 + " + 1.0)) / (v.tf + " + k1 + " * (1.0 - " + b +
         " + " + b + " * (CAST(" + doc_len + " AS DOUBLE PRECISION) / " + avg_len + ")))";
}

std::string render_sql(const QuerySpec& spec) {
  std::string sql;
  if (spec.scope == StatsScope::filtered) {
    sql += "WITH filtered_documents AS (\n";
    sql += "  SELECT d.id AS id, d.lemma_text_length AS lemma_text_length\n";
    sql += "  FROM documents d\n";
    sql += join_chain(spec.query_id, "    ");
    sql += where_block(spec.query_id, "  ");
    sql += ")\n";
    sql += "SELECT w.word AS word,\n";
    sql += "  SUM(" + weight_expression(spec) + ") AS weight\n";
    sql += "FROM filtered_documents fd\n";
    sql += "  JOIN vocabulary v ON v.document_id = fd.id\n";
    sql += "  JOIN words w ON w.id = v.word_id\n";
  } else {
    sql += "SELECT w.word AS word,\n";
    sql += "  SUM(" + weight_expression(spec) + ") AS weight\n";
    sql += "FROM documents d\n";
    sql += join_chain(spec.query_id, "  ");
    sql += "  JOIN vocabulary v ON v.document_id = d.id\n";
    sql += "  JOIN words w ON w.id = v.word_id\n";
    sql += where_block(spec.query_id, "");
  }
  sql += "GROUP BY w.word\n";
  sql += "ORDER BY weight DESC, word ASC\n";
  sql += "LIMIT " + std::to_string(spec.k) + ";\n";
  return sql;
}

ordered_json render_mr_plan(const QuerySpec& spec) {
  const bool okapi = spec.scheme == Scheme::okapi;
  const std::string log_name =
      spec.params.log_base == LogBase::natural ? "log" : "log10";

  ordered_json plan;
  plan["plan"] = "topk-keywords";
  plan["version"] = 1;
  plan["query"] = std::string(to_string(spec.query_id));
  plan["scheme"] = std::string(to_string(spec.scheme));
  plan["stats_scope"] = std::string(to_string(spec.scope));
  plan["k"] = spec.k;
  ordered_json params;
  params["log_base"] = std::string(to_string(spec.params.log_base));
  if (okapi) {
    params["k1"] = spec.params.k1;
    params["b"] = spec.params.b;
  }
  plan["params"] = std::move(params);
  plan["placeholders"] = placeholder_names(spec.query_id);

  ordered_json filter;
  filter["gender"] = ":pGender";
  if (uses_date(spec.query_id)) {
    ordered_json date;
    date["start"] = ":pStartDate";
    date["end"] = ":pEndDate";
    filter["date"] = std::move(date);
  }
  if (uses_geo(spec.query_id)) {
    ordered_json geo;
    geo["start_x"] = ":pStartX";
    geo["end_x"] = ":pEndX";
    geo["start_y"] = ":pStartY";
    geo["end_y"] = ":pEndY";
    filter["geo"] = std::move(geo);
  }
  plan["filter"] = std::move(filter);

  ordered_json prepass;
  if (okapi) {
    prepass["computes"] = ordered_json::array({"n_docs", "doc_freq", "avg_doc_len"});
    prepass["source"] =
        "for doc in collection: if not filter(doc): continue; n_docs += 1; "
        "total_len += doc.lemmaTextLength; "
        "for entry in doc.words: doc_freq[entry.word] += 1; "
        "avg_doc_len = total_len / n_docs";
  } else {
    prepass["computes"] = ordered_json::array({"n_docs", "doc_freq"});
    prepass["source"] =
        "for doc in collection: if not filter(doc): continue; n_docs += 1; "
        "for entry in doc.words: doc_freq[entry.word] += 1";
  }
  if (spec.scope == StatsScope::global) {
    prepass["scope_note"] = "statistics pass ignores the filter and scans every document";
  }
  plan["prepass"] = std::move(prepass);

  ordered_json map;
  ordered_json emits;
  emits["key"] = "word";
  emits["value"] = ordered_json::array({"doc_id", "weight"});
  map["emits"] = std::move(emits);
  if (okapi) {
    map["source"] =
        "if not filter(doc): return; for entry in doc.words: "
        "idf = 1 + " + log_name + "(n_docs / doc_freq[entry.word]); "
        "w = (entry.tf * idf * (k1 + 1)) / "
        "(entry.tf + k1 * (1 - b + b * doc.lemmaTextLength / avg_doc_len)); "
        "emit(entry.word, {doc_id: doc._id, weight: w})";
  } else {
    map["source"] =
        "if not filter(doc): return; for entry in doc.words: "
        "idf = 1 + " + log_name + "(n_docs / doc_freq[entry.word]); "
        "emit(entry.word, {doc_id: doc._id, weight: entry.tf * idf})";
  }
  plan["map"] = std::move(map);

  ordered_json reduce;
  reduce["source"] =
      "values.sort_by(doc_id ascending); return sum(values.weight)";
  plan["reduce"] = std::move(reduce);

  ordered_json finalize;
  finalize["source"] =
      "entries.sort_by(weight descending, word ascending); return entries.first(k)";
  plan["finalize"] = std::move(finalize);
  return plan;
}

}  // namespace

std::string_view to_string(Dialect dialect) {
  return dialect == Dialect::ansi_sql ? "ansi_sql" : "mapreduce_plan";
}

std::vector<std::string> placeholder_names(QueryId id) {
  std::vector<std::string> names = {"pGender"};
  if (uses_date(id)) {
    names.push_back("pStartDate");
    names.push_back("pEndDate");
  }
  if (uses_geo(id)) {
    names.push_back("pStartX");
    names.push_back("pEndX");
    names.push_back("pStartY");
    names.push_back("pEndY");
  }
  return names;
}

CompiledQuery to_sql(const QuerySpec& spec) {
  validate_spec(spec);
  CompiledQuery out;
  out.dialect = Dialect::ansi_sql;
  out.text = render_sql(spec);
  out.placeholders = placeholder_names(spec.query_id);
  return out;
}

CompiledQuery to_mapreduce(const QuerySpec& spec) {
  validate_spec(spec);
  CompiledQuery out;
  out.dialect = Dialect::mapreduce_plan;
  out.text = render_mr_plan(spec).dump(2) + "\n";
  out.placeholders = placeholder_names(spec.query_id);
  return out;
}

namespace {

std::string_view slice_between(std::string_view text, std::string_view after,
                               std::string_view before) {
  const auto start = text.find(after);
  if (start == std::string_view::npos) throw ParseError("missing marker '" + std::string(after) + "'");
  const auto from = start + after.size();
  const auto end = text.find(before, from);
  if (end == std::string_view::npos) throw ParseError("missing marker '" + std::string(before) + "'");
  return text.substr(from, end - from);
}

QuerySpec skeleton_spec(const ParsedQuery& parsed) {
  QuerySpec spec;
  spec.query_id = parsed.query_id;
  spec.scheme = parsed.scheme;
  spec.scope = parsed.scope;
  spec.k = parsed.k;
  spec.params = parsed.params;
  if (uses_date(parsed.query_id)) spec.date_range = DateRange{0, 1};
  if (uses_geo(parsed.query_id)) spec.geo_box = GeoBox{0.0, 1.0, 0.0, 1.0};
  return spec;
}

ParsedQuery parse_sql(const CompiledQuery& compiled) {
  const std::string_view text = compiled.text;
  ParsedQuery parsed;
  parsed.dialect = Dialect::ansi_sql;

  const bool date = text.find(":pStartDate") != std::string_view::npos;
  const bool geo = text.find(":pStartX") != std::string_view::npos;
  parsed.query_id = date ? (geo ? QueryId::q4 : QueryId::q2)
                         : (geo ? QueryId::q3 : QueryId::q1);
  parsed.scope = text.find("WITH filtered_documents AS (") != std::string_view::npos
                     ? StatsScope::filtered
                     : StatsScope::global;
  if (text.find("LOG10(") != std::string_view::npos) {
    parsed.params.log_base = LogBase::base10;
  } else if (text.find("LN(") != std::string_view::npos) {
    parsed.params.log_base = LogBase::natural;
  } else {
    throw ParseError("no idf expression found");
  }
  parsed.scheme = text.find(") / (v.tf + ") != std::string_view::npos ? Scheme::okapi
                                                                      : Scheme::tfidf;
  if (parsed.scheme == Scheme::okapi) {
    parsed.params.k1 = parse_double(slice_between(text, ") / (v.tf + ", " * (1.0 - "));
    parsed.params.b = parse_double(slice_between(text, " * (1.0 - ", " + "));
  }
  const auto k_text = slice_between(text, "LIMIT ", ";");
  std::uint32_t k = 0;
  const auto [ptr, ec] = std::from_chars(k_text.data(), k_text.data() + k_text.size(), k);
  if (ec != std::errc() || ptr != k_text.data() + k_text.size() || k == 0) {
    throw ParseError("bad LIMIT value");
  }
  parsed.k = k;
  parsed.placeholders = placeholder_names(parsed.query_id);
  return parsed;
}

ParsedQuery parse_mr(const CompiledQuery& compiled) {
  ordered_json plan;
  try {
    plan = ordered_json::parse(compiled.text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid plan JSON: ") + e.what());
  }
  ParsedQuery parsed;
  parsed.dialect = Dialect::mapreduce_plan;
  try {
    parsed.query_id = query_id_from_string(plan.at("query").get<std::string>());
    parsed.scheme = scheme_from_string(plan.at("scheme").get<std::string>());
    parsed.scope = scope_from_string(plan.at("stats_scope").get<std::string>());
    parsed.k = plan.at("k").get<std::uint32_t>();
    const auto& params = plan.at("params");
    parsed.params.log_base =
        log_base_from_string(params.at("log_base").get<std::string>());
    if (parsed.scheme == Scheme::okapi) {
      parsed.params.k1 = params.at("k1").get<double>();
      parsed.params.b = params.at("b").get<double>();
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("incomplete plan: ") + e.what());
  } catch (const ValidationError& e) {
    throw ParseError(e.what());
  }
  parsed.placeholders = placeholder_names(parsed.query_id);
  return parsed;
}

}  // namespace

ParsedQuery parse_compiled(const CompiledQuery& compiled) {
  ParsedQuery parsed = compiled.dialect == Dialect::ansi_sql ? parse_sql(compiled)
                                                             : parse_mr(compiled);
  // Verify by re-rendering: only canonical artifacts are accepted.
  const QuerySpec skeleton = skeleton_spec(parsed);
  CompiledQuery rendered;
  try {
    rendered = compiled.dialect == Dialect::ansi_sql ? to_sql(skeleton)
                                                     : to_mapreduce(skeleton);
  } catch (const ValidationError& e) {
    throw ParseError(std::string("recovered shape is invalid: ") + e.what());
  }
  if (rendered.text != compiled.text) {
    throw ParseError("text does not match the canonical rendering of its shape");
  }
  if (compiled.placeholders != rendered.placeholders) {
    throw ParseError("placeholder list does not match the active constraints");
  }
  return parsed;
}

std::string_view relational_schema_sql() {
  return R"SQL(CREATE TABLE genders (
  id INTEGER PRIMARY KEY,
  type TEXT NOT NULL
);
CREATE TABLE authors (
  id INTEGER PRIMARY KEY,
  first_name TEXT NOT NULL,
  last_name TEXT NOT NULL,
  age INTEGER NOT NULL,
  gender_id INTEGER NOT NULL REFERENCES genders(id)
);
CREATE TABLE geo_location (
  id INTEGER PRIMARY KEY,
  x DOUBLE PRECISION NOT NULL,
  y DOUBLE PRECISION NOT NULL
);
CREATE TABLE documents (
  id INTEGER PRIMARY KEY,
  raw_text TEXT NOT NULL,
  clean_text TEXT NOT NULL,
  lemma_text TEXT NOT NULL,
  lemma_text_length INTEGER NOT NULL,
  date BIGINT NOT NULL,
  geo_id INTEGER NOT NULL REFERENCES geo_location(id)
);
CREATE TABLE documents_authors (
  document_id INTEGER NOT NULL REFERENCES documents(id),
  author_id INTEGER NOT NULL REFERENCES authors(id)
);
CREATE TABLE words (
  id INTEGER PRIMARY KEY,
  word TEXT NOT NULL
);
CREATE TABLE vocabulary (
  document_id INTEGER NOT NULL REFERENCES documents(id),
  word_id INTEGER NOT NULL REFERENCES words(id),
  "count" INTEGER NOT NULL,
  tf DOUBLE PRECISION NOT NULL
);
)SQL";
}

}  // namespace topkbench
