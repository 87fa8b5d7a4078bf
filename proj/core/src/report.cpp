#include "topkbench/report.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <system_error>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "topkbench/errors.hpp"

namespace topkbench {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string format_double(double value) {
  // Shortest round-trip digits, preferring plain decimal notation so the
  // scale-factor and timing columns read naturally; values far outside the
  // everyday range fall back to scientific notation.
  char buffer[64];
  const double magnitude = std::fabs(value);
  const auto format = (magnitude != 0.0 &&
                       (magnitude < 1e-5 || magnitude >= 1e15))
                          ? std::chars_format::general
                          : std::chars_format::fixed;
  auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value, format);
  if (ec != std::errc()) throw ValidationError("unrepresentable numeric value");
  return std::string(buffer, ptr);
}

std::string csv_field(std::string_view text) {
  bool needs_quotes = text.find_first_of(",\"\n\r") != std::string_view::npos;
  if (!needs_quotes) return std::string(text);
  std::string out;
  out.reserve(text.size() + 2);
  out.push_back('"');
  for (char c : text) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

struct ConfigKey {
  double sf;
  int query;
  int scheme;
  int layout;
  int strategy;

  friend bool operator<(const ConfigKey& a, const ConfigKey& b) {
    return std::tie(a.sf, a.query, a.scheme, a.layout, a.strategy) <
           std::tie(b.sf, b.query, b.scheme, b.layout, b.strategy);
  }
};

template <typename Entry>
ConfigKey key_of(const Entry& entry) {
  return ConfigKey{entry.sf, static_cast<int>(entry.query_id),
                   static_cast<int>(entry.scheme),
                   static_cast<int>(entry.layout),
                   entry.strategy ? static_cast<int>(*entry.strategy) : -1};
}

}  // namespace

std::string strategy_label(const std::optional<Strategy>& strategy) {
  if (!strategy) return "none";
  return std::string(to_string(*strategy));
}

std::optional<Strategy> strategy_from_label(std::string_view label) {
  if (label == "none") return std::nullopt;
  return strategy_from_string(label);
}

void write_report_csv(const BenchReport& report, std::ostream& raw_out) {
  raw_out << "sf,query,scheme,layout,strategy,run_index,elapsed_ms,matched_docs\n";
  for (const BenchRow& row : report.rows) {
    raw_out << format_double(row.sf) << ',' << to_string(row.query_id) << ','
            << to_string(row.scheme) << ',' << to_string(row.layout) << ','
            << strategy_label(row.strategy) << ',' << row.run_index << ','
            << format_double(row.elapsed_ms) << ',' << row.matched_docs
            << '\n';
  }
}

void write_report_aggregates_csv(const BenchReport& report,
                                 std::ostream& agg_out) {
  agg_out << "sf,query,scheme,layout,strategy,runs,mean_ms,stddev_ms,"
             "degenerate,error\n";
  for (const BenchAggregate& agg : report.aggregates) {
    agg_out << format_double(agg.sf) << ',' << to_string(agg.query_id) << ','
            << to_string(agg.scheme) << ',' << to_string(agg.layout) << ','
            << strategy_label(agg.strategy) << ',' << agg.runs << ','
            << format_double(agg.mean_ms) << ',' << format_double(agg.stddev_ms)
            << ',' << (agg.degenerate ? "true" : "false") << ','
            << csv_field(agg.error) << '\n';
  }
}

void write_report_csv_files(const BenchReport& report,
                            const std::filesystem::path& raw_path,
                            const std::filesystem::path& agg_path) {
  std::ofstream raw(raw_path, std::ios::binary);
  if (!raw) throw IoError("cannot open for writing: " + raw_path.string());
  write_report_csv(report, raw);
  raw.flush();
  if (!raw) throw IoError("failed writing " + raw_path.string());
  std::ofstream agg(agg_path, std::ios::binary);
  if (!agg) throw IoError("cannot open for writing: " + agg_path.string());
  write_report_aggregates_csv(report, agg);
  agg.flush();
  if (!agg) throw IoError("failed writing " + agg_path.string());
}

void write_report_json(const BenchReport& report, std::ostream& out) {
  // Rows are grouped under their configuration; the runner emits them
  // contiguously per configuration, so grouping preserves their order.
  std::map<ConfigKey, std::vector<const BenchRow*>> rows_by_key;
  for (const BenchRow& row : report.rows) {
    rows_by_key[key_of(row)].push_back(&row);
  }

  ordered_json doc;
  doc["report"] = "topkbench";
  doc["version"] = 1;
  doc["parameter_sampler_seed"] = report.parameter_sampler_seed;
  doc["fixed_binding"] = report.fixed_binding;
  ordered_json configs = ordered_json::array();
  std::map<ConfigKey, bool> covered;
  for (const BenchAggregate& agg : report.aggregates) {
    ordered_json config;
    config["sf"] = agg.sf;
    config["query"] = to_string(agg.query_id);
    config["scheme"] = to_string(agg.scheme);
    config["layout"] = to_string(agg.layout);
    config["strategy"] = strategy_label(agg.strategy);
    ordered_json runs = ordered_json::array();
    const ConfigKey key = key_of(agg);
    covered[key] = true;
    auto it = rows_by_key.find(key);
    if (it != rows_by_key.end()) {
      for (const BenchRow* row : it->second) {
        ordered_json entry;
        entry["run_index"] = row->run_index;
        entry["elapsed_ms"] = row->elapsed_ms;
        entry["matched_docs"] = row->matched_docs;
        runs.push_back(std::move(entry));
      }
    }
    config["runs"] = std::move(runs);
    ordered_json aggregate;
    aggregate["runs"] = agg.runs;
    aggregate["mean_ms"] = agg.mean_ms;
    aggregate["stddev_ms"] = agg.stddev_ms;
    aggregate["degenerate"] = agg.degenerate;
    aggregate["error"] = agg.error;
    config["aggregate"] = std::move(aggregate);
    configs.push_back(std::move(config));
  }
  // Rows whose configuration has no aggregate still round-trip.
  for (const auto& [key, rows] : rows_by_key) {
    if (covered.count(key)) continue;
    const BenchRow* first = rows.front();
    ordered_json config;
    config["sf"] = first->sf;
    config["query"] = to_string(first->query_id);
    config["scheme"] = to_string(first->scheme);
    config["layout"] = to_string(first->layout);
    config["strategy"] = strategy_label(first->strategy);
    ordered_json runs = ordered_json::array();
    for (const BenchRow* row : rows) {
      ordered_json entry;
      entry["run_index"] = row->run_index;
      entry["elapsed_ms"] = row->elapsed_ms;
      entry["matched_docs"] = row->matched_docs;
      runs.push_back(std::move(entry));
    }
    config["runs"] = std::move(runs);
    config["aggregate"] = nullptr;
    configs.push_back(std::move(config));
  }
  doc["configurations"] = std::move(configs);
  out << doc.dump(2) << '\n';
}

void write_report_json_file(const BenchReport& report,
                            const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open for writing: " + path.string());
  write_report_json(report, out);
  out.flush();
  if (!out) throw IoError("failed writing " + path.string());
}

BenchReport read_report_json(std::istream& in) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("report is not valid JSON: ") + e.what());
  }
  try {
    BenchReport report;
    report.parameter_sampler_seed =
        doc.at("parameter_sampler_seed").get<std::uint64_t>();
    report.fixed_binding = doc.at("fixed_binding").get<bool>();
    for (const ordered_json& config : doc.at("configurations")) {
      const double sf = config.at("sf").get<double>();
      const QueryId query =
          query_id_from_string(config.at("query").get<std::string>());
      const Scheme scheme =
          scheme_from_string(config.at("scheme").get<std::string>());
      const LayoutKind layout =
          layout_from_string(config.at("layout").get<std::string>());
      const std::optional<Strategy> strategy =
          strategy_from_label(config.at("strategy").get<std::string>());
      for (const ordered_json& entry : config.at("runs")) {
        BenchRow row;
        row.sf = sf;
        row.query_id = query;
        row.scheme = scheme;
        row.layout = layout;
        row.strategy = strategy;
        row.run_index = entry.at("run_index").get<std::uint32_t>();
        row.elapsed_ms = entry.at("elapsed_ms").get<double>();
        row.matched_docs = entry.at("matched_docs").get<std::uint64_t>();
        report.rows.push_back(std::move(row));
      }
      const ordered_json& aggregate = config.at("aggregate");
      if (!aggregate.is_null()) {
        BenchAggregate agg;
        agg.sf = sf;
        agg.query_id = query;
        agg.scheme = scheme;
        agg.layout = layout;
        agg.strategy = strategy;
        agg.runs = aggregate.at("runs").get<std::uint32_t>();
        agg.mean_ms = aggregate.at("mean_ms").get<double>();
        agg.stddev_ms = aggregate.at("stddev_ms").get<double>();
        agg.degenerate = aggregate.at("degenerate").get<bool>();
        agg.error = aggregate.at("error").get<std::string>();
        report.aggregates.push_back(std::move(agg));
      }
    }
    return report;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("report JSON has unexpected shape: ") +
                     e.what());
  } catch (const ValidationError& e) {
    throw ParseError(std::string("report JSON has unexpected values: ") +
                     e.what());
  }
}

BenchReport read_report_json_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open for reading: " + path.string());
  return read_report_json(in);
}

}  // namespace topkbench
