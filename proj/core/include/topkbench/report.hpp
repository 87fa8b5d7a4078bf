#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "topkbench/bench.hpp"

namespace topkbench {

/// Label used in reports for the strategy column; the relational layout has
/// no strategy and reads back as "none".
std::string strategy_label(const std::optional<Strategy>& strategy);
std::optional<Strategy> strategy_from_label(std::string_view label);

/// Raw rows: sf,query,scheme,layout,strategy,run_index,elapsed_ms,matched_docs
void write_report_csv(const BenchReport& report, std::ostream& raw_out);
/// Aggregates: sf,query,scheme,layout,strategy,runs,mean_ms,stddev_ms,degenerate,error
void write_report_aggregates_csv(const BenchReport& report, std::ostream& agg_out);
void write_report_csv_files(const BenchReport& report,
                            const std::filesystem::path& raw_path,
                            const std::filesystem::path& agg_path);

/// One JSON document nested by configuration, carrying both raw runs and
/// aggregates plus the sampling metadata needed to reproduce them.
void write_report_json(const BenchReport& report, std::ostream& out);
void write_report_json_file(const BenchReport& report,
                            const std::filesystem::path& path);

BenchReport read_report_json(std::istream& in);
BenchReport read_report_json_file(const std::filesystem::path& path);

}  // namespace topkbench
