#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace topkbench {

/// Parses "YYYY-MM-DDThh:mm:ssZ" (UTC) to Unix seconds. Throws ParseError.
std::int64_t parse_iso8601_utc(std::string_view text);

/// Formats Unix seconds as "YYYY-MM-DDThh:mm:ssZ".
std::string format_iso8601_utc(std::int64_t epoch_seconds);

}  // namespace topkbench
