#include "topkbench/time_utils.hpp"

#include <charconv>
#include <chrono>
#include <cstdio>

#include "topkbench/errors.hpp"

namespace topkbench {

namespace {

int parse_digits(std::string_view text, std::size_t pos, std::size_t len) {
  int value = 0;
  const auto* first = text.data() + pos;
  auto [ptr, ec] = std::from_chars(first, first + len, value);
  if (ec != std::errc() || ptr != first + len) {
    throw ParseError("bad timestamp: '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

std::int64_t parse_iso8601_utc(std::string_view text) {
  // Fixed-width form: 2015-09-17T23:39:11Z
  if (text.size() != 20 || text[4] != '-' || text[7] != '-' || text[10] != 'T' ||
      text[13] != ':' || text[16] != ':' || text[19] != 'Z') {
    throw ParseError("bad timestamp: '" + std::string(text) + "'");
  }
  const int year = parse_digits(text, 0, 4);
  const unsigned month = static_cast<unsigned>(parse_digits(text, 5, 2));
  const unsigned day = static_cast<unsigned>(parse_digits(text, 8, 2));
  const int hour = parse_digits(text, 11, 2);
  const int minute = parse_digits(text, 14, 2);
  const int second = parse_digits(text, 17, 2);

  const std::chrono::year_month_day ymd{std::chrono::year{year}, std::chrono::month{month},
                                        std::chrono::day{day}};
  if (!ymd.ok() || hour > 23 || minute > 59 || second > 60) {
    throw ParseError("bad timestamp: '" + std::string(text) + "'");
  }
  const std::chrono::sys_days days{ymd};
  return std::chrono::duration_cast<std::chrono::seconds>(days.time_since_epoch()).count() +
         hour * 3600ll + minute * 60ll + second;
}

std::string format_iso8601_utc(std::int64_t epoch_seconds) {
  using namespace std::chrono;
  const sys_seconds tp{seconds{epoch_seconds}};
  const sys_days days{floor<std::chrono::days>(tp)};
  const year_month_day ymd{days};
  const auto tod = tp - days;
  const auto h = duration_cast<hours>(tod);
  const auto m = duration_cast<minutes>(tod - h);
  const auto s = duration_cast<seconds>(tod - h - m);

  char buf[24];
  std::snprintf(buf, sizeof(buf), "%04d-%02u-%02uT%02lld:%02lld:%02lldZ",
                static_cast<int>(ymd.year()), static_cast<unsigned>(ymd.month()),
                static_cast<unsigned>(ymd.day()), static_cast<long long>(h.count()),
                static_cast<long long>(m.count()), static_cast<long long>(s.count()));
  return std::string(buf);
}

}  // namespace topkbench
