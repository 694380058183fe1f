#pragma once

#include <cstdint>
#include <string>

namespace scenetemp {

// Calendar date, timezone-naive local wall-clock time. DST transitions
// are out of scope; all arithmetic is plain civil-calendar arithmetic.
struct Date {
  int year = 1970;
  int month = 1;  // 1..12
  int day = 1;    // 1..31

  friend auto operator<=>(const Date&, const Date&) = default;
};

// Hours since 1970-01-01 00:00 local. The basic unit of the hourly series.
using HourStamp = std::int64_t;

// Minutes since 1970-01-01 00:00 local, used by raw logger records.
using MinuteStamp = std::int64_t;

// Days since 1970-01-01 (proleptic Gregorian).
std::int64_t days_from_date(const Date& d);
Date date_from_days(std::int64_t days);

bool valid_date(const Date& d);

inline HourStamp hour_stamp(const Date& d, int hour) {
  return days_from_date(d) * 24 + hour;
}
inline Date date_of_hour(HourStamp h) {
  // floor division; HourStamp may predate the epoch in principle
  std::int64_t days = h >= 0 ? h / 24 : -((-h + 23) / 24);
  return date_from_days(days);
}
inline int hour_of_day(HourStamp h) {
  int r = static_cast<int>(h % 24);
  return r < 0 ? r + 24 : r;
}
inline HourStamp hour_of_minute(MinuteStamp m) {
  return m >= 0 ? m / 60 : -((-m + 59) / 60);
}

// "YYYY-MM-DD HH:MM" -> minutes since epoch. Returns false on any
// deviation from the format (wrong width, bad separators, invalid date,
// hour > 23, minute > 59).
bool parse_minute_stamp(const std::string& text, MinuteStamp& out);

// "YYYY-MM-DD" -> Date.
bool parse_date(const std::string& text, Date& out);

std::string format_date(const Date& d);
std::string format_hour_stamp(HourStamp h);    // "YYYY-MM-DD HH:00"
std::string format_minute_stamp(MinuteStamp m);  // "YYYY-MM-DD HH:MM"

}  // namespace scenetemp
