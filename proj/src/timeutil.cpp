#include "scenetemp/timeutil.hpp"

#include <cstdio>

namespace scenetemp {

// Civil-from/to-days conversions follow the classic shifted-era
// formulation (era = 400-year block, proleptic Gregorian).
std::int64_t days_from_date(const Date& d) {
  std::int64_t y = d.year;
  y -= d.month <= 2;
  const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
  const unsigned yoe = static_cast<unsigned>(y - era * 400);            // [0, 399]
  const unsigned doy =
      (153u * (d.month + (d.month > 2 ? -3 : 9)) + 2u) / 5u + d.day - 1;  // [0, 365]
  const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;           // [0, 146096]
  return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

Date date_from_days(std::int64_t z) {
  z += 719468;
  const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
  const unsigned doe = static_cast<unsigned>(z - era * 146097);  // [0, 146096]
  const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
  const std::int64_t y = static_cast<std::int64_t>(yoe) + era * 400;
  const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);  // [0, 365]
  const unsigned mp = (5 * doy + 2) / 153;                       // [0, 11]
  const unsigned day = doy - (153 * mp + 2) / 5 + 1;             // [1, 31]
  const unsigned month = mp < 10 ? mp + 3 : mp - 9;              // [1, 12]
  return Date{static_cast<int>(y + (month <= 2)), static_cast<int>(month),
              static_cast<int>(day)};
}

bool valid_date(const Date& d) {
  if (d.month < 1 || d.month > 12 || d.day < 1) return false;
  static const int len[] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
  int max_day = len[d.month - 1];
  bool leap = (d.year % 4 == 0 && d.year % 100 != 0) || d.year % 400 == 0;
  if (d.month == 2 && leap) max_day = 29;
  return d.day <= max_day;
}

namespace {

bool all_digits(const std::string& s, size_t begin, size_t end) {
  for (size_t i = begin; i < end; ++i)
    if (s[i] < '0' || s[i] > '9') return false;
  return true;
}

int to_int(const std::string& s, size_t begin, size_t end) {
  int v = 0;
  for (size_t i = begin; i < end; ++i) v = v * 10 + (s[i] - '0');
  return v;
}

}  // namespace

bool parse_date(const std::string& text, Date& out) {
  if (text.size() != 10 || text[4] != '-' || text[7] != '-') return false;
  if (!all_digits(text, 0, 4) || !all_digits(text, 5, 7) ||
      !all_digits(text, 8, 10))
    return false;
  Date d{to_int(text, 0, 4), to_int(text, 5, 7), to_int(text, 8, 10)};
  if (!valid_date(d)) return false;
  out = d;
  return true;
}

bool parse_minute_stamp(const std::string& text, MinuteStamp& out) {
  if (text.size() != 16 || text[10] != ' ' || text[13] != ':') return false;
  Date d;
  if (!parse_date(text.substr(0, 10), d)) return false;
  if (!all_digits(text, 11, 13) || !all_digits(text, 14, 16)) return false;
  int hour = to_int(text, 11, 13);
  int minute = to_int(text, 14, 16);
  if (hour > 23 || minute > 59) return false;
  out = (days_from_date(d) * 24 + hour) * 60 + minute;
  return true;
}

std::string format_date(const Date& d) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%04d-%02d-%02d", d.year, d.month, d.day);
  return buf;
}

std::string format_hour_stamp(HourStamp h) {
  char buf[24];
  Date d = date_of_hour(h);
  std::snprintf(buf, sizeof buf, "%04d-%02d-%02d %02d:00", d.year, d.month,
                d.day, hour_of_day(h));
  return buf;
}

std::string format_minute_stamp(MinuteStamp m) {
  std::int64_t h = hour_of_minute(m);
  int minute = static_cast<int>(m - h * 60);
  Date d = date_of_hour(h);
  char buf[24];
  std::snprintf(buf, sizeof buf, "%04d-%02d-%02d %02d:%02d", d.year, d.month,
                d.day, hour_of_day(h), minute);
  return buf;
}

}  // namespace scenetemp
