#include "scenetemp/ingest.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "scenetemp/errors.hpp"
#include "scenetemp/io.hpp"

namespace scenetemp {

namespace {

std::string strip_cr(std::string line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

bool parse_temp(const std::string& field, double& out) {
  const char* begin = field.data();
  const char* end = begin + field.size();
  auto [ptr, ec] = std::from_chars(begin, end, out);
  if (ec != std::errc() || ptr != end) return false;
  return std::isfinite(out);
}

[[noreturn]] void throw_malformed(const std::string& origin,
                                  const std::vector<size_t>& rows) {
  std::ostringstream msg;
  msg << origin << ": malformed row";
  if (rows.size() > 1) msg << "s";
  msg << " ";
  for (size_t i = 0; i < rows.size(); ++i) {
    if (i) msg << ",";
    msg << rows[i];
  }
  throw Error(ErrorCode::MalformedRow, msg.str());
}

std::ifstream open_or_throw(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw Error(ErrorCode::MissingFile, "cannot open " + path);
  return in;
}

void expect_header(std::istream& in, const std::string& expected,
                   const std::string& origin) {
  std::string line;
  if (!std::getline(in, line))
    throw Error(ErrorCode::SchemaMismatch, origin + ": empty file");
  line = strip_cr(line);
  if (line != expected)
    throw Error(ErrorCode::SchemaMismatch,
                origin + ": expected header \"" + expected + "\", got \"" +
                    line + "\"");
}

}  // namespace

std::vector<RawLoggerRecord> parse_logger_csv(std::istream& in,
                                              const std::string& origin) {
  expect_header(in, "timestamp,probe_id,temp_c", origin);
  std::vector<RawLoggerRecord> records;
  std::vector<size_t> bad_rows;
  std::string line;
  size_t row = 1;  // header was row 1
  while (std::getline(in, line)) {
    ++row;
    line = strip_cr(line);
    if (line.empty()) continue;
    auto fields = split_fields(line);
    RawLoggerRecord rec;
    if (fields.size() != 3 || !parse_minute_stamp(fields[0], rec.timestamp) ||
        fields[1].empty() || !parse_temp(fields[2], rec.temp_c)) {
      bad_rows.push_back(row);
      continue;
    }
    rec.probe_id = fields[1];
    records.push_back(std::move(rec));
  }
  if (!bad_rows.empty()) throw_malformed(origin, bad_rows);
  return records;
}

std::vector<RawLoggerRecord> parse_logger_csv(const std::string& path) {
  auto in = open_or_throw(path);
  return parse_logger_csv(in, path);
}

HourlySeries parse_station_csv(std::istream& in, const std::string& origin) {
  expect_header(in, "timestamp,temp_c", origin);
  HourlySeries series;
  series.source_id = origin;
  std::vector<size_t> bad_rows;
  std::string line;
  size_t row = 1;
  while (std::getline(in, line)) {
    ++row;
    line = strip_cr(line);
    if (line.empty()) continue;
    auto fields = split_fields(line);
    MinuteStamp minute = 0;
    double temp = 0.0;
    // station rows must sit exactly on the hour
    if (fields.size() != 2 || !parse_minute_stamp(fields[0], minute) ||
        minute % 60 != 0 || !parse_temp(fields[1], temp)) {
      bad_rows.push_back(row);
      continue;
    }
    series.points.push_back({minute / 60, temp});
  }
  if (!bad_rows.empty()) throw_malformed(origin, bad_rows);
  std::sort(series.points.begin(), series.points.end(),
            [](const auto& a, const auto& b) { return a.hour_start < b.hour_start; });
  for (size_t i = 1; i < series.points.size(); ++i)
    if (series.points[i].hour_start == series.points[i - 1].hour_start)
      throw Error(ErrorCode::MalformedRow,
                  origin + ": duplicate hour " +
                      format_hour_stamp(series.points[i].hour_start));
  return series;
}

HourlySeries parse_station_csv(const std::string& path) {
  auto in = open_or_throw(path);
  return parse_station_csv(in, path);
}

HourlySeries parse_hourly_csv(std::istream& in, const std::string& origin) {
  expect_header(in, "hour_start,temp_c", origin);
  HourlySeries series;
  series.source_id = origin;
  std::vector<size_t> bad_rows;
  std::string line;
  size_t row = 1;
  while (std::getline(in, line)) {
    ++row;
    line = strip_cr(line);
    if (line.empty()) continue;
    auto fields = split_fields(line);
    MinuteStamp minute = 0;
    double temp = 0.0;
    if (fields.size() != 2 || !parse_minute_stamp(fields[0], minute) ||
        minute % 60 != 0 || !parse_temp(fields[1], temp)) {
      bad_rows.push_back(row);
      continue;
    }
    series.points.push_back({minute / 60, temp});
  }
  if (!bad_rows.empty()) throw_malformed(origin, bad_rows);
  std::sort(series.points.begin(), series.points.end(),
            [](const auto& a, const auto& b) { return a.hour_start < b.hour_start; });
  for (size_t i = 1; i < series.points.size(); ++i)
    if (series.points[i].hour_start == series.points[i - 1].hour_start)
      throw Error(ErrorCode::MalformedRow,
                  origin + ": duplicate hour " +
                      format_hour_stamp(series.points[i].hour_start));
  return series;
}

HourlySeries parse_hourly_csv(const std::string& path) {
  auto in = open_or_throw(path);
  return parse_hourly_csv(in, path);
}

HourlySeries load_series_any(const std::string& path) {
  auto in = open_or_throw(path);
  std::string header;
  if (!std::getline(in, header))
    throw Error(ErrorCode::SchemaMismatch, path + ": empty file");
  header = strip_cr(header);
  in.seekg(0);
  if (header == "timestamp,probe_id,temp_c")
    return aggregate_hourly(parse_logger_csv(in, path), path);
  if (header == "timestamp,temp_c") return parse_station_csv(in, path);
  if (header == "hour_start,temp_c") return parse_hourly_csv(in, path);
  throw Error(ErrorCode::SchemaMismatch,
              path + ": unrecognized header \"" + header + "\"");
}

void write_hourly_csv(std::ostream& out, const HourlySeries& series) {
  out << "hour_start,temp_c\n";
  for (const auto& p : series.points)
    out << format_hour_stamp(p.hour_start) << "," << format_double(p.temp_c)
        << "\n";
}

HourlySeries aggregate_hourly(const std::vector<RawLoggerRecord>& records,
                              const std::string& source_id) {
  if (records.empty())
    throw Error(ErrorCode::EmptyInput, "no logger records to aggregate");
  std::map<HourStamp, std::vector<double>> buckets;
  for (const auto& rec : records)
    buckets[hour_of_minute(rec.timestamp)].push_back(rec.temp_c);
  HourlySeries series;
  series.source_id = source_id;
  series.points.reserve(buckets.size());
  for (auto& [hour, values] : buckets) {
    // sorting before summing makes the mean independent of record order
    std::sort(values.begin(), values.end());
    double sum = 0.0;
    for (double v : values) sum += v;
    series.points.push_back({hour, sum / static_cast<double>(values.size())});
  }
  return series;
}

AlignedSeries align(const HourlySeries& scene, const HourlySeries& station) {
  if (scene.empty() || station.empty())
    throw Error(ErrorCode::EmptyInput, "align requires two non-empty series");
  AlignedSeries out;
  size_t i = 0, j = 0;
  while (i < scene.points.size() && j < station.points.size()) {
    HourStamp a = scene.points[i].hour_start;
    HourStamp b = station.points[j].hour_start;
    if (a == b) {
      out.pairs.push_back({a, scene.points[i].temp_c, station.points[j].temp_c});
      ++i;
      ++j;
    } else if (a < b) {
      ++out.dropped_scene;
      ++i;
    } else {
      ++out.dropped_station;
      ++j;
    }
  }
  out.dropped_scene += scene.points.size() - i;
  out.dropped_station += station.points.size() - j;
  if (out.pairs.empty())
    throw Error(ErrorCode::NoOverlap,
                "series share no common hours (" + scene.source_id + " vs " +
                    station.source_id + ")");
  return out;
}

SplitSpec split_train_test(const AlignedSeries& series, int n_test_days,
                           int min_hours_per_day) {
  std::map<std::int64_t, int> day_counts;  // epoch day -> paired hours
  for (const auto& p : series.pairs) ++day_counts[days_from_date(date_of_hour(p.hour_start))];

  SplitSpec split;
  std::vector<Date> complete;
  for (const auto& [day, count] : day_counts) {
    Date d = date_from_days(day);
    if (count >= min_hours_per_day)
      complete.push_back(d);
    else
      split.incomplete_days.push_back(d);
  }
  if (static_cast<int>(complete.size()) < n_test_days + 1)
    throw Error(ErrorCode::InsufficientData,
                "need at least " + std::to_string(n_test_days + 1) +
                    " complete days, have " + std::to_string(complete.size()));
  split.test_days.assign(complete.begin(), complete.begin() + n_test_days);
  split.train_days.assign(complete.begin() + n_test_days, complete.end());
  return split;
}

}  // namespace scenetemp
