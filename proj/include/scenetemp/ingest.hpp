#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "scenetemp/series.hpp"

namespace scenetemp {

// A day counts as complete when it has at least this many hourly points.
// Smoothing three Fourier coefficients from fewer points gets fragile,
// and it keeps the train/test day bookkeeping honest.
inline constexpr int kDefaultMinHoursPerDay = 18;

// Logger CSV: header "timestamp,probe_id,temp_c", timestamps "YYYY-MM-DD HH:MM".
// Rows with unparseable timestamps or non-numeric temperatures are collected
// and reported together as a MalformedRow error citing 1-based row numbers.
std::vector<RawLoggerRecord> parse_logger_csv(const std::string& path);
std::vector<RawLoggerRecord> parse_logger_csv(std::istream& in,
                                              const std::string& origin);

// Station CSV: header "timestamp,temp_c", timestamps "YYYY-MM-DD HH:00".
HourlySeries parse_station_csv(const std::string& path);
HourlySeries parse_station_csv(std::istream& in, const std::string& origin);

// Hourly-series CSV: header "hour_start,temp_c" (the format `ingest` emits).
HourlySeries parse_hourly_csv(const std::string& path);
HourlySeries parse_hourly_csv(std::istream& in, const std::string& origin);

// Reads any of the three formats above, dispatching on the header line.
HourlySeries load_series_any(const std::string& path);

void write_hourly_csv(std::ostream& out, const HourlySeries& series);

// Per-hour arithmetic mean over all records (all probes, all minutes) whose
// timestamp falls in [hour, hour+1). Hours with no records are absent.
// The result does not depend on the input record order.
HourlySeries aggregate_hourly(const std::vector<RawLoggerRecord>& records,
                              const std::string& source_id = "logger");

// Inner join on hour_start with per-side drop counts. Throws NoOverlap
// when the intersection is empty.
AlignedSeries align(const HourlySeries& scene, const HourlySeries& station);

// The n_test_days chronologically earliest complete days become the test
// set; all later complete days are training days. Incomplete days are
// excluded and listed. A day is complete when it has >= min_hours_per_day
// aligned points.
SplitSpec split_train_test(const AlignedSeries& series, int n_test_days,
                           int min_hours_per_day = kDefaultMinHoursPerDay);

}  // namespace scenetemp
