#pragma once

#include <string>
#include <vector>

#include "scenetemp/timeutil.hpp"

namespace scenetemp {

// One row of a raw logger file: a single probe reading at minute resolution.
struct RawLoggerRecord {
  MinuteStamp timestamp = 0;
  std::string probe_id;
  double temp_c = 0.0;
};

struct HourlyPoint {
  HourStamp hour_start = 0;
  double temp_c = 0.0;
};

// Timestamped hourly means for one source (scene or station).
// hour_start values are strictly increasing; gaps are allowed.
struct HourlySeries {
  std::string source_id;
  std::vector<HourlyPoint> points;

  bool empty() const { return points.empty(); }
  size_t size() const { return points.size(); }
};

// Inner join of two hourly series on hour_start.
struct AlignedSeries {
  struct Pair {
    HourStamp hour_start = 0;
    double scene_temp_c = 0.0;
    double station_temp_c = 0.0;
  };
  std::vector<Pair> pairs;
  size_t dropped_scene = 0;    // scene hours without a station partner
  size_t dropped_station = 0;  // station hours without a scene partner
};

// Chronological train/test partition over complete days.
struct SplitSpec {
  std::vector<Date> test_days;
  std::vector<Date> train_days;
  std::vector<Date> incomplete_days;  // excluded from both sets
};

}  // namespace scenetemp
