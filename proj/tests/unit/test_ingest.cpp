#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "helpers.hpp"
#include "scenetemp/errors.hpp"
#include "scenetemp/ingest.hpp"
#include "scenetemp/timeutil.hpp"

using namespace scenetemp;

namespace {

HourlySeries series_of(std::initializer_list<HourlyPoint> pts,
                       std::string id = "s") {
  HourlySeries s;
  s.source_id = std::move(id);
  s.points = pts;
  return s;
}

HourlySeries full_days(const Date& start, int n_days, double base) {
  HourlySeries s;
  s.source_id = "full";
  for (int d = 0; d < n_days; ++d)
    for (int t = 0; t < 24; ++t)
      s.points.push_back(
          {hour_stamp(date_from_days(days_from_date(start) + d), t),
           base + d + 0.01 * t});
  return s;
}

}  // namespace

TEST_CASE("logger rows parse and malformed ones are reported together") {
  std::istringstream in(
      "timestamp,probe_id,temp_c\n"
      "2020-06-01 00:05,p1,20.5\n"
      "2020-06-01 00:35,p2,21.5\n");
  auto records = parse_logger_csv(in, "mem");
  REQUIRE(records.size() == 2);
  CHECK(records[0].probe_id == "p1");
  CHECK(records[0].temp_c == 20.5);
  CHECK(records[0].timestamp == hour_stamp({2020, 6, 1}, 0) * 60 + 5);

  std::istringstream bad(
      "timestamp,probe_id,temp_c\n"
      "2020-06-01 00:05,p1,20.5\n"
      "2020-06-01 00:06,p1,warm\n"
      "not a timestamp,p1,20.5\n"
      "2020-06-01 00:07,p1,20.5,extra\n");
  try {
    parse_logger_csv(bad, "mem");
    FAIL("expected MalformedRow");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::MalformedRow);
    CHECK(std::string(e.what()).find("3,4,5") != std::string::npos);
  }
}

TEST_CASE("header mismatches and missing files have their own codes") {
  std::istringstream in("time,probe,temp\n");
  testutil::check_error(ErrorCode::SchemaMismatch,
                        [&] { parse_logger_csv(in, "mem"); });
  testutil::check_error(ErrorCode::MissingFile,
                        [] { parse_logger_csv("/no/such/file.csv"); });
  std::istringstream empty("");
  testutil::check_error(ErrorCode::SchemaMismatch,
                        [&] { parse_station_csv(empty, "mem"); });
}

TEST_CASE("station rows must sit on the hour and be unique") {
  std::istringstream in(
      "timestamp,temp_c\n"
      "2020-06-01 01:00,15\n"
      "2020-06-01 00:00,14\n");
  HourlySeries s = parse_station_csv(in, "mem");
  REQUIRE(s.size() == 2);
  CHECK(s.points[0].hour_start == hour_stamp({2020, 6, 1}, 0));  // sorted
  CHECK(s.points[1].temp_c == 15.0);

  std::istringstream off_hour(
      "timestamp,temp_c\n"
      "2020-06-01 00:30,15\n");
  testutil::check_error(ErrorCode::MalformedRow,
                        [&] { parse_station_csv(off_hour, "mem"); });

  std::istringstream dup(
      "timestamp,temp_c\n"
      "2020-06-01 00:00,15\n"
      "2020-06-01 00:00,16\n");
  testutil::check_error(ErrorCode::MalformedRow,
                        [&] { parse_station_csv(dup, "mem"); });
}

TEST_CASE("aggregation means per hour and ignores record order") {
  std::vector<RawLoggerRecord> records;
  MinuteStamp h0 = hour_stamp({2020, 6, 1}, 0) * 60;
  // hour 0: probes at 20 and 22; hour 2: single reading
  records.push_back({h0 + 5, "p1", 20.0});
  records.push_back({h0 + 25, "p2", 22.0});
  records.push_back({h0 + 120, "p1", 17.0});
  HourlySeries agg = aggregate_hourly(records);
  REQUIRE(agg.size() == 2);
  CHECK(agg.points[0].hour_start == h0 / 60);
  CHECK(agg.points[0].temp_c == doctest::Approx(21.0).epsilon(1e-14));
  CHECK(agg.points[1].hour_start == h0 / 60 + 2);
  CHECK(agg.points[1].temp_c == 17.0);

  // many noisy readings, shuffled: bit-identical result
  std::mt19937_64 rng(5);
  std::normal_distribution<double> gauss(18.0, 4.0);
  records.clear();
  for (int i = 0; i < 200; ++i)
    records.push_back({h0 + i % 60, i % 2 ? "a" : "b", gauss(rng)});
  HourlySeries first = aggregate_hourly(records);
  std::shuffle(records.begin(), records.end(), rng);
  HourlySeries second = aggregate_hourly(records);
  REQUIRE(first.size() == second.size());
  for (size_t i = 0; i < first.size(); ++i) {
    CHECK(first.points[i].hour_start == second.points[i].hour_start);
    CHECK(first.points[i].temp_c == second.points[i].temp_c);
  }

  testutil::check_error(ErrorCode::EmptyInput, [] { aggregate_hourly({}); });
}

TEST_CASE("load_series_any dispatches on the header") {
  // via files, exercising the full open/dispatch path
  std::string dir = "ingest_scratch";
  std::filesystem::create_directories(dir);
  {
    std::ofstream out(dir + "/logger.csv");
    out << "timestamp,probe_id,temp_c\n2020-06-01 00:10,p1,20\n"
           "2020-06-01 00:50,p2,22\n";
  }
  HourlySeries s = load_series_any(dir + "/logger.csv");
  REQUIRE(s.size() == 1);
  CHECK(s.points[0].temp_c == 21.0);

  {
    std::ofstream out(dir + "/hourly.csv");
    out << "hour_start,temp_c\n2020-06-01 03:00,16.25\n";
  }
  HourlySeries h = load_series_any(dir + "/hourly.csv");
  REQUIRE(h.size() == 1);
  CHECK(h.points[0].hour_start == hour_stamp({2020, 6, 1}, 3));

  {
    std::ofstream out(dir + "/odd.csv");
    out << "a,b,c,d\n";
  }
  testutil::check_error(ErrorCode::SchemaMismatch,
                        [&] { load_series_any(dir + "/odd.csv"); });
}

TEST_CASE("write_hourly_csv round trips through parse_hourly_csv") {
  HourlySeries s = series_of({{hour_stamp({2020, 6, 1}, 0), 20.125},
                              {hour_stamp({2020, 6, 1}, 1), -3.5}});
  std::ostringstream out;
  write_hourly_csv(out, s);
  std::istringstream in(out.str());
  HourlySeries back = parse_hourly_csv(in, "mem");
  REQUIRE(back.size() == 2);
  CHECK(back.points[0].temp_c == 20.125);
  CHECK(back.points[1].temp_c == -3.5);
  CHECK(back.points[1].hour_start == s.points[1].hour_start);
}

TEST_CASE("align inner-joins on the hour and counts drops") {
  HourlySeries scene = series_of({{0, 1.0}, {1, 2.0}, {2, 3.0}, {5, 4.0}});
  HourlySeries station = series_of({{1, 10.0}, {2, 20.0}, {3, 30.0}});
  AlignedSeries joined = align(scene, station);
  REQUIRE(joined.pairs.size() == 2);
  CHECK(joined.pairs[0].hour_start == 1);
  CHECK(joined.pairs[0].scene_temp_c == 2.0);
  CHECK(joined.pairs[0].station_temp_c == 10.0);
  CHECK(joined.dropped_scene == 2);   // hours 0 and 5
  CHECK(joined.dropped_station == 1);  // hour 3

  testutil::check_error(ErrorCode::NoOverlap, [&] {
    align(series_of({{0, 1.0}}), series_of({{7, 1.0}}));
  });
  testutil::check_error(ErrorCode::EmptyInput,
                        [&] { align(HourlySeries{}, station); });
}

TEST_CASE("split keeps the earliest complete days for testing") {
  Date d0{2020, 6, 1};
  HourlySeries scene = full_days(d0, 6, 15.0);
  HourlySeries station = full_days(d0, 6, 12.0);
  // knock day 2 down to 10 shared hours
  auto day2 = days_from_date(d0) + 2;
  std::erase_if(scene.points, [&](const HourlyPoint& p) {
    return days_from_date(date_of_hour(p.hour_start)) == day2 &&
           hour_of_day(p.hour_start) >= 10;
  });
  SplitSpec split = split_train_test(align(scene, station), 2);
  REQUIRE(split.test_days.size() == 2);
  CHECK(split.test_days[0] == d0);
  CHECK(split.test_days[1] == date_from_days(days_from_date(d0) + 1));
  REQUIRE(split.train_days.size() == 3);
  CHECK(split.train_days.front() == date_from_days(days_from_date(d0) + 3));
  REQUIRE(split.incomplete_days.size() == 1);
  CHECK(split.incomplete_days[0] == date_from_days(day2));
  // every train day is strictly later than every test day
  for (const Date& tr : split.train_days)
    for (const Date& te : split.test_days) CHECK(te < tr);

  // relaxed threshold pulls day 2 into training
  SplitSpec relaxed = split_train_test(align(scene, station), 2, 10);
  CHECK(relaxed.train_days.size() == 4);
  CHECK(relaxed.incomplete_days.empty());
}
