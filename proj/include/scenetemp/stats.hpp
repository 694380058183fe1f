#pragma once

#include <map>
#include <string>
#include <vector>

#include "scenetemp/curves.hpp"
#include "scenetemp/stm.hpp"
#include "scenetemp/timeutil.hpp"

namespace scenetemp {

// Table of per-day coefficient ratios h_i(j) relative to a measurement
// day: rows i in {0,1,2}, one column per day offset j, column j = 0
// identically (1, 1, 1). Same layout and fallback rules as the ratio
// series used for short-term propagation.
using RatioTable = RatioSeries;

RatioTable ratio_table(const std::vector<DailyCurve>& curves,
                       const Date& day0, const RatioOptions& options = {});

struct TestResult {
  double statistic = 0.0;
  double p_value = 1.0;
  double df = 0.0;   // paired t: n - 1; ANOVA: between-groups df
  double df2 = 0.0;  // ANOVA only: within-groups df
  std::vector<std::string> assumption_flags;  // informational, never blocking
};

// Two-sided paired t-test on d = x - y.
TestResult paired_t_test(const std::vector<double>& x,
                         const std::vector<double>& y);

// One-way fixed-effects ANOVA. F = MS_between / MS_within with
// (k - 1, N - k) degrees of freedom.
TestResult one_way_anova(const std::vector<std::vector<double>>& groups);

// Structured assumption report: per-location/per-coefficient MAE between
// scene and station ratio sequences, a paired t-test for each of those
// pairs, and one ANOVA per coefficient across the station ratio
// sequences. "Passed" means the no-difference assumption survives at
// level alpha (p >= alpha).
struct AssumptionRow {
  std::string test_kind;  // "paired_t" or "anova"
  std::string location;   // location name; "stations" for ANOVA rows
  int coefficient = 0;    // 0, 1, 2
  double statistic = 0.0;
  double p_value = 1.0;
  bool passed = true;
  std::vector<std::string> flags;
};

struct AssumptionReport {
  Date day0_date;
  double alpha = 0.05;
  struct MaeEntry {
    std::string location;
    int coefficient = 0;
    double mae = 0.0;
  };
  std::vector<MaeEntry> ratio_maes;  // 3 per location
  std::vector<AssumptionRow> rows;   // t-test rows first, then ANOVA rows
  std::vector<std::string> warnings;  // ratio-table fallbacks, by source
  bool all_passed() const;
};

AssumptionReport assumption_report(
    const std::map<std::string, std::vector<DailyCurve>>& scene_curve_sets,
    const std::vector<DailyCurve>& station_curves,
    const std::vector<std::vector<DailyCurve>>& other_station_curve_sets,
    const Date& day0, double alpha = 0.05);

// CSV rendering: `test_kind,location,coefficient,statistic,p_value,passed`.
std::string write_assumption_csv(const AssumptionReport& report);

}  // namespace scenetemp
