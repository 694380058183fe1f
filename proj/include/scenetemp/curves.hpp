#pragma once

#include <cmath>
#include <numbers>
#include <vector>

#include "scenetemp/series.hpp"

namespace scenetemp {

// One period per day: t is measured in hours over [0, 24).
inline constexpr double kOmega = 2.0 * std::numbers::pi / 24.0;

struct TimedSample {
  double t = 0.0;       // hours within the day, [0, 24)
  double temp_c = 0.0;  // degrees Celsius
};

// One calendar day as a mean level plus a single daily harmonic:
// value(t) = a0 + a1*sin(omega*t) + a2*cos(omega*t).
struct DailyCurve {
  Date date;
  double a0 = 0.0;
  double a1 = 0.0;
  double a2 = 0.0;

  double amplitude() const { return std::sqrt(a1 * a1 + a2 * a2); }
};

struct SmoothingDiagnostics {
  std::vector<TimedSample> residuals;  // observed minus fitted, at input t
  double rmse = 0.0;
  size_t n_points = 0;
};

struct SmoothedDay {
  DailyCurve curve;
  SmoothingDiagnostics diagnostics;
};

// Least-squares projection of one day of samples onto {1, sin, cos}, solved
// by Householder QR of the n x 3 design matrix. Requires >= 3 samples with
// distinct t values; throws RankDeficient when the design loses rank.
SmoothedDay smooth_day(const std::vector<TimedSample>& points,
                       const Date& date = Date{});

// Evaluates the curve at time t (hours). t is wrapped into [0, 24).
double eval_curve(const DailyCurve& curve, double t);

struct CurveSeriesResult {
  std::vector<DailyCurve> curves;        // chronological
  std::vector<Date> skipped_days;        // incomplete, left unsmoothed
};

// Groups an hourly series by calendar day and smooths every complete day
// (>= min_hours_per_day points). Throws NoCompleteDays when nothing
// qualifies.
CurveSeriesResult curve_series(const HourlySeries& series,
                               int min_hours_per_day = 18);

}  // namespace scenetemp
