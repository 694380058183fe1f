#include "scenetemp/curves.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "scenetemp/errors.hpp"
#include "scenetemp/linalg.hpp"

namespace scenetemp {

SmoothedDay smooth_day(const std::vector<TimedSample>& points, const Date& date) {
  if (points.size() < 3)
    throw Error(ErrorCode::TooFewPoints,
                "smoothing needs at least 3 points, got " +
                    std::to_string(points.size()));
  {
    std::set<double> distinct;
    for (const auto& p : points) distinct.insert(p.t);
    if (distinct.size() < 3)
      throw Error(ErrorCode::TooFewPoints,
                  "smoothing needs at least 3 distinct t values");
  }

  const size_t n = points.size();
  Matrix design(n, 3);
  std::vector<double> rhs(n);
  for (size_t i = 0; i < n; ++i) {
    design(i, 0) = 1.0;
    design(i, 1) = std::sin(kOmega * points[i].t);
    design(i, 2) = std::cos(kOmega * points[i].t);
    rhs[i] = points[i].temp_c;
  }

  auto ls = householder_least_squares(design, rhs);
  if (ls.rank_deficient)
    throw Error(ErrorCode::RankDeficient,
                "Fourier design matrix is rank deficient for this day");

  SmoothedDay out;
  out.curve = DailyCurve{date, ls.coefficients[0], ls.coefficients[1],
                         ls.coefficients[2]};
  out.diagnostics.n_points = n;
  double ss = 0.0;
  out.diagnostics.residuals.reserve(n);
  for (const auto& p : points) {
    double r = p.temp_c - eval_curve(out.curve, p.t);
    out.diagnostics.residuals.push_back({p.t, r});
    ss += r * r;
  }
  out.diagnostics.rmse = std::sqrt(ss / static_cast<double>(n));
  return out;
}

double eval_curve(const DailyCurve& curve, double t) {
  double wrapped = std::fmod(t, 24.0);
  if (wrapped < 0.0) wrapped += 24.0;
  return curve.a0 + curve.a1 * std::sin(kOmega * wrapped) +
         curve.a2 * std::cos(kOmega * wrapped);
}

CurveSeriesResult curve_series(const HourlySeries& series,
                               int min_hours_per_day) {
  std::map<std::int64_t, std::vector<TimedSample>> days;
  for (const auto& p : series.points) {
    std::int64_t day = days_from_date(date_of_hour(p.hour_start));
    days[day].push_back({static_cast<double>(hour_of_day(p.hour_start)), p.temp_c});
  }

  CurveSeriesResult result;
  for (const auto& [day, samples] : days) {
    Date date = date_from_days(day);
    if (static_cast<int>(samples.size()) < min_hours_per_day) {
      result.skipped_days.push_back(date);
      continue;
    }
    result.curves.push_back(smooth_day(samples, date).curve);
  }
  if (result.curves.empty())
    throw Error(ErrorCode::NoCompleteDays,
                "no day in " + series.source_id + " has >= " +
                    std::to_string(min_hours_per_day) + " hourly points");
  return result;
}

}  // namespace scenetemp
