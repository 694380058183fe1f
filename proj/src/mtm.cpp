#include "scenetemp/mtm.hpp"

#include <string>

#include "scenetemp/errors.hpp"
#include "scenetemp/linalg.hpp"

namespace scenetemp {

MtmFitResult fit_mtm(const std::vector<DailyCurve>& station,
                     const std::vector<DailyCurve>& scene,
                     const MtmOptions& options) {
  if (station.size() != scene.size())
    throw Error(ErrorCode::DateMismatch,
                "station has " + std::to_string(station.size()) +
                    " curves, scene has " + std::to_string(scene.size()));
  for (size_t d = 0; d < station.size(); ++d)
    if (station[d].date != scene[d].date)
      throw Error(ErrorCode::DateMismatch,
                  "curve date mismatch at index " + std::to_string(d) + ": " +
                      format_date(station[d].date) + " vs " +
                      format_date(scene[d].date));
  const size_t n_days = station.size();
  if (n_days < static_cast<size_t>(options.min_train_days))
    throw Error(ErrorCode::TooFewDays,
                "concurrent fit needs >= " +
                    std::to_string(options.min_train_days) + " days, got " +
                    std::to_string(n_days));
  if (options.grid_points < 2)
    throw Error(ErrorCode::BadConfig, "grid_points must be >= 2");

  const size_t g = static_cast<size_t>(options.grid_points);
  const double step = 24.0 / static_cast<double>(g - 1);

  // Row for day d at grid time t, scaled by sqrt of the trapezoid weight:
  //   [x, x sin, x cos, 1, sin, cos] . theta = y
  Matrix design(n_days * g, 6);
  std::vector<double> rhs(n_days * g);
  for (size_t d = 0; d < n_days; ++d) {
    for (size_t k = 0; k < g; ++k) {
      double t = step * static_cast<double>(k);
      double w = (k == 0 || k == g - 1) ? step / 2.0 : step;
      double sw = std::sqrt(w);
      double s = std::sin(kOmega * t);
      double c = std::cos(kOmega * t);
      double x = eval_curve(station[d], t);
      size_t row = d * g + k;
      design(row, 0) = sw * x;
      design(row, 1) = sw * x * s;
      design(row, 2) = sw * x * c;
      design(row, 3) = sw;
      design(row, 4) = sw * s;
      design(row, 5) = sw * c;
      rhs[row] = sw * eval_curve(scene[d], t);
    }
  }

  auto ls = householder_least_squares(design, rhs);

  MtmFitResult result;
  result.model.beta0 = {ls.coefficients[0], ls.coefficients[1], ls.coefficients[2]};
  result.model.beta1 = {ls.coefficients[3], ls.coefficients[4], ls.coefficients[5]};
  result.model.n_train_days = n_days;
  result.model.sse = ls.residual_ss;
  result.diagnostics.condition_estimate = ls.condition_estimate;
  result.diagnostics.ill_conditioned =
      ls.rank_deficient ||
      ls.condition_estimate > options.condition_warn_threshold;

  result.diagnostics.residual_curves.resize(n_days);
  for (size_t d = 0; d < n_days; ++d) {
    auto& res = result.diagnostics.residual_curves[d];
    res.resize(g);
    for (size_t k = 0; k < g; ++k) {
      double t = step * static_cast<double>(k);
      double x = eval_curve(station[d], t);
      double pred = result.model.beta0(t) * x + result.model.beta1(t);
      res[k] = eval_curve(scene[d], t) - pred;
    }
  }
  return result;
}

std::array<double, 24> predict_mtm(const MtmModel& model,
                                   const DailyCurve& station_day) {
  std::array<double, 24> out{};
  for (int h = 0; h < 24; ++h) {
    double t = static_cast<double>(h);
    out[h] = model.beta0(t) * eval_curve(station_day, t) + model.beta1(t);
  }
  return out;
}

}  // namespace scenetemp
