#pragma once

#include <array>
#include <cmath>
#include <vector>

#include "scenetemp/curves.hpp"

namespace scenetemp {

// A coefficient function expanded in the same {1, sin, cos} basis as the
// data curves.
struct CoefficientFunction {
  double c0 = 0.0;
  double c1 = 0.0;
  double c2 = 0.0;

  double operator()(double t) const {
    return c0 + c1 * std::sin(kOmega * t) + c2 * std::cos(kOmega * t);
  }
};

// Concurrent regression of scene curves on station curves:
//   scene(t) = beta0(t) * station(t) + beta1(t) + error(t),
// all operations pointwise in t over [0, 24).
struct MtmModel {
  CoefficientFunction beta0;  // dimensionless multiplier
  CoefficientFunction beta1;  // degrees Celsius offset
  size_t n_train_days = 0;
  double sse = 0.0;  // integrated squared error, degC^2 * hours
};

struct MtmFitDiagnostics {
  // per training day: residual values on the fit grid, degrees Celsius
  std::vector<std::vector<double>> residual_curves;
  double condition_estimate = 1.0;
  bool ill_conditioned = false;
};

struct MtmFitResult {
  MtmModel model;
  MtmFitDiagnostics diagnostics;
};

struct MtmOptions {
  // Uniform grid on [0, 24] used to discretize the integral least-squares
  // problem; 241 points (0.1 h) leaves no visible quadrature error for
  // these band-limited integrands.
  int grid_points = 241;
  int min_train_days = 2;
  // A fit with a worse condition estimate is still returned, but carries
  // the ill_conditioned flag; casework data are too scarce to refuse.
  double condition_warn_threshold = 1e6;
};

// Solves the stacked trapezoid-weighted least-squares problem for the six
// scalar coefficients of beta0 and beta1. Curves must be date-matched and
// in equal number (>= min_train_days).
MtmFitResult fit_mtm(const std::vector<DailyCurve>& station,
                     const std::vector<DailyCurve>& scene,
                     const MtmOptions& options = {});

// scene(t) = beta0(t) * station(t) + beta1(t) at t = 0..23.
std::array<double, 24> predict_mtm(const MtmModel& model,
                                   const DailyCurve& station_day);

}  // namespace scenetemp
