#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "scenetemp/curves.hpp"

namespace scenetemp {

// Grid-search configuration for the short-term reconstruction.
//
// The candidate day curve (a0, a1, a2) is searched over
//   a0 in (t_m - a0_halfwidth, t_m + a0_halfwidth), stepping a0_step,
//   (a1, a2) on a square grid stepping a_step with
//   sqrt(a1^2 + a2^2) < amp_max (strict),
// and the residual standard deviation sigma over
//   [sigma_min, sigma_max] stepping sigma_step.
//
// The bounds are strict, so the extreme a0 grid values are
// t_m +/- (a0_halfwidth - a0_step).
struct StmConfig {
  double prior_mean = 1.0;  // sigma prior, characterizes the data loggers
  double prior_sd = 0.75;
  double a0_halfwidth = 5.0;
  double a0_step = 0.25;
  double amp_max = 20.0;
  // Default 0.25 keeps the search at desk scale (~39 x 20k candidates);
  // set 0.01 for the fine grid, at roughly 600x the cost.
  double a_step = 0.25;
  double sigma_min = 0.05;  // clamps the zero-residual degeneracy
  double sigma_max = 5.0;
  double sigma_step = 0.01;
  double t_m = 0.0;  // mean station temperature, set per case

  // Throws EmptyGrid on non-positive steps, sigma_max < sigma_min,
  // non-positive amp_max, or sigma_min <= 0.
  void validate() const;
};

// Coefficient ratios h_i(j) = station_coeff_i(day j) / station_coeff_i(day 0),
// indexed by signed day offset j from the measurement day. Entry j = 0 is
// exactly (1, 1, 1).
struct RatioSeries {
  struct Entry {
    int day_offset = 0;
    std::array<double, 3> h{1.0, 1.0, 1.0};
  };
  Date day0_date;
  std::vector<Entry> entries;  // sorted by day_offset
  std::vector<std::string> warnings;  // near-zero denominator fallbacks

  const Entry* find(int day_offset) const;
};

struct StmModel {
  DailyCurve day0_curve;  // MAP curve for the measurement day
  double map_sigma = 0.0;
  double log_posterior = 0.0;  // maximized unnormalized log posterior
  RatioSeries ratios;          // empty until attached via compute_ratios
};

struct SigmaScore {
  double log_posterior = 0.0;
  double sigma = 0.0;
};

// Maximizes, over the sigma grid,
//   log Norm(sigma; prior_mean, prior_sd)
//     + sum_x log Norm(y_x - M(t_x); 0, sigma)
// in the log domain. Ties resolve to the smaller sigma.
SigmaScore score_candidate(const std::vector<TimedSample>& points,
                           const DailyCurve& candidate, const StmConfig& cfg);

// Exhaustive MAP search over the candidate grid. Ties between candidates
// resolve to the lexicographically smallest (a0, a1, a2); the result does
// not depend on n_threads. The returned model has no ratios attached.
StmModel fit_stm_day(const std::vector<TimedSample>& points,
                     const StmConfig& cfg, const Date& date = Date{},
                     int n_threads = 1);

struct RatioOptions {
  double epsilon_osc = 1e-3;   // |b1(0)|, |b2(0)| below this -> h = 1
  double epsilon_mean_rel = 1e-6;  // scaled by |t_m| (or |b0(0)| if t_m unset)
  std::optional<double> t_m;
};

// Per-day coefficient ratios from the station record, day 0 being the
// measurement date. Near-zero denominators fall back to h = 1 with a
// warning instead of exploding.
RatioSeries compute_ratios(const std::vector<DailyCurve>& station_curves,
                           const Date& measurement_date,
                           const RatioOptions& options = {});

// Ratio-propagated curve for the requested day, evaluated at t = 0..23:
//   a_i(j) = h_i(j) * a_i(0).
std::array<double, 24> predict_stm(const StmModel& model,
                                   const Date& target_date);
DailyCurve stm_curve_for(const StmModel& model, const Date& target_date);

}  // namespace scenetemp
