#include "scenetemp/stm.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <thread>

#include "scenetemp/errors.hpp"

namespace scenetemp {

namespace {

constexpr double kLogSqrt2Pi = 0.91893853320467274178;  // log(sqrt(2*pi))

double log_normal_pdf(double x, double mean, double sd) {
  double z = (x - mean) / sd;
  return -0.5 * z * z - std::log(sd) - kLogSqrt2Pi;
}

// Largest integer k with k * step strictly below bound.
int max_steps_below(double bound, double step) {
  int k = static_cast<int>(std::floor(bound / step));
  if (static_cast<double>(k) * step >= bound) --k;
  return k;
}

// Precomputed per-sigma terms. For n residuals with sum of squares SSE the
// log posterior at sigma is
//   log Norm(sigma; pm, psd) - n log sigma - (n/2) log(2 pi) - SSE/(2 sigma^2)
// which only needs (n, SSE) per candidate.
struct SigmaGrid {
  std::vector<double> sigma;
  std::vector<double> base;      // prior + sigma-only likelihood terms
  std::vector<double> inv_2s2;   // 1 / (2 sigma^2)

  SigmaGrid(const StmConfig& cfg, size_t n_points) {
    int k_max = static_cast<int>(
        std::floor((cfg.sigma_max - cfg.sigma_min) / cfg.sigma_step + 1e-9));
    if (k_max < 0) throw Error(ErrorCode::EmptyGrid, "sigma grid is empty");
    const double n = static_cast<double>(n_points);
    sigma.reserve(k_max + 1);
    base.reserve(k_max + 1);
    inv_2s2.reserve(k_max + 1);
    for (int k = 0; k <= k_max; ++k) {
      double s = cfg.sigma_min + static_cast<double>(k) * cfg.sigma_step;
      sigma.push_back(s);
      base.push_back(log_normal_pdf(s, cfg.prior_mean, cfg.prior_sd) -
                     n * std::log(s) - n * kLogSqrt2Pi);
      inv_2s2.push_back(1.0 / (2.0 * s * s));
    }
  }

  // Ascending scan with strict improvement keeps ties at the smaller sigma.
  SigmaScore best(double sse) const {
    SigmaScore out{-std::numeric_limits<double>::infinity(), sigma.front()};
    for (size_t k = 0; k < sigma.size(); ++k) {
      double score = base[k] - sse * inv_2s2[k];
      if (score > out.log_posterior) {
        out.log_posterior = score;
        out.sigma = sigma[k];
      }
    }
    return out;
  }
};

struct PreparedPoints {
  std::vector<double> sin_t, cos_t, y;

  explicit PreparedPoints(const std::vector<TimedSample>& points) {
    sin_t.reserve(points.size());
    cos_t.reserve(points.size());
    y.reserve(points.size());
    for (const auto& p : points) {
      sin_t.push_back(std::sin(kOmega * p.t));
      cos_t.push_back(std::cos(kOmega * p.t));
      y.push_back(p.temp_c);
    }
  }

  double sse(double a0, double a1, double a2) const {
    double acc = 0.0;
    for (size_t i = 0; i < y.size(); ++i) {
      double r = y[i] - (a0 + a1 * sin_t[i] + a2 * cos_t[i]);
      acc += r * r;
    }
    return acc;
  }
};

struct BestCandidate {
  double log_posterior = -std::numeric_limits<double>::infinity();
  double sigma = 0.0;
  double a0 = 0.0, a1 = 0.0, a2 = 0.0;
  bool valid = false;

  // Strict-score order, then lexicographic (a0, a1, a2). Exact float
  // comparisons: scores are computed identically for a candidate no
  // matter how the grid is partitioned.
  bool better_than(const BestCandidate& other) const {
    if (!other.valid) return valid;
    if (!valid) return false;
    if (log_posterior != other.log_posterior)
      return log_posterior > other.log_posterior;
    if (a0 != other.a0) return a0 < other.a0;
    if (a1 != other.a1) return a1 < other.a1;
    return a2 < other.a2;
  }
};

}  // namespace

void StmConfig::validate() const {
  if (a0_step <= 0.0 || a_step <= 0.0 || sigma_step <= 0.0)
    throw Error(ErrorCode::EmptyGrid, "grid steps must be positive");
  if (a0_halfwidth <= 0.0)
    throw Error(ErrorCode::EmptyGrid, "a0_halfwidth must be positive");
  if (amp_max <= 0.0)
    throw Error(ErrorCode::EmptyGrid, "amp_max must be positive");
  if (sigma_min <= 0.0)
    throw Error(ErrorCode::EmptyGrid, "sigma_min must be positive");
  if (sigma_max < sigma_min)
    throw Error(ErrorCode::EmptyGrid, "sigma_max below sigma_min");
  if (prior_sd <= 0.0)
    throw Error(ErrorCode::EmptyGrid, "prior_sd must be positive");
}

SigmaScore score_candidate(const std::vector<TimedSample>& points,
                           const DailyCurve& candidate, const StmConfig& cfg) {
  cfg.validate();
  if (points.empty())
    throw Error(ErrorCode::EmptyData, "no measurement points to score");
  SigmaGrid grid(cfg, points.size());
  PreparedPoints prep(points);
  return grid.best(prep.sse(candidate.a0, candidate.a1, candidate.a2));
}

StmModel fit_stm_day(const std::vector<TimedSample>& points,
                     const StmConfig& cfg, const Date& date, int n_threads) {
  cfg.validate();
  if (points.size() < 2)
    throw Error(ErrorCode::TooFewPoints,
                "short-term fit needs >= 2 points, got " +
                    std::to_string(points.size()));
  for (const auto& p : points)
    if (p.t < 0.0 || p.t >= 24.0)
      throw Error(ErrorCode::TooFewPoints,
                  "measurement times must lie within one day ([0, 24))");

  const SigmaGrid grid(cfg, points.size());
  const PreparedPoints prep(points);

  const int k0_max = max_steps_below(cfg.a0_halfwidth, cfg.a0_step);
  const int ka_max = max_steps_below(cfg.amp_max, cfg.a_step);
  const double amp_max_sq = cfg.amp_max * cfg.amp_max;

  const int n_a0 = 2 * std::max(k0_max, 0) + 1;
  const int n_a = 2 * ka_max + 1;

  // Candidates indexed lexicographically by (k0, k1, k2); a worker scans a
  // contiguous slice of a0 values and the slice bests merge in order.
  auto scan_a0_range = [&](int k0_begin, int k0_end) {
    BestCandidate best;
    for (int i0 = k0_begin; i0 < k0_end; ++i0) {
      double a0 = cfg.t_m + static_cast<double>(i0 - std::max(k0_max, 0)) * cfg.a0_step;
      for (int i1 = 0; i1 < n_a; ++i1) {
        double a1 = static_cast<double>(i1 - ka_max) * cfg.a_step;
        for (int i2 = 0; i2 < n_a; ++i2) {
          double a2 = static_cast<double>(i2 - ka_max) * cfg.a_step;
          if (a1 * a1 + a2 * a2 >= amp_max_sq) continue;
          SigmaScore score = grid.best(prep.sse(a0, a1, a2));
          BestCandidate cand{score.log_posterior, score.sigma, a0, a1, a2, true};
          if (cand.better_than(best)) best = cand;
        }
      }
    }
    return best;
  };

  BestCandidate best;
  if (n_threads <= 1) {
    best = scan_a0_range(0, n_a0);
  } else {
    int workers = std::min(n_threads, n_a0);
    std::vector<std::future<BestCandidate>> futures;
    futures.reserve(workers);
    for (int w = 0; w < workers; ++w) {
      int begin = n_a0 * w / workers;
      int end = n_a0 * (w + 1) / workers;
      futures.push_back(std::async(std::launch::async, scan_a0_range, begin, end));
    }
    for (auto& f : futures) {
      BestCandidate partial = f.get();
      if (partial.better_than(best)) best = partial;
    }
  }

  if (!best.valid)
    throw Error(ErrorCode::EmptyGrid, "candidate grid is empty");

  StmModel model;
  model.day0_curve = DailyCurve{date, best.a0, best.a1, best.a2};
  model.map_sigma = best.sigma;
  model.log_posterior = best.log_posterior;
  return model;
}

const RatioSeries::Entry* RatioSeries::find(int day_offset) const {
  for (const auto& e : entries)
    if (e.day_offset == day_offset) return &e;
  return nullptr;
}

RatioSeries compute_ratios(const std::vector<DailyCurve>& station_curves,
                           const Date& measurement_date,
                           const RatioOptions& options) {
  const DailyCurve* day0 = nullptr;
  for (const auto& c : station_curves)
    if (c.date == measurement_date) day0 = &c;
  if (!day0)
    throw Error(ErrorCode::MeasurementDayAbsent,
                "no station curve for " + format_date(measurement_date));

  const double mean_scale =
      options.t_m ? std::abs(*options.t_m) : std::max(1.0, std::abs(day0->a0));
  const std::array<double, 3> denom{day0->a0, day0->a1, day0->a2};
  const std::array<double, 3> epsilon{options.epsilon_mean_rel * mean_scale,
                                      options.epsilon_osc, options.epsilon_osc};

  RatioSeries ratios;
  ratios.day0_date = measurement_date;
  const std::int64_t day0_days = days_from_date(measurement_date);
  for (const auto& c : station_curves) {
    RatioSeries::Entry entry;
    entry.day_offset = static_cast<int>(days_from_date(c.date) - day0_days);
    if (entry.day_offset == 0) {
      entry.h = {1.0, 1.0, 1.0};
    } else {
      const std::array<double, 3> numer{c.a0, c.a1, c.a2};
      for (int i = 0; i < 3; ++i) {
        if (std::abs(denom[i]) < epsilon[i]) {
          entry.h[i] = 1.0;
          ratios.warnings.push_back(
              "coefficient " + std::to_string(i) + " on " +
              format_date(measurement_date) +
              " is near zero; ratio for day offset " +
              std::to_string(entry.day_offset) + " fell back to 1");
        } else {
          entry.h[i] = numer[i] / denom[i];
        }
      }
    }
    ratios.entries.push_back(entry);
  }
  std::sort(ratios.entries.begin(), ratios.entries.end(),
            [](const auto& a, const auto& b) { return a.day_offset < b.day_offset; });
  return ratios;
}

DailyCurve stm_curve_for(const StmModel& model, const Date& target_date) {
  int j = static_cast<int>(days_from_date(target_date) -
                           days_from_date(model.ratios.day0_date));
  const RatioSeries::Entry* entry = model.ratios.find(j);
  if (!entry)
    throw Error(ErrorCode::DateOutOfRange,
                format_date(target_date) + " is outside the ratio series");
  return DailyCurve{target_date, entry->h[0] * model.day0_curve.a0,
                    entry->h[1] * model.day0_curve.a1,
                    entry->h[2] * model.day0_curve.a2};
}

std::array<double, 24> predict_stm(const StmModel& model,
                                   const Date& target_date) {
  DailyCurve curve = stm_curve_for(model, target_date);
  std::array<double, 24> out{};
  for (int h = 0; h < 24; ++h)
    out[h] = eval_curve(curve, static_cast<double>(h));
  return out;
}

}  // namespace scenetemp
