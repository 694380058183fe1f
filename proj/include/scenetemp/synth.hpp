#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "scenetemp/curves.hpp"
#include "scenetemp/series.hpp"

namespace scenetemp {

// Scene = station, pointwise.
struct IdentityTransform {};

// Scene(t) = slope * station(t) + offset, pointwise.
struct AffineTransform {
  double slope = 1.0;
  double offset = 0.0;
};

// Scene(t) = beta0(t) * station(t) + beta1(t) with both betas expressed in
// the {1, sin, cos} basis. The product carries second-harmonic content, so
// the stored ground-truth curves are the per-day least-squares projections
// of the exact hourly values back onto the basis.
struct ConcurrentTransform {
  std::array<double, 3> beta0{1.0, 0.0, 0.0};
  std::array<double, 3> beta1{0.0, 0.0, 0.0};
};

// Scene day-j coefficients are h_i(j) * day0[i], where
// h_i(j) = station_i(day j) / station_i(day 0). Every scene day is an exact
// three-term curve, and the station's coefficient ratios transfer to the
// scene exactly.
struct ExactRatioTransform {
  std::array<double, 3> day0{0.0, 0.0, 0.0};
};

using SceneTransform = std::variant<IdentityTransform, AffineTransform,
                                    ConcurrentTransform, ExactRatioTransform>;

struct WorldSpec {
  int n_days = 1;
  Date start_date{2020, 6, 1};
  // Per-day station (b0, b1, b2); size must equal n_days.
  std::vector<std::array<double, 3>> station_coeffs;
  SceneTransform scene_transform = IdentityTransform{};
  double noise_sd = 0.0;  // degrees Celsius, scene series only
  std::uint64_t seed = 0;
};

struct SynthWorld {
  HourlySeries station;  // noiseless archive, t = 0..23 each day
  HourlySeries scene;    // transformed series with additive noise
  std::vector<DailyCurve> station_truth;
  std::vector<DailyCurve> scene_truth;
  // Pre-noise scene values, index-aligned with scene.points. Lets tests
  // model instrument-grade spot readings alongside the noisy archive.
  std::vector<double> scene_noiseless;
};

// Deterministic world builder. The noise value for scene hour k
// (k = day * 24 + hour) is a pure function of (seed, k): outputs 2k and
// 2k + 1 of the splitmix64 sequence started at `seed` feed one Box-Muller
// cosine draw. Identical spec therefore gives bit-identical output on any
// platform, in any generation order. Throws InvalidSpec on n_days < 1,
// noise_sd < 0, a coefficient row count != n_days, an invalid start date,
// or an exact_ratio world whose station day-0 coefficients are ~0.
SynthWorld generate(const WorldSpec& spec);

// Standard-normal draw number k of the stream identified by seed; the
// generator behind WorldSpec noise, exposed for tests.
double counter_normal(std::uint64_t seed, std::uint64_t k);

enum class QuasiIndoorKind {
  kAttic,
  kGarage,
  kShack,
  kUninhabited,
  kUnderground,
  kRoof,
};

// Damping/lag/offset per preset kind. Invented values chosen to span the
// plausible quasi-indoor range; they are not measured data.
struct QuasiIndoorParams {
  double damping = 1.0;    // scene/station amplitude factor, (0, 1]
  double lag_hours = 0.0;  // scene peak delay behind the station peak
  double offset_c = 0.0;   // scene mean minus station mean
};

QuasiIndoorParams quasi_indoor_params(QuasiIndoorKind kind);

// 15-day exact-ratio world around an 18 C station day with a ~7 C swing
// peaking at 15:00 and a slow day-to-day amplitude cycle. The scene day-0
// curve is the damped, lag-rotated, offset station curve, snapped onto the
// default 0.25 search lattice so grid fits can represent it exactly.
// noise_sd defaults to 0.5; callers override seed/noise as needed.
WorldSpec quasi_indoor_preset(QuasiIndoorKind kind);

const std::vector<std::string>& quasi_indoor_kind_names();
std::string to_string(QuasiIndoorKind kind);
// Throws InvalidSpec for unknown names.
QuasiIndoorKind quasi_indoor_kind_from(const std::string& name);

}  // namespace scenetemp
