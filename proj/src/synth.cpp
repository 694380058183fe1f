#include "scenetemp/synth.hpp"

#include <cmath>
#include <cstddef>
#include <numbers>

#include "scenetemp/errors.hpp"

namespace scenetemp {

namespace {

constexpr std::uint64_t kSplitmixGamma = 0x9E3779B97F4A7C15ULL;

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Output i (0-based) of the splitmix64 sequence seeded at `seed`, addressed
// directly instead of iterated.
std::uint64_t splitmix_at(std::uint64_t seed, std::uint64_t i) {
  return mix64(seed + (i + 1) * kSplitmixGamma);
}

double eval_triple(const std::array<double, 3>& a, double t) {
  return a[0] + a[1] * std::sin(kOmega * t) + a[2] * std::cos(kOmega * t);
}

DailyCurve curve_from(const Date& date, const std::array<double, 3>& a) {
  DailyCurve curve;
  curve.date = date;
  curve.a0 = a[0];
  curve.a1 = a[1];
  curve.a2 = a[2];
  return curve;
}

void validate(const WorldSpec& spec) {
  if (spec.n_days < 1) {
    throw Error(ErrorCode::InvalidSpec, "n_days must be >= 1");
  }
  if (!(spec.noise_sd >= 0.0)) {
    throw Error(ErrorCode::InvalidSpec, "noise_sd must be >= 0");
  }
  if (!valid_date(spec.start_date)) {
    throw Error(ErrorCode::InvalidSpec, "invalid start_date");
  }
  if (spec.station_coeffs.size() != static_cast<size_t>(spec.n_days)) {
    throw Error(ErrorCode::InvalidSpec,
                "station_coeffs must list one (b0, b1, b2) row per day");
  }
  if (const auto* er = std::get_if<ExactRatioTransform>(&spec.scene_transform)) {
    (void)er;
    for (int i = 0; i < 3; ++i) {
      if (std::abs(spec.station_coeffs[0][i]) < 1e-9) {
        throw Error(ErrorCode::InvalidSpec,
                    "exact_ratio world needs nonzero station day-0 "
                    "coefficients");
      }
    }
  }
}

}  // namespace

double counter_normal(std::uint64_t seed, std::uint64_t k) {
  std::uint64_t z1 = splitmix_at(seed, 2 * k);
  std::uint64_t z2 = splitmix_at(seed, 2 * k + 1);
  // Top 53 bits each; u1 in (0, 1] keeps the log finite.
  double u1 = (static_cast<double>(z1 >> 11) + 1.0) * 0x1.0p-53;
  double u2 = static_cast<double>(z2 >> 11) * 0x1.0p-53;
  return std::sqrt(-2.0 * std::log(u1)) *
         std::cos(2.0 * std::numbers::pi * u2);
}

SynthWorld generate(const WorldSpec& spec) {
  validate(spec);

  SynthWorld world;
  world.station.source_id = "synth-station";
  world.scene.source_id = "synth-scene";
  const std::int64_t first_day = days_from_date(spec.start_date);

  for (int d = 0; d < spec.n_days; ++d) {
    const Date date = date_from_days(first_day + d);
    const std::array<double, 3>& b = spec.station_coeffs[d];
    const DailyCurve station_curve = curve_from(date, b);
    world.station_truth.push_back(station_curve);

    std::array<double, 24> station_vals{};
    std::array<double, 24> scene_vals{};
    for (int t = 0; t < 24; ++t) {
      station_vals[t] = eval_curve(station_curve, t);
    }

    if (std::holds_alternative<IdentityTransform>(spec.scene_transform)) {
      scene_vals = station_vals;
      world.scene_truth.push_back(station_curve);
    } else if (const auto* af =
                   std::get_if<AffineTransform>(&spec.scene_transform)) {
      for (int t = 0; t < 24; ++t) {
        scene_vals[t] = af->slope * station_vals[t] + af->offset;
      }
      // An affine map stays inside the {1, sin, cos} basis.
      world.scene_truth.push_back(curve_from(
          date,
          {af->slope * b[0] + af->offset, af->slope * b[1], af->slope * b[2]}));
    } else if (const auto* co =
                   std::get_if<ConcurrentTransform>(&spec.scene_transform)) {
      std::vector<TimedSample> samples;
      samples.reserve(24);
      for (int t = 0; t < 24; ++t) {
        scene_vals[t] = eval_triple(co->beta0, t) * station_vals[t] +
                        eval_triple(co->beta1, t);
        samples.push_back({static_cast<double>(t), scene_vals[t]});
      }
      // The product has second-harmonic content; the truth curve is its
      // projection back onto the basis.
      world.scene_truth.push_back(smooth_day(samples, date).curve);
    } else {
      const auto& er = std::get<ExactRatioTransform>(spec.scene_transform);
      const std::array<double, 3>& b0 = spec.station_coeffs[0];
      std::array<double, 3> a{};
      for (int i = 0; i < 3; ++i) {
        a[i] = b[i] / b0[i] * er.day0[i];
      }
      const DailyCurve scene_curve = curve_from(date, a);
      world.scene_truth.push_back(scene_curve);
      for (int t = 0; t < 24; ++t) {
        scene_vals[t] = eval_curve(scene_curve, t);
      }
    }

    for (int t = 0; t < 24; ++t) {
      const HourStamp stamp = hour_stamp(date, t);
      world.station.points.push_back({stamp, station_vals[t]});
      world.scene_noiseless.push_back(scene_vals[t]);
      double value = scene_vals[t];
      if (spec.noise_sd > 0.0) {
        const std::uint64_t k = static_cast<std::uint64_t>(d) * 24 + t;
        value += spec.noise_sd * counter_normal(spec.seed, k);
      }
      world.scene.points.push_back({stamp, value});
    }
  }
  return world;
}

namespace {

constexpr int kPresetDays = 15;
constexpr double kPresetMeanC = 18.0;
constexpr double kPresetSwingC = 7.0;   // station peak-to-mean amplitude
constexpr double kPresetPeakHour = 15.0;
constexpr double kPresetNoiseSd = 0.5;
constexpr double kLatticeStep = 0.25;  // default grid-search spacing

// Slow nine-day weather cycle modulating the daily swing by +/-15%.
double day_scale(int d) {
  return 1.0 + 0.15 * std::cos(2.0 * std::numbers::pi * (d - 1.5) / 9.0);
}

double snap_to_lattice(double x) {
  return std::round(x / kLatticeStep) * kLatticeStep;
}

}  // namespace

QuasiIndoorParams quasi_indoor_params(QuasiIndoorKind kind) {
  switch (kind) {
    case QuasiIndoorKind::kAttic:
      return {0.70, 1.0, 2.0};
    case QuasiIndoorKind::kGarage:
      return {0.35, 2.5, 0.5};
    case QuasiIndoorKind::kShack:
      return {0.55, 1.5, 0.0};
    case QuasiIndoorKind::kUninhabited:
      return {0.25, 3.5, 1.0};
    case QuasiIndoorKind::kUnderground:
      return {0.10, 6.0, -1.5};
    case QuasiIndoorKind::kRoof:
      return {0.90, 0.3, 0.0};
  }
  throw Error(ErrorCode::InvalidSpec, "unknown preset kind");
}

WorldSpec quasi_indoor_preset(QuasiIndoorKind kind) {
  const QuasiIndoorParams p = quasi_indoor_params(kind);

  WorldSpec spec;
  spec.n_days = kPresetDays;
  spec.start_date = Date{2020, 6, 1};
  spec.noise_sd = kPresetNoiseSd;
  spec.seed = 1;

  const double u1 = kPresetSwingC * std::sin(kOmega * kPresetPeakHour);
  const double u2 = kPresetSwingC * std::cos(kOmega * kPresetPeakHour);
  spec.station_coeffs.reserve(kPresetDays);
  for (int d = 0; d < kPresetDays; ++d) {
    const double s = day_scale(d);
    spec.station_coeffs.push_back({kPresetMeanC, s * u1, s * u2});
  }

  // Delaying a curve by lag hours rotates its (a1, a2) pair; damping scales
  // it and the offset shifts the mean. Snapping the result onto the default
  // search lattice makes the day-0 scene curve exactly representable by the
  // grid models.
  const double theta = kOmega * p.lag_hours;
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  const double v1 = day_scale(0) * u1;
  const double v2 = day_scale(0) * u2;
  ExactRatioTransform er;
  er.day0 = {kPresetMeanC + p.offset_c,
             snap_to_lattice(p.damping * (c * v1 + s * v2)),
             snap_to_lattice(p.damping * (-s * v1 + c * v2))};
  spec.scene_transform = er;
  return spec;
}

const std::vector<std::string>& quasi_indoor_kind_names() {
  static const std::vector<std::string> names{
      "attic", "garage", "shack", "uninhabited", "underground", "roof"};
  return names;
}

std::string to_string(QuasiIndoorKind kind) {
  return quasi_indoor_kind_names()[static_cast<size_t>(kind)];
}

QuasiIndoorKind quasi_indoor_kind_from(const std::string& name) {
  const auto& names = quasi_indoor_kind_names();
  for (size_t i = 0; i < names.size(); ++i) {
    if (names[i] == name) {
      return static_cast<QuasiIndoorKind>(i);
    }
  }
  throw Error(ErrorCode::InvalidSpec, "unknown preset kind: " + name);
}

}  // namespace scenetemp
