#include "scenetemp/baseline.hpp"

#include <string>

#include "scenetemp/errors.hpp"

namespace scenetemp {

LinearModel fit_lm(const std::vector<TempPair>& pairs) {
  if (pairs.size() < 2)
    throw Error(ErrorCode::TooFewPoints,
                "linear fit needs at least 2 pairs, got " +
                    std::to_string(pairs.size()));
  const double n = static_cast<double>(pairs.size());
  double mean_x = 0.0, mean_y = 0.0;
  for (const auto& p : pairs) {
    mean_x += p.station_temp_c;
    mean_y += p.scene_temp_c;
  }
  mean_x /= n;
  mean_y /= n;

  double sxx = 0.0, sxy = 0.0;
  for (const auto& p : pairs) {
    double dx = p.station_temp_c - mean_x;
    sxx += dx * dx;
    sxy += dx * (p.scene_temp_c - mean_y);
  }
  if (sxx == 0.0)
    throw Error(ErrorCode::DegenerateX,
                "station temperatures have zero variance");

  LinearModel model;
  model.slope = sxy / sxx;
  model.intercept = mean_y - model.slope * mean_x;
  model.n = pairs.size();
  for (const auto& p : pairs) {
    double r = p.scene_temp_c - predict_lm(model, p.station_temp_c);
    model.r_sse += r * r;
  }
  return model;
}

}  // namespace scenetemp
