#pragma once

#include <cstddef>
#include <vector>

namespace scenetemp {

// Ordinary least squares of scene temperature on station temperature.
struct LinearModel {
  double slope = 0.0;
  double intercept = 0.0;
  size_t n = 0;
  double r_sse = 0.0;  // residual sum of squares
};

struct TempPair {
  double station_temp_c = 0.0;
  double scene_temp_c = 0.0;
};

// Throws TooFewPoints (< 2 pairs) or DegenerateX (station temps all equal).
LinearModel fit_lm(const std::vector<TempPair>& pairs);

inline double predict_lm(const LinearModel& model, double station_temp_c) {
  return model.slope * station_temp_c + model.intercept;
}

}  // namespace scenetemp
