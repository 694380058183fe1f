#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "scenetemp/baseline.hpp"
#include "scenetemp/ingest.hpp"
#include "scenetemp/mtm.hpp"
#include "scenetemp/stm.hpp"

namespace scenetemp {

// Mean absolute error between two equal-length value lists.
// Throws LengthMismatch / EmptyInput.
double mae(const std::vector<double>& actual,
           const std::vector<double>& predicted);

enum class ModelKind { kUncorrected, kLm, kMtm, kStm };

std::string to_string(ModelKind kind);
// Throws BadConfig for unknown names.
ModelKind model_kind_from(const std::string& name);

struct EvalConfig {
  int n_test_days = 3;
  int min_hours_per_day = kDefaultMinHoursPerDay;
  // Short-term measurement window: wall-clock start hour on the measurement
  // day (the earliest training day) and its default length in points.
  int stm_start_hour = 9;
  int stm_window_hours = 5;
  // stm.t_m and ratios.t_m are overwritten with the station's hourly mean
  // over the measurement day; the station archive is what a caseworker has.
  StmConfig stm;
  MtmOptions mtm;
  RatioOptions ratios;
  int n_threads = 1;
};

struct ModelEval {
  std::optional<double> mae_c;  // empty when the fit failed
  std::string error;            // "<Code>: message" when empty
};

// Single-duration scores over the fixed test days. A model that fails to
// fit carries its error here instead of aborting the others.
struct EvalReport {
  size_t n_test_points = 0;
  std::vector<Date> test_days;
  ModelEval uncorrected;
  ModelEval lm;
  ModelEval mtm;
  ModelEval stm;
};

// Fits every model on the full training window and scores each test hour.
// "uncorrected" uses the station values directly as predictions.
EvalReport evaluate_models(const HourlySeries& scene,
                           const HourlySeries& station, const SplitSpec& split,
                           const EvalConfig& cfg = {});

struct SweepRow {
  int duration_h = 0;
  std::string model;            // swept model, "lm", or "uncorrected"
  std::optional<double> mae_c;  // empty for infeasible durations/fit errors
  std::string note;             // reason for an empty MAE
};

struct SweepReport {
  ModelKind model_kind = ModelKind::kMtm;
  size_t n_test_points = 0;
  std::vector<SweepRow> rows;  // duration-major; model order stable
};

// Error-versus-measurement-duration sweep. For each duration d hours the
// swept model trains on the first d hours of the training window (mid-term:
// floor(d/24) whole days; short-term: the first d points of the measurement
// window), the LM baseline trains on the same prefix, and everything is
// scored on the fixed test set. Rows are independent: a single duration in
// isolation produces exactly its row. Durations below the model minimum (or
// a short-term window past the end of the day) yield a null-MAE row with
// the reason. Durations must be strictly increasing (BadConfig).
SweepReport duration_sweep(const HourlySeries& scene,
                           const HourlySeries& station, const SplitSpec& split,
                           const std::vector<int>& durations_h,
                           ModelKind model_kind, const EvalConfig& cfg = {});

// CSV: header "duration_h,model,mae"; empty mae field for null rows.
void write_sweep_csv(std::ostream& out, const SweepReport& report);
void write_sweep_json(std::ostream& out, const SweepReport& report);
std::string format_sweep_table(const SweepReport& report);

void write_eval_json(std::ostream& out, const EvalReport& report);
std::string format_eval_table(const EvalReport& report);

}  // namespace scenetemp
