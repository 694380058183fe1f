#include "scenetemp/eval.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <ostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "scenetemp/errors.hpp"
#include "scenetemp/io.hpp"

namespace scenetemp {

double mae(const std::vector<double>& actual,
           const std::vector<double>& predicted) {
  if (actual.size() != predicted.size()) {
    throw Error(ErrorCode::LengthMismatch,
                "actual has " + std::to_string(actual.size()) +
                    " values, predicted has " +
                    std::to_string(predicted.size()));
  }
  if (actual.empty()) {
    throw Error(ErrorCode::EmptyInput, "no values to score");
  }
  double sum = 0.0;
  for (size_t i = 0; i < actual.size(); ++i) {
    sum += std::abs(actual[i] - predicted[i]);
  }
  return sum / static_cast<double>(actual.size());
}

std::string to_string(ModelKind kind) {
  switch (kind) {
    case ModelKind::kUncorrected:
      return "uncorrected";
    case ModelKind::kLm:
      return "lm";
    case ModelKind::kMtm:
      return "mtm";
    case ModelKind::kStm:
      return "stm";
  }
  return "?";
}

ModelKind model_kind_from(const std::string& name) {
  if (name == "uncorrected") return ModelKind::kUncorrected;
  if (name == "lm") return ModelKind::kLm;
  if (name == "mtm") return ModelKind::kMtm;
  if (name == "stm") return ModelKind::kStm;
  throw Error(ErrorCode::BadConfig, "unknown model kind: " + name);
}

namespace {

struct TestPoint {
  Date date;
  int hour = 0;
  double station_c = 0.0;
  double scene_c = 0.0;
};

// Everything the per-model evaluators share, derived once per call.
struct EvalContext {
  std::vector<TestPoint> test_points;
  std::vector<TempPair> train_pairs;       // chronological
  std::vector<HourStamp> train_stamps;     // parallel to train_pairs
  std::vector<Date> test_days;
  std::vector<Date> train_days;            // sorted ascending
  std::vector<DailyCurve> scene_curves;    // from the scene's own series
  std::vector<DailyCurve> station_curves;  // from the station's own series
  Date measurement_date;
  double t_m = 0.0;  // station hourly mean over the measurement day
  // Scene measurement points from start_hour to the end of the measurement
  // day; callers take the prefix their window length asks for.
  std::vector<TimedSample> window;
  std::vector<TempPair> window_pairs;      // station/scene at window hours
};

const DailyCurve* curve_for(const std::vector<DailyCurve>& curves,
                            const Date& date) {
  for (const DailyCurve& c : curves) {
    if (c.date == date) return &c;
  }
  return nullptr;
}

bool contains(const std::vector<Date>& days, const Date& d) {
  return std::binary_search(days.begin(), days.end(), d);
}

EvalContext build_context(const HourlySeries& scene,
                          const HourlySeries& station, const SplitSpec& split,
                          const EvalConfig& cfg) {
  EvalContext ctx;
  ctx.test_days = split.test_days;
  ctx.train_days = split.train_days;
  std::sort(ctx.test_days.begin(), ctx.test_days.end());
  std::sort(ctx.train_days.begin(), ctx.train_days.end());
  if (ctx.train_days.empty()) {
    throw Error(ErrorCode::InsufficientData, "no training days in split");
  }
  ctx.measurement_date = ctx.train_days.front();

  AlignedSeries aligned = align(scene, station);
  for (const auto& p : aligned.pairs) {
    Date d = date_of_hour(p.hour_start);
    if (contains(ctx.test_days, d)) {
      ctx.test_points.push_back(
          {d, hour_of_day(p.hour_start), p.station_temp_c, p.scene_temp_c});
    } else if (contains(ctx.train_days, d)) {
      ctx.train_pairs.push_back({p.station_temp_c, p.scene_temp_c});
      ctx.train_stamps.push_back(p.hour_start);
      if (d == ctx.measurement_date) {
        int h = hour_of_day(p.hour_start);
        if (h >= cfg.stm_start_hour) {
          ctx.window.push_back({static_cast<double>(h), p.scene_temp_c});
          ctx.window_pairs.push_back({p.station_temp_c, p.scene_temp_c});
        }
      }
    }
  }
  if (ctx.test_points.empty()) {
    throw Error(ErrorCode::InsufficientData, "no aligned test points");
  }

  ctx.scene_curves = curve_series(scene, cfg.min_hours_per_day).curves;
  ctx.station_curves = curve_series(station, cfg.min_hours_per_day).curves;

  double sum = 0.0;
  size_t n = 0;
  for (const auto& p : station.points) {
    if (date_of_hour(p.hour_start) == ctx.measurement_date) {
      sum += p.temp_c;
      ++n;
    }
  }
  if (n == 0) {
    throw Error(ErrorCode::MeasurementDayAbsent,
                "station has no points on " +
                    format_date(ctx.measurement_date));
  }
  ctx.t_m = sum / static_cast<double>(n);
  return ctx;
}

std::vector<double> test_actuals(const EvalContext& ctx) {
  std::vector<double> out;
  out.reserve(ctx.test_points.size());
  for (const auto& p : ctx.test_points) out.push_back(p.scene_c);
  return out;
}

double score_uncorrected(const EvalContext& ctx) {
  std::vector<double> pred;
  pred.reserve(ctx.test_points.size());
  for (const auto& p : ctx.test_points) pred.push_back(p.station_c);
  return mae(test_actuals(ctx), pred);
}

double score_lm(const EvalContext& ctx, const std::vector<TempPair>& pairs) {
  LinearModel model = fit_lm(pairs);
  std::vector<double> pred;
  pred.reserve(ctx.test_points.size());
  for (const auto& p : ctx.test_points)
    pred.push_back(predict_lm(model, p.station_c));
  return mae(test_actuals(ctx), pred);
}

// Trains on the given training dates (chronological subset) and scores the
// fixed test points.
double score_mtm(const EvalContext& ctx, const std::vector<Date>& train_days,
                 const EvalConfig& cfg) {
  std::vector<DailyCurve> st, sc;
  for (const Date& d : train_days) {
    const DailyCurve* a = curve_for(ctx.station_curves, d);
    const DailyCurve* b = curve_for(ctx.scene_curves, d);
    if (a && b) {
      st.push_back(*a);
      sc.push_back(*b);
    }
  }
  MtmModel model = fit_mtm(st, sc, cfg.mtm).model;
  std::vector<double> pred;
  pred.reserve(ctx.test_points.size());
  for (const auto& p : ctx.test_points) {
    const DailyCurve* day = curve_for(ctx.station_curves, p.date);
    if (!day) {
      throw Error(ErrorCode::InsufficientData,
                  "no station curve for test day " + format_date(p.date));
    }
    double t = static_cast<double>(p.hour);
    pred.push_back(model.beta0(t) * eval_curve(*day, t) + model.beta1(t));
  }
  return mae(test_actuals(ctx), pred);
}

double score_stm(const EvalContext& ctx, const std::vector<TimedSample>& window,
                 const EvalConfig& cfg) {
  StmConfig stm_cfg = cfg.stm;
  stm_cfg.t_m = ctx.t_m;
  StmModel model =
      fit_stm_day(window, stm_cfg, ctx.measurement_date, cfg.n_threads);
  RatioOptions opts = cfg.ratios;
  opts.t_m = ctx.t_m;
  model.ratios = compute_ratios(ctx.station_curves, ctx.measurement_date, opts);
  std::vector<double> pred;
  pred.reserve(ctx.test_points.size());
  for (const auto& p : ctx.test_points) {
    DailyCurve curve = stm_curve_for(model, p.date);
    pred.push_back(eval_curve(curve, static_cast<double>(p.hour)));
  }
  return mae(test_actuals(ctx), pred);
}

ModelEval capture(const std::function<double()>& fn) {
  ModelEval ev;
  try {
    ev.mae_c = fn();
  } catch (const Error& e) {
    ev.error = std::string(e.code_name()) + ": " + e.what();
  }
  return ev;
}

std::string fmt_mae(const std::optional<double>& v) {
  if (!v) return "-";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6f", *v);
  return buf;
}

}  // namespace

EvalReport evaluate_models(const HourlySeries& scene,
                           const HourlySeries& station, const SplitSpec& split,
                           const EvalConfig& cfg) {
  EvalContext ctx = build_context(scene, station, split, cfg);
  EvalReport report;
  report.n_test_points = ctx.test_points.size();
  report.test_days = ctx.test_days;
  report.uncorrected = capture([&] { return score_uncorrected(ctx); });
  report.lm = capture([&] { return score_lm(ctx, ctx.train_pairs); });
  report.mtm = capture([&] { return score_mtm(ctx, ctx.train_days, cfg); });
  std::vector<TimedSample> window(
      ctx.window.begin(),
      ctx.window.begin() + std::min<size_t>(std::max(cfg.stm_window_hours, 0),
                                            ctx.window.size()));
  report.stm = capture([&] { return score_stm(ctx, window, cfg); });
  return report;
}

namespace {

SweepRow swept_model_row(const EvalContext& ctx, ModelKind kind, int d,
                         const EvalConfig& cfg) {
  SweepRow row{d, to_string(kind), std::nullopt, ""};
  try {
    switch (kind) {
      case ModelKind::kUncorrected:
        row.mae_c = score_uncorrected(ctx);
        break;
      case ModelKind::kLm: {
        std::vector<TempPair> prefix;
        HourStamp start = hour_stamp(ctx.train_days.front(), 0);
        for (size_t i = 0; i < ctx.train_pairs.size(); ++i) {
          if (ctx.train_stamps[i] < start + d) prefix.push_back(ctx.train_pairs[i]);
        }
        row.mae_c = score_lm(ctx, prefix);
        break;
      }
      case ModelKind::kMtm: {
        int n_days = d / 24;
        if (n_days < cfg.mtm.min_train_days) {
          row.note = "InfeasibleDuration: needs at least " +
                     std::to_string(cfg.mtm.min_train_days * 24) +
                     " h (whole days)";
          return row;
        }
        std::vector<Date> days(ctx.train_days.begin(),
                               ctx.train_days.begin() +
                                   std::min<size_t>(n_days,
                                                    ctx.train_days.size()));
        row.mae_c = score_mtm(ctx, days, cfg);
        break;
      }
      case ModelKind::kStm: {
        if (d < 1) {
          row.note = "InfeasibleDuration: needs at least 1 h";
          return row;
        }
        if (cfg.stm_start_hour + d > 24) {
          row.note = "InfeasibleDuration: window exceeds the measurement day";
          return row;
        }
        std::vector<TimedSample> window(
            ctx.window.begin(),
            ctx.window.begin() + std::min<size_t>(d, ctx.window.size()));
        row.mae_c = score_stm(ctx, window, cfg);
        break;
      }
    }
  } catch (const Error& e) {
    row.note = std::string(e.code_name()) + ": " + e.what();
  }
  return row;
}

SweepRow lm_baseline_row(const EvalContext& ctx, ModelKind kind, int d) {
  SweepRow row{d, "lm", std::nullopt, ""};
  try {
    std::vector<TempPair> prefix;
    if (kind == ModelKind::kStm) {
      // Same points the short-term model sees.
      size_t n = std::min<size_t>(std::max(d, 0), ctx.window_pairs.size());
      prefix.assign(ctx.window_pairs.begin(), ctx.window_pairs.begin() + n);
    } else {
      HourStamp start = hour_stamp(ctx.train_days.front(), 0);
      for (size_t i = 0; i < ctx.train_pairs.size(); ++i) {
        if (ctx.train_stamps[i] < start + d) prefix.push_back(ctx.train_pairs[i]);
      }
    }
    row.mae_c = score_lm(ctx, prefix);
  } catch (const Error& e) {
    row.note = std::string(e.code_name()) + ": " + e.what();
  }
  return row;
}

}  // namespace

SweepReport duration_sweep(const HourlySeries& scene,
                           const HourlySeries& station, const SplitSpec& split,
                           const std::vector<int>& durations_h,
                           ModelKind model_kind, const EvalConfig& cfg) {
  for (size_t i = 1; i < durations_h.size(); ++i) {
    if (durations_h[i] <= durations_h[i - 1]) {
      throw Error(ErrorCode::BadConfig,
                  "durations must be strictly increasing");
    }
  }
  EvalContext ctx = build_context(scene, station, split, cfg);
  SweepReport report;
  report.model_kind = model_kind;
  report.n_test_points = ctx.test_points.size();
  for (int d : durations_h) {
    report.rows.push_back(swept_model_row(ctx, model_kind, d, cfg));
    if (model_kind != ModelKind::kLm && model_kind != ModelKind::kUncorrected) {
      report.rows.push_back(lm_baseline_row(ctx, model_kind, d));
    }
    if (model_kind != ModelKind::kUncorrected) {
      SweepRow row{d, "uncorrected", std::nullopt, ""};
      try {
        row.mae_c = score_uncorrected(ctx);
      } catch (const Error& e) {
        row.note = std::string(e.code_name()) + ": " + e.what();
      }
      report.rows.push_back(row);
    }
  }
  return report;
}

void write_sweep_csv(std::ostream& out, const SweepReport& report) {
  out << "duration_h,model,mae\n";
  for (const SweepRow& row : report.rows) {
    out << row.duration_h << ',' << row.model << ',';
    if (row.mae_c) out << format_double(*row.mae_c);
    out << '\n';
  }
}

void write_sweep_json(std::ostream& out, const SweepReport& report) {
  nlohmann::json doc;
  doc["model_kind"] = to_string(report.model_kind);
  doc["n_test_points"] = report.n_test_points;
  doc["rows"] = nlohmann::json::array();
  for (const SweepRow& row : report.rows) {
    nlohmann::json r;
    r["duration_h"] = row.duration_h;
    r["model"] = row.model;
    if (row.mae_c) {
      r["mae"] = *row.mae_c;
    } else {
      r["mae"] = nullptr;
      r["note"] = row.note;
    }
    doc["rows"].push_back(std::move(r));
  }
  out << doc.dump(2) << '\n';
}

std::string format_sweep_table(const SweepReport& report) {
  std::ostringstream out;
  char buf[96];
  std::snprintf(buf, sizeof(buf), "%-12s %-12s %-12s %s\n", "duration_h",
                "model", "mae", "note");
  out << buf;
  for (const SweepRow& row : report.rows) {
    std::snprintf(buf, sizeof(buf), "%-12d %-12s %-12s %s\n", row.duration_h,
                  row.model.c_str(), fmt_mae(row.mae_c).c_str(),
                  row.note.c_str());
    out << buf;
  }
  return out.str();
}

namespace {

nlohmann::json model_eval_json(const ModelEval& ev) {
  nlohmann::json j;
  if (ev.mae_c) {
    j["mae"] = *ev.mae_c;
  } else {
    j["mae"] = nullptr;
    j["error"] = ev.error;
  }
  return j;
}

}  // namespace

void write_eval_json(std::ostream& out, const EvalReport& report) {
  nlohmann::json doc;
  doc["n_test_points"] = report.n_test_points;
  doc["test_days"] = nlohmann::json::array();
  for (const Date& d : report.test_days) doc["test_days"].push_back(format_date(d));
  doc["models"]["uncorrected"] = model_eval_json(report.uncorrected);
  doc["models"]["lm"] = model_eval_json(report.lm);
  doc["models"]["mtm"] = model_eval_json(report.mtm);
  doc["models"]["stm"] = model_eval_json(report.stm);
  out << doc.dump(2) << '\n';
}

std::string format_eval_table(const EvalReport& report) {
  std::ostringstream out;
  out << "test points: " << report.n_test_points << "\n";
  char buf[96];
  std::snprintf(buf, sizeof(buf), "%-12s %-12s %s\n", "model", "mae", "error");
  out << buf;
  const std::pair<const char*, const ModelEval*> rows[] = {
      {"uncorrected", &report.uncorrected},
      {"lm", &report.lm},
      {"mtm", &report.mtm},
      {"stm", &report.stm},
  };
  for (const auto& [name, ev] : rows) {
    std::snprintf(buf, sizeof(buf), "%-12s %-12s %s\n", name,
                  fmt_mae(ev->mae_c).c_str(), ev->error.c_str());
    out << buf;
  }
  return out.str();
}

}  // namespace scenetemp
