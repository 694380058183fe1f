#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "scenetemp/errors.hpp"
#include "scenetemp/eval.hpp"
#include "scenetemp/io.hpp"
#include "scenetemp/model_io.hpp"
#include "scenetemp/stats.hpp"
#include "scenetemp/synth.hpp"

namespace {

using namespace scenetemp;

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::MissingFile, "cannot write " + path);
  return out;
}

// Flat "key = value" defaults file. CLI11 only reads config files on the
// root app, so each subcommand wires the flag itself: after its arguments
// are parsed, config values fill in any option not given explicitly.
// Required options (the input/output paths) must stay on the command line.
void add_config_option(CLI::App* sub) {
  auto path = std::make_shared<std::string>();
  CLI::Option* config_opt = sub->add_option(
      "--config", *path, "flat key = value defaults; explicit flags win");
  sub->parse_complete_callback([sub, config_opt, path] {
    if (path->empty()) return;
    std::istringstream in(read_file(*path));
    for (const auto& [key, value] : parse_config(in, *path)) {
      CLI::Option* opt = sub->get_option_no_throw("--" + key);
      if (opt == nullptr || opt == config_opt) {
        throw CLI::ConfigError(*path + ": unknown config key '" + key + "'");
      }
      if (opt->count() == 0) {
        opt->add_result(value);
        opt->run_callback();
      }
    }
  });
}

std::string basename_no_ext(const std::string& path) {
  size_t slash = path.find_last_of("/\\");
  std::string name = slash == std::string::npos ? path : path.substr(slash + 1);
  size_t dot = name.find_last_of('.');
  return dot == std::string::npos ? name : name.substr(0, dot);
}

SplitSpec standard_split(const HourlySeries& scene, const HourlySeries& station,
                         int n_test_days, int min_hours) {
  return split_train_test(align(scene, station), n_test_days, min_hours);
}

std::vector<TempPair> train_pairs(const HourlySeries& scene,
                                  const HourlySeries& station,
                                  const SplitSpec& split) {
  std::vector<Date> days = split.train_days;
  std::sort(days.begin(), days.end());
  std::vector<TempPair> pairs;
  for (const auto& p : align(scene, station).pairs) {
    if (std::binary_search(days.begin(), days.end(),
                           date_of_hour(p.hour_start))) {
      pairs.push_back({p.station_temp_c, p.scene_temp_c});
    }
  }
  return pairs;
}

double station_day_mean(const HourlySeries& station, const Date& date) {
  double sum = 0.0;
  size_t n = 0;
  for (const auto& p : station.points) {
    if (date_of_hour(p.hour_start) == date) {
      sum += p.temp_c;
      ++n;
    }
  }
  if (n == 0) {
    throw Error(ErrorCode::MeasurementDayAbsent,
                "station has no points on " + format_date(date));
  }
  return sum / static_cast<double>(n);
}

// Flags shared by fit-stm / evaluate / sweep; t_m defaults to the station's
// measurement-day mean.
struct StmFlags {
  StmConfig cfg;
  double t_m = std::numeric_limits<double>::quiet_NaN();

  void attach(CLI::App* sub) {
    sub->add_option("--prior_mean", cfg.prior_mean, "sigma prior mean")
        ->capture_default_str();
    sub->add_option("--prior_sd", cfg.prior_sd, "sigma prior sd")
        ->capture_default_str();
    sub->add_option("--a0_halfwidth", cfg.a0_halfwidth,
                    "a0 search halfwidth around t_m")
        ->capture_default_str();
    sub->add_option("--a0_step", cfg.a0_step, "a0 grid step")
        ->capture_default_str();
    sub->add_option("--amp_max", cfg.amp_max, "amplitude bound (strict)")
        ->capture_default_str();
    sub->add_option("--a_step", cfg.a_step, "a1/a2 grid step")
        ->capture_default_str();
    sub->add_option("--sigma_min", cfg.sigma_min, "sigma grid minimum")
        ->capture_default_str();
    sub->add_option("--sigma_max", cfg.sigma_max, "sigma grid maximum")
        ->capture_default_str();
    sub->add_option("--sigma_step", cfg.sigma_step, "sigma grid step")
        ->capture_default_str();
    sub->add_option("--t_m", t_m,
                    "prior center; default: station mean, measurement day");
  }
};

struct EvalFlags {
  EvalConfig cfg;

  void attach(CLI::App* sub, StmFlags& stm) {
    sub->add_option("--test_days", cfg.n_test_days,
                    "earliest complete days held out as the test set")
        ->capture_default_str();
    sub->add_option("--min_hours", cfg.min_hours_per_day,
                    "hourly points required for a complete day")
        ->capture_default_str();
    sub->add_option("--start_hour", cfg.stm_start_hour,
                    "first hour of the measurement window")
        ->capture_default_str();
    sub->add_option("--hours", cfg.stm_window_hours,
                    "measurement window length, points")
        ->capture_default_str();
    sub->add_option("--threads", cfg.n_threads, "grid-search threads")
        ->capture_default_str();
    stm.attach(sub);
  }

  EvalConfig resolved(const StmFlags& stm) const {
    EvalConfig out = cfg;
    out.stm = stm.cfg;
    return out;
  }
};

void run_ingest(const std::string& logger_path, const std::string& input_path,
                const std::string& out_path) {
  HourlySeries series;
  if (!logger_path.empty()) {
    auto records = parse_logger_csv(logger_path);
    series = aggregate_hourly(records, logger_path);
    std::printf("%zu records -> %zu hourly means\n", records.size(),
                series.size());
  } else {
    series = load_series_any(input_path);
    std::printf("%zu hourly points\n", series.size());
  }
  auto out = open_out(out_path);
  write_hourly_csv(out, series);
  std::printf("wrote %s\n", out_path.c_str());
}

void run_smooth(const std::string& input_path, const std::string& out_path,
                int min_hours) {
  HourlySeries series = load_series_any(input_path);
  CurveSeriesResult result = curve_series(series, min_hours);
  auto out = open_out(out_path);
  write_curves_csv(out, result.curves);
  std::printf("smoothed %zu days (%zu incomplete skipped)\n",
              result.curves.size(), result.skipped_days.size());
  std::printf("wrote %s\n", out_path.c_str());
}

void run_fit_lm(const std::string& scene_path, const std::string& station_path,
                const std::string& out_path, int n_test_days, int min_hours) {
  HourlySeries scene = load_series_any(scene_path);
  HourlySeries station = load_series_any(station_path);
  SplitSpec split = standard_split(scene, station, n_test_days, min_hours);
  LinearModel model = fit_lm(train_pairs(scene, station, split));
  auto out = open_out(out_path);
  write_lm_json(out, model);
  std::printf("slope     %.6f\nintercept %.6f\nn         %zu\nr_sse     %.6f\n",
              model.slope, model.intercept, model.n, model.r_sse);
  std::printf("wrote %s\n", out_path.c_str());
}

void run_fit_mtm(const std::string& scene_path,
                 const std::string& station_path, const std::string& out_path,
                 int n_test_days, int min_hours, int n_days,
                 const MtmOptions& opts) {
  HourlySeries scene = load_series_any(scene_path);
  HourlySeries station = load_series_any(station_path);
  SplitSpec split = standard_split(scene, station, n_test_days, min_hours);
  std::vector<Date> days = split.train_days;
  std::sort(days.begin(), days.end());
  if (n_days > 0 && static_cast<size_t>(n_days) < days.size()) {
    days.resize(n_days);
  }
  auto scene_curves = curve_series(scene, min_hours).curves;
  auto station_curves = curve_series(station, min_hours).curves;
  std::vector<DailyCurve> st, sc;
  for (const Date& d : days) {
    for (const DailyCurve& a : station_curves) {
      if (a.date == d) {
        for (const DailyCurve& b : scene_curves) {
          if (b.date == d) {
            st.push_back(a);
            sc.push_back(b);
          }
        }
      }
    }
  }
  MtmFitResult fit = fit_mtm(st, sc, opts);
  auto out = open_out(out_path);
  write_mtm_json(out, fit.model);
  std::printf("beta0  %.6f %+.6f sin %+.6f cos\n", fit.model.beta0.c0,
              fit.model.beta0.c1, fit.model.beta0.c2);
  std::printf("beta1  %.6f %+.6f sin %+.6f cos\n", fit.model.beta1.c0,
              fit.model.beta1.c1, fit.model.beta1.c2);
  std::printf("train days %zu, sse %.6f\n", fit.model.n_train_days,
              fit.model.sse);
  if (fit.diagnostics.ill_conditioned) {
    std::printf("warning: ill-conditioned fit (condition ~%.3g)\n",
                fit.diagnostics.condition_estimate);
  }
  std::printf("wrote %s\n", out_path.c_str());
}

void run_fit_stm(const std::string& scene_path,
                 const std::string& station_path, const std::string& out_path,
                 int n_test_days, int min_hours, int start_hour, int hours,
                 const std::string& date_text, StmFlags& stm, int threads) {
  HourlySeries scene = load_series_any(scene_path);
  HourlySeries station = load_series_any(station_path);
  Date measurement_date;
  if (!date_text.empty()) {
    if (!parse_date(date_text, measurement_date)) {
      throw Error(ErrorCode::BadConfig, "bad --date \"" + date_text + "\"");
    }
  } else {
    SplitSpec split = standard_split(scene, station, n_test_days, min_hours);
    std::vector<Date> days = split.train_days;
    std::sort(days.begin(), days.end());
    if (days.empty()) {
      throw Error(ErrorCode::InsufficientData, "no training days in split");
    }
    measurement_date = days.front();
  }
  std::vector<TimedSample> window;
  for (const auto& p : scene.points) {
    if (date_of_hour(p.hour_start) == measurement_date) {
      int h = hour_of_day(p.hour_start);
      if (h >= start_hour && h < start_hour + hours) {
        window.push_back({static_cast<double>(h), p.temp_c});
      }
    }
  }
  StmConfig cfg = stm.cfg;
  cfg.t_m = std::isnan(stm.t_m) ? station_day_mean(station, measurement_date)
                                : stm.t_m;
  StmModel model = fit_stm_day(window, cfg, measurement_date, threads);
  RatioOptions opts;
  opts.t_m = cfg.t_m;
  model.ratios = compute_ratios(curve_series(station, min_hours).curves,
                                measurement_date, opts);
  auto out = open_out(out_path);
  write_stm_json(out, model);
  std::printf("measurement day %s, %zu points, t_m %.6f\n",
              format_date(measurement_date).c_str(), window.size(), cfg.t_m);
  std::printf("day0 curve  a0 %.6f  a1 %.6f  a2 %.6f\n", model.day0_curve.a0,
              model.day0_curve.a1, model.day0_curve.a2);
  std::printf("map sigma %.6f, log posterior %.6f, %zu ratio days\n",
              model.map_sigma, model.log_posterior,
              model.ratios.entries.size());
  for (const std::string& w : model.ratios.warnings) {
    std::printf("warning: %s\n", w.c_str());
  }
  std::printf("wrote %s\n", out_path.c_str());
}

void run_predict(const std::string& model_path,
                 const std::string& station_path, const std::string& out_path,
                 int n_days, int min_hours) {
  std::string text = read_file(model_path);
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::SchemaMismatch, model_path + ": " + e.what());
  }
  HourlySeries station = load_series_any(station_path);
  auto station_curves = curve_series(station, min_hours).curves;
  if (n_days > 0 && static_cast<size_t>(n_days) < station_curves.size()) {
    station_curves.resize(n_days);
  }

  HourlySeries pred;
  pred.source_id = "predicted";
  if (doc.contains("slope")) {
    std::istringstream in(text);
    LinearModel model = read_lm_json(in, model_path);
    std::vector<Date> days;
    for (const auto& c : station_curves) days.push_back(c.date);
    std::sort(days.begin(), days.end());
    for (const auto& p : station.points) {
      if (std::binary_search(days.begin(), days.end(),
                             date_of_hour(p.hour_start))) {
        pred.points.push_back({p.hour_start, predict_lm(model, p.temp_c)});
      }
    }
    std::printf("lm model: %zu hours over %zu days\n", pred.size(),
                days.size());
  } else if (doc.contains("beta0")) {
    std::istringstream in(text);
    MtmModel model = read_mtm_json(in, model_path);
    for (const DailyCurve& day : station_curves) {
      auto values = predict_mtm(model, day);
      for (int t = 0; t < 24; ++t) {
        pred.points.push_back({hour_stamp(day.date, t), values[t]});
      }
    }
    std::printf("mtm model: %zu hours over %zu days\n", pred.size(),
                station_curves.size());
  } else if (doc.contains("day0")) {
    std::istringstream in(text);
    StmModel model = read_stm_json(in, model_path);
    for (const DailyCurve& day : station_curves) {
      auto values = predict_stm(model, day.date);
      for (int t = 0; t < 24; ++t) {
        pred.points.push_back({hour_stamp(day.date, t), values[t]});
      }
    }
    std::printf("stm model: %zu hours over %zu days\n", pred.size(),
                station_curves.size());
  } else {
    throw Error(ErrorCode::SchemaMismatch,
                model_path + ": not a recognized model document");
  }
  auto out = open_out(out_path);
  write_hourly_csv(out, pred);
  std::printf("wrote %s\n", out_path.c_str());
}

void run_evaluate(const std::string& scene_path,
                  const std::string& station_path,
                  const std::string& out_json, const EvalConfig& cfg) {
  HourlySeries scene = load_series_any(scene_path);
  HourlySeries station = load_series_any(station_path);
  SplitSpec split =
      standard_split(scene, station, cfg.n_test_days, cfg.min_hours_per_day);
  EvalReport report = evaluate_models(scene, station, split, cfg);
  std::fputs(format_eval_table(report).c_str(), stdout);
  if (!out_json.empty()) {
    auto out = open_out(out_json);
    write_eval_json(out, report);
    std::printf("wrote %s\n", out_json.c_str());
  }
}

void run_sweep(const std::string& scene_path, const std::string& station_path,
               const std::string& model_name, std::vector<int> durations,
               const std::string& out_csv, const std::string& out_json,
               const EvalConfig& cfg) {
  ModelKind kind = model_kind_from(model_name);
  if (durations.empty()) {
    if (kind == ModelKind::kStm) {
      for (int d = 1; d <= 8; ++d) durations.push_back(d);
    } else {
      for (int d = 48; d <= 288; d += 24) durations.push_back(d);
    }
  }
  HourlySeries scene = load_series_any(scene_path);
  HourlySeries station = load_series_any(station_path);
  SplitSpec split =
      standard_split(scene, station, cfg.n_test_days, cfg.min_hours_per_day);
  SweepReport report =
      duration_sweep(scene, station, split, durations, kind, cfg);
  std::fputs(format_sweep_table(report).c_str(), stdout);
  if (!out_csv.empty()) {
    auto out = open_out(out_csv);
    write_sweep_csv(out, report);
    std::printf("wrote %s\n", out_csv.c_str());
  }
  if (!out_json.empty()) {
    auto out = open_out(out_json);
    write_sweep_json(out, report);
    std::printf("wrote %s\n", out_json.c_str());
  }
}

void run_assumptions(const std::string& station_path,
                     const std::vector<std::string>& scene_paths,
                     const std::vector<std::string>& other_station_paths,
                     const std::string& day0_text, double alpha, int min_hours,
                     const std::string& out_csv) {
  auto station_curves =
      curve_series(load_series_any(station_path), min_hours).curves;
  std::map<std::string, std::vector<DailyCurve>> scene_sets;
  for (const std::string& path : scene_paths) {
    scene_sets[basename_no_ext(path)] =
        curve_series(load_series_any(path), min_hours).curves;
  }
  std::vector<std::vector<DailyCurve>> other_sets;
  for (const std::string& path : other_station_paths) {
    other_sets.push_back(curve_series(load_series_any(path), min_hours).curves);
  }
  Date day0;
  if (!day0_text.empty()) {
    if (!parse_date(day0_text, day0)) {
      throw Error(ErrorCode::BadConfig, "bad --day0 \"" + day0_text + "\"");
    }
  } else {
    if (station_curves.empty()) {
      throw Error(ErrorCode::InsufficientData, "no complete station days");
    }
    day0 = station_curves.front().date;
  }
  AssumptionReport report =
      assumption_report(scene_sets, station_curves, other_sets, day0, alpha);
  std::printf("day0 %s, alpha %.3f\n", format_date(report.day0_date).c_str(),
              report.alpha);
  std::printf("%-10s %-16s %-4s %-12s %-12s %-7s %s\n", "test", "location",
              "coef", "statistic", "p_value", "passed", "flags");
  for (const AssumptionRow& row : report.rows) {
    std::string flag_text;
    for (const std::string& f : row.flags) {
      if (!flag_text.empty()) flag_text += "; ";
      flag_text += f;
    }
    std::printf("%-10s %-16s %-4d %-12.6f %-12.6g %-7s %s\n",
                row.test_kind.c_str(), row.location.c_str(), row.coefficient,
                row.statistic, row.p_value, row.passed ? "yes" : "no",
                flag_text.c_str());
  }
  for (const std::string& w : report.warnings) {
    std::printf("warning: %s\n", w.c_str());
  }
  std::printf("all passed: %s\n", report.all_passed() ? "yes" : "no");
  if (!out_csv.empty()) {
    write_file(out_csv, write_assumption_csv(report));
    std::printf("wrote %s\n", out_csv.c_str());
  }
}

void write_station_csv(const std::string& path, const HourlySeries& series) {
  auto out = open_out(path);
  out << "timestamp,temp_c\n";
  for (const auto& p : series.points) {
    out << format_hour_stamp(p.hour_start) << ','
        << format_double(p.temp_c) << '\n';
  }
}

void write_logger_csv(const std::string& path, const HourlySeries& series,
                      const std::string& probe_id) {
  auto out = open_out(path);
  out << "timestamp,probe_id,temp_c\n";
  for (const auto& p : series.points) {
    out << format_minute_stamp(p.hour_start * 60) << ',' << probe_id << ','
        << format_double(p.temp_c) << '\n';
  }
}

// Lattice-valued station so the zero-noise identity world is exactly
// representable by every model, the grid search included.
std::vector<std::array<double, 3>> lattice_station(int n_days) {
  std::vector<std::array<double, 3>> coeffs;
  for (int d = 0; d < n_days; ++d) {
    double f = 1.0 + 0.1 * d;
    coeffs.push_back({18.0, -5.0 * f, -2.5 * f});
  }
  return coeffs;
}

void run_synth(const std::string& preset_name, bool identity, bool affine,
               double slope, double offset, int n_days, double noise,
               std::uint64_t seed, const std::string& out_scene,
               const std::string& out_station, const std::string& out_truth) {
  WorldSpec spec;
  if (!preset_name.empty()) {
    spec = quasi_indoor_preset(quasi_indoor_kind_from(preset_name));
  } else {
    spec.n_days = n_days;
    spec.station_coeffs = lattice_station(n_days);
    if (identity) {
      spec.scene_transform = IdentityTransform{};
    } else {
      spec.scene_transform = AffineTransform{slope, offset};
    }
    spec.noise_sd = 0.0;
  }
  if (!std::isnan(noise)) spec.noise_sd = noise;
  spec.seed = seed;
  (void)affine;

  SynthWorld world = generate(spec);
  write_station_csv(out_station, world.station);
  write_logger_csv(out_scene, world.scene, "scene");
  if (!out_truth.empty()) {
    auto out = open_out(out_truth);
    write_curves_csv(out, world.scene_truth);
  }
  std::printf("world: %d days from %s, noise_sd %g, seed %llu\n", spec.n_days,
              format_date(spec.start_date).c_str(), spec.noise_sd,
              static_cast<unsigned long long>(spec.seed));
  std::printf("wrote %s, %s%s%s\n", out_station.c_str(), out_scene.c_str(),
              out_truth.empty() ? "" : ", ", out_truth.c_str());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quasi-indoor scene temperature reconstruction"};
  app.require_subcommand(1);

  // ingest
  auto* ingest = app.add_subcommand(
      "ingest", "aggregate raw logger minutes into an hourly series");
  add_config_option(ingest);
  std::string in_logger, in_any, ingest_out;
  auto* ingest_src = ingest->add_option_group("input");
  ingest_src->add_option("--logger", in_logger, "raw logger CSV");
  ingest_src->add_option("--input", in_any, "any supported series CSV");
  ingest_src->require_option(1);
  ingest->add_option("--out", ingest_out, "hourly CSV output")->required();
  ingest->callback([&] { run_ingest(in_logger, in_any, ingest_out); });

  // smooth
  auto* smooth = app.add_subcommand(
      "smooth", "fit per-day three-term curves to an hourly series");
  add_config_option(smooth);
  std::string smooth_in, smooth_out;
  int smooth_min_hours = kDefaultMinHoursPerDay;
  smooth->add_option("--input", smooth_in, "series CSV")->required();
  smooth->add_option("--out", smooth_out, "curve CSV output")->required();
  smooth->add_option("--min_hours", smooth_min_hours,
                     "hourly points required for a complete day")
      ->capture_default_str();
  smooth->callback([&] { run_smooth(smooth_in, smooth_out, smooth_min_hours); });

  // fit-lm
  auto* fit_lm_cmd = app.add_subcommand(
      "fit-lm", "linear regression of scene on station (training days)");
  add_config_option(fit_lm_cmd);
  std::string lm_scene, lm_station, lm_out;
  int lm_test_days = 3, lm_min_hours = kDefaultMinHoursPerDay;
  fit_lm_cmd->add_option("--scene", lm_scene, "scene series CSV")->required();
  fit_lm_cmd->add_option("--station", lm_station, "station series CSV")
      ->required();
  fit_lm_cmd->add_option("--out", lm_out, "model JSON output")->required();
  fit_lm_cmd->add_option("--test_days", lm_test_days, "held-out earliest days")
      ->capture_default_str();
  fit_lm_cmd->add_option("--min_hours", lm_min_hours, "complete-day threshold")
      ->capture_default_str();
  fit_lm_cmd->callback([&] {
    run_fit_lm(lm_scene, lm_station, lm_out, lm_test_days, lm_min_hours);
  });

  // fit-mtm
  auto* fit_mtm_cmd = app.add_subcommand(
      "fit-mtm", "concurrent functional regression on daily curves");
  add_config_option(fit_mtm_cmd);
  std::string mtm_scene, mtm_station, mtm_out;
  int mtm_test_days = 3, mtm_min_hours = kDefaultMinHoursPerDay, mtm_days = 0;
  MtmOptions mtm_opts;
  fit_mtm_cmd->add_option("--scene", mtm_scene, "scene series CSV")->required();
  fit_mtm_cmd->add_option("--station", mtm_station, "station series CSV")
      ->required();
  fit_mtm_cmd->add_option("--out", mtm_out, "model JSON output")->required();
  fit_mtm_cmd->add_option("--days", mtm_days,
                          "training days to use (0 = all training days)")
      ->capture_default_str();
  fit_mtm_cmd->add_option("--test_days", mtm_test_days, "held-out earliest days")
      ->capture_default_str();
  fit_mtm_cmd
      ->add_option("--min_hours", mtm_min_hours, "complete-day threshold")
      ->capture_default_str();
  fit_mtm_cmd
      ->add_option("--grid_points", mtm_opts.grid_points,
                   "quadrature grid points on [0, 24]")
      ->capture_default_str();
  fit_mtm_cmd
      ->add_option("--min_train_days", mtm_opts.min_train_days,
                   "minimum training days")
      ->capture_default_str();
  fit_mtm_cmd->callback([&] {
    run_fit_mtm(mtm_scene, mtm_station, mtm_out, mtm_test_days, mtm_min_hours,
                mtm_days, mtm_opts);
  });

  // fit-stm
  auto* fit_stm_cmd = app.add_subcommand(
      "fit-stm", "short-term MAP grid fit plus station coefficient ratios");
  add_config_option(fit_stm_cmd);
  std::string stm_scene, stm_station, stm_out, stm_date;
  int stm_test_days = 3, stm_min_hours = kDefaultMinHoursPerDay;
  int stm_start_hour = 9, stm_hours = 5, stm_threads = 1;
  StmFlags stm_flags;
  fit_stm_cmd->add_option("--scene", stm_scene, "scene series CSV")->required();
  fit_stm_cmd->add_option("--station", stm_station, "station series CSV")
      ->required();
  fit_stm_cmd->add_option("--out", stm_out, "model JSON output")->required();
  fit_stm_cmd->add_option("--date", stm_date,
                          "measurement day (default: first training day)");
  fit_stm_cmd
      ->add_option("--start_hour", stm_start_hour, "window start hour")
      ->capture_default_str();
  fit_stm_cmd->add_option("--hours", stm_hours, "window length, points")
      ->capture_default_str();
  fit_stm_cmd
      ->add_option("--test_days", stm_test_days, "held-out earliest days")
      ->capture_default_str();
  fit_stm_cmd
      ->add_option("--min_hours", stm_min_hours, "complete-day threshold")
      ->capture_default_str();
  fit_stm_cmd->add_option("--threads", stm_threads, "grid-search threads")
      ->capture_default_str();
  stm_flags.attach(fit_stm_cmd);
  fit_stm_cmd->callback([&] {
    run_fit_stm(stm_scene, stm_station, stm_out, stm_test_days, stm_min_hours,
                stm_start_hour, stm_hours, stm_date, stm_flags, stm_threads);
  });

  // predict
  auto* predict_cmd = app.add_subcommand(
      "predict", "hourly scene predictions from a saved model");
  add_config_option(predict_cmd);
  std::string pr_model, pr_station, pr_out;
  int pr_days = 3, pr_min_hours = kDefaultMinHoursPerDay;
  predict_cmd->add_option("--model", pr_model, "model JSON (lm/mtm/stm)")
      ->required();
  predict_cmd->add_option("--station", pr_station, "station series CSV")
      ->required();
  predict_cmd->add_option("--out", pr_out, "hourly CSV output")->required();
  predict_cmd
      ->add_option("--days", pr_days,
                   "earliest complete station days to predict (0 = all)")
      ->capture_default_str();
  predict_cmd
      ->add_option("--min_hours", pr_min_hours, "complete-day threshold")
      ->capture_default_str();
  predict_cmd->callback(
      [&] { run_predict(pr_model, pr_station, pr_out, pr_days, pr_min_hours); });

  // evaluate
  auto* eval_cmd = app.add_subcommand(
      "evaluate", "train/test MAE for all four models");
  add_config_option(eval_cmd);
  std::string ev_scene, ev_station, ev_json;
  EvalFlags ev_flags;
  StmFlags ev_stm;
  eval_cmd->add_option("--scene", ev_scene, "scene series CSV")->required();
  eval_cmd->add_option("--station", ev_station, "station series CSV")
      ->required();
  eval_cmd->add_option("--out_json", ev_json, "JSON report output");
  ev_flags.attach(eval_cmd, ev_stm);
  eval_cmd->callback([&] {
    run_evaluate(ev_scene, ev_station, ev_json, ev_flags.resolved(ev_stm));
  });

  // sweep
  auto* sweep_cmd = app.add_subcommand(
      "sweep", "MAE versus measurement duration for one model");
  add_config_option(sweep_cmd);
  std::string sw_scene, sw_station, sw_model = "mtm", sw_csv, sw_json;
  std::vector<int> sw_durations;
  EvalFlags sw_flags;
  StmFlags sw_stm;
  sweep_cmd->add_option("--scene", sw_scene, "scene series CSV")->required();
  sweep_cmd->add_option("--station", sw_station, "station series CSV")
      ->required();
  sweep_cmd->add_option("--model", sw_model, "mtm or stm")
      ->capture_default_str();
  sweep_cmd
      ->add_option("--durations", sw_durations,
                   "hours, comma separated (default: 48..288 mtm, 1..8 stm)")
      ->delimiter(',');
  sweep_cmd->add_option("--out_csv", sw_csv, "CSV output");
  sweep_cmd->add_option("--out_json", sw_json, "JSON output");
  sw_flags.attach(sweep_cmd, sw_stm);
  sweep_cmd->callback([&] {
    run_sweep(sw_scene, sw_station, sw_model, sw_durations, sw_csv, sw_json,
              sw_flags.resolved(sw_stm));
  });

  // assumptions
  auto* assume_cmd = app.add_subcommand(
      "assumptions", "ratio-equality tests behind short-term propagation");
  add_config_option(assume_cmd);
  std::string as_station, as_day0, as_csv;
  std::vector<std::string> as_scenes, as_others;
  double as_alpha = 0.05;
  int as_min_hours = kDefaultMinHoursPerDay;
  assume_cmd->add_option("--station", as_station, "station series CSV")
      ->required();
  assume_cmd
      ->add_option("--scene", as_scenes, "scene series CSV (repeatable)")
      ->required();
  assume_cmd->add_option("--other_station", as_others,
                         "additional station series (repeatable)");
  assume_cmd->add_option("--day0", as_day0,
                         "ratio anchor day (default: earliest complete day)");
  assume_cmd->add_option("--alpha", as_alpha, "significance level")
      ->capture_default_str();
  assume_cmd
      ->add_option("--min_hours", as_min_hours, "complete-day threshold")
      ->capture_default_str();
  assume_cmd->add_option("--out_csv", as_csv, "CSV report output");
  assume_cmd->callback([&] {
    run_assumptions(as_station, as_scenes, as_others, as_day0, as_alpha,
                    as_min_hours, as_csv);
  });

  // synth
  auto* synth_cmd = app.add_subcommand(
      "synth", "generate a synthetic station/scene world");
  add_config_option(synth_cmd);
  std::string sy_preset, sy_scene, sy_station, sy_truth;
  bool sy_identity = false, sy_affine = false;
  double sy_slope = 1.0, sy_offset = 0.0;
  double sy_noise = std::numeric_limits<double>::quiet_NaN();
  int sy_days = 15;
  std::uint64_t sy_seed = 1;
  auto* world = synth_cmd->add_option_group("world");
  world->add_option("--preset", sy_preset,
                    "attic|garage|shack|uninhabited|underground|roof");
  world->add_flag("--identity", sy_identity, "scene equals station");
  world->add_flag("--affine", sy_affine, "scene = slope*station + offset");
  world->require_option(1);
  synth_cmd->add_option("--slope", sy_slope, "affine slope")
      ->capture_default_str();
  synth_cmd->add_option("--offset", sy_offset, "affine offset")
      ->capture_default_str();
  synth_cmd
      ->add_option("--days", sy_days, "world length (identity/affine only)")
      ->capture_default_str();
  synth_cmd->add_option("--noise", sy_noise,
                        "noise sd override (preset default 0.5, else 0)");
  synth_cmd->add_option("--seed", sy_seed, "noise stream seed")
      ->capture_default_str();
  synth_cmd->add_option("--out_scene", sy_scene, "scene logger CSV output")
      ->required();
  synth_cmd
      ->add_option("--out_station", sy_station, "station CSV output")
      ->required();
  synth_cmd->add_option("--out_truth", sy_truth,
                        "ground-truth scene curve CSV output");
  synth_cmd->callback([&] {
    run_synth(sy_preset, sy_identity, sy_affine, sy_slope, sy_offset, sy_days,
              sy_noise, sy_seed, sy_scene, sy_station, sy_truth);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.code_name() << ": " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: Internal: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
