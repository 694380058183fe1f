#include "scenetemp/stats.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "scenetemp/dist.hpp"
#include "scenetemp/errors.hpp"
#include "scenetemp/io.hpp"

namespace scenetemp {

namespace {

std::string brief(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3g", v);
  return buf;
}

void add_normality_flag(TestResult& result, const std::vector<double>& values,
                        const std::string& label) {
  const ShapiroResult sw = shapiro_wilk(values);
  if (sw.applicable && sw.p_value < 0.05) {
    result.assumption_flags.push_back(label +
                                      " deviates from normality (Shapiro-Wilk"
                                      " p = " +
                                      brief(sw.p_value) + ")");
  }
}

std::vector<Date> sorted_dates(const std::vector<DailyCurve>& curves) {
  std::vector<Date> dates;
  dates.reserve(curves.size());
  for (const auto& c : curves) dates.push_back(c.date);
  std::sort(dates.begin(), dates.end());
  return dates;
}

// Ratio values for one coefficient over every day offset except 0
// (column 0 is 1 on both sides by construction and carries no signal).
std::vector<double> ratio_values(const RatioTable& table, int coeff) {
  std::vector<double> out;
  out.reserve(table.entries.size());
  for (const auto& e : table.entries) {
    if (e.day_offset != 0) out.push_back(e.h[static_cast<size_t>(coeff)]);
  }
  return out;
}

}  // namespace

RatioTable ratio_table(const std::vector<DailyCurve>& curves,
                       const Date& day0, const RatioOptions& options) {
  return compute_ratios(curves, day0, options);
}

TestResult paired_t_test(const std::vector<double>& x,
                         const std::vector<double>& y) {
  if (x.size() != y.size()) {
    throw Error(ErrorCode::LengthMismatch,
                "paired t-test needs equally long samples, got " +
                    std::to_string(x.size()) + " and " +
                    std::to_string(y.size()));
  }
  const size_t n = x.size();
  if (n < 2) {
    throw Error(ErrorCode::TooFewPoints,
                "paired t-test needs at least 2 pairs, got " +
                    std::to_string(n));
  }
  std::vector<double> d(n);
  for (size_t i = 0; i < n; ++i) d[i] = x[i] - y[i];
  double mean = 0.0;
  for (double v : d) mean += v;
  mean /= static_cast<double>(n);
  double ss = 0.0;
  for (double v : d) ss += (v - mean) * (v - mean);
  if (ss == 0.0) {
    throw Error(ErrorCode::ZeroVariance,
                "all paired differences are identical");
  }
  const double sd = std::sqrt(ss / static_cast<double>(n - 1));
  TestResult result;
  result.df = static_cast<double>(n - 1);
  result.statistic = mean / (sd / std::sqrt(static_cast<double>(n)));
  result.p_value = student_t_two_sided_p(result.statistic, result.df);
  add_normality_flag(result, d, "paired differences");
  return result;
}

TestResult one_way_anova(const std::vector<std::vector<double>>& groups) {
  const size_t k = groups.size();
  if (k < 2) {
    throw Error(ErrorCode::TooFewGroups,
                "ANOVA needs at least 2 groups, got " + std::to_string(k));
  }
  size_t total = 0;
  for (size_t g = 0; g < k; ++g) {
    if (groups[g].size() < 2) {
      throw Error(ErrorCode::TooFewPoints,
                  "ANOVA group " + std::to_string(g) +
                      " needs at least 2 values, got " +
                      std::to_string(groups[g].size()));
    }
    total += groups[g].size();
  }
  double grand = 0.0;
  for (const auto& g : groups)
    for (double v : g) grand += v;
  grand /= static_cast<double>(total);

  double ss_between = 0.0;
  double ss_within = 0.0;
  std::vector<double> variances;
  variances.reserve(k);
  for (const auto& g : groups) {
    double gmean = 0.0;
    for (double v : g) gmean += v;
    gmean /= static_cast<double>(g.size());
    ss_between +=
        static_cast<double>(g.size()) * (gmean - grand) * (gmean - grand);
    double gss = 0.0;
    for (double v : g) gss += (v - gmean) * (v - gmean);
    ss_within += gss;
    variances.push_back(gss / static_cast<double>(g.size() - 1));
  }
  if (ss_within == 0.0) {
    throw Error(ErrorCode::ZeroWithinVariance,
                "every group is internally constant");
  }

  TestResult result;
  result.df = static_cast<double>(k - 1);
  result.df2 = static_cast<double>(total - k);
  const double ms_between = ss_between / result.df;
  const double ms_within = ss_within / result.df2;
  result.statistic = ms_between / ms_within;
  result.p_value = f_upper_tail_p(result.statistic, result.df, result.df2);
  for (size_t g = 0; g < k; ++g) {
    TestResult scratch;
    add_normality_flag(scratch, groups[g], "group " + std::to_string(g));
    for (auto& f : scratch.assumption_flags)
      result.assumption_flags.push_back(std::move(f));
  }
  const auto [vmin, vmax] =
      std::minmax_element(variances.begin(), variances.end());
  if (*vmin > 0.0 && *vmax / *vmin > 10.0) {
    result.assumption_flags.push_back(
        "group variances differ by more than 10x (ratio = " +
        brief(*vmax / *vmin) + ")");
  }
  return result;
}

bool AssumptionReport::all_passed() const {
  return std::all_of(rows.begin(), rows.end(),
                     [](const AssumptionRow& r) { return r.passed; });
}

namespace {

// Degenerate paired comparison (zero variance of differences): identical
// sequences count as perfect agreement, a constant nonzero offset as an
// unambiguous failure.
AssumptionRow degenerate_t_row(const std::string& location, int coeff,
                               double constant_diff, double alpha) {
  AssumptionRow row;
  row.test_kind = "paired_t";
  row.location = location;
  row.coefficient = coeff;
  if (constant_diff == 0.0) {
    row.statistic = 0.0;
    row.p_value = 1.0;
    row.passed = true;
    row.flags.push_back("identical ratio sequences");
  } else {
    row.statistic = constant_diff > 0.0
                        ? std::numeric_limits<double>::infinity()
                        : -std::numeric_limits<double>::infinity();
    row.p_value = 0.0;
    row.passed = false;
    row.flags.push_back("constant nonzero difference of " +
                        brief(constant_diff));
  }
  (void)alpha;
  return row;
}

}  // namespace

AssumptionReport assumption_report(
    const std::map<std::string, std::vector<DailyCurve>>& scene_curve_sets,
    const std::vector<DailyCurve>& station_curves,
    const std::vector<std::vector<DailyCurve>>& other_station_curve_sets,
    const Date& day0, double alpha) {
  const std::vector<Date> ref_dates = sorted_dates(station_curves);
  if (ref_dates.size() < 3) {
    throw Error(ErrorCode::TooFewDays,
                "assumption report needs at least 3 daily curves, got " +
                    std::to_string(ref_dates.size()));
  }
  auto check_dates = [&](const std::vector<DailyCurve>& curves,
                         const std::string& label) {
    if (sorted_dates(curves) != ref_dates) {
      throw Error(ErrorCode::DateRangeMismatch,
                  label + " does not cover the station date range");
    }
  };
  for (const auto& [name, curves] : scene_curve_sets) {
    check_dates(curves, "location '" + name + "'");
  }
  for (size_t s = 0; s < other_station_curve_sets.size(); ++s) {
    check_dates(other_station_curve_sets[s],
                "station " + std::to_string(s + 1));
  }

  AssumptionReport report;
  report.day0_date = day0;
  report.alpha = alpha;

  const RatioTable station_ratios = ratio_table(station_curves, day0);
  for (const auto& w : station_ratios.warnings) {
    report.warnings.push_back("station: " + w);
  }

  for (const auto& [name, curves] : scene_curve_sets) {
    const RatioTable scene_ratios = ratio_table(curves, day0);
    for (const auto& w : scene_ratios.warnings) {
      report.warnings.push_back("location '" + name + "': " + w);
    }
    for (int coeff = 0; coeff < 3; ++coeff) {
      const std::vector<double> x = ratio_values(scene_ratios, coeff);
      const std::vector<double> y = ratio_values(station_ratios, coeff);
      double mae = 0.0;
      for (size_t i = 0; i < x.size(); ++i) mae += std::fabs(x[i] - y[i]);
      mae /= static_cast<double>(x.size());
      report.ratio_maes.push_back({name, coeff, mae});

      AssumptionRow row;
      row.test_kind = "paired_t";
      row.location = name;
      row.coefficient = coeff;
      try {
        const TestResult t = paired_t_test(x, y);
        row.statistic = t.statistic;
        row.p_value = t.p_value;
        row.passed = !(t.p_value < alpha);
        row.flags = t.assumption_flags;
      } catch (const Error& e) {
        if (e.code() != ErrorCode::ZeroVariance) throw;
        row = degenerate_t_row(name, coeff, x[0] - y[0], alpha);
      }
      report.rows.push_back(std::move(row));
    }
  }

  for (int coeff = 0; coeff < 3; ++coeff) {
    std::vector<std::vector<double>> groups;
    groups.push_back(ratio_values(station_ratios, coeff));
    for (size_t s = 0; s < other_station_curve_sets.size(); ++s) {
      const RatioTable other =
          ratio_table(other_station_curve_sets[s], day0);
      if (coeff == 0) {
        for (const auto& w : other.warnings) {
          report.warnings.push_back("station " + std::to_string(s + 1) +
                                    ": " + w);
        }
      }
      groups.push_back(ratio_values(other, coeff));
    }
    AssumptionRow row;
    row.test_kind = "anova";
    row.location = "stations";
    row.coefficient = coeff;
    try {
      const TestResult f = one_way_anova(groups);
      row.statistic = f.statistic;
      row.p_value = f.p_value;
      row.passed = !(f.p_value < alpha);
      row.flags = f.assumption_flags;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::ZeroWithinVariance) throw;
      double lo = groups[0][0];
      double hi = groups[0][0];
      for (const auto& g : groups) {
        double gmean = 0.0;
        for (double v : g) gmean += v;
        gmean /= static_cast<double>(g.size());
        lo = std::min(lo, gmean);
        hi = std::max(hi, gmean);
      }
      if (hi - lo == 0.0) {
        row.statistic = 0.0;
        row.p_value = 1.0;
        row.passed = true;
        row.flags.push_back("identical ratio sequences across stations");
      } else {
        row.statistic = std::numeric_limits<double>::infinity();
        row.p_value = 0.0;
        row.passed = false;
        row.flags.push_back("constant groups with different means");
      }
    }
    report.rows.push_back(std::move(row));
  }

  return report;
}

std::string write_assumption_csv(const AssumptionReport& report) {
  std::ostringstream out;
  out << "test_kind,location,coefficient,statistic,p_value,passed\n";
  for (const auto& row : report.rows) {
    out << row.test_kind << ',' << row.location << ',' << row.coefficient
        << ',' << format_double(row.statistic) << ','
        << format_double(row.p_value) << ','
        << (row.passed ? "true" : "false") << '\n';
  }
  return out.str();
}

}  // namespace scenetemp
