#pragma once

#include <string>
#include <vector>

namespace scenetemp {

// Regularized incomplete beta function I_x(a, b), evaluated by the
// continued-fraction expansion (modified Lentz). Relative accuracy
// target 1e-10 over the parameter ranges used by the t / F tails.
double regularized_incomplete_beta(double a, double b, double x);

// Two-sided Student t p-value: I_{df/(df+t^2)}(df/2, 1/2).
double student_t_two_sided_p(double t, double df);

// Upper tail of the F distribution: I_{df2/(df2+df1*f)}(df2/2, df1/2).
double f_upper_tail_p(double f, double df1, double df2);

double normal_cdf(double z);

// Inverse standard normal CDF (Wichura's PPND16 rational approximation).
double normal_quantile(double p);

// Shapiro-Wilk normality test (Royston's 1995 approximation, n in
// [3, 5000]). Reported informationally alongside the main tests.
struct ShapiroResult {
  double w = 0.0;
  double p_value = 0.0;
  bool applicable = false;  // false when n < 3, n > 5000, or zero range
  std::string note;
};

ShapiroResult shapiro_wilk(std::vector<double> sample);

}  // namespace scenetemp
