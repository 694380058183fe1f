#include "scenetemp/dist.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace scenetemp {

namespace {

// Continued fraction for the incomplete beta function, modified Lentz
// iteration. Valid for x < (a+1)/(a+b+2); the caller applies the
// symmetry I_x(a,b) = 1 - I_{1-x}(b,a) otherwise.
double beta_continued_fraction(double a, double b, double x) {
  constexpr int kMaxIter = 500;
  constexpr double kEps = 1e-15;
  constexpr double kTiny = 1e-300;

  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::fabs(d) < kTiny) d = kTiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= kMaxIter; ++m) {
    const int m2 = 2 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < kEps) return h;
  }
  return h;  // converged to working precision for all df used here
}

double poly(const double* c, int n, double x) {
  double v = c[n - 1];
  for (int i = n - 2; i >= 0; --i) v = v * x + c[i];
  return v;
}

}  // namespace

double regularized_incomplete_beta(double a, double b, double x) {
  if (!(a > 0.0) || !(b > 0.0)) {
    throw std::invalid_argument("incomplete beta requires a > 0 and b > 0");
  }
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  const double log_front = std::lgamma(a + b) - std::lgamma(a) -
                           std::lgamma(b) + a * std::log(x) +
                           b * std::log1p(-x);
  const double front = std::exp(log_front);
  if (x < (a + 1.0) / (a + b + 2.0)) {
    return front * beta_continued_fraction(a, b, x) / a;
  }
  return 1.0 - front * beta_continued_fraction(b, a, 1.0 - x) / b;
}

double student_t_two_sided_p(double t, double df) {
  if (!(df > 0.0)) throw std::invalid_argument("t test requires df > 0");
  if (!std::isfinite(t)) return 0.0;
  const double x = df / (df + t * t);
  return regularized_incomplete_beta(0.5 * df, 0.5, x);
}

double f_upper_tail_p(double f, double df1, double df2) {
  if (!(df1 > 0.0) || !(df2 > 0.0)) {
    throw std::invalid_argument("F test requires positive df");
  }
  if (f <= 0.0) return 1.0;
  if (!std::isfinite(f)) return 0.0;
  const double x = df2 / (df2 + df1 * f);
  return regularized_incomplete_beta(0.5 * df2, 0.5 * df1, x);
}

double normal_cdf(double z) {
  return 0.5 * std::erfc(-z / std::sqrt(2.0));
}

double normal_quantile(double p) {
  // Wichura (1988), algorithm PPND16: relative error below 1e-15 over
  // the full open interval.
  if (!(p > 0.0 && p < 1.0)) {
    if (p == 0.0) return -std::numeric_limits<double>::infinity();
    if (p == 1.0) return std::numeric_limits<double>::infinity();
    throw std::invalid_argument("normal quantile requires p in [0, 1]");
  }
  const double q = p - 0.5;
  if (std::fabs(q) <= 0.425) {
    const double r = 0.180625 - q * q;
    const double num =
        (((((((2.5090809287301226727e+3 * r + 3.3430575583588128105e+4) * r +
              6.7265770927008700853e+4) *
                 r +
             4.5921953931549871457e+4) *
                r +
            1.3731693765509461125e+4) *
               r +
           1.9715909503065514427e+3) *
              r +
          1.3314166789178437745e+2) *
             r +
         3.3871328727963666080e+0);
    const double den =
        (((((((5.2264952788528545610e+3 * r + 2.8729085735721942674e+4) * r +
              3.9307895800092710610e+4) *
                 r +
             2.1213794301586595867e+4) *
                r +
            5.3941960214247511077e+3) *
               r +
           6.8718700749205790830e+2) *
              r +
          4.2313330701600911252e+1) *
             r +
         1.0);
    return q * num / den;
  }
  double r = q < 0.0 ? p : 1.0 - p;
  r = std::sqrt(-std::log(r));
  double val;
  if (r <= 5.0) {
    r -= 1.6;
    const double num =
        (((((((7.74545014278341407640e-4 * r + 2.27238449892691845833e-2) * r +
              2.41780725177450611770e-1) *
                 r +
             1.27045825245236838258e+0) *
                r +
            3.64784832476320460504e+0) *
               r +
           5.76949722146069140550e+0) *
              r +
          4.63033784615654529590e+0) *
             r +
         1.42343711074968357734e+0);
    const double den =
        (((((((1.05075007164441684324e-9 * r + 5.47593808499534494600e-4) * r +
              1.51986665636164571966e-2) *
                 r +
             1.48103976427480074590e-1) *
                r +
            6.89767334985100004550e-1) *
               r +
           1.67638483018380384940e+0) *
              r +
          2.05319162663775882187e+0) *
             r +
         1.0);
    val = num / den;
  } else {
    r -= 5.0;
    const double num =
        (((((((2.01033439929228813265e-7 * r + 2.71155556874348757815e-5) * r +
              1.24266094738807843860e-3) *
                 r +
             2.65321895265761230930e-2) *
                r +
            2.96560571828504891230e-1) *
               r +
           1.78482653991729133580e+0) *
              r +
          5.46378491116411436990e+0) *
             r +
         6.65790464350110377720e+0);
    const double den =
        (((((((2.04426310338993978564e-15 * r + 1.42151175831644588870e-7) *
                  r +
              1.84631831751005468180e-5) *
                 r +
             7.86869131145613259100e-4) *
                r +
            1.48753612908506148525e-2) *
               r +
           1.36929880922735805310e-1) *
              r +
          5.99832206555887937690e-1) *
             r +
         1.0);
    val = num / den;
  }
  return q < 0.0 ? -val : val;
}

namespace {

// Royston (1995) coefficient and p-value polynomials for the
// Shapiro-Wilk approximation.
constexpr double kC1[6] = {0.0,      0.221157, -0.147981,
                           -2.071190, 4.434685, -2.706056};
constexpr double kC2[6] = {0.0,      0.042981, -0.293762,
                           -1.752461, 5.682633, -3.582633};
constexpr double kC3[4] = {0.5440, -0.39978, 0.025054, -6.714e-4};
constexpr double kC4[4] = {1.3822, -0.77857, 0.062767, -0.0020322};
constexpr double kC5[4] = {-1.5861, -0.31082, -0.083751, 0.0038915};
constexpr double kC6[3] = {-0.4803, -0.082676, 0.0030302};
constexpr double kG[2] = {-2.273, 0.459};

}  // namespace

ShapiroResult shapiro_wilk(std::vector<double> sample) {
  ShapiroResult out;
  const int n = static_cast<int>(sample.size());
  if (n < 3) {
    out.note = "need at least 3 observations";
    return out;
  }
  if (n > 5000) {
    out.note = "n > 5000 is outside the approximation's range";
    return out;
  }
  std::sort(sample.begin(), sample.end());
  if (!(sample.back() - sample.front() > 0.0)) {
    out.note = "zero sample range";
    return out;
  }

  const double an = n;
  std::vector<double> a(n, 0.0);
  if (n == 3) {
    a[0] = -std::sqrt(0.5);
    a[2] = std::sqrt(0.5);
  } else {
    std::vector<double> m(n);
    double ssq = 0.0;
    for (int i = 0; i < n; ++i) {
      m[i] = normal_quantile((i + 1 - 0.375) / (an + 0.25));
      ssq += m[i] * m[i];
    }
    const double rsn = 1.0 / std::sqrt(an);
    const double wn = poly(kC1, 6, rsn) + m[n - 1] / std::sqrt(ssq);
    double phi;
    int exact_from;  // first index whose weight keeps the m_i shape
    if (n > 5) {
      const double wn1 = poly(kC2, 6, rsn) + m[n - 2] / std::sqrt(ssq);
      phi = (ssq - 2.0 * m[n - 1] * m[n - 1] - 2.0 * m[n - 2] * m[n - 2]) /
            (1.0 - 2.0 * wn * wn - 2.0 * wn1 * wn1);
      a[n - 2] = wn1;
      a[1] = -wn1;
      exact_from = 2;
    } else {
      phi = (ssq - 2.0 * m[n - 1] * m[n - 1]) / (1.0 - 2.0 * wn * wn);
      exact_from = 1;
    }
    a[n - 1] = wn;
    a[0] = -wn;
    const double scale = std::sqrt(phi);
    for (int i = exact_from; i < n - exact_from; ++i) a[i] = m[i] / scale;
  }

  double mean = 0.0;
  for (double v : sample) mean += v;
  mean /= an;
  double num = 0.0;
  double den = 0.0;
  for (int i = 0; i < n; ++i) {
    num += a[i] * sample[i];
    den += (sample[i] - mean) * (sample[i] - mean);
  }
  out.w = std::min(num * num / den, 1.0);
  out.applicable = true;

  if (n == 3) {
    constexpr double kSixOverPi = 1.90985931710274;
    constexpr double kAsinSqrt34 = 1.04719755119660;  // asin(sqrt(3/4))
    const double p = kSixOverPi * (std::asin(std::sqrt(out.w)) - kAsinSqrt34);
    out.p_value = std::clamp(p, 0.0, 1.0);
    return out;
  }

  const double log_w1 = std::log(1.0 - out.w);
  double y;
  double mu;
  double sigma;
  if (n <= 11) {
    const double gamma = poly(kG, 2, an);
    if (log_w1 >= gamma) {
      out.p_value = 1e-99;
      return out;
    }
    y = -std::log(gamma - log_w1);
    mu = poly(kC3, 4, an);
    sigma = std::exp(poly(kC4, 4, an));
  } else {
    const double log_n = std::log(an);
    y = log_w1;
    mu = poly(kC5, 4, log_n);
    sigma = std::exp(poly(kC6, 3, log_n));
  }
  out.p_value = 1.0 - normal_cdf((y - mu) / sigma);
  return out;
}

}  // namespace scenetemp
