#include "scenetemp/linalg.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace scenetemp {

LeastSquaresResult householder_least_squares(const Matrix& a_in,
                                             std::vector<double> b,
                                             double rank_tol) {
  const size_t m = a_in.rows();
  const size_t n = a_in.cols();
  if (b.size() != m) throw std::invalid_argument("householder_least_squares: size mismatch");
  if (m < n) throw std::invalid_argument("householder_least_squares: underdetermined system");

  Matrix a = a_in;
  std::vector<double> v(m);

  for (size_t k = 0; k < n; ++k) {
    double norm = 0.0;
    for (size_t i = k; i < m; ++i) norm = std::hypot(norm, a(i, k));
    if (norm == 0.0) {
      a(k, k) = 0.0;
      continue;  // column already annihilated; r_kk = 0
    }
    double alpha = a(k, k) >= 0.0 ? -norm : norm;
    double vnorm2 = 0.0;
    for (size_t i = k; i < m; ++i) {
      v[i] = a(i, k);
      if (i == k) v[i] -= alpha;
      vnorm2 += v[i] * v[i];
    }
    a(k, k) = alpha;
    for (size_t i = k + 1; i < m; ++i) a(i, k) = 0.0;
    if (vnorm2 == 0.0) continue;
    for (size_t j = k + 1; j < n; ++j) {
      double dot = 0.0;
      for (size_t i = k; i < m; ++i) dot += v[i] * a(i, j);
      double scale = 2.0 * dot / vnorm2;
      for (size_t i = k; i < m; ++i) a(i, j) -= scale * v[i];
    }
    double dot = 0.0;
    for (size_t i = k; i < m; ++i) dot += v[i] * b[i];
    double scale = 2.0 * dot / vnorm2;
    for (size_t i = k; i < m; ++i) b[i] -= scale * v[i];
  }

  double max_diag = 0.0, min_diag = std::numeric_limits<double>::infinity();
  for (size_t k = 0; k < n; ++k) {
    double d = std::abs(a(k, k));
    max_diag = std::max(max_diag, d);
    min_diag = std::min(min_diag, d);
  }

  LeastSquaresResult result;
  result.condition_estimate =
      min_diag > 0.0 ? max_diag / min_diag : std::numeric_limits<double>::infinity();

  result.coefficients.assign(n, 0.0);
  for (size_t kk = n; kk-- > 0;) {
    double d = a(kk, kk);
    if (std::abs(d) <= rank_tol * max_diag) {
      result.rank_deficient = true;
      result.coefficients[kk] = 0.0;  // pinned; caller decides whether to reject
      continue;
    }
    double sum = b[kk];
    for (size_t j = kk + 1; j < n; ++j) sum -= a(kk, j) * result.coefficients[j];
    result.coefficients[kk] = sum / d;
  }

  for (size_t i = n; i < m; ++i) result.residual_ss += b[i] * b[i];
  return result;
}

}  // namespace scenetemp
