#pragma once

#include <cstddef>
#include <vector>

namespace scenetemp {

// Dense column-major matrix, sized for the small regression problems in
// this project (<= ~1500 rows, <= 6 columns).
class Matrix {
 public:
  Matrix() = default;
  Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}

  double& operator()(size_t r, size_t c) { return data_[c * rows_ + r]; }
  double operator()(size_t r, size_t c) const { return data_[c * rows_ + r]; }

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

 private:
  size_t rows_ = 0;
  size_t cols_ = 0;
  std::vector<double> data_;
};

struct LeastSquaresResult {
  std::vector<double> coefficients;
  double residual_ss = 0.0;       // sum of squared residuals
  double condition_estimate = 1;  // max|r_ii| / min|r_ii| of the R factor
  bool rank_deficient = false;
};

// Minimizes ||A x - b||_2 by Householder QR, m >= n. Rank deficiency is
// flagged when any |r_ii| falls below rank_tol * max|r_ii|; coefficients
// are still returned (deficient columns pinned to zero) so callers decide
// whether to throw.
LeastSquaresResult householder_least_squares(const Matrix& a,
                                             std::vector<double> b,
                                             double rank_tol = 1e-12);

}  // namespace scenetemp
