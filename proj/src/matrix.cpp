#include "glmfab/matrix.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace glmfab {

namespace {

[[noreturn]] void dim_error(const std::string& what) {
  throw std::invalid_argument("dimension mismatch: " + what);
}

}  // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols, Layout layout, double fill)
    : rows_(rows), cols_(cols), layout_(layout), data_(rows * cols, fill) {}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::ones_column(std::size_t n) { return Matrix(n, 1, Layout::ColMajor, 1.0); }

Matrix Matrix::with_layout(Layout layout) const {
  Matrix m(rows_, cols_, layout);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j);
  return m;
}

SymmetricMatrix::SymmetricMatrix(std::size_t dim)
    : dim_(dim), data_(dim * (dim + 1) / 2, 0.0) {
  if (dim == 0) throw std::invalid_argument("SymmetricMatrix: dim must be >= 1");
}

CholeskyFactor::CholeskyFactor(std::size_t dim)
    : dim_(dim), data_(dim * (dim + 1) / 2, 0.0) {}

double CholeskyFactor::log_det() const {
  double s = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) s += std::log((*this)(i, i));
  return 2.0 * s;
}

std::vector<double> CholeskyFactor::mul_lt(std::span<const double> v) const {
  if (v.size() != dim_) dim_error("CholeskyFactor::mul_lt");
  std::vector<double> y(dim_, 0.0);
  for (std::size_t i = 0; i < dim_; ++i) {
    double s = 0.0;
    for (std::size_t j = i; j < dim_; ++j) s += (*this)(j, i) * v[j];
    y[i] = s;
  }
  return y;
}

std::vector<double> CholeskyFactor::solve_lt(std::span<const double> v) const {
  if (v.size() != dim_) dim_error("CholeskyFactor::solve_lt");
  std::vector<double> x(dim_, 0.0);
  for (std::size_t ii = dim_; ii-- > 0;) {
    double s = v[ii];
    for (std::size_t j = ii + 1; j < dim_; ++j) s -= (*this)(j, ii) * x[j];
    x[ii] = s / (*this)(ii, ii);
  }
  return x;
}

std::vector<double> mat_vec(const Matrix& a, std::span<const double> v) {
  if (a.cols() != v.size()) dim_error("mat_vec: A.cols != length(v)");
  std::vector<double> r(a.rows(), 0.0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < a.cols(); ++j) s += a(i, j) * v[j];
    r[i] = s;
  }
  return r;
}

std::vector<double> matT_vec(const Matrix& a, std::span<const double> v) {
  if (a.rows() != v.size()) dim_error("matT_vec: A.rows != length(v)");
  std::vector<double> r(a.cols(), 0.0);
  for (std::size_t k = 0; k < a.cols(); ++k) {
    double s = 0.0;
    for (std::size_t n = 0; n < a.rows(); ++n) s += a(n, k) * v[n];
    r[k] = s;
  }
  return r;
}

SymmetricMatrix xt_diag_x(const Matrix& x, std::span<const double> w) {
  if (w.size() != x.rows()) dim_error("xt_diag_x: length(w) != X.rows");
  if (x.cols() == 0) throw std::invalid_argument("xt_diag_x: X has no columns");
  SymmetricMatrix h(x.cols());
  for (std::size_t k = 0; k < x.cols(); ++k) {
    for (std::size_t kp = 0; kp <= k; ++kp) {
      double s = 0.0;
      // product grouped first so mirrored elements are bit-identical
      for (std::size_t n = 0; n < x.rows(); ++n) s += w[n] * (x(n, k) * x(n, kp));
      h.at(k, kp) = s;
    }
  }
  return h;
}

Matrix xt_diag_z(const Matrix& x, std::span<const double> w, const Matrix& z) {
  if (x.rows() != z.rows() || w.size() != x.rows())
    dim_error("xt_diag_z: X.rows, Z.rows and length(w) must agree");
  Matrix c(x.cols(), z.cols());
  for (std::size_t k = 0; k < x.cols(); ++k) {
    for (std::size_t m = 0; m < z.cols(); ++m) {
      double s = 0.0;
      for (std::size_t n = 0; n < x.rows(); ++n) s += w[n] * (x(n, k) * z(n, m));
      c(k, m) = s;
    }
  }
  return c;
}

CholeskyResult cholesky(const SymmetricMatrix& a) {
  const std::size_t n = a.dim();
  CholeskyFactor l(n);
  for (std::size_t k = 0; k < n; ++k) {
    double d = a(k, k);
    for (std::size_t j = 0; j < k; ++j) d -= l(k, j) * l(k, j);
    if (!(d > 1e-12 * (1.0 + std::fabs(a(k, k))))) {
      return CholeskyResult{std::nullopt, k + 1};
    }
    const double lkk = std::sqrt(d);
    l.at(k, k) = lkk;
    for (std::size_t i = k + 1; i < n; ++i) {
      double s = a(i, k);
      for (std::size_t j = 0; j < k; ++j) s -= l(i, j) * l(k, j);
      l.at(i, k) = s / lkk;
    }
  }
  return CholeskyResult{std::move(l), 0};
}

std::vector<double> solve(const CholeskyFactor& chol, std::span<const double> b) {
  const std::size_t n = chol.dim();
  if (b.size() != n) dim_error("solve: length(b) != factor dim");
  std::vector<double> y(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    double s = b[i];
    for (std::size_t j = 0; j < i; ++j) s -= chol(i, j) * y[j];
    y[i] = s / chol(i, i);
  }
  return chol.solve_lt(y);
}

std::size_t pivoted_cholesky_rank(const SymmetricMatrix& gram, double tol) {
  const std::size_t n = gram.dim();
  std::vector<std::vector<double>> b(n, std::vector<double>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) b[i][j] = gram(i, j);

  std::size_t rank = 0;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    for (std::size_t i = k + 1; i < n; ++i)
      if (b[i][i] > b[p][p]) p = i;
    if (!(b[p][p] > tol)) break;
    if (p != k) {
      b[k].swap(b[p]);
      for (std::size_t i = 0; i < n; ++i) std::swap(b[i][k], b[i][p]);
    }
    const double d = std::sqrt(b[k][k]);
    b[k][k] = d;
    for (std::size_t i = k + 1; i < n; ++i) b[i][k] /= d;
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j <= i; ++j) {
        b[i][j] -= b[i][k] * b[j][k];
        b[j][i] = b[i][j];
      }
    ++rank;
  }
  return rank;
}

double inf_norm(std::span<const double> v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::fabs(x));
  return m;
}

}  // namespace glmfab
