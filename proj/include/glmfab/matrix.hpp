#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace glmfab {

enum class Layout { ColMajor, RowMajor };

// Dense real matrix with an explicit storage layout. The layout tag only
// changes indexing; element values and all reduction orders are identical
// under both layouts, so results are bit-reproducible across layouts.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, Layout layout = Layout::ColMajor,
         double fill = 0.0);

  static Matrix identity(std::size_t n);
  static Matrix ones_column(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Layout layout() const { return layout_; }

  double operator()(std::size_t i, std::size_t j) const {
    return data_[index(i, j)];
  }
  double& operator()(std::size_t i, std::size_t j) { return data_[index(i, j)]; }

  // Copy with the requested layout (explicit, never done silently).
  Matrix with_layout(Layout layout) const;

  std::span<const double> data() const { return data_; }

 private:
  std::size_t index(std::size_t i, std::size_t j) const {
    return layout_ == Layout::ColMajor ? i + j * rows_ : i * cols_ + j;
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Layout layout_ = Layout::ColMajor;
  std::vector<double> data_;
};

// Symmetric matrix storing only the lower triangle (packed row-wise), so
// symmetry holds exactly by construction.
class SymmetricMatrix {
 public:
  SymmetricMatrix() = default;
  explicit SymmetricMatrix(std::size_t dim);

  std::size_t dim() const { return dim_; }

  double operator()(std::size_t i, std::size_t j) const {
    return data_[pack(i, j)];
  }
  double& at(std::size_t i, std::size_t j) { return data_[pack(i, j)]; }

  std::span<const double> packed() const { return data_; }
  std::span<double> packed_mut() { return data_; }

 private:
  static std::size_t pack(std::size_t i, std::size_t j) {
    if (i < j) std::swap(i, j);
    return i * (i + 1) / 2 + j;
  }

  std::size_t dim_ = 0;
  std::vector<double> data_;
};

// Lower-triangular Cholesky factor L with A = L L^t.
class CholeskyFactor {
 public:
  CholeskyFactor() = default;
  explicit CholeskyFactor(std::size_t dim);

  std::size_t dim() const { return dim_; }

  double operator()(std::size_t i, std::size_t j) const {
    return j > i ? 0.0 : data_[i * (i + 1) / 2 + j];
  }
  double& at(std::size_t i, std::size_t j) { return data_[i * (i + 1) / 2 + j]; }

  // log det(A) = 2 sum_i log L_ii
  double log_det() const;

  // y = L^t v
  std::vector<double> mul_lt(std::span<const double> v) const;
  // Solves L^t x = v by back substitution.
  std::vector<double> solve_lt(std::span<const double> v) const;

 private:
  std::size_t dim_ = 0;
  std::vector<double> data_;
};

// Outcome of a Cholesky factorization attempt. A non-positive-definite input
// is a value-level outcome, not an error: `factor` is empty and
// `failed_pivot` holds the 1-based pivot at which a non-positive diagonal
// appeared.
struct CholeskyResult {
  std::optional<CholeskyFactor> factor;
  std::size_t failed_pivot = 0;

  bool ok() const { return factor.has_value(); }
};

// A v. Per-element sums run over the column index in ascending order;
// elements are produced in ascending row order.
std::vector<double> mat_vec(const Matrix& a, std::span<const double> v);

// A^t v, summed over the row (observation) index in ascending order.
std::vector<double> matT_vec(const Matrix& a, std::span<const double> v);

// X^t diag(w) X without materializing the N-by-N diagonal: element (k,k') is
// sum_n w_n X_nk X_nk', accumulated over n ascending. Only one triangle is
// computed; the packed storage mirrors it.
SymmetricMatrix xt_diag_x(const Matrix& x, std::span<const double> w);

// X^t diag(w) Z, the rectangular cross block. Same ascending-n accumulation.
Matrix xt_diag_z(const Matrix& x, std::span<const double> w, const Matrix& z);

// Classic lower Cholesky. The pivot counts as failed when the updated
// diagonal is <= 1e-12 * (1 + |A_kk|) with A_kk the original diagonal.
CholeskyResult cholesky(const SymmetricMatrix& a);

// Solves A x = b given the factor of A (forward then back substitution).
std::vector<double> solve(const CholeskyFactor& chol, std::span<const double> b);

// Column rank of a Gram matrix by diagonally pivoted Cholesky: pivots
// <= tol stop the factorization and the count of accepted pivots is the rank.
std::size_t pivoted_cholesky_rank(const SymmetricMatrix& gram, double tol);

double inf_norm(std::span<const double> v);

}  // namespace glmfab
