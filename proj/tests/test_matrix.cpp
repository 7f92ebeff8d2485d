#include <cmath>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "glmfab/matrix.hpp"
#include "glmfab/rng.hpp"
#include "support.hpp"

using namespace glmfab;
using glmfab_test::random_matrix;

TEST_CASE("mat_vec identity and hand sums") {
  const Matrix eye = Matrix::identity(2);
  const std::vector<double> v{3.0, 7.0};
  CHECK(mat_vec(eye, v) == std::vector<double>{3.0, 7.0});

  Matrix a(2, 2);
  a(0, 0) = 1; a(0, 1) = 2; a(1, 0) = 3; a(1, 1) = 4;
  CHECK(mat_vec(a, std::vector<double>{1.0, 1.0}) == std::vector<double>{3.0, 7.0});

  CHECK_THROWS_AS(mat_vec(a, std::vector<double>{1.0}), std::invalid_argument);
}

TEST_CASE("mat_vec matches a naive triple-checked loop") {
  Rng rng(11);
  const Matrix a = random_matrix(rng, 5, 3);
  const std::vector<double> v = glmfab_test::random_vector(rng, 3, -1.0, 1.0);
  const std::vector<double> got = mat_vec(a, v);
  for (std::size_t i = 0; i < 5; ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < 3; ++j) s += a(i, j) * v[j];
    CHECK(got[i] == doctest::Approx(s).epsilon(1e-15));
  }
}

TEST_CASE("xt_diag_x hand cases") {
  Matrix ones(2, 1, Layout::ColMajor, 1.0);
  const std::vector<double> w{2.0, 3.0};
  const SymmetricMatrix h = xt_diag_x(ones, w);
  CHECK(h.dim() == 1);
  CHECK(h(0, 0) == 5.0);

  Rng rng(3);
  const Matrix x = random_matrix(rng, 4, 2);
  const std::vector<double> zeros(4, 0.0);
  const SymmetricMatrix hz = xt_diag_x(x, zeros);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) CHECK(hz(i, j) == 0.0);

  CHECK_THROWS_AS(xt_diag_x(x, w), std::invalid_argument);
}

TEST_CASE("xt_diag_x equals the explicit weighted outer-product sum") {
  Rng rng(17);
  for (int rep = 0; rep < 20; ++rep) {
    const std::size_t n = 2 + static_cast<std::size_t>(rng.uniform() * 48);
    const std::size_t k = 1 + static_cast<std::size_t>(rng.uniform() * 7);
    const Matrix x = random_matrix(rng, n, k);
    const std::vector<double> w = glmfab_test::random_vector(rng, n, -1.0, 1.0);
    const SymmetricMatrix h = xt_diag_x(x, w);
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = 0; b < k; ++b) {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i) s += w[i] * x(i, a) * x(i, b);
        CHECK(std::fabs(h(a, b) - s) <= 1e-12);
      }
  }
}

TEST_CASE("xt_diag_z consistency and explicit oracle") {
  Rng rng(5);
  const Matrix x = random_matrix(rng, 10, 3);
  const std::vector<double> w = glmfab_test::random_vector(rng, 10, -1.0, 1.0);

  const Matrix c = xt_diag_z(x, w, x);
  const SymmetricMatrix h = xt_diag_x(x, w);
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b) CHECK(c(a, b) == h(a, b));

  const Matrix z = random_matrix(rng, 10, 2);
  const Matrix cz = xt_diag_z(x, w, z);
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 2; ++b) {
      double s = 0.0;
      for (std::size_t i = 0; i < 10; ++i) s += w[i] * x(i, a) * z(i, b);
      CHECK(std::fabs(cz(a, b) - s) <= 1e-12);
    }

  const std::vector<double> zeros(10, 0.0);
  const Matrix c0 = xt_diag_z(x, zeros, z);
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 2; ++b) CHECK(c0(a, b) == 0.0);
}

TEST_CASE("cholesky hand factorizations") {
  SymmetricMatrix eye(2);
  eye.at(0, 0) = 1.0;
  eye.at(1, 1) = 1.0;
  const CholeskyResult r1 = cholesky(eye);
  REQUIRE(r1.ok());
  CHECK((*r1.factor)(0, 0) == 1.0);
  CHECK((*r1.factor)(1, 0) == 0.0);
  CHECK((*r1.factor)(1, 1) == 1.0);

  SymmetricMatrix a(2);
  a.at(0, 0) = 4.0; a.at(1, 0) = 2.0; a.at(1, 1) = 5.0;
  const CholeskyResult r2 = cholesky(a);
  REQUIRE(r2.ok());
  CHECK((*r2.factor)(0, 0) == 2.0);
  CHECK((*r2.factor)(1, 0) == 1.0);
  CHECK((*r2.factor)(1, 1) == 2.0);

  SymmetricMatrix bad(2);
  bad.at(0, 0) = 1.0; bad.at(1, 0) = 2.0; bad.at(1, 1) = 1.0;
  const CholeskyResult r3 = cholesky(bad);
  CHECK(!r3.ok());
  CHECK(r3.failed_pivot == 2);  // eigenvalues 3 and -1
}

TEST_CASE("cholesky succeeds iff eigenvalues positive (2x2 and 3x3)") {
  Rng rng(23);
  for (int rep = 0; rep < 200; ++rep) {
    SymmetricMatrix a(2);
    a.at(0, 0) = 4.0 * rng.uniform() - 2.0;
    a.at(1, 0) = 4.0 * rng.uniform() - 2.0;
    a.at(1, 1) = 4.0 * rng.uniform() - 2.0;
    double lo, hi;
    glmfab_test::eig2(a(0, 0), a(1, 0), a(1, 1), lo, hi);
    if (std::fabs(lo) < 1e-6) continue;  // skip near-singular draws
    CHECK(cholesky(a).ok() == (lo > 0.0));
  }
  for (int rep = 0; rep < 200; ++rep) {
    SymmetricMatrix a(3);
    std::vector<std::vector<double>> dense(3, std::vector<double>(3));
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j <= i; ++j) {
        const double v = 4.0 * rng.uniform() - 2.0;
        a.at(i, j) = v;
        dense[i][j] = dense[j][i] = v;
      }
    const std::vector<double> eigs = glmfab_test::eig3(dense);
    double lo = eigs[0];
    for (double e : eigs) lo = std::min(lo, e);
    if (std::fabs(lo) < 1e-6) continue;
    CHECK(cholesky(a).ok() == (lo > 0.0));
  }
}

TEST_CASE("cholesky reconstruction within 1e-10 relative Frobenius") {
  Rng rng(29);
  for (int rep = 0; rep < 20; ++rep) {
    const std::size_t k = 1 + static_cast<std::size_t>(rng.uniform() * 6);
    const Matrix b = random_matrix(rng, k + 3, k);
    const std::vector<double> ones(k + 3, 1.0);
    SymmetricMatrix a = xt_diag_x(b, ones);
    for (std::size_t i = 0; i < k; ++i) a.at(i, i) += 0.5;
    const CholeskyResult res = cholesky(a);
    REQUIRE(res.ok());
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) {
        double rec = 0.0;
        for (std::size_t m = 0; m <= std::min(i, j); ++m)
          rec += (*res.factor)(i, m) * (*res.factor)(j, m);
        num += (rec - a(i, j)) * (rec - a(i, j));
        den += a(i, j) * a(i, j);
      }
    CHECK(std::sqrt(num) <= 1e-10 * std::sqrt(den));
  }
}

TEST_CASE("solve: identity, hand system, random residuals") {
  const CholeskyResult eye = cholesky([] {
    SymmetricMatrix m(3);
    for (std::size_t i = 0; i < 3; ++i) m.at(i, i) = 1.0;
    return m;
  }());
  const std::vector<double> b{1.0, -2.0, 5.0};
  CHECK(solve(*eye.factor, b) == b);

  SymmetricMatrix a(2);
  a.at(0, 0) = 4.0; a.at(1, 0) = 2.0; a.at(1, 1) = 5.0;
  const std::vector<double> x = solve(*cholesky(a).factor, std::vector<double>{8.0, 9.0});
  CHECK(x[0] == doctest::Approx(11.0 / 8.0).epsilon(1e-14));
  CHECK(x[1] == doctest::Approx(5.0 / 4.0).epsilon(1e-14));

  Rng rng(31);
  for (int rep = 0; rep < 20; ++rep) {
    const std::size_t k = 1 + static_cast<std::size_t>(rng.uniform() * 6);
    const Matrix m = random_matrix(rng, k + 4, k);
    const std::vector<double> ones(k + 4, 1.0);
    SymmetricMatrix spd = xt_diag_x(m, ones);
    for (std::size_t i = 0; i < k; ++i) spd.at(i, i) += 0.25;
    const std::vector<double> rhs = glmfab_test::random_vector(rng, k, -2.0, 2.0);
    const std::vector<double> sol = solve(*cholesky(spd).factor, rhs);
    double resid = 0.0, bmax = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
      double ax = 0.0;
      for (std::size_t j = 0; j < k; ++j) ax += spd(i, j) * sol[j];
      resid = std::max(resid, std::fabs(ax - rhs[i]));
      bmax = std::max(bmax, std::fabs(rhs[i]));
    }
    CHECK(resid <= 1e-8 * (1.0 + bmax));
  }
}

TEST_CASE("layout is representation only") {
  Rng rng(37);
  const Matrix col = random_matrix(rng, 6, 4, Layout::ColMajor);
  const Matrix row = col.with_layout(Layout::RowMajor);
  CHECK(row.layout() == Layout::RowMajor);
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 4; ++j) CHECK(col(i, j) == row(i, j));

  const std::vector<double> w = glmfab_test::random_vector(rng, 6, -1.0, 1.0);
  const SymmetricMatrix hc = xt_diag_x(col, w);
  const SymmetricMatrix hr = xt_diag_x(row, w);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) CHECK(hc(i, j) == hr(i, j));
}

TEST_CASE("SymmetricMatrix stores one triangle") {
  SymmetricMatrix m(3);
  m.at(2, 0) = 7.0;
  CHECK(m(0, 2) == 7.0);
  CHECK_THROWS_AS(SymmetricMatrix(0), std::invalid_argument);
}
