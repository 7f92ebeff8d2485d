#include <cmath>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "glmfab/numderiv.hpp"
#include "glmfab/optimize.hpp"
#include "glmfab/simulate.hpp"
#include "support.hpp"

using namespace glmfab;
using glmfab_test::random_matrix;

namespace {

Objective quadratic_1d() {
  Objective obj;
  obj.dim = 1;
  obj.mean_dim = 1;
  obj.eval = [](std::span<const double> x, EvalLevel level) {
    EvalBundle b;
    b.level = level;
    b.f = -(x[0] - 3.0) * (x[0] - 3.0);
    if (level >= EvalLevel::FG) b.g = std::vector<double>{-2.0 * (x[0] - 3.0)};
    if (level >= EvalLevel::FGH) {
      SymmetricMatrix h(1);
      h.at(0, 0) = -2.0;
      b.h = h;
    }
    return b;
  };
  return obj;
}

Objective logistic_instance(Rng& rng, std::size_t n, std::size_t k) {
  Matrix x = random_matrix(rng, n, k);
  const std::vector<double> beta = glmfab_test::random_vector(rng, k, -0.5, 0.5);
  std::vector<double> y(n);
  for (std::size_t i = 0; i < n; ++i) {
    double u = 0.0;
    for (std::size_t j = 0; j < k; ++j) u += x(i, j) * beta[j];
    y[i] = rng.uniform() < 1.0 / (1.0 + std::exp(-u)) ? 1.0 : 0.0;
  }
  return make_objective(RegressionData(std::move(x), std::move(y)),
                        Family1::binomial_logit(1.0));
}

}  // namespace

TEST_CASE("one undamped step solves a quadratic exactly") {
  const FitResult fit = newton_maximize(quadratic_1d(), std::vector<double>{0.0});
  CHECK(fit.converged);
  CHECK(fit.iterations == 1);
  CHECK(!fit.damping_used);
  CHECK(fit.coefficients.beta[0] == doctest::Approx(3.0).epsilon(1e-14));
  CHECK(fit.grad_norm <= 1e-10);
}

TEST_CASE("logistic fit agrees with an independent gradient-ascent run") {
  Rng rng(501);
  const Objective obj = logistic_instance(rng, 200, 3);
  const FitResult fit = newton_maximize(obj, std::vector<double>(3, 0.0));
  CHECK(fit.converged);
  CHECK(fit.grad_norm <= 1e-8);
  CHECK(!fit.damping_used);  // log-concave likelihood, full-rank design
  CHECK(fit.certificate.verdict == ConcavityVerdict::CertifiedNegativeDefinite);

  const std::vector<double> reference =
      glmfab_test::gradient_ascent_reference(obj, std::vector<double>(3, 0.0), 1e-9);
  for (std::size_t j = 0; j < 3; ++j)
    CHECK(std::fabs(fit.coefficients.beta[j] - reference[j]) <= 1e-6);
}

TEST_CASE("monotone ascent of accepted iterates") {
  Rng rng(503);
  const Objective inner = logistic_instance(rng, 150, 4);
  std::vector<double> trace;
  Objective wrapped;
  wrapped.dim = inner.dim;
  wrapped.mean_dim = inner.mean_dim;
  wrapped.eval = [&inner, &trace](std::span<const double> x, EvalLevel level) {
    EvalBundle b = inner.eval(x, level);
    if (level == EvalLevel::FGH) trace.push_back(b.f);  // accepted iterates only
    return b;
  };
  newton_maximize(wrapped, std::vector<double>(4, 0.0));
  // non-decreasing up to the one-ulp plateau move at termination
  for (std::size_t i = 1; i < trace.size(); ++i)
    CHECK(trace[i] >= trace[i - 1] - 1e-12 * (1.0 + std::fabs(trace[i - 1])));
}

TEST_CASE("varying-dispersion gaussian converges, damping permitted") {
  const SimulatedData sim = simulate_dataset("gaussian-identity-log", 400, 3, 77);
  Matrix x(400, 3);
  for (std::size_t j = 0; j < 3; ++j)
    for (std::size_t i = 0; i < 400; ++i) x(i, j) = sim.data[j][i];
  const Objective obj = make_objective(RegressionData(x, x, sim.data[3]),
                                       Family2::gaussian_identity_log());
  const FitResult fit = newton_maximize(obj, std::vector<double>(6, 0.0));
  CHECK(fit.converged);
  CHECK(fit.grad_norm <= 1e-8);

  // stationarity: the fd gradient of the scalar objective vanishes too
  const ScalarFn f = [&obj](std::span<const double> v) {
    return obj.eval(v, EvalLevel::F).f;
  };
  const std::vector<double> packed = fit.coefficients.packed();
  const std::vector<double> fd_g = fd_gradient(f, packed);
  CHECK(inf_norm(fd_g) <= 1e-5 * (1.0 + std::fabs(fit.loglik)));
}

TEST_CASE("gaussian joint fit equals the least-squares reference") {
  const SimulatedData sim = simulate_dataset("gaussian-identity-log", 300, 4, 78);
  Matrix x(300, 4);
  for (std::size_t j = 0; j < 4; ++j)
    for (std::size_t i = 0; i < 300; ++i) x(i, j) = sim.data[j][i];
  const std::vector<double>& y = sim.data[4];

  const std::vector<double> ols = irls_gaussian_reference(x, y);
  const Objective obj = make_objective(RegressionData(x, std::nullopt, y),
                                       Family2::gaussian_identity_log());
  const FitResult fit = newton_maximize(obj, std::vector<double>(5, 0.0));
  CHECK(fit.converged);
  for (std::size_t j = 0; j < 4; ++j)
    CHECK(std::fabs(fit.coefficients.beta[j] - ols[j]) <= 1e-8);
}

TEST_CASE("least-squares reference oracle") {
  Matrix ones(2, 1, Layout::ColMajor, 1.0);
  const std::vector<double> y{1.0, 3.0};
  CHECK(irls_gaussian_reference(ones, y)[0] == doctest::Approx(2.0).epsilon(1e-14));

  // orthonormal columns: beta = X^t y
  Matrix q(2, 2);
  q(0, 0) = 1.0; q(1, 1) = 1.0;
  const std::vector<double> beta = irls_gaussian_reference(q, y);
  CHECK(beta[0] == 1.0);
  CHECK(beta[1] == 3.0);

  Rng rng(509);
  const Matrix x = random_matrix(rng, 25, 3);
  const std::vector<double> yy = glmfab_test::random_vector(rng, 25, -1.0, 1.0);
  const std::vector<double> b = irls_gaussian_reference(x, yy);
  std::vector<double> resid(25);
  const std::vector<double> xb = mat_vec(x, b);
  for (std::size_t i = 0; i < 25; ++i) resid[i] = yy[i] - xb[i];
  CHECK(inf_norm(matT_vec(x, resid)) <= 1e-8);

  Matrix dup = random_matrix(rng, 10, 2);
  for (std::size_t i = 0; i < 10; ++i) dup(i, 1) = dup(i, 0);
  CHECK_THROWS_AS(irls_gaussian_reference(dup, glmfab_test::random_vector(rng, 10, -1, 1)),
                  std::runtime_error);
}

TEST_CASE("non-finite objective at init is an error") {
  Objective bad;
  bad.dim = 1;
  bad.mean_dim = 1;
  bad.eval = [](std::span<const double> x, EvalLevel level) {
    EvalBundle b;
    b.level = level;
    b.f = std::log(x[0]);  // -inf at zero
    if (level >= EvalLevel::FG) b.g = std::vector<double>{1.0 / x[0]};
    if (level >= EvalLevel::FGH) {
      SymmetricMatrix h(1);
      h.at(0, 0) = -1.0 / (x[0] * x[0]);
      b.h = h;
    }
    return b;
  };
  CHECK_THROWS_AS(newton_maximize(bad, std::vector<double>{0.0}), std::runtime_error);
}
