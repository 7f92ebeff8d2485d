#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "glmfab/special.hpp"
#include "special_reference.hpp"

using namespace glmfab;
using glmfab_test::RefPoint;

namespace {

template <std::size_t N>
void check_table(const RefPoint (&table)[N], double (*fn)(double), double rel_tol,
                 double abs_floor = 0.0) {
  for (const RefPoint& p : table) {
    const double got = fn(p.x);
    const double err = std::fabs(got - p.value);
    const double bound = std::max(rel_tol * std::fabs(p.value), abs_floor);
    INFO("x = ", p.x, " got ", got, " want ", p.value);
    CHECK(err <= bound);
  }
}

}  // namespace

TEST_CASE("sigmoid family: reference values and symmetry") {
  CHECK(sigmoid(0.0) == 0.5);
  check_table(glmfab_test::kSigmoidRef, sigmoid, 0.0, 1e-12);
  check_table(glmfab_test::kLogSigmoidRef, log_sigmoid, 1e-13, 1e-12);
  for (double u = -700.0; u <= 700.0; u += 13.0) {
    CHECK(std::isfinite(sigmoid(u)));
    CHECK(std::isfinite(log_sigmoid(u)));
    CHECK(sigmoid(u) + sigmoid(-u) == doctest::Approx(1.0).epsilon(1e-14));
  }
}

TEST_CASE("normal pdf and cdf reference values") {
  check_table(glmfab_test::kNormalPdfRef, std_normal_pdf, 1e-12, 1e-300);
  check_table(glmfab_test::kNormalCdfRef, std_normal_cdf, 1e-10);
  CHECK(std_normal_cdf(0.0) == 0.5);
}

TEST_CASE("log normal cdf: reference values, finite and monotone far left") {
  check_table(glmfab_test::kLogNormalCdfRef, log_std_normal_cdf, 1e-9);
  double prev = log_std_normal_cdf(-45.0);
  CHECK(std::isfinite(prev));
  for (double u = -44.9; u <= 9.0; u += 0.1) {
    const double cur = log_std_normal_cdf(u);
    CHECK(std::isfinite(cur));
    CHECK(cur > prev);
    prev = cur;
  }
  CHECK(log_std_normal_cdf(0.0) == doctest::Approx(std::log(0.5)).epsilon(1e-14));
}

TEST_CASE("gamma family reference values") {
  CHECK(log_gamma(5.0) == doctest::Approx(std::log(24.0)).epsilon(1e-13));
  CHECK(digamma(1.0) == doctest::Approx(-0.57721566490153286).epsilon(1e-12));
  check_table(glmfab_test::kLogGammaRef, log_gamma, 1e-10, 1e-12);
  check_table(glmfab_test::kDigammaRef, digamma, 1e-10, 1e-12);
  check_table(glmfab_test::kTrigammaRef, trigamma, 1e-10, 1e-12);
}

TEST_CASE("gamma family domain errors") {
  CHECK_THROWS_AS(log_gamma(0.0), std::domain_error);
  CHECK_THROWS_AS(log_gamma(-1.5), std::domain_error);
  CHECK_THROWS_AS(digamma(0.0), std::domain_error);
  CHECK_THROWS_AS(trigamma(-2.0), std::domain_error);
}
