#include "glmfab/special.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace glmfab {

namespace {

constexpr double kHalfLogTwoPi = 0.91893853320467274178;
constexpr double kInvSqrtTwo = 0.70710678118654752440;

[[noreturn]] void domain_fail(const char* fn, double x) {
  throw std::domain_error(std::string(fn) + ": argument " + std::to_string(x) +
                          " outside domain");
}

// Mills-ratio asymptotic series for Phi(u), u << 0:
//   Phi(u) = phi(u)/|u| * (1 - 1/u^2 + 3/u^4 - 15/u^6 + ...)
// Terms are accumulated while they keep shrinking (the series is asymptotic).
double log_cdf_tail(double u) {
  const double inv_u2 = 1.0 / (u * u);
  double term = 1.0;
  double sum = 1.0;
  for (int k = 1; k <= 12; ++k) {
    const double next = term * (-(2.0 * k - 1.0) * inv_u2);
    if (std::fabs(next) >= std::fabs(term)) break;
    sum += next;
    term = next;
  }
  return -0.5 * u * u - kHalfLogTwoPi - std::log(-u) + std::log(sum);
}

}  // namespace

double sigmoid(double u) {
  if (u >= 0.0) {
    const double e = std::exp(-u);
    return 1.0 / (1.0 + e);
  }
  const double e = std::exp(u);
  return e / (1.0 + e);
}

double log_sigmoid(double u) {
  // -log(1 + e^{-u}) without overflow on either side
  if (u >= 0.0) return -std::log1p(std::exp(-u));
  return u - std::log1p(std::exp(u));
}

double std_normal_pdf(double u) { return std::exp(-0.5 * u * u - kHalfLogTwoPi); }

double std_normal_cdf(double u) { return 0.5 * std::erfc(-u * kInvSqrtTwo); }

double log_std_normal_cdf(double u) {
  if (u < -8.0) return log_cdf_tail(u);
  // log(1 - Phi(-u)) avoids log() near 1 on the right half
  if (u >= 0.0) return std::log1p(-0.5 * std::erfc(u * kInvSqrtTwo));
  return std::log(0.5 * std::erfc(-u * kInvSqrtTwo));
}

double log_gamma(double x) {
  if (!(x > 0.0)) domain_fail("log_gamma", x);
  // log Gamma(x) = log Gamma(x+1) - log x keeps the Lanczos argument >= 0.5
  if (x < 0.5) return log_gamma(x + 1.0) - std::log(x);

  static constexpr double g = 7.0;
  static constexpr double c[9] = {
      0.99999999999980993,      676.5203681218851,     -1259.1392167224028,
      771.32342877765313,       -176.61502916214059,   12.507343278686905,
      -0.13857109526572012,     9.9843695780195716e-6, 1.5056327351493116e-7};

  const double z = x - 1.0;
  double a = c[0];
  for (int i = 1; i < 9; ++i) a += c[i] / (z + static_cast<double>(i));
  const double t = z + g + 0.5;
  return kHalfLogTwoPi + (z + 0.5) * std::log(t) - t + std::log(a);
}

double digamma(double x) {
  if (!(x > 0.0)) domain_fail("digamma", x);
  double result = 0.0;
  while (x < 6.0) {
    result -= 1.0 / x;
    x += 1.0;
  }
  const double r = 1.0 / x;
  const double r2 = r * r;
  // psi(x) ~ ln x - 1/(2x) - sum_k B_2k / (2k x^{2k})
  result += std::log(x) - 0.5 * r;
  result -= r2 * (1.0 / 12.0 -
                  r2 * (1.0 / 120.0 -
                        r2 * (1.0 / 252.0 -
                              r2 * (1.0 / 240.0 -
                                    r2 * (1.0 / 132.0 -
                                          r2 * (691.0 / 32760.0 -
                                                r2 * (1.0 / 12.0)))))));
  return result;
}

double trigamma(double x) {
  if (!(x > 0.0)) domain_fail("trigamma", x);
  double result = 0.0;
  while (x < 6.0) {
    result += 1.0 / (x * x);
    x += 1.0;
  }
  const double r = 1.0 / x;
  const double r2 = r * r;
  // psi'(x) ~ 1/x + 1/(2x^2) + sum_k B_2k / x^{2k+1}
  result += r * (1.0 +
                 r * (0.5 +
                      r * (1.0 / 6.0 -
                           r2 * (1.0 / 30.0 -
                                 r2 * (1.0 / 42.0 -
                                       r2 * (1.0 / 30.0 -
                                             r2 * (5.0 / 66.0 -
                                                   r2 * (691.0 / 2730.0 -
                                                         r2 * (7.0 / 6.0)))))))));
  return result;
}

}  // namespace glmfab
