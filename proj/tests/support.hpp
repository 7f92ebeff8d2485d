// Shared helpers for the unit and acceptance suites: independent
// explicit-sum oracles, random model instances, closed-form eigenvalues for
// tiny matrices and a plain gradient-ascent reference optimizer. Everything
// here stays independent of the library code paths it is used to check.
#pragma once

#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "glmfab/base1.hpp"
#include "glmfab/base2.hpp"
#include "glmfab/expander.hpp"
#include "glmfab/matrix.hpp"
#include "glmfab/rng.hpp"

namespace glmfab_test {

using namespace glmfab;

// |a - b| / (1 + |b|): relative for large values, absolute near zero.
inline double rel_err(double a, double b) {
  return std::fabs(a - b) / (1.0 + std::fabs(b));
}

inline Matrix random_matrix(Rng& rng, std::size_t n, std::size_t k,
                            Layout layout = Layout::ColMajor) {
  Matrix x(n, k, layout);
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t i = 0; i < n; ++i) x(i, j) = rng.uniform() - 0.5;
  return x;
}

inline std::vector<double> random_vector(Rng& rng, std::size_t k, double lo,
                                         double hi) {
  std::vector<double> v(k);
  for (double& x : v) x = lo + (hi - lo) * rng.uniform();
  return v;
}

// Draws one (u, y) pair inside the family's response domain.
inline void draw_point_1par(const Family1& fam, Rng& rng, double& u, double& y) {
  u = 10.0 * rng.uniform() - 5.0;
  const double trials = fam.trials.empty() ? 1.0 : fam.trials[0];
  switch (fam.id) {
    case Family1Id::BinomialLogit:
    case Family1Id::BinomialProbit:
    case Family1Id::BinomialCauchit:
    case Family1Id::BinomialCloglog:
      y = std::floor(rng.uniform() * (trials + 1.0));
      if (y > trials) y = trials;
      break;
    case Family1Id::PoissonLog:
    case Family1Id::GeometricLogit:
      y = std::floor(rng.uniform() * 8.0);
      break;
    case Family1Id::ExponentialLog:
      y = 0.1 + 3.0 * rng.uniform();
      break;
  }
}

inline void draw_point_2par(const Family2& fam, Rng& rng, double& u1, double& u2,
                            double& y) {
  u1 = 4.0 * rng.uniform() - 2.0;
  u2 = 4.0 * rng.uniform() - 2.0;
  if (fam.id == Family2Id::GaussianIdentityLog)
    y = u1 + 2.0 * (rng.uniform() - 0.5);
  else
    y = 0.2 + 3.0 * rng.uniform();
}

// Response vector drawn crudely but inside the family domain; good enough
// for derivative identities, which hold at any valid (u, y).
inline std::vector<double> random_response_1par(const Family1& fam, Rng& rng,
                                                std::size_t n) {
  std::vector<double> y(n);
  for (std::size_t i = 0; i < n; ++i) {
    double u;
    draw_point_1par(fam, rng, u, y[i]);
  }
  return y;
}

inline std::vector<double> random_response_2par(const Family2& fam, Rng& rng,
                                                std::size_t n) {
  std::vector<double> y(n);
  for (std::size_t i = 0; i < n; ++i) {
    double u1, u2;
    draw_point_2par(fam, rng, u1, u2, y[i]);
  }
  return y;
}

// Explicit-sum construction of the expanded gradient and Hessian: per
// observation, accumulate g_n x_n and h_n (x_n outer x_n) directly.
struct ExplicitExpansion {
  double f = 0.0;
  std::vector<double> g;
  std::vector<std::vector<double>> h;  // dense, symmetric
};

inline ExplicitExpansion explicit_expand_1par(std::span<const double> beta,
                                              const Matrix& x,
                                              std::span<const double> y,
                                              const Family1& fam) {
  const std::size_t n = x.rows();
  const std::size_t k = x.cols();
  std::vector<double> u(n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < k; ++j) u[i] += x(i, j) * beta[j];
  const BaseEval1 base = eval_base1(fam, u, y, EvalLevel::FGH);

  ExplicitExpansion out;
  out.g.assign(k, 0.0);
  out.h.assign(k, std::vector<double>(k, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    out.f += base.f[i];
    for (std::size_t a = 0; a < k; ++a) {
      out.g[a] += base.g[i] * x(i, a);
      for (std::size_t b = 0; b < k; ++b)
        out.h[a][b] += base.h[i] * x(i, a) * x(i, b);
    }
  }
  return out;
}

inline ExplicitExpansion explicit_expand_2par(const Coefficients& coeff,
                                              const Matrix& x, const Matrix& z,
                                              std::span<const double> y,
                                              const Family2& fam, bool block_diag) {
  const std::size_t n = x.rows();
  const std::size_t k1 = x.cols();
  const std::size_t k2 = z.cols();
  std::vector<double> u1(n, 0.0), u2(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k1; ++j) u1[i] += x(i, j) * coeff.beta[j];
    for (std::size_t j = 0; j < k2; ++j) u2[i] += z(i, j) * coeff.gamma[j];
  }
  const BaseEval2 base = eval_base2(fam, u1, u2, y, EvalLevel::FGH);

  const std::size_t dim = k1 + k2;
  ExplicitExpansion out;
  out.g.assign(dim, 0.0);
  out.h.assign(dim, std::vector<double>(dim, 0.0));
  const auto row = [&](std::size_t i, std::size_t slot, std::size_t a) {
    return slot == 0 ? x(i, a) : z(i, a - k1);
  };
  for (std::size_t i = 0; i < n; ++i) {
    out.f += base.f[i];
    for (std::size_t a = 0; a < k1; ++a) out.g[a] += base.g1[i] * x(i, a);
    for (std::size_t a = 0; a < k2; ++a) out.g[k1 + a] += base.g2[i] * z(i, a);
    for (std::size_t a = 0; a < dim; ++a) {
      const std::size_t slot_a = a < k1 ? 0 : 1;
      for (std::size_t b = 0; b < dim; ++b) {
        const std::size_t slot_b = b < k1 ? 0 : 1;
        double hn;
        if (slot_a == 0 && slot_b == 0) hn = base.h11[i];
        else if (slot_a == 1 && slot_b == 1) hn = base.h22[i];
        else hn = block_diag ? 0.0 : base.h12[i];
        out.h[a][b] += hn * row(i, slot_a, a) * row(i, slot_b, b);
      }
    }
  }
  return out;
}

// Eigenvalues of a 2x2 symmetric matrix.
inline void eig2(double a, double b, double c, double& lo, double& hi) {
  const double mean = 0.5 * (a + c);
  const double r = std::sqrt(0.25 * (a - c) * (a - c) + b * b);
  lo = mean - r;
  hi = mean + r;
}

// Eigenvalues of a 3x3 symmetric matrix via the characteristic polynomial
// (trigonometric form).
inline std::vector<double> eig3(const std::vector<std::vector<double>>& a) {
  const double p1 = a[0][1] * a[0][1] + a[0][2] * a[0][2] + a[1][2] * a[1][2];
  const double q = (a[0][0] + a[1][1] + a[2][2]) / 3.0;
  if (p1 == 0.0) return {a[0][0], a[1][1], a[2][2]};
  const double p2 = (a[0][0] - q) * (a[0][0] - q) + (a[1][1] - q) * (a[1][1] - q) +
                    (a[2][2] - q) * (a[2][2] - q) + 2.0 * p1;
  const double p = std::sqrt(p2 / 6.0);
  std::vector<std::vector<double>> b(3, std::vector<double>(3));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) b[i][j] = (a[i][j] - (i == j ? q : 0.0)) / p;
  const double detb =
      b[0][0] * (b[1][1] * b[2][2] - b[1][2] * b[2][1]) -
      b[0][1] * (b[1][0] * b[2][2] - b[1][2] * b[2][0]) +
      b[0][2] * (b[1][0] * b[2][1] - b[1][1] * b[2][0]);
  double r = detb / 2.0;
  r = std::min(1.0, std::max(-1.0, r));
  const double phi = std::acos(r) / 3.0;
  const double e1 = q + 2.0 * p * std::cos(phi);
  const double e3 = q + 2.0 * p * std::cos(phi + 2.0 * M_PI / 3.0);
  return {e1, 3.0 * q - e1 - e3, e3};
}

// Determinant by cofactor expansion, for the Gram-determinant cross-check.
inline double det_recursive(const std::vector<std::vector<double>>& a) {
  const std::size_t n = a.size();
  if (n == 1) return a[0][0];
  double det = 0.0;
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::vector<double>> minor(n - 1, std::vector<double>(n - 1));
    for (std::size_t i = 1; i < n; ++i) {
      std::size_t mc = 0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == c) continue;
        minor[i - 1][mc++] = a[i][j];
      }
    }
    det += (c % 2 == 0 ? 1.0 : -1.0) * a[0][c] * det_recursive(minor);
  }
  return det;
}

// Plain gradient ascent with backtracking on the gradient norm: a step is
// kept only when it shrinks ||g||_2, the step grows gently after successes
// and halves after failures. Shares no code with the Newton path and, unlike
// an f-based line search, cannot stall on an f plateau, so it reaches tight
// gradient tolerances.
inline std::vector<double> gradient_ascent_reference(const Objective& obj,
                                                     std::vector<double> x,
                                                     double grad_tol,
                                                     int max_iter = 50000) {
  const auto norm2 = [](std::span<const double> v) {
    double s = 0.0;
    for (double w : v) s += w * w;
    return std::sqrt(s);
  };
  EvalBundle cur = obj.eval(x, EvalLevel::FG);
  double s = 1.0;
  std::vector<double> trial(x.size());
  for (int it = 0; it < max_iter; ++it) {
    const std::vector<double>& g = *cur.g;
    double gmax = 0.0;
    for (double v : g) gmax = std::max(gmax, std::fabs(v));
    if (gmax <= grad_tol) return x;
    for (std::size_t i = 0; i < x.size(); ++i) trial[i] = x[i] + s * g[i];
    EvalBundle next = obj.eval(trial, EvalLevel::FG);
    if (std::isfinite(next.f) && norm2(*next.g) < norm2(g)) {
      x = trial;
      cur = std::move(next);
      s *= 1.5;
    } else {
      s *= 0.5;
    }
  }
  throw std::runtime_error("gradient_ascent_reference: no convergence");
}

inline std::vector<Family1> all_family1() {
  return {Family1::binomial_logit(3.0),  Family1::binomial_probit(3.0),
          Family1::binomial_cauchit(3.0), Family1::binomial_cloglog(3.0),
          Family1::poisson_log(),         Family1::exponential_log(),
          Family1::geometric_logit()};
}

inline std::vector<Family2> all_family2() {
  return {Family2::gaussian_identity_log(), Family2::inverse_gaussian_log_log(),
          Family2::gamma_log_log()};
}

}  // namespace glmfab_test
