#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "glmfab/base1.hpp"
#include "glmfab/base2.hpp"
#include "glmfab/eval_level.hpp"
#include "glmfab/matrix.hpp"

namespace glmfab {

// Log-likelihood value with optional gradient and Hessian at one coefficient
// point. g is present iff level >= FG, h iff level == FGH.
struct EvalBundle {
  double f = 0.0;
  std::optional<std::vector<double>> g;
  std::optional<SymmetricMatrix> h;
  EvalLevel level = EvalLevel::F;
};

// Mean-slot coefficients beta and optional dispersion-slot coefficients
// gamma. Packed order is (beta, gamma).
struct Coefficients {
  std::vector<double> beta;
  std::vector<double> gamma;

  std::vector<double> packed() const;
  static Coefficients unpack(std::span<const double> packed, std::size_t k1);
};

// Design matrices and response for one model. Z absent means a
// single-parameter model; two-parameter evaluation defaults an absent Z to a
// single all-ones column (constant dispersion).
struct RegressionData {
  Matrix x;
  std::optional<Matrix> z;
  std::vector<double> y;

  RegressionData(Matrix x_in, std::vector<double> y_in);
  RegressionData(Matrix x_in, std::optional<Matrix> z_in, std::vector<double> y_in);
};

// Lifts a single-parameter base evaluation to coefficient space:
// u = X beta, f = sum f_n, g = X^t g_base, h = X^t diag(h_base) X.
EvalBundle expand_1par(std::span<const double> beta, const RegressionData& data,
                       const Family1& family, EvalLevel level);

// Two-parameter expansion with u1 = X beta, u2 = Z gamma and block Hessian
// [X^t D1 X, X^t D3 Z; Z^t D3^t X, Z^t D2 Z]. block_diag zeroes the
// off-diagonal blocks.
EvalBundle expand_2par(const Coefficients& coeff, const RegressionData& data,
                       const Family2& family, EvalLevel level,
                       bool block_diag = false);

// Componentwise sum of two bundles at matching level and dimensions (Bayes
// rule composition of log-likelihood and log-prior). Left argument first.
EvalBundle merge(const EvalBundle& a, const EvalBundle& b);

// Independent normal log-prior per coefficient, normalization constant kept:
// f = sum -((b_i - mu_i)/sd_i)^2/2 - sum log sd_i - (K/2) log 2pi.
EvalBundle gaussian_log_prior(std::span<const double> beta,
                              std::span<const double> mu,
                              std::span<const double> sd, EvalLevel level);
EvalBundle gaussian_log_prior(std::span<const double> beta, double mu, double sd,
                              EvalLevel level);

// A fixed (data, family, prior) bundle exposed as a single
// coefficients -> EvalBundle function: the thin-wrapper convention as a
// first-class type, consumed by the optimizer and sampler. Immutable after
// construction and shareable across threads.
struct Objective {
  std::size_t dim = 0;       // total packed coefficient count
  std::size_t mean_dim = 0;  // K1; == dim for single-parameter objectives
  std::function<EvalBundle(std::span<const double>, EvalLevel)> eval;
};

Objective make_objective(RegressionData data, Family1 family);
Objective make_objective(RegressionData data, Family2 family, bool block_diag = false);
// Wraps an objective with a broadcast normal prior over the packed vector.
Objective with_gaussian_prior(Objective base, std::vector<double> mu,
                              std::vector<double> sd);

}  // namespace glmfab
