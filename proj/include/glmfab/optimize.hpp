#pragma once

#include <span>
#include <vector>

#include "glmfab/concavity.hpp"
#include "glmfab/expander.hpp"
#include "glmfab/matrix.hpp"

namespace glmfab {

struct NewtonConfig {
  int max_iter = 100;
  double grad_tol = 1e-8;    // infinity norm of the gradient
  double step_tol = 1e-10;   // infinity norm of the accepted step
  int max_halvings = 30;
  double ridge0 = 1e-6;      // initial damping ridge, escalated by 4x
};

struct FitResult {
  Coefficients coefficients;
  double loglik = 0.0;
  double grad_norm = 0.0;
  int iterations = 0;
  bool converged = false;
  bool damping_used = false;
  ConcavityCertificate certificate;
};

// Factors -H + lambda I, escalating lambda from 0 through ridge0 * 4^k until
// the factorization succeeds. Reused by the sampler for proposal fitting.
// Throws std::runtime_error if no finite ridge fixes the matrix.
struct DampedFactor {
  CholeskyFactor chol;
  double lambda = 0.0;
};
DampedFactor damped_neg_factor(const SymmetricMatrix& h, double ridge0);

// Damped Newton-Raphson ascent on an EvalBundle objective. Steps solve
// (-H + lambda I) d = g; step length halves from 1 until f strictly
// increases. Stops on grad_tol, step_tol or max_iter and returns the
// best-seen iterate; a round with no improving halving counts as
// convergence by step tolerance (flat region near the optimum).
FitResult newton_maximize(const Objective& objective,
                          std::span<const double> init,
                          const NewtonConfig& config = {});

// Closed-form least squares via the normal equations, used as an
// independent reference for gaussian fits. Throws on rank deficiency.
std::vector<double> irls_gaussian_reference(const Matrix& x,
                                            std::span<const double> y);

}  // namespace glmfab
