#include "glmfab/optimize.hpp"

#include <cmath>
#include <stdexcept>

namespace glmfab {

DampedFactor damped_neg_factor(const SymmetricMatrix& h, double ridge0) {
  const std::size_t dim = h.dim();
  for (double v : h.packed())
    if (!std::isfinite(v))
      throw std::runtime_error("damped_neg_factor: non-finite Hessian entry");

  double lambda = 0.0;
  for (int attempt = 0; attempt < 64; ++attempt) {
    SymmetricMatrix a(dim);
    auto dst = a.packed_mut();
    auto src = h.packed();
    for (std::size_t i = 0; i < dst.size(); ++i) dst[i] = -src[i];
    for (std::size_t i = 0; i < dim; ++i) a.at(i, i) += lambda;
    CholeskyResult res = cholesky(a);
    if (res.ok()) return DampedFactor{std::move(*res.factor), lambda};
    lambda = lambda == 0.0 ? ridge0 : lambda * 4.0;
  }
  throw std::runtime_error("damped_neg_factor: Hessian not fixable by damping");
}

FitResult newton_maximize(const Objective& objective, std::span<const double> init,
                          const NewtonConfig& config) {
  if (init.size() != objective.dim)
    throw std::invalid_argument("newton_maximize: init length != objective dim");
  if (config.max_iter <= 0 || config.max_halvings <= 0 || !(config.grad_tol > 0.0) ||
      !(config.step_tol > 0.0) || !(config.ridge0 > 0.0))
    throw std::invalid_argument("newton_maximize: config values must be positive");

  std::vector<double> x(init.begin(), init.end());
  EvalBundle cur = objective.eval(x, EvalLevel::FGH);
  if (!std::isfinite(cur.f))
    throw std::runtime_error("newton_maximize: objective non-finite at init");

  bool damping_used = false;
  bool converged = false;
  int iter = 0;

  while (iter < config.max_iter) {
    const double gnorm = inf_norm(*cur.g);
    if (gnorm <= config.grad_tol) {
      converged = true;
      break;
    }
    ++iter;

    const DampedFactor fac = damped_neg_factor(*cur.h, config.ridge0);
    if (fac.lambda > 0.0) damping_used = true;
    const std::vector<double> d = solve(fac.chol, *cur.g);

    double s = 1.0;
    bool improved = false;
    bool any_finite = false;
    std::vector<double> trial(x.size());
    for (int halving = 0; halving <= config.max_halvings; ++halving) {
      for (std::size_t i = 0; i < x.size(); ++i) trial[i] = x[i] + s * d[i];
      const double f_try = objective.eval(trial, EvalLevel::F).f;
      if (std::isfinite(f_try)) {
        any_finite = true;
        if (f_try > cur.f) {
          improved = true;
          break;
        }
      }
      s *= 0.5;
    }
    if (!any_finite)
      throw std::runtime_error(
          "newton_maximize: objective non-finite at every trial step (iteration " +
          std::to_string(iter) + ", |g| = " + std::to_string(gnorm) + ")");
    if (!improved) {
      // f is flat to working precision near the optimum
      converged = true;
      break;
    }

    const double step_inf = s * inf_norm(d);
    x = trial;
    cur = objective.eval(x, EvalLevel::FGH);
    if (step_inf <= config.step_tol) {
      converged = true;
      break;
    }
  }

  // Stops by step tolerance leave the gradient one Newton step stale: f can
  // no longer increase at double precision, but a pure Newton step still
  // sharpens the gradient (f moves by at most an ulp). Take it while it helps.
  for (int sharpen = 0; sharpen < 2 && converged; ++sharpen) {
    if (inf_norm(*cur.g) <= config.grad_tol) break;
    const DampedFactor fac = damped_neg_factor(*cur.h, config.ridge0);
    const std::vector<double> d = solve(fac.chol, *cur.g);
    std::vector<double> trial(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) trial[i] = x[i] + d[i];
    EvalBundle probe = objective.eval(trial, EvalLevel::FGH);
    if (!std::isfinite(probe.f) || inf_norm(*probe.g) >= inf_norm(*cur.g)) break;
    x = trial;
    cur = std::move(probe);
  }

  FitResult result;
  result.coefficients = Coefficients::unpack(x, objective.mean_dim);
  result.loglik = cur.f;
  result.grad_norm = inf_norm(*cur.g);
  result.iterations = iter;
  result.converged = converged;
  result.damping_used = damping_used;
  result.certificate = certify(cur);
  if (result.grad_norm <= config.grad_tol) result.converged = true;
  return result;
}

std::vector<double> irls_gaussian_reference(const Matrix& x,
                                            std::span<const double> y) {
  if (x.rows() != y.size())
    throw std::invalid_argument("irls_gaussian_reference: X.rows != length(y)");
  const std::vector<double> ones(x.rows(), 1.0);
  const SymmetricMatrix gram = xt_diag_x(x, ones);
  const CholeskyResult res = cholesky(gram);
  if (!res.ok())
    throw std::runtime_error("irls_gaussian_reference: design matrix rank deficient");
  return solve(*res.factor, matT_vec(x, y));
}

}  // namespace glmfab
