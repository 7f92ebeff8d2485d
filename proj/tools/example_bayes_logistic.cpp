// Bayesian logistic regression: flat normal prior, Newton MLE versus the
// Stochastic Newton Sampler in Newton mode, plus a stochastic chain.
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <vector>

#include "glmfab/concavity.hpp"
#include "glmfab/optimize.hpp"
#include "glmfab/simulate.hpp"
#include "glmfab/sns.hpp"

using namespace glmfab;

namespace {

int failures = 0;

void check(bool ok, const char* what) {
  std::printf("  [%s] %s\n", ok ? "ok" : "FAIL", what);
  if (!ok) ++failures;
}

}  // namespace

int main() {
  const std::size_t N = 1000, K = 5;
  const SimulatedData sim = simulate_dataset("binomial-logit", N, K, 20250401);

  Matrix x(N, K);
  for (std::size_t j = 0; j < K; ++j)
    for (std::size_t i = 0; i < N; ++i) x(i, j) = sim.data[j][i];
  RegressionData data(std::move(x), sim.data[K]);

  const Objective loglike = make_objective(data, Family1::binomial_logit(1.0));
  const Objective logpost = with_gaussian_prior(loglike, {0.0}, {1000.0});

  const std::vector<double> zeros(K, 0.0);
  const FitResult mle = newton_maximize(loglike, zeros);

  SnsConfig newton_mode;
  newton_mode.rnd = false;
  newton_mode.nsmp = 100;
  newton_mode.seed = 1;
  const Chain chain = run_chain(logpost, zeros, newton_mode);
  const std::vector<double> beta_sns = chain.post_mean();

  std::printf("%-4s %14s %14s %14s\n", "", "beta.true", "beta.mle", "beta.sns");
  for (std::size_t j = 0; j < K; ++j)
    std::printf("x%-3zu %14.8f %14.8f %14.8f\n", j + 1, sim.beta[j],
                mle.coefficients.beta[j], beta_sns[j]);

  check(mle.converged && mle.grad_norm < 1e-8, "Newton MLE converged");
  check(!mle.damping_used, "no damping on the log-concave posterior");
  check(mle.certificate.verdict == ConcavityVerdict::CertifiedNegativeDefinite,
        "Hessian certified negative definite at the optimum");

  double max_diff = 0.0;
  for (std::size_t j = 0; j < K; ++j)
    max_diff = std::max(max_diff, std::fabs(mle.coefficients.beta[j] - beta_sns[j]));
  std::printf("  max |mle - sns| = %.3g\n", max_diff);
  check(max_diff <= 1e-6, "MLE and Newton-mode SNS means agree to 1e-6");

  // truth recovery within 3 standard errors from the observed information
  const EvalBundle at_opt = loglike.eval(mle.coefficients.beta, EvalLevel::FGH);
  const DampedFactor fac = damped_neg_factor(*at_opt.h, 1e-6);
  bool recovered = true;
  for (std::size_t j = 0; j < K; ++j) {
    std::vector<double> e(K, 0.0);
    e[j] = 1.0;
    const double se = std::sqrt(solve(fac.chol, e)[j]);
    if (std::fabs(mle.coefficients.beta[j] - sim.beta[j]) > 3.0 * se) recovered = false;
  }
  check(recovered, "true coefficients within 3 standard errors");

  SnsConfig stochastic;
  stochastic.rnd = true;
  stochastic.nsmp = 5000;
  stochastic.seed = 7;
  const Chain mc = run_chain(logpost, zeros, stochastic);
  std::printf("  stochastic chain acceptance rate = %.3f\n", mc.acceptance_rate());
  check(mc.acceptance_rate() > 0.0 && mc.acceptance_rate() < 1.0,
        "stochastic acceptance rate strictly inside (0,1)");
  const std::vector<double> mc_mean = mc.post_mean();
  double mc_diff = 0.0;
  for (std::size_t j = 0; j < K; ++j)
    mc_diff = std::max(mc_diff, std::fabs(mc_mean[j] - mle.coefficients.beta[j]));
  std::printf("  max |posterior mean - mle| = %.3g\n", mc_diff);
  check(mc_diff < 1e-2, "stochastic posterior mean near the MLE");

  return failures == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
