#include "glmfab/sns.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "glmfab/optimize.hpp"

namespace glmfab {

namespace {

constexpr double kLogTwoPi = 1.8378770664093454836;

struct ProposalFit {
  std::vector<double> mean;
  CholeskyFactor chol;  // factor of A = -H + lambda I (the proposal precision)
};

ProposalFit fit_proposal(std::span<const double> at, const EvalBundle& bundle,
                         double ridge0) {
  DampedFactor fac = damped_neg_factor(*bundle.h, ridge0);
  std::vector<double> mean = solve(fac.chol, *bundle.g);
  for (std::size_t i = 0; i < mean.size(); ++i) mean[i] += at[i];
  return ProposalFit{std::move(mean), std::move(fac.chol)};
}

// log N(x; mu, A^{-1}) with A = L L^t
double log_mvn(std::span<const double> x, const ProposalFit& fit) {
  const std::size_t k = x.size();
  std::vector<double> diff(k);
  for (std::size_t i = 0; i < k; ++i) diff[i] = x[i] - fit.mean[i];
  const std::vector<double> w = fit.chol.mul_lt(diff);
  double quad = 0.0;
  for (double v : w) quad += v * v;
  return -0.5 * (static_cast<double>(k) * kLogTwoPi - fit.chol.log_det() + quad);
}

}  // namespace

std::vector<double> Chain::post_mean() const {
  const std::size_t k = samples.cols();
  std::vector<double> m(k, 0.0);
  const std::size_t n = samples.rows() - burn_in;
  for (std::size_t r = burn_in; r < samples.rows(); ++r)
    for (std::size_t j = 0; j < k; ++j) m[j] += samples(r, j);
  for (double& v : m) v /= static_cast<double>(n);
  return m;
}

std::vector<double> Chain::post_sd() const {
  const std::vector<double> m = post_mean();
  const std::size_t k = samples.cols();
  std::vector<double> s(k, 0.0);
  const std::size_t n = samples.rows() - burn_in;
  for (std::size_t r = burn_in; r < samples.rows(); ++r)
    for (std::size_t j = 0; j < k; ++j) {
      const double d = samples(r, j) - m[j];
      s[j] += d * d;
    }
  for (double& v : s) v = std::sqrt(v / static_cast<double>(n > 1 ? n - 1 : 1));
  return s;
}

double Chain::acceptance_rate() const {
  if (accepted.empty()) return 0.0;
  std::size_t count = 0;
  for (bool a : accepted) count += a;
  return static_cast<double>(count) / static_cast<double>(accepted.size());
}

SnsStepResult sns_step(const Objective& objective, std::span<const double> current,
                       bool rnd, Rng& rng, double ridge0) {
  const EvalBundle cur = objective.eval(current, EvalLevel::FGH);
  if (!std::isfinite(cur.f))
    throw std::runtime_error("sns_step: target non-finite at current state");
  ProposalFit forward = fit_proposal(current, cur, ridge0);

  SnsStepResult result;
  if (!rnd) {
    result.next = std::move(forward.mean);
    result.accepted = true;
    result.log_alpha = 0.0;
    result.log_density = objective.eval(result.next, EvalLevel::F).f;
    return result;
  }

  const std::size_t k = objective.dim;
  std::vector<double> z(k);
  for (double& v : z) v = rng.normal();
  std::vector<double> proposal = forward.chol.solve_lt(z);
  for (std::size_t i = 0; i < k; ++i) proposal[i] += forward.mean[i];

  const EvalBundle prop = objective.eval(proposal, EvalLevel::FGH);
  double log_alpha = -std::numeric_limits<double>::infinity();
  if (std::isfinite(prop.f)) {
    const ProposalFit reverse = fit_proposal(proposal, prop, ridge0);
    log_alpha = prop.f - cur.f + log_mvn(current, reverse) - log_mvn(proposal, forward);
  }

  result.log_alpha = log_alpha;
  if (std::log(rng.uniform()) < log_alpha) {
    result.next = std::move(proposal);
    result.accepted = true;
    result.log_density = prop.f;
  } else {
    result.next.assign(current.begin(), current.end());
    result.accepted = false;
    result.log_density = cur.f;
  }
  return result;
}

Chain run_chain(const Objective& objective, std::span<const double> init,
                const SnsConfig& config) {
  if (init.size() != objective.dim)
    throw std::invalid_argument("run_chain: init length != objective dim");
  if (config.nsmp == 0) throw std::invalid_argument("run_chain: nsmp must be > 0");
  const std::size_t burn_in = config.burn_in == 0 ? config.nsmp / 2 : config.burn_in;
  if (burn_in >= config.nsmp)
    throw std::invalid_argument("run_chain: burn_in must be < nsmp");

  Rng rng(config.seed);
  Chain chain;
  chain.samples = Matrix(config.nsmp, objective.dim, Layout::RowMajor);
  chain.accepted.resize(config.nsmp);
  chain.log_density.resize(config.nsmp);
  chain.seed = config.seed;
  chain.burn_in = burn_in;

  std::vector<double> x(init.begin(), init.end());
  for (std::size_t s = 0; s < config.nsmp; ++s) {
    SnsStepResult step = sns_step(objective, x, config.rnd, rng, config.ridge0);
    x = std::move(step.next);
    for (std::size_t j = 0; j < objective.dim; ++j) chain.samples(s, j) = x[j];
    chain.accepted[s] = step.accepted;
    chain.log_density[s] = step.log_density;
  }
  return chain;
}

}  // namespace glmfab
