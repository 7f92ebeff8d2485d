#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "glmfab/expander.hpp"
#include "glmfab/matrix.hpp"
#include "glmfab/rng.hpp"

namespace glmfab {

struct SnsConfig {
  bool rnd = true;           // stochastic sampling vs. pure Newton mode
  std::size_t nsmp = 1000;
  std::size_t burn_in = 0;   // 0 means nsmp / 2
  std::uint64_t seed = 0;
  double ridge0 = 1e-6;      // damping ridge shared with the optimizer
};

// MCMC output: one row per kept step, acceptance flags, target log-density
// at each stored state, plus the seed and burn-in used.
struct Chain {
  Matrix samples;                 // nsmp x K, row-major
  std::vector<bool> accepted;
  std::vector<double> log_density;
  std::uint64_t seed = 0;
  std::size_t burn_in = 0;

  std::vector<double> post_mean() const;  // mean over rows burn_in..nsmp-1
  std::vector<double> post_sd() const;
  double acceptance_rate() const;
};

struct SnsStepResult {
  std::vector<double> next;
  bool accepted = false;
  double log_alpha = 0.0;    // log acceptance ratio (0 in Newton mode)
  double log_density = 0.0;  // target log-density at `next`
};

// One step of the Stochastic Newton Sampler. The proposal is the Gaussian
// fitted from the local Newton step: mu = x + (-H)^{-1} g and
// Sigma = (-H)^{-1}, with -H damped by the optimizer's lambda escalation
// when needed. rnd=false returns mu directly (a pure Newton step);
// rnd=true draws from the proposal and applies the Metropolis-Hastings
// correction with the reverse proposal fitted at the proposed point.
SnsStepResult sns_step(const Objective& objective, std::span<const double> current,
                       bool rnd, Rng& rng, double ridge0 = 1e-6);

// Runs a chain from `init`; deterministic given config.seed.
Chain run_chain(const Objective& objective, std::span<const double> init,
                const SnsConfig& config);

}  // namespace glmfab
