#include "glmfab/simulate.hpp"

#include <cmath>
#include <stdexcept>

#include "glmfab/model_spec.hpp"
#include "glmfab/special.hpp"

namespace glmfab {

double sample_exponential(Rng& rng, double mean) {
  return -mean * std::log(rng.uniform());
}

double sample_poisson(Rng& rng, double mean) {
  // Knuth's product-of-uniforms method; fine at desk-scale means
  const double limit = std::exp(-mean);
  double p = 1.0;
  double k = -1.0;
  do {
    p *= rng.uniform();
    k += 1.0;
  } while (p > limit);
  return k;
}

double sample_geometric(Rng& rng, double p) {
  // inversion: failures before the first success
  return std::floor(std::log(rng.uniform()) / std::log1p(-p));
}

double sample_binomial(Rng& rng, double trials, double p) {
  double successes = 0.0;
  for (double t = 0.0; t < trials; t += 1.0)
    if (rng.uniform() < p) successes += 1.0;
  return successes;
}

double sample_gamma(Rng& rng, double shape, double scale) {
  // Marsaglia-Tsang squeeze method
  if (shape < 1.0) {
    const double boost = std::pow(rng.uniform(), 1.0 / shape);
    return boost * sample_gamma(rng, shape + 1.0, scale);
  }
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    const double z = rng.normal();
    const double t = 1.0 + c * z;
    if (t <= 0.0) continue;
    const double v = t * t * t;
    const double u = rng.uniform();
    if (std::log(u) < 0.5 * z * z + d - d * v + d * std::log(v))
      return d * v * scale;
  }
}

double sample_inverse_gaussian(Rng& rng, double mean, double lambda) {
  // Michael-Schucany-Haas transform
  const double z = rng.normal();
  const double v = z * z;
  const double x = mean + mean * mean * v / (2.0 * lambda) -
                   mean / (2.0 * lambda) *
                       std::sqrt(4.0 * mean * lambda * v + mean * mean * v * v);
  if (rng.uniform() <= mean / (mean + x)) return x;
  return mean * mean / x;
}

SimulatedData simulate_dataset(const std::string& family, std::size_t n,
                               std::size_t k, std::uint64_t seed,
                               const std::vector<double>& beta_opt,
                               const std::vector<double>& gamma_opt,
                               double trials) {
  if (n == 0 || k == 0)
    throw std::invalid_argument("simulate: n and k must be >= 1");
  const FamilyId fid = parse_family(family);
  const bool two_par = std::holds_alternative<Family2Id>(fid);
  if (!beta_opt.empty() && beta_opt.size() != k)
    throw std::invalid_argument("simulate: beta length != k");
  if (!gamma_opt.empty() && (!two_par || gamma_opt.size() != k))
    throw std::invalid_argument("simulate: gamma given for one-parameter family or wrong length");

  Rng rng(seed);
  SimulatedData sim;
  sim.trials = trials;

  std::vector<std::vector<double>> x(k, std::vector<double>(n));
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t i = 0; i < n; ++i) x[j][i] = rng.uniform() - 0.5;

  sim.beta = beta_opt;
  if (sim.beta.empty()) {
    sim.beta.resize(k);
    for (double& b : sim.beta) b = rng.uniform() - 0.5;
  }
  if (two_par) {
    sim.gamma = gamma_opt;
    if (sim.gamma.empty()) {
      sim.gamma.resize(k);
      for (double& g : sim.gamma) g = rng.uniform() - 0.5;
    }
  }

  std::vector<double> y(n);
  for (std::size_t i = 0; i < n; ++i) {
    double u1 = 0.0;
    for (std::size_t j = 0; j < k; ++j) u1 += x[j][i] * sim.beta[j];
    double u2 = 0.0;
    if (two_par)
      for (std::size_t j = 0; j < k; ++j) u2 += x[j][i] * sim.gamma[j];

    if (two_par) {
      const auto id = std::get<Family2Id>(fid);
      switch (id) {
        case Family2Id::GaussianIdentityLog:
          // mean u1, variance e^{u2}
          y[i] = u1 + std::exp(0.5 * u2) * rng.normal();
          break;
        case Family2Id::GammaLogLog: {
          const double shape = std::exp(-u2);
          y[i] = sample_gamma(rng, shape, std::exp(u1) / shape);
          break;
        }
        case Family2Id::InverseGaussianLogLog:
          y[i] = sample_inverse_gaussian(rng, std::exp(u1), std::exp(-u2));
          break;
      }
    } else {
      const auto id = std::get<Family1Id>(fid);
      switch (id) {
        case Family1Id::BinomialLogit:
          y[i] = sample_binomial(rng, trials, sigmoid(u1));
          break;
        case Family1Id::BinomialProbit:
          y[i] = sample_binomial(rng, trials, std_normal_cdf(u1));
          break;
        case Family1Id::BinomialCauchit:
          y[i] = sample_binomial(rng, trials, 0.5 + std::atan(u1) / M_PI);
          break;
        case Family1Id::BinomialCloglog:
          y[i] = sample_binomial(rng, trials, -std::expm1(-std::exp(u1)));
          break;
        case Family1Id::PoissonLog:
          y[i] = sample_poisson(rng, std::exp(u1));
          break;
        case Family1Id::ExponentialLog:
          y[i] = sample_exponential(rng, std::exp(u1));
          break;
        case Family1Id::GeometricLogit:
          y[i] = sample_geometric(rng, sigmoid(u1));
          break;
      }
    }
  }

  for (std::size_t j = 0; j < k; ++j) {
    sim.columns.push_back("x" + std::to_string(j + 1));
    sim.data.push_back(std::move(x[j]));
  }
  sim.columns.push_back("y");
  sim.data.push_back(std::move(y));
  return sim;
}

}  // namespace glmfab
