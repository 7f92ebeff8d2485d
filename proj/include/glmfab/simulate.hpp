#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "glmfab/rng.hpp"

namespace glmfab {

// Elementary samplers built on Rng; each consumes draws in a fixed order so
// output is reproducible given the seed.
double sample_exponential(Rng& rng, double mean);
double sample_poisson(Rng& rng, double mean);
double sample_geometric(Rng& rng, double p);           // failures before success
double sample_binomial(Rng& rng, double trials, double p);
double sample_gamma(Rng& rng, double shape, double scale);
double sample_inverse_gaussian(Rng& rng, double mean, double lambda);

// Simulated regression dataset: covariates uniform on [-0.5, 0.5],
// coefficients uniform on [-0.5, 0.5] unless supplied, responses from the
// family's generative model. Two-parameter families reuse the covariates for
// the dispersion predictor (u2 = X gamma).
struct SimulatedData {
  std::vector<std::string> columns;           // x1..xk, y
  std::vector<std::vector<double>> data;
  std::vector<double> beta;
  std::vector<double> gamma;                  // two-parameter families only
  double trials = 1.0;                        // binomial only
};

SimulatedData simulate_dataset(const std::string& family, std::size_t n,
                               std::size_t k, std::uint64_t seed,
                               const std::vector<double>& beta_opt = {},
                               const std::vector<double>& gamma_opt = {},
                               double trials = 1.0);

}  // namespace glmfab
