#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "glmfab/csv.hpp"
#include "glmfab/model_spec.hpp"
#include "glmfab/optimize.hpp"
#include "glmfab/sns.hpp"

namespace glmfab {

// Subcommand bodies, shared by the binary and the test suites so that the
// CLI output and the in-process library path are the same code.

std::string run_fit(const ModelSpec& spec, const Dataset& ds,
                    const NewtonConfig& config = {});

struct SampleOutput {
  std::string json;
  std::string chain_csv;  // full chain, written only on request
};
SampleOutput run_sample(const ModelSpec& spec, const Dataset& ds,
                        const SnsConfig& config, bool want_chain_csv = false);

std::string run_check(const ModelSpec& spec, const Dataset& ds,
                      const std::vector<double>& at = {});

struct SimulateOutput {
  std::string csv;
  std::string coeff_json;
};
SimulateOutput run_simulate(const std::string& family, std::size_t n, std::size_t k,
                            std::uint64_t seed, const std::vector<double>& beta = {},
                            const std::vector<double>& gamma = {}, double trials = 1.0);

std::string run_bench(const std::string& layout, std::size_t n, std::size_t k,
                      std::size_t reps);

// Exit-code mapping: 2 for spec/parse errors, 3 for numerical failures.
int exit_code_for(const std::exception& e);
std::string error_json(const std::exception& e);

}  // namespace glmfab
