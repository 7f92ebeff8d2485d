// glmfab: composable GLM log-likelihoods, exact derivatives, Newton fits,
// Stochastic Newton sampling, concavity checks and micro-benchmarks.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "glmfab/commands.hpp"

namespace {

void write_output(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot open output file '" + path + "'");
  out << text;
}

struct ModelFlags {
  std::string family;
  std::string data_path;
  std::string response;
  std::vector<std::string> covariates;
  std::vector<std::string> disp_covariates;
  std::string trials;
  double prior_mean = 0.0;
  double prior_sd = 0.0;
  bool block_diag = false;
  bool intercept = false;
  bool disp_intercept = false;

  void attach(CLI::App* cmd) {
    cmd->add_option("--family", family, "family identifier")->required();
    cmd->add_option("--data", data_path, "input CSV path")->required();
    cmd->add_option("--response", response, "response column")->required();
    cmd->add_option("--covariates", covariates, "mean covariate columns")
        ->required()
        ->delimiter(',');
    cmd->add_option("--dispersion-covariates", disp_covariates,
                    "dispersion covariate columns")
        ->delimiter(',');
    cmd->add_option("--trials", trials, "binomial trials: count or column");
    cmd->add_option("--prior-mean", prior_mean, "normal prior mean");
    cmd->add_option("--prior-sd", prior_sd, "normal prior sd (enables the prior)");
    cmd->add_flag("--block-diag", block_diag, "zero the cross-derivative blocks");
    cmd->add_flag("--intercept,!--no-intercept", intercept,
                  "leading ones column in the mean slot");
    cmd->add_flag("--dispersion-intercept", disp_intercept,
                  "leading ones column in the dispersion slot");
  }

  glmfab::ModelSpec spec() const {
    glmfab::ModelSpec s;
    s.family = family;
    s.response = response;
    s.covariates = covariates;
    s.disp_covariates = disp_covariates;
    s.intercept = intercept;
    s.disp_intercept = disp_intercept;
    s.trials = trials;
    if (prior_sd != 0.0) {
      s.prior_mean = prior_mean;
      s.prior_sd = prior_sd;
    }
    s.block_diag = block_diag;
    return s;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"GLM log-likelihood factory: fit, sample, check, simulate, bench"};
  app.require_subcommand(1);

  ModelFlags fit_flags, sample_flags, check_flags;
  std::string fit_out, sample_out, check_out;

  auto* fit = app.add_subcommand("fit", "Newton maximum-likelihood / posterior fit");
  fit_flags.attach(fit);
  fit->add_option("--out", fit_out, "output JSON path (default stdout)");

  auto* sample = app.add_subcommand("sample", "Stochastic Newton Sampler");
  sample_flags.attach(sample);
  std::size_t nsmp = 1000, burn_in = 0;
  std::uint64_t sample_seed = 0;
  bool rnd = false;
  std::string chain_out;
  sample->add_option("--nsmp", nsmp, "number of MCMC samples");
  sample->add_option("--burn-in", burn_in, "burn-in count (default nsmp/2)");
  sample->add_flag("--rnd", rnd, "stochastic mode (default: Newton mode)");
  sample->add_option("--seed", sample_seed, "RNG seed")->required();
  sample->add_option("--out", sample_out, "output JSON path (default stdout)");
  sample->add_option("--chain-out", chain_out, "full chain CSV path");

  auto* check = app.add_subcommand("check", "derivative, concavity and rank audit");
  check_flags.attach(check);
  std::vector<double> at;
  check->add_option("--at", at, "coefficient point (default zeros)")->delimiter(',');
  check->add_option("--out", check_out, "output JSON path (default stdout)");

  auto* simulate = app.add_subcommand("simulate", "draw a dataset from a family");
  std::string sim_family, sim_out, sim_coeff_out;
  std::size_t sim_n = 0, sim_k = 0;
  std::uint64_t sim_seed = 0;
  std::vector<double> sim_beta, sim_gamma;
  double sim_trials = 1.0;
  simulate->add_option("--family", sim_family, "family identifier")->required();
  simulate->add_option("--n", sim_n, "observations")->required();
  simulate->add_option("--k", sim_k, "covariates")->required();
  simulate->add_option("--seed", sim_seed, "RNG seed")->required();
  simulate->add_option("--beta", sim_beta, "mean coefficients")->delimiter(',');
  simulate->add_option("--gamma", sim_gamma, "dispersion coefficients")->delimiter(',');
  simulate->add_option("--trials", sim_trials, "binomial trials");
  simulate->add_option("--out", sim_out, "CSV path (default stdout)");
  simulate->add_option("--coeff-out", sim_coeff_out,
                       "sidecar JSON path (default <out>.coeff.json)");

  auto* bench = app.add_subcommand("bench", "time the expander under a layout");
  std::string bench_layout;
  std::size_t bench_n = 0, bench_k = 0, bench_reps = 0;
  bench->add_option("--layout", bench_layout, "row or col")->required();
  bench->add_option("--n", bench_n, "observations")->required();
  bench->add_option("--k", bench_k, "covariates")->required();
  bench->add_option("--reps", bench_reps, "repetitions")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (fit->parsed()) {
      const glmfab::Dataset ds = glmfab::load_csv(fit_flags.data_path);
      write_output(glmfab::run_fit(fit_flags.spec(), ds), fit_out);
    } else if (sample->parsed()) {
      const glmfab::Dataset ds = glmfab::load_csv(sample_flags.data_path);
      glmfab::SnsConfig cfg;
      cfg.rnd = rnd;
      cfg.nsmp = nsmp;
      cfg.burn_in = burn_in;
      cfg.seed = sample_seed;
      const glmfab::SampleOutput out =
          glmfab::run_sample(sample_flags.spec(), ds, cfg, !chain_out.empty());
      write_output(out.json, sample_out);
      if (!chain_out.empty()) write_output(out.chain_csv, chain_out);
    } else if (check->parsed()) {
      const glmfab::Dataset ds = glmfab::load_csv(check_flags.data_path);
      write_output(glmfab::run_check(check_flags.spec(), ds, at), check_out);
    } else if (simulate->parsed()) {
      const glmfab::SimulateOutput out = glmfab::run_simulate(
          sim_family, sim_n, sim_k, sim_seed, sim_beta, sim_gamma, sim_trials);
      write_output(out.csv, sim_out);
      if (sim_coeff_out.empty() && !sim_out.empty() && sim_out != "-")
        sim_coeff_out = sim_out + ".coeff.json";
      if (!sim_coeff_out.empty()) write_output(out.coeff_json, sim_coeff_out);
    } else if (bench->parsed()) {
      write_output(glmfab::run_bench(bench_layout, bench_n, bench_k, bench_reps), "");
    }
  } catch (const std::exception& e) {
    std::cerr << glmfab::error_json(e) << "\n";
    return glmfab::exit_code_for(e);
  }
  return 0;
}
