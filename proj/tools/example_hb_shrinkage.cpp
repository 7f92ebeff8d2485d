// Hierarchical Bayesian pooling of logistic-regression coefficients across
// groups: unpooled per-group MLE versus posterior modes under a shared
// normal prior. Emits the (unpooled, pooled) pairs as CSV for plotting and
// verifies the shrinkage pattern. GLMFAB_THREADS > 1 fits groups
// concurrently.
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <thread>
#include <vector>

#include "glmfab/csv.hpp"
#include "glmfab/optimize.hpp"
#include "glmfab/rng.hpp"
#include "glmfab/simulate.hpp"
#include "glmfab/sns.hpp"

using namespace glmfab;

namespace {

int failures = 0;

void check(bool ok, const char* what) {
  std::printf("  [%s] %s\n", ok ? "ok" : "FAIL", what);
  if (!ok) ++failures;
}

std::size_t thread_cap() {
  const char* env = std::getenv("GLMFAB_THREADS");
  if (!env) return 1;
  const long v = std::strtol(env, nullptr, 10);
  return v > 1 ? static_cast<std::size_t>(v) : 1;
}

}  // namespace

int main(int argc, char** argv) {
  const std::size_t J = 20, K = 5, N = 1000;
  const std::string csv_path = argc > 1 ? argv[1] : "shrinkage.csv";

  Rng rng(20250402);
  std::vector<double> mu_beta(K), sd_beta(K);
  for (double& v : mu_beta) v = rng.uniform() - 0.5;
  for (double& v : sd_beta) v = 0.5 + 0.5 * rng.uniform();

  // group coefficients pooled from N(mu_beta, sd_beta)
  std::vector<std::vector<double>> beta_true(J, std::vector<double>(K));
  for (std::size_t k = 0; k < K; ++k)
    for (std::size_t j = 0; j < J; ++j)
      beta_true[j][k] = mu_beta[k] + sd_beta[k] * rng.normal();

  std::vector<Objective> loglikes;
  loglikes.reserve(J);
  for (std::size_t j = 0; j < J; ++j) {
    Matrix x(N, K);
    std::vector<double> y(N);
    for (std::size_t kk = 0; kk < K; ++kk)
      for (std::size_t i = 0; i < N; ++i) x(i, kk) = rng.uniform() - 0.5;
    for (std::size_t i = 0; i < N; ++i) {
      double u = 0.0;
      for (std::size_t kk = 0; kk < K; ++kk) u += x(i, kk) * beta_true[j][kk];
      y[i] = rng.uniform() < 1.0 / (1.0 + std::exp(-u)) ? 1.0 : 0.0;
    }
    loglikes.push_back(
        make_objective(RegressionData(std::move(x), std::move(y)),
                       Family1::binomial_logit(1.0)));
  }

  // groups are conditionally independent given the hyperparameters, so the
  // per-group fits can run on separate threads
  std::vector<std::vector<double>> unpooled(J), pooled(J);
  const std::vector<double> zeros(K, 0.0);
  const auto fit_group = [&](std::size_t j) {
    unpooled[j] = newton_maximize(loglikes[j], zeros).coefficients.beta;
    const Objective post = with_gaussian_prior(loglikes[j], mu_beta, sd_beta);
    SnsConfig cfg;
    cfg.rnd = false;
    cfg.nsmp = 40;
    cfg.seed = 100 + j;
    pooled[j] = run_chain(post, zeros, cfg).post_mean();
  };

  const std::size_t threads = std::min(thread_cap(), J);
  if (threads <= 1) {
    for (std::size_t j = 0; j < J; ++j) fit_group(j);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t)
      pool.emplace_back([&, t] {
        for (std::size_t j = t; j < J; j += threads) fit_group(j);
      });
    for (auto& th : pool) th.join();
  }

  {
    std::ofstream out(csv_path);
    std::vector<std::string> cols = {"group", "coef", "unpooled", "pooled"};
    std::vector<std::vector<double>> data(4);
    for (std::size_t j = 0; j < J; ++j)
      for (std::size_t k = 0; k < K; ++k) {
        data[0].push_back(static_cast<double>(j + 1));
        data[1].push_back(static_cast<double>(k + 1));
        data[2].push_back(unpooled[j][k]);
        data[3].push_back(pooled[j][k]);
      }
    write_csv(out, cols, data);
  }
  std::printf("wrote %zu coefficient pairs to %s\n", J * K, csv_path.c_str());

  // shrinkage: pooled estimates vary less than unpooled in every dimension
  bool variance_reduced = true;
  for (std::size_t k = 0; k < K; ++k) {
    double mu_u = 0, mu_p = 0;
    for (std::size_t j = 0; j < J; ++j) {
      mu_u += unpooled[j][k];
      mu_p += pooled[j][k];
    }
    mu_u /= J;
    mu_p /= J;
    double var_u = 0, var_p = 0;
    for (std::size_t j = 0; j < J; ++j) {
      var_u += (unpooled[j][k] - mu_u) * (unpooled[j][k] - mu_u);
      var_p += (pooled[j][k] - mu_p) * (pooled[j][k] - mu_p);
    }
    std::printf("  coef %zu: unpooled var %.5f, pooled var %.5f\n", k + 1,
                var_u / (J - 1), var_p / (J - 1));
    if (!(var_p <= var_u)) variance_reduced = false;
  }
  check(variance_reduced, "pooled variance <= unpooled variance in every dimension");

  // least-squares slope of pooled on unpooled across all pairs
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double m = static_cast<double>(J * K);
  for (std::size_t j = 0; j < J; ++j)
    for (std::size_t k = 0; k < K; ++k) {
      sx += unpooled[j][k];
      sy += pooled[j][k];
      sxx += unpooled[j][k] * unpooled[j][k];
      sxy += unpooled[j][k] * pooled[j][k];
    }
  const double slope = (sxy - sx * sy / m) / (sxx - sx * sx / m);
  std::printf("  pooled-vs-unpooled slope = %.4f\n", slope);
  check(slope > 0.0 && slope < 1.0, "shrinkage slope strictly inside (0,1)");

  return failures == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
