#include "glmfab/commands.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "glmfab/concavity.hpp"
#include "glmfab/json_writer.hpp"
#include "glmfab/numderiv.hpp"
#include "glmfab/simulate.hpp"

namespace glmfab {

namespace {

Json named_values(const std::vector<std::string>& names,
                  std::span<const double> values) {
  Json obj = Json::object();
  for (std::size_t i = 0; i < names.size(); ++i)
    obj.add(names[i], Json::real(values[i]));
  return obj;
}

Json certificate_json(const ConcavityCertificate& cert) {
  Json obj = Json::object();
  obj.add("verdict", Json::str(verdict_name(cert.verdict)));
  obj.add("evidence", Json::str(cert.evidence));
  if (cert.rank > 0) obj.add("rank", Json::integer(static_cast<long long>(cert.rank)));
  return obj;
}

Json rank_json(const RankReport& r) {
  Json obj = Json::object();
  obj.add("rank", Json::integer(static_cast<long long>(r.rank)));
  obj.add("full_rank", Json::boolean(r.full_rank));
  return obj;
}

}  // namespace

std::string run_fit(const ModelSpec& spec, const Dataset& ds,
                    const NewtonConfig& config) {
  const BoundModel model = bind_model(spec, ds);
  const Objective obj = model.objective();
  const std::vector<double> init(obj.dim, 0.0);
  const FitResult fit = newton_maximize(obj, init, config);

  Json out = Json::object();
  out.add("command", Json::str("fit"));
  out.add("family", Json::str(spec.family));
  out.add("coefficients", named_values(model.coef_names, fit.coefficients.beta));
  if (!model.disp_coef_names.empty())
    out.add("dispersion_coefficients",
            named_values(model.disp_coef_names, fit.coefficients.gamma));
  out.add("loglik", Json::real(fit.loglik));
  out.add("grad_norm", Json::real(fit.grad_norm));
  out.add("iterations", Json::integer(fit.iterations));
  out.add("converged", Json::boolean(fit.converged));
  out.add("damping_used", Json::boolean(fit.damping_used));
  out.add("certificate", certificate_json(fit.certificate));
  return out.dump();
}

SampleOutput run_sample(const ModelSpec& spec, const Dataset& ds,
                        const SnsConfig& config, bool want_chain_csv) {
  const BoundModel model = bind_model(spec, ds);
  const Objective obj = model.objective();
  const std::vector<double> init(obj.dim, 0.0);
  const Chain chain = run_chain(obj, init, config);

  const std::vector<double> mean = chain.post_mean();
  const std::vector<double> sd = chain.post_sd();
  const std::size_t k1 = model.coef_names.size();

  Json out = Json::object();
  out.add("command", Json::str("sample"));
  out.add("family", Json::str(spec.family));
  out.add("rnd", Json::boolean(config.rnd));
  out.add("nsmp", Json::integer(static_cast<long long>(config.nsmp)));
  out.add("burn_in", Json::integer(static_cast<long long>(chain.burn_in)));
  out.add("seed", Json::integer(static_cast<long long>(chain.seed)));
  out.add("acceptance_rate", Json::real(chain.acceptance_rate()));
  out.add("coefficients_mean",
          named_values(model.coef_names, std::span(mean).subspan(0, k1)));
  out.add("coefficients_sd",
          named_values(model.coef_names, std::span(sd).subspan(0, k1)));
  if (!model.disp_coef_names.empty()) {
    out.add("dispersion_coefficients_mean",
            named_values(model.disp_coef_names, std::span(mean).subspan(k1)));
    out.add("dispersion_coefficients_sd",
            named_values(model.disp_coef_names, std::span(sd).subspan(k1)));
  }

  SampleOutput result;
  result.json = out.dump();
  if (want_chain_csv) {
    std::vector<std::string> cols = model.coef_names;
    for (const auto& n : model.disp_coef_names) cols.push_back("disp_" + n);
    cols.push_back("log_density");
    cols.push_back("accepted");
    std::vector<std::vector<double>> data(cols.size());
    for (std::size_t r = 0; r < chain.samples.rows(); ++r) {
      for (std::size_t j = 0; j < chain.samples.cols(); ++j)
        data[j].push_back(chain.samples(r, j));
      data[chain.samples.cols()].push_back(chain.log_density[r]);
      data[chain.samples.cols() + 1].push_back(chain.accepted[r] ? 1.0 : 0.0);
    }
    std::ostringstream os;
    write_csv(os, cols, data);
    result.chain_csv = os.str();
  }
  return result;
}

std::string run_check(const ModelSpec& spec, const Dataset& ds,
                      const std::vector<double>& at) {
  const BoundModel model = bind_model(spec, ds);
  const Objective obj = model.objective();
  std::vector<double> point(obj.dim, 0.0);
  if (!at.empty()) {
    if (at.size() != obj.dim)
      throw std::invalid_argument("check: point length != coefficient count");
    point = at;
  }

  const EvalBundle bundle = obj.eval(point, EvalLevel::FGH);
  const auto scalar = [&obj](std::span<const double> x) {
    return obj.eval(x, EvalLevel::F).f;
  };
  const std::vector<double> fd_g = fd_gradient(scalar, point);
  const SymmetricMatrix fd_h = fd_hessian(scalar, point);

  double grad_err = 0.0;
  for (std::size_t i = 0; i < obj.dim; ++i)
    grad_err = std::max(grad_err, std::fabs((*bundle.g)[i] - fd_g[i]) /
                                      (1.0 + std::fabs(fd_g[i])));
  double hess_err = 0.0;
  for (std::size_t i = 0; i < obj.dim; ++i)
    for (std::size_t j = 0; j <= i; ++j)
      hess_err = std::max(hess_err, std::fabs((*bundle.h)(i, j) - fd_h(i, j)) /
                                        (1.0 + std::fabs(fd_h(i, j))));

  Json fd = Json::object();
  fd.add("grad_max_err", Json::real(grad_err));
  fd.add("hess_max_err", Json::real(hess_err));
  fd.add("grad_ok", Json::boolean(grad_err <= 1e-5));
  fd.add("hess_ok", Json::boolean(hess_err <= 1e-4));

  // base-space concavity probed at the model's own predictors
  const std::size_t k1 = model.coef_names.size();
  const std::vector<double> beta(point.begin(),
                                 point.begin() + static_cast<std::ptrdiff_t>(k1));
  const std::vector<double> u1 = mat_vec(model.data.x, beta);
  ConcavityVerdict base_verdict;
  if (model.family1) {
    base_verdict = base_concavity_1par(*model.family1, u1, model.data.y);
  } else {
    const std::vector<double> gamma(point.begin() + static_cast<std::ptrdiff_t>(k1),
                                    point.end());
    const std::vector<double> u2 = mat_vec(*model.data.z, gamma);
    base_verdict = base_concavity_2par(*model.family2, u1, u2, model.data.y);
  }

  Json ranks = Json::object();
  ranks.add("mean", rank_json(design_full_rank(model.data.x)));
  if (model.data.z) ranks.add("dispersion", rank_json(design_full_rank(*model.data.z)));

  Json out = Json::object();
  out.add("command", Json::str("check"));
  out.add("family", Json::str(spec.family));
  out.add("point", named_values(model.coef_names, std::span(point).subspan(0, k1)));
  if (!model.disp_coef_names.empty())
    out.add("dispersion_point",
            named_values(model.disp_coef_names, std::span(point).subspan(k1)));
  out.add("fd", std::move(fd));
  out.add("base_concavity", Json::str(verdict_name(base_verdict)));
  out.add("design_rank", std::move(ranks));
  out.add("certificate", certificate_json(certify(bundle)));
  return out.dump();
}

SimulateOutput run_simulate(const std::string& family, std::size_t n, std::size_t k,
                            std::uint64_t seed, const std::vector<double>& beta,
                            const std::vector<double>& gamma, double trials) {
  const SimulatedData sim = simulate_dataset(family, n, k, seed, beta, gamma, trials);

  std::ostringstream os;
  write_csv(os, sim.columns, sim.data);

  Json coeff = Json::object();
  coeff.add("command", Json::str("simulate"));
  coeff.add("family", Json::str(family));
  coeff.add("n", Json::integer(static_cast<long long>(n)));
  coeff.add("k", Json::integer(static_cast<long long>(k)));
  coeff.add("seed", Json::integer(static_cast<long long>(seed)));
  if (family.rfind("binomial-", 0) == 0) coeff.add("trials", Json::real(sim.trials));
  Json betas = Json::object();
  for (std::size_t j = 0; j < sim.beta.size(); ++j)
    betas.add("x" + std::to_string(j + 1), Json::real(sim.beta[j]));
  coeff.add("beta", std::move(betas));
  if (!sim.gamma.empty()) {
    Json gammas = Json::object();
    for (std::size_t j = 0; j < sim.gamma.size(); ++j)
      gammas.add("x" + std::to_string(j + 1), Json::real(sim.gamma[j]));
    coeff.add("gamma", std::move(gammas));
  }

  return SimulateOutput{os.str(), coeff.dump()};
}

std::string run_bench(const std::string& layout, std::size_t n, std::size_t k,
                      std::size_t reps) {
  if (layout != "row" && layout != "col")
    throw std::invalid_argument("bench: layout must be 'row' or 'col'");
  if (reps == 0) throw std::invalid_argument("bench: reps must be >= 1");

  const SimulatedData sim = simulate_dataset("binomial-logit", n, k, 20240601);
  const Layout tag = layout == "row" ? Layout::RowMajor : Layout::ColMajor;
  Matrix x(n, k, tag);
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t i = 0; i < n; ++i) x(i, j) = sim.data[j][i];
  const RegressionData data(std::move(x), sim.data[k]);
  const Family1 fam = Family1::binomial_logit(1.0);

  double f_value = 0.0;
  std::vector<double> seconds(reps);
  for (std::size_t r = 0; r < reps; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    const EvalBundle b = expand_1par(sim.beta, data, fam, EvalLevel::FGH);
    const auto t1 = std::chrono::steady_clock::now();
    f_value = b.f;
    seconds[r] = std::chrono::duration<double>(t1 - t0).count();
  }
  std::vector<double> sorted = seconds;
  std::sort(sorted.begin(), sorted.end());
  const double median = sorted[sorted.size() / 2];
  double mean = 0.0;
  for (double s : seconds) mean += s;
  mean /= static_cast<double>(reps);

  Json out = Json::object();
  out.add("command", Json::str("bench"));
  out.add("layout", Json::str(layout));
  out.add("n", Json::integer(static_cast<long long>(n)));
  out.add("k", Json::integer(static_cast<long long>(k)));
  out.add("reps", Json::integer(static_cast<long long>(reps)));
  out.add("median_seconds", Json::real(median));
  out.add("mean_seconds", Json::real(mean));
  out.add("loglik", Json::real(f_value));
  return out.dump();
}

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const std::invalid_argument*>(&e) ||
      dynamic_cast<const std::domain_error*>(&e))
    return 2;
  return 3;
}

std::string error_json(const std::exception& e) {
  return "{\"error\": \"" + json_escape(e.what()) + "\"}";
}

}  // namespace glmfab
