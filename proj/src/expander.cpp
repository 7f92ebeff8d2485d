#include "glmfab/expander.hpp"

#include <cmath>
#include <memory>
#include <stdexcept>
#include <utility>

namespace glmfab {

namespace {

constexpr double kLogTwoPi = 1.8378770664093454836;

double sum_ascending(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) s += x;
  return s;
}

}  // namespace

std::vector<double> Coefficients::packed() const {
  std::vector<double> p(beta);
  p.insert(p.end(), gamma.begin(), gamma.end());
  return p;
}

Coefficients Coefficients::unpack(std::span<const double> packed, std::size_t k1) {
  if (k1 > packed.size())
    throw std::invalid_argument("Coefficients::unpack: k1 exceeds packed length");
  Coefficients c;
  c.beta.assign(packed.begin(), packed.begin() + static_cast<std::ptrdiff_t>(k1));
  c.gamma.assign(packed.begin() + static_cast<std::ptrdiff_t>(k1), packed.end());
  return c;
}

RegressionData::RegressionData(Matrix x_in, std::vector<double> y_in)
    : RegressionData(std::move(x_in), std::nullopt, std::move(y_in)) {}

RegressionData::RegressionData(Matrix x_in, std::optional<Matrix> z_in,
                               std::vector<double> y_in)
    : x(std::move(x_in)), z(std::move(z_in)), y(std::move(y_in)) {
  if (x.rows() != y.size())
    throw std::invalid_argument("RegressionData: X.rows != length(y)");
  if (z && z->rows() != x.rows())
    throw std::invalid_argument("RegressionData: Z.rows != X.rows");
}

EvalBundle expand_1par(std::span<const double> beta, const RegressionData& data,
                       const Family1& family, EvalLevel level) {
  if (data.z)
    throw std::invalid_argument("expand_1par: data carries a dispersion matrix");
  if (beta.size() != data.x.cols())
    throw std::invalid_argument("expand_1par: length(beta) != X.cols");

  const std::vector<double> u = mat_vec(data.x, beta);
  const BaseEval1 base = eval_base1(family, u, data.y, level);

  EvalBundle out;
  out.level = level;
  out.f = sum_ascending(base.f);
  if (level >= EvalLevel::FG) out.g = matT_vec(data.x, base.g);
  if (level >= EvalLevel::FGH) out.h = xt_diag_x(data.x, base.h);
  return out;
}

EvalBundle expand_2par(const Coefficients& coeff, const RegressionData& data,
                       const Family2& family, EvalLevel level, bool block_diag) {
  const Matrix& x = data.x;
  const Matrix z = data.z ? *data.z : Matrix::ones_column(x.rows());
  const std::size_t k1 = x.cols();
  const std::size_t k2 = z.cols();
  if (coeff.beta.size() != k1 || coeff.gamma.size() != k2)
    throw std::invalid_argument("expand_2par: coefficient slots do not match X/Z");

  const std::vector<double> u1 = mat_vec(x, coeff.beta);
  const std::vector<double> u2 = mat_vec(z, coeff.gamma);
  const BaseEval2 base = eval_base2(family, u1, u2, data.y, level);

  EvalBundle out;
  out.level = level;
  out.f = sum_ascending(base.f);
  if (level >= EvalLevel::FG) {
    std::vector<double> g = matT_vec(x, base.g1);
    const std::vector<double> g2 = matT_vec(z, base.g2);
    g.insert(g.end(), g2.begin(), g2.end());
    out.g = std::move(g);
  }
  if (level >= EvalLevel::FGH) {
    SymmetricMatrix h(k1 + k2);
    const SymmetricMatrix hxx = xt_diag_x(x, base.h11);
    for (std::size_t i = 0; i < k1; ++i)
      for (std::size_t j = 0; j <= i; ++j) h.at(i, j) = hxx(i, j);
    const SymmetricMatrix hzz = xt_diag_x(z, base.h22);
    for (std::size_t i = 0; i < k2; ++i)
      for (std::size_t j = 0; j <= i; ++j) h.at(k1 + i, k1 + j) = hzz(i, j);
    if (!block_diag) {
      const Matrix hxz = xt_diag_z(x, base.h12, z);
      for (std::size_t k = 0; k < k1; ++k)
        for (std::size_t m = 0; m < k2; ++m) h.at(k1 + m, k) = hxz(k, m);
    }
    out.h = std::move(h);
  }
  return out;
}

EvalBundle merge(const EvalBundle& a, const EvalBundle& b) {
  if (a.level != b.level)
    throw std::invalid_argument("merge: bundles evaluated at different levels");
  EvalBundle out;
  out.level = a.level;
  out.f = a.f + b.f;
  if (a.level >= EvalLevel::FG) {
    if (a.g->size() != b.g->size())
      throw std::invalid_argument("merge: gradient dimensions differ");
    std::vector<double> g(*a.g);
    for (std::size_t i = 0; i < g.size(); ++i) g[i] += (*b.g)[i];
    out.g = std::move(g);
  }
  if (a.level >= EvalLevel::FGH) {
    if (a.h->dim() != b.h->dim())
      throw std::invalid_argument("merge: Hessian dimensions differ");
    SymmetricMatrix h(*a.h);
    auto dst = h.packed_mut();
    auto src = b.h->packed();
    for (std::size_t i = 0; i < dst.size(); ++i) dst[i] += src[i];
    out.h = std::move(h);
  }
  return out;
}

EvalBundle gaussian_log_prior(std::span<const double> beta,
                              std::span<const double> mu,
                              std::span<const double> sd, EvalLevel level) {
  const std::size_t k = beta.size();
  if (mu.size() != k || sd.size() != k)
    throw std::invalid_argument("gaussian_log_prior: mu/sd length != length(beta)");
  for (double s : sd)
    if (!(s > 0.0)) throw std::domain_error("gaussian_log_prior: sd must be > 0");

  EvalBundle out;
  out.level = level;
  double f = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    const double zi = (beta[i] - mu[i]) / sd[i];
    f += -0.5 * zi * zi - std::log(sd[i]);
  }
  out.f = f - 0.5 * static_cast<double>(k) * kLogTwoPi;
  if (level >= EvalLevel::FG) {
    std::vector<double> g(k);
    for (std::size_t i = 0; i < k; ++i) g[i] = -(beta[i] - mu[i]) / (sd[i] * sd[i]);
    out.g = std::move(g);
  }
  if (level >= EvalLevel::FGH) {
    SymmetricMatrix h(k);
    for (std::size_t i = 0; i < k; ++i) h.at(i, i) = -1.0 / (sd[i] * sd[i]);
    out.h = std::move(h);
  }
  return out;
}

EvalBundle gaussian_log_prior(std::span<const double> beta, double mu, double sd,
                              EvalLevel level) {
  const std::vector<double> mv(beta.size(), mu);
  const std::vector<double> sv(beta.size(), sd);
  return gaussian_log_prior(beta, mv, sv, level);
}

Objective make_objective(RegressionData data, Family1 family) {
  auto shared = std::make_shared<RegressionData>(std::move(data));
  auto fam = std::make_shared<Family1>(std::move(family));
  Objective obj;
  obj.dim = shared->x.cols();
  obj.mean_dim = obj.dim;
  obj.eval = [shared, fam](std::span<const double> coeff, EvalLevel level) {
    return expand_1par(coeff, *shared, *fam, level);
  };
  return obj;
}

Objective make_objective(RegressionData data, Family2 family, bool block_diag) {
  if (!data.z) data.z = Matrix::ones_column(data.x.rows());
  auto shared = std::make_shared<RegressionData>(std::move(data));
  Objective obj;
  obj.mean_dim = shared->x.cols();
  obj.dim = obj.mean_dim + shared->z->cols();
  const std::size_t k1 = obj.mean_dim;
  obj.eval = [shared, family, block_diag, k1](std::span<const double> coeff,
                                              EvalLevel level) {
    if (coeff.size() != shared->x.cols() + shared->z->cols())
      throw std::invalid_argument("objective: coefficient length mismatch");
    return expand_2par(Coefficients::unpack(coeff, k1), *shared, family, level,
                       block_diag);
  };
  return obj;
}

Objective with_gaussian_prior(Objective base, std::vector<double> mu,
                              std::vector<double> sd) {
  if (mu.size() == 1) mu.assign(base.dim, mu[0]);
  if (sd.size() == 1) sd.assign(base.dim, sd[0]);
  if (mu.size() != base.dim || sd.size() != base.dim)
    throw std::invalid_argument("with_gaussian_prior: hyperparameter length mismatch");
  Objective obj;
  obj.dim = base.dim;
  obj.mean_dim = base.mean_dim;
  obj.eval = [base = std::move(base), mu = std::move(mu),
              sd = std::move(sd)](std::span<const double> coeff, EvalLevel level) {
    return merge(base.eval(coeff, level), gaussian_log_prior(coeff, mu, sd, level));
  };
  return obj;
}

}  // namespace glmfab
