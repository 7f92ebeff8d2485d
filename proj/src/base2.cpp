#include "glmfab/base2.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "glmfab/special.hpp"

namespace glmfab {

namespace {

[[noreturn]] void response_error(Family2Id id, std::size_t n, double y) {
  throw std::domain_error(std::string(family2_name(id)) + ": response " +
                          std::to_string(y) + " at index " + std::to_string(n) +
                          " outside family domain");
}

}  // namespace

const char* family2_name(Family2Id id) {
  switch (id) {
    case Family2Id::GaussianIdentityLog: return "gaussian-identity-log";
    case Family2Id::InverseGaussianLogLog: return "inverse-gaussian-log-log";
    case Family2Id::GammaLogLog: return "gamma-log-log";
  }
  return "?";
}

BaseEval2 eval_base2(const Family2& family, std::span<const double> u1,
                     std::span<const double> u2, std::span<const double> y,
                     EvalLevel level) {
  if (u1.size() != y.size() || u2.size() != y.size())
    throw std::invalid_argument("eval_base2: u1, u2 and y lengths must agree");
  const std::size_t nobs = y.size();
  for (std::size_t n = 0; n < nobs; ++n) {
    if (!std::isfinite(u1[n]) || !std::isfinite(u2[n]))
      throw std::domain_error("eval_base2: non-finite predictor at index " +
                              std::to_string(n));
    if (family.id != Family2Id::GaussianIdentityLog) {
      if (!(y[n] > 0.0) || !std::isfinite(y[n])) response_error(family.id, n, y[n]);
    } else if (!std::isfinite(y[n])) {
      response_error(family.id, n, y[n]);
    }
  }

  const bool want_g = level >= EvalLevel::FG;
  const bool want_h = level >= EvalLevel::FGH;
  BaseEval2 out;
  out.level = level;
  out.f.resize(nobs);
  if (want_g) { out.g1.resize(nobs); out.g2.resize(nobs); }
  if (want_h) { out.h11.resize(nobs); out.h22.resize(nobs); out.h12.resize(nobs); }

  for (std::size_t n = 0; n < nobs; ++n) {
    const double a = u1[n];
    const double b = u2[n];
    const double yn = y[n];
    double f = 0, g1 = 0, g2 = 0, h11 = 0, h22 = 0, h12 = 0;

    switch (family.id) {
      case Family2Id::GaussianIdentityLog: {
        // mean u1, variance e^{u2}
        const double prec = std::exp(-b);
        const double r = yn - a;
        const double q = prec * r * r;
        f = -0.5 * (b + q);
        if (want_g) {
          g1 = prec * r;
          g2 = -0.5 + 0.5 * q;
        }
        if (want_h) {
          h11 = -prec;
          h22 = -0.5 * q;
          h12 = -prec * r;
        }
        break;
      }
      case Family2Id::GammaLogLog: {
        // mean e^{u1}, dispersion e^{u2}, shape nu = e^{-u2}
        const double nu = std::exp(-b);
        const double w = yn * std::exp(-a);
        const double abase = -a - w;
        f = nu * abase - log_gamma(nu) + nu * std::log(nu) + (nu - 1.0) * std::log(yn);
        if (want_g) {
          const double d = abase + std::log(nu) + 1.0 - digamma(nu) + std::log(yn);
          g1 = nu * (w - 1.0);
          g2 = -nu * d;
          if (want_h) {
            h11 = -nu * w;
            h22 = nu * d + nu - nu * nu * trigamma(nu);
            h12 = -g1;
          }
        }
        break;
      }
      case Family2Id::InverseGaussianLogLog: {
        // mean e^{u1}, dispersion e^{u2}
        const double mu = std::exp(a);
        const double prec = std::exp(-b);
        const double r = yn - mu;
        const double q = r * r / (2.0 * mu * mu * yn);
        f = -0.5 * b - prec * q;
        if (want_g) {
          g1 = prec * r / (mu * mu);
          g2 = -0.5 + prec * q;
        }
        if (want_h) {
          h11 = -prec * (2.0 * yn - mu) / (mu * mu);
          h22 = -prec * q;
          h12 = -prec * r / (mu * mu);
        }
        break;
      }
    }

    out.f[n] = f;
    if (want_g) { out.g1[n] = g1; out.g2[n] = g2; }
    if (want_h) { out.h11[n] = h11; out.h22[n] = h22; out.h12[n] = h12; }
  }
  return out;
}

}  // namespace glmfab
