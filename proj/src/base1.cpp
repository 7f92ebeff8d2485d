#include "glmfab/base1.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "glmfab/special.hpp"

namespace glmfab {

namespace {

constexpr double kHalfLogTwoPi = 0.91893853320467274178;

[[noreturn]] void response_error(const Family1& fam, std::size_t n, double y) {
  throw std::domain_error(std::string(family1_name(fam.id)) + ": response " +
                          std::to_string(y) + " at index " + std::to_string(n) +
                          " outside family domain");
}

bool is_nonneg_integer(double y) {
  return y >= 0.0 && std::isfinite(y) && y == std::floor(y);
}

double trials_at(const Family1& fam, std::size_t n) {
  if (fam.trials.empty()) return 1.0;
  return fam.trials.size() == 1 ? fam.trials[0] : fam.trials[n];
}

void check_inputs(const Family1& fam, std::span<const double> u,
                  std::span<const double> y) {
  if (u.size() != y.size())
    throw std::invalid_argument("eval_base1: length(u) != length(y)");
  if (fam.is_binomial()) {
    if (fam.trials.size() > 1 && fam.trials.size() != u.size())
      throw std::invalid_argument("eval_base1: trials vector length != N");
    for (std::size_t n = 0; n < u.size(); ++n) {
      const double t = trials_at(fam, n);
      if (!(t >= 1.0) || t != std::floor(t))
        throw std::domain_error("eval_base1: trials must be integers >= 1");
    }
  }
  for (std::size_t n = 0; n < u.size(); ++n) {
    if (!std::isfinite(u[n]))
      throw std::domain_error("eval_base1: non-finite predictor at index " +
                              std::to_string(n));
    const double yn = y[n];
    switch (fam.id) {
      case Family1Id::BinomialLogit:
      case Family1Id::BinomialProbit:
      case Family1Id::BinomialCauchit:
      case Family1Id::BinomialCloglog:
        if (!is_nonneg_integer(yn) || yn > trials_at(fam, n))
          response_error(fam, n, yn);
        break;
      case Family1Id::PoissonLog:
      case Family1Id::GeometricLogit:
        if (!is_nonneg_integer(yn)) response_error(fam, n, yn);
        break;
      case Family1Id::ExponentialLog:
        if (!(yn > 0.0) || !std::isfinite(yn)) response_error(fam, n, yn);
        break;
    }
  }
}

}  // namespace

const char* family1_name(Family1Id id) {
  switch (id) {
    case Family1Id::BinomialLogit: return "binomial-logit";
    case Family1Id::BinomialProbit: return "binomial-probit";
    case Family1Id::BinomialCauchit: return "binomial-cauchit";
    case Family1Id::BinomialCloglog: return "binomial-cloglog";
    case Family1Id::PoissonLog: return "poisson-log";
    case Family1Id::ExponentialLog: return "exponential-log";
    case Family1Id::GeometricLogit: return "geometric-logit";
  }
  return "?";
}

BaseEval1 eval_base1(const Family1& family, std::span<const double> u,
                     std::span<const double> y, EvalLevel level) {
  check_inputs(family, u, y);
  const std::size_t nobs = u.size();
  const bool want_g = level >= EvalLevel::FG;
  const bool want_h = level >= EvalLevel::FGH;

  BaseEval1 out;
  out.level = level;
  out.f.resize(nobs);
  if (want_g) out.g.resize(nobs);
  if (want_h) out.h.resize(nobs);

  for (std::size_t n = 0; n < nobs; ++n) {
    const double un = u[n];
    const double yn = y[n];
    double f = 0.0, g = 0.0, h = 0.0;

    switch (family.id) {
      case Family1Id::BinomialLogit: {
        const double t = trials_at(family, n);
        const double s = sigmoid(un);
        f = yn * un + t * log_sigmoid(-un);  // -t log(1+e^u)
        if (want_g) g = yn - t * s;
        if (want_h) h = -t * s * (1.0 - s);
        break;
      }
      case Family1Id::BinomialProbit: {
        const double t = trials_at(family, n);
        const double lp = log_std_normal_cdf(un);
        const double lq = log_std_normal_cdf(-un);
        f = yn * lp + (t - yn) * lq;
        if (want_g || want_h) {
          const double lphi = -0.5 * un * un - kHalfLogTwoPi;
          const double r = std::exp(lphi - lp);   // phi/Phi(u)
          const double s = std::exp(lphi - lq);   // phi/Phi(-u)
          if (want_g) g = yn * r - (t - yn) * s;
          if (want_h) h = -yn * (un * r + r * r) + (t - yn) * (un * s - s * s);
        }
        break;
      }
      case Family1Id::BinomialCauchit: {
        const double t = trials_at(family, n);
        // log G(u) and log G(-u) with the tail computed from atan(1/|u|) to
        // avoid cancellation in 0.5 - atan(|u|)/pi
        const auto log_cauchy_cdf = [](double v) {
          if (v < -1.0) return std::log(std::atan(-1.0 / v) / M_PI);
          return std::log(0.5 + std::atan(v) / M_PI);
        };
        const double lp = log_cauchy_cdf(un);
        const double lq = log_cauchy_cdf(-un);
        f = yn * lp + (t - yn) * lq;
        if (want_g || want_h) {
          const double dens = 1.0 / (M_PI * (1.0 + un * un));
          const double rp = dens / std::exp(lp);
          const double rq = dens / std::exp(lq);
          const double ddens = -2.0 * un * dens / (1.0 + un * un);
          if (want_g) g = yn * rp - (t - yn) * rq;
          if (want_h)
            h = yn * (ddens / std::exp(lp) - rp * rp) +
                (t - yn) * (-ddens / std::exp(lq) - rq * rq);
        }
        break;
      }
      case Family1Id::BinomialCloglog: {
        const double t = trials_at(family, n);
        const double ev = std::exp(un);
        // G = 1 - exp(-e^u); log(1-G) = -e^u
        const double log_g = ev > M_LN2 ? std::log1p(-std::exp(-ev))
                                        : std::log(-std::expm1(-ev));
        f = yn * log_g + (t - yn) * (-ev);
        if (want_g || want_h) {
          const double gcdf = -std::expm1(-ev);
          const double w = ev * std::exp(-ev) / gcdf;  // G'/G
          if (want_g) g = yn * w - (t - yn) * ev;
          if (want_h) h = yn * w * (1.0 - ev - w) - (t - yn) * ev;
        }
        break;
      }
      case Family1Id::PoissonLog: {
        const double mu = std::exp(un);
        f = yn * un - mu;
        if (want_g) g = yn - mu;
        if (want_h) h = -mu;
        break;
      }
      case Family1Id::ExponentialLog: {
        const double w = yn * std::exp(-un);
        f = -un - w;
        if (want_g) g = -1.0 + w;
        if (want_h) h = -w;
        break;
      }
      case Family1Id::GeometricLogit: {
        const double s = sigmoid(un);
        f = -(yn * un - (1.0 + yn) * log_sigmoid(un));  // -(yu + (1+y)log(1+e^{-u}))
        if (want_g) g = 1.0 - (1.0 + yn) * s;
        if (want_h) h = -(1.0 + yn) * s * (1.0 - s);
        break;
      }
    }

    out.f[n] = f;
    if (want_g) out.g[n] = g;
    if (want_h) out.h[n] = h;
  }
  return out;
}

}  // namespace glmfab
