#include "glmfab/numderiv.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace glmfab {

namespace {

double probe(const ScalarFn& f, std::span<const double> x) {
  const double v = f(x);
  if (!std::isfinite(v)) {
    std::ostringstream msg;
    msg << "fd probe: non-finite objective at (";
    for (std::size_t i = 0; i < x.size(); ++i)
      msg << (i ? ", " : "") << x[i];
    msg << ")";
    throw std::runtime_error(msg.str());
  }
  return v;
}

}  // namespace

std::vector<double> fd_gradient(const ScalarFn& f, std::span<const double> x) {
  std::vector<double> p(x.begin(), x.end());
  std::vector<double> g(x.size(), 0.0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double h = 1e-6 * (1.0 + std::fabs(x[i]));
    const double xi = p[i];
    p[i] = xi + h;
    const double fp = probe(f, p);
    p[i] = xi - h;
    const double fm = probe(f, p);
    p[i] = xi;
    g[i] = (fp - fm) / (2.0 * h);
  }
  return g;
}

SymmetricMatrix fd_hessian(const ScalarFn& f, std::span<const double> x) {
  const std::size_t n = x.size();
  std::vector<double> p(x.begin(), x.end());
  SymmetricMatrix h(n);
  const double f0 = probe(f, p);
  std::vector<double> step(n);
  for (std::size_t i = 0; i < n; ++i) step[i] = 1e-4 * (1.0 + std::fabs(x[i]));

  for (std::size_t i = 0; i < n; ++i) {
    const double xi = p[i];
    p[i] = xi + step[i];
    const double fp = probe(f, p);
    p[i] = xi - step[i];
    const double fm = probe(f, p);
    p[i] = xi;
    h.at(i, i) = (fp - 2.0 * f0 + fm) / (step[i] * step[i]);
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      const double xi = p[i];
      const double xj = p[j];
      double fpp, fpm, fmp, fmm;
      p[i] = xi + step[i]; p[j] = xj + step[j]; fpp = probe(f, p);
      p[i] = xi + step[i]; p[j] = xj - step[j]; fpm = probe(f, p);
      p[i] = xi - step[i]; p[j] = xj + step[j]; fmp = probe(f, p);
      p[i] = xi - step[i]; p[j] = xj - step[j]; fmm = probe(f, p);
      p[i] = xi; p[j] = xj;
      h.at(i, j) = (fpp - fpm - fmp + fmm) / (4.0 * step[i] * step[j]);
    }
  }
  return h;
}

}  // namespace glmfab
