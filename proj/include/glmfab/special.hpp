#pragma once

namespace glmfab {

// Scalar special functions used by the base distributions. All are overflow-
// safe on the stated ranges: the sigmoid pair up to |u| = 700, the normal-CDF
// log path down to u = -37 and beyond, the gamma family for x in
// [1e-3, 1e6]. Arguments outside a function's domain throw
// std::domain_error.

double sigmoid(double u);
double log_sigmoid(double u);

double std_normal_pdf(double u);
double std_normal_cdf(double u);
// Dedicated log-CDF path; switches from log(erfc-based CDF) to an
// asymptotic Mills-ratio series below u = -8 to avoid cancellation.
double log_std_normal_cdf(double u);

// Lanczos approximation (g = 7, nine coefficients); x > 0 required.
double log_gamma(double x);
// Recurrence shifts the argument above 6, then the asymptotic series.
double digamma(double x);
double trigamma(double x);

}  // namespace glmfab
