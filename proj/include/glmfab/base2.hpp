#pragma once

#include <span>
#include <vector>

#include "glmfab/eval_level.hpp"

namespace glmfab {

enum class Family2Id {
  GaussianIdentityLog,
  InverseGaussianLogLog,
  GammaLogLog,
};

// Two-parameter base distribution: f(u1, u2; y) with u1 the mean-link
// predictor and u2 the dispersion-link predictor.
struct Family2 {
  Family2Id id;

  static Family2 gaussian_identity_log() { return {Family2Id::GaussianIdentityLog}; }
  static Family2 inverse_gaussian_log_log() { return {Family2Id::InverseGaussianLogLog}; }
  static Family2 gamma_log_log() { return {Family2Id::GammaLogLog}; }
};

const char* family2_name(Family2Id id);

// Omitted additive constants (independent of u1 and u2): gaussian
// -log(2 pi)/2; inverse-gaussian -log(2 pi y^3)/2. Gamma omits nothing: its
// log Gamma(1/phi) and (1/phi - 1) log y terms depend on u2 and stay.

// Per-observation values, gradient pair and Hessian triple. The h columns
// are ordered (d2/du1^2, d2/du2^2, d2/du1du2) — the order the expander
// consumes them in for the XX, ZZ and XZ blocks.
struct BaseEval2 {
  std::vector<double> f;
  std::vector<double> g1, g2;        // df/du1, df/du2
  std::vector<double> h11, h22, h12; // second derivatives
  EvalLevel level = EvalLevel::F;
};

BaseEval2 eval_base2(const Family2& family, std::span<const double> u1,
                     std::span<const double> u2, std::span<const double> y,
                     EvalLevel level);

}  // namespace glmfab
