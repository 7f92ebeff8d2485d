#pragma once

#include <span>
#include <string>
#include <vector>

#include "glmfab/eval_level.hpp"

namespace glmfab {

enum class Family1Id {
  BinomialLogit,
  BinomialProbit,
  BinomialCauchit,
  BinomialCloglog,
  PoissonLog,
  ExponentialLog,
  GeometricLogit,
};

// Single-parameter base distribution: the per-observation log-density
// f(u; y) in linear-predictor space, with additive terms independent of u
// omitted. For binomial families `trials` holds the number of trials, either
// one shared value (broadcast) or one value per observation.
struct Family1 {
  Family1Id id;
  std::vector<double> trials;  // binomial only; empty means n = 1

  static Family1 binomial_logit(double n = 1.0) { return {Family1Id::BinomialLogit, {n}}; }
  static Family1 binomial_probit(double n = 1.0) { return {Family1Id::BinomialProbit, {n}}; }
  static Family1 binomial_cauchit(double n = 1.0) { return {Family1Id::BinomialCauchit, {n}}; }
  static Family1 binomial_cloglog(double n = 1.0) { return {Family1Id::BinomialCloglog, {n}}; }
  static Family1 poisson_log() { return {Family1Id::PoissonLog, {}}; }
  static Family1 exponential_log() { return {Family1Id::ExponentialLog, {}}; }
  static Family1 geometric_logit() { return {Family1Id::GeometricLogit, {}}; }

  bool is_binomial() const {
    return id == Family1Id::BinomialLogit || id == Family1Id::BinomialProbit ||
           id == Family1Id::BinomialCauchit || id == Family1Id::BinomialCloglog;
  }
};

const char* family1_name(Family1Id id);

// Per-observation values and derivatives. Vectors above the requested level
// stay empty; filled vectors share the input length.
struct BaseEval1 {
  std::vector<double> f;
  std::vector<double> g;  // df/du
  std::vector<double> h;  // d2f/du2 (the diagonal of the base Hessian)
  EvalLevel level = EvalLevel::F;
};

// Evaluates the base log-density and derivatives at each observation.
// Response domain errors name the offending index. Omitted additive
// constants (independent of u, recoverable by the caller): binomial
// log C(n,y); poisson -log y!; exponential and geometric omit nothing.
BaseEval1 eval_base1(const Family1& family, std::span<const double> u,
                     std::span<const double> y, EvalLevel level);

}  // namespace glmfab
