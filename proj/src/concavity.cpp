#include "glmfab/concavity.hpp"

#include <cmath>
#include <stdexcept>

namespace glmfab {

const char* verdict_name(ConcavityVerdict v) {
  switch (v) {
    case ConcavityVerdict::CertifiedNegativeDefinite: return "certified-negative-definite";
    case ConcavityVerdict::CertifiedBlockwiseOnly: return "certified-blockwise-only";
    case ConcavityVerdict::NotCertified: return "not-certified";
  }
  return "?";
}

ConcavityVerdict base_concavity_1par(const Family1& family,
                                     std::span<const double> u_samples,
                                     std::span<const double> y_samples) {
  if (u_samples.empty() || u_samples.size() != y_samples.size())
    throw std::invalid_argument("base_concavity_1par: bad probe sets");
  if (family.id == Family1Id::BinomialCauchit) return ConcavityVerdict::NotCertified;

  const BaseEval1 eval = eval_base1(family, u_samples, y_samples, EvalLevel::FGH);
  for (double hn : eval.h)
    if (!(hn < 0.0)) return ConcavityVerdict::NotCertified;
  return ConcavityVerdict::CertifiedNegativeDefinite;
}

ConcavityVerdict base_concavity_2par(const Family2& family,
                                     std::span<const double> u1_samples,
                                     std::span<const double> u2_samples,
                                     std::span<const double> y_samples) {
  if (u1_samples.empty() || u1_samples.size() != u2_samples.size() ||
      u1_samples.size() != y_samples.size())
    throw std::invalid_argument("base_concavity_2par: bad probe sets");

  const BaseEval2 eval =
      eval_base2(family, u1_samples, u2_samples, y_samples, EvalLevel::FGH);
  bool diagonals_negative = true;
  bool dets_positive = true;
  for (std::size_t n = 0; n < eval.f.size(); ++n) {
    if (!(eval.h11[n] < 0.0) || !(eval.h22[n] < 0.0)) diagonals_negative = false;
    const double det = eval.h11[n] * eval.h22[n] - eval.h12[n] * eval.h12[n];
    if (!(det > 0.0)) dets_positive = false;
  }
  if (diagonals_negative && dets_positive)
    return ConcavityVerdict::CertifiedNegativeDefinite;
  if (diagonals_negative) return ConcavityVerdict::CertifiedBlockwiseOnly;
  return ConcavityVerdict::NotCertified;
}

RankReport design_full_rank(const Matrix& x) {
  if (x.rows() < 1 || x.cols() < 1)
    throw std::invalid_argument("design_full_rank: empty matrix");
  const std::size_t k = x.cols();
  const std::vector<double> ones(x.rows(), 1.0);
  const SymmetricMatrix gram = xt_diag_x(x, ones);
  double trace = 0.0;
  for (std::size_t i = 0; i < k; ++i) trace += gram(i, i);
  const double tol = 1e-10 * trace / static_cast<double>(k);
  const std::size_t rank = pivoted_cholesky_rank(gram, tol);
  return RankReport{rank, rank == k};
}

ConcavityCertificate certify(const EvalBundle& bundle) {
  if (!bundle.h)
    throw std::invalid_argument("certify: bundle carries no Hessian");
  const std::size_t dim = bundle.h->dim();
  SymmetricMatrix neg(dim);
  auto dst = neg.packed_mut();
  auto src = bundle.h->packed();
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] = -src[i];

  ConcavityCertificate cert;
  const CholeskyResult res = cholesky(neg);
  if (res.ok()) {
    cert.verdict = ConcavityVerdict::CertifiedNegativeDefinite;
    cert.evidence = "cholesky(-H) succeeded";
  } else {
    cert.verdict = ConcavityVerdict::NotCertified;
    cert.evidence = "cholesky(-H) failed at pivot " + std::to_string(res.failed_pivot);
  }
  return cert;
}

}  // namespace glmfab
