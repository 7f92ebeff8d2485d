#pragma once

#include <span>
#include <string>

#include "glmfab/base1.hpp"
#include "glmfab/base2.hpp"
#include "glmfab/expander.hpp"
#include "glmfab/matrix.hpp"

namespace glmfab {

enum class ConcavityVerdict {
  CertifiedNegativeDefinite,
  CertifiedBlockwiseOnly,
  NotCertified,
};

const char* verdict_name(ConcavityVerdict v);

// Certificate for an expanded Hessian or a base family. `evidence` records
// which premise held or failed; `rank` is the computed design-matrix column
// rank where one was computed (0 otherwise).
struct ConcavityCertificate {
  ConcavityVerdict verdict = ConcavityVerdict::NotCertified;
  std::string evidence;
  std::size_t rank = 0;
};

// Base-space concavity for single-parameter families: the family must be in
// the statically known log-concave catalog AND h < 0 at every probe point.
// Cauchit is not in the catalog and is never certified.
ConcavityVerdict base_concavity_1par(const Family1& family,
                                     std::span<const double> u_samples,
                                     std::span<const double> y_samples);

// Base-space check for two-parameter families at each probe via the 2x2
// Sylvester conditions (h11 < 0, h22 < 0, det > 0). Verdicts rest on the
// probe grid only: full Sylvester at all probes certifies, both diagonals
// negative certifies blockwise, anything else is not certified. The gaussian
// family has det = -(y-u1)^2 e^{-2 u2}/2 <= 0 and so certifies blockwise
// whenever some probe has y != u1.
ConcavityVerdict base_concavity_2par(const Family2& family,
                                     std::span<const double> u1_samples,
                                     std::span<const double> u2_samples,
                                     std::span<const double> y_samples);

struct RankReport {
  std::size_t rank = 0;
  bool full_rank = false;
};

// Column rank via pivoted Cholesky of X^t X with pivot tolerance
// 1e-10 * trace / K.
RankReport design_full_rank(const Matrix& x);

// Direct certificate: negative definite iff cholesky(-H) succeeds.
ConcavityCertificate certify(const EvalBundle& bundle);

}  // namespace glmfab
