#pragma once

#include <functional>
#include <span>
#include <vector>

#include "glmfab/matrix.hpp"

namespace glmfab {

using ScalarFn = std::function<double(std::span<const double>)>;

// Central-difference gradient with per-coordinate step 1e-6 * (1 + |x_i|).
// Accuracy O(h^2). Throws std::runtime_error naming the probe point if f is
// non-finite there.
std::vector<double> fd_gradient(const ScalarFn& f, std::span<const double> x);

// Hessian from nested central differences of f alone (no analytic input),
// step 1e-4 * (1 + |x_i|). Accuracy O(h^2).
SymmetricMatrix fd_hessian(const ScalarFn& f, std::span<const double> x);

}  // namespace glmfab
