#pragma once

namespace glmfab {

// Incremental evaluation depth: value only, value + gradient, or value +
// gradient + Hessian. Higher levels never change how lower-level pieces are
// computed, so f is bit-identical across levels.
enum class EvalLevel { F = 0, FG = 1, FGH = 2 };

}  // namespace glmfab
