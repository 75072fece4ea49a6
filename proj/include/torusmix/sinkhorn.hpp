#pragma once

#include <cstdint>
#include <vector>

#include "torusmix/ot_exact.hpp"

namespace torusmix {

struct SinkhornOptions {
  double reg = 1e-3;
  double tol = 1e-9;  // max absolute marginal violation at termination
  std::int64_t max_iter = 200000;
  /// Anneal the regularization from ~cost scale down to `reg` (halving);
  /// markedly fewer iterations for reg much smaller than the cost spread.
  bool anneal = true;
  /// Plan entries below this mass are dropped from the reported support.
  double support_cutoff = 1e-15;
};

struct SinkhornSolution {
  double cost = 0.0;            // primal cost of the rounded feasible plan
  std::vector<PlanEntry> plan;  // support of the rounded plan
  std::int64_t iterations = 0;
  double marginal_violation = 0.0;  // before rounding
};

/// Log-domain Sinkhorn for min <pi, C> over couplings of (a, b), entropically
/// regularized. The returned plan is rounded to exact marginals, and `cost`
/// is the unregularized transport cost of that plan. Throws on
/// non-convergence within max_iter (reg too small for the arithmetic).
SinkhornSolution solve_sinkhorn(const std::vector<double>& a, const std::vector<double>& b,
                                const std::vector<double>& cost_matrix,
                                const SinkhornOptions& options = {});

}  // namespace torusmix
