#pragma once

#include <cstdint>
#include <vector>

namespace torusmix {

struct PlanEntry {
  std::uint32_t i = 0;
  std::uint32_t j = 0;
  double mass = 0.0;
};

struct TransportOptions {
  /// Entering tolerance on reduced costs, scaled by (1 + max|C|).
  double rc_eps_scale = 1e-12;
  /// Pivot cap; 0 selects an instance-size-dependent default.
  std::int64_t max_pivots = 0;
};

struct TransportSolution {
  double cost = 0.0;
  std::vector<PlanEntry> plan;  // basic arcs with positive flow
  std::vector<double> alpha;    // source potentials
  std::vector<double> beta;     // sink potentials, alpha_i + beta_j <= C_ij
  double dual_gap = 0.0;        // primal cost minus certified dual value
  std::int64_t pivots = 0;
};

/// Primal network simplex for the dense transportation problem
///   min sum_ij C[i*nt+j] x_ij   s.t.  sum_j x_ij = a_i, sum_i x_ij = b_j, x >= 0,
/// with sum a == sum b. Starts from the northwest-corner basis and prices
/// with a wrap-around block search; the leaving arc follows Cunningham's
/// rule to avoid cycling on degenerate (e.g. uniform-mass) instances.
/// The returned potentials are projected into exact dual feasibility, so
/// `dual_gap` is a certificate of optimality independent of the pivot path.
TransportSolution solve_transportation(const std::vector<double>& a, const std::vector<double>& b,
                                       const std::vector<double>& cost_matrix,
                                       const TransportOptions& options = {});

}  // namespace torusmix
