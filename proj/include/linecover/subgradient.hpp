#pragma once

#include <functional>
#include <optional>
#include <set>

#include "linecover/lagrangian.hpp"

namespace linecover {

struct DualParams {
  double alpha0 = 1.95;     // initial step scale, in (0, 2)
  int max_iters = 300;
  int stall_patience = 20;  // halve alpha after this many stale iterations
  double stop_gap = 1e-9;   // stop when ub - lb <= stop_gap * |ub|
};

struct DualIterate {
  int iter = 0;
  double value = 0.0;    // z_LRP at the current multipliers
  double best_lb = 0.0;
  double alpha = 0.0;
  double step = 0.0;
};

using DualObserver = std::function<void(const DualIterate&)>;

struct DualResult {
  double best_lb = 0.0;
  Multipliers best_kappa;
  int iterations = 0;
  // Present only when some iterate was feasible and complementary for the
  // node subproblem; that solution is then optimal for the node.
  std::optional<CoverPlan> proven_optimal_plan;
  // Relaxation solution recomputed at best_kappa (branching works off this).
  LrpSolution best_solution;
};

// Maximizes z_LRP(kappa) over kappa >= 0 by projected subgradient ascent:
// direction s_i = x_i - y_i on the free discs, step alpha*(ub - lb)/|s|^2,
// alpha halved after stall_patience iterations without improvement.
// ub must be a valid upper bound on the node subproblem (from the
// heuristic); multipliers start from warm_start (missing ids -> 0).
DualResult optimize_dual(const Instance& unit, const std::set<int>& forced_on,
                         const std::set<int>& free_ids, double ub,
                         const DualParams& params,
                         const Multipliers& warm_start = {},
                         const DualObserver& observer = {});

}  // namespace linecover
