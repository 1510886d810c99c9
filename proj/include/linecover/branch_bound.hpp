#pragma once

#include <functional>
#include <optional>
#include <set>

#include "linecover/heuristic.hpp"
#include "linecover/subgradient.hpp"

namespace linecover {

struct BnbParams {
  DualParams root_dual{1.95, 300, 20, 1e-9};
  DualParams node_dual{1.95, 60, 20, 1e-9};
  double time_limit_s = 3600.0;
  long node_limit = 0;  // 0 means unlimited
  // Re-run the heuristic at every node with the node multipliers; when off,
  // interior nodes fall back to the all-available restricted cost for the
  // dual step size.
  bool heuristic_at_nodes = true;
  int heuristic_iter_cap = -1;
  std::function<void(const struct NodeEvent&)> observer;
};

struct NodeEvent {
  long index = 0;  // evaluation order, root is 0
  int depth = 0;
  double lb = 0.0;       // node bound after the dual solve (clamped to parent)
  double dual_lb = 0.0;  // raw dual bound at this node
  double parent_lb = 0.0;
  double incumbent = 0.0;
};

struct BnbStats {
  long nodes = 0;
  int max_depth = 0;
  double ub_root = 0.0;
  double lb_root = 0.0;
  double best_bound = 0.0;  // proven lower bound when the run stops
  std::optional<double> optimum;
  double gap = 0.0;  // (ub_root - lb_root) / ub_root
  double wall_time_s = 0.0;
};

struct BnbResult {
  CoverPlan plan;
  BnbStats stats;
};

// Two-tier branching rule on the relaxation solution: prefer a free disc
// with y = 0 but x > 0 (largest x), otherwise one with y = 1, x < 1 and
// kappa > 0 (largest kappa*(y - x)). No candidate means complementary
// slackness holds and the node is solved.
std::optional<int> select_branch_variable(const LrpSolution& sol,
                                          const Multipliers& kappa,
                                          const std::set<int>& free_ids);

// Exact best-first branch and bound on the selection variables, bounding
// each node by the subgradient dual of its relaxation and tightening the
// incumbent with the multiplier-seeded heuristic. On timeout or node limit
// the incumbent is returned with optimum absent.
BnbResult solve_exact(const Instance& instance, const BnbParams& params = {});

}  // namespace linecover
