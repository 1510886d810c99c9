#include "linecover/branch_bound.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

#include "linecover/closed_form.hpp"

namespace linecover {

namespace {

struct SearchNode {
  std::set<int> forced_on;
  std::set<int> forced_off;
  Multipliers kappa;  // warm start from the parent
  double lb = -std::numeric_limits<double>::infinity();
  int depth = 0;
  long seq = 0;
};

// Best-first: smallest bound, then deepest, then creation order.
struct NodeOrder {
  bool operator()(const SearchNode& a, const SearchNode& b) const {
    if (a.lb != b.lb) return a.lb > b.lb;
    if (a.depth != b.depth) return a.depth < b.depth;
    return a.seq > b.seq;
  }
};

double fathom_threshold(double incumbent) {
  return incumbent * (1.0 - Tolerances::fathom_rel) - Tolerances::fathom_abs;
}

Multipliers without(const Multipliers& kappa, int id) {
  Multipliers out = kappa;
  out.erase(id);
  return out;
}

}  // namespace

std::optional<int> select_branch_variable(const LrpSolution& sol,
                                          const Multipliers& kappa,
                                          const std::set<int>& free_ids) {
  int tier1 = -1;
  double tier1_x = 0.0;
  int tier2 = -1;
  double tier2_score = 0.0;
  for (int id : free_ids) {
    const double x = sol.x.at(id);
    const int y = sol.y.at(id);
    const auto it = kappa.find(id);
    const double ki = (it != kappa.end()) ? it->second : 0.0;
    if (y == 0 && x > 0.0) {
      if (x > tier1_x || tier1 < 0) {
        tier1 = id;
        tier1_x = x;
      }
    } else if (y == 1 && x < 1.0 - 1e-12 && ki > 0.0) {
      const double score = ki * (1.0 - x);
      if (score > tier2_score || tier2 < 0) {
        tier2 = id;
        tier2_score = score;
      }
    }
  }
  if (tier1 >= 0) return tier1;
  if (tier2 >= 0) return tier2;
  return std::nullopt;
}

BnbResult solve_exact(const Instance& instance, const BnbParams& params) {
  validate(instance);
  if (!(params.time_limit_s > 0.0))
    throw InvalidArgument("time limit must be positive");
  const auto started = std::chrono::steady_clock::now();
  auto elapsed = [&] {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         started)
        .count();
  };

  auto [unit, scale] = normalize(instance);
  std::set<int> all_ids;
  for (int id : unit.ids()) all_ids.insert(id);

  BnbStats stats;
  CoverPlan incumbent;

  std::priority_queue<SearchNode, std::vector<SearchNode>, NodeOrder> open;
  long next_seq = 0;

  // A node-valid upper bound for the dual step size; also the incumbent
  // refresh. Forced discs always stay selected, so the plan is feasible for
  // the node subproblem.
  auto node_upper_bound = [&](const SearchNode& node,
                              const std::set<int>& free_ids,
                              const Multipliers& seed) {
    if (params.heuristic_at_nodes || node.depth == 0) {
      CoverPlan plan = heuristic_solve(unit, node.forced_on, node.forced_off,
                                       seed, params.heuristic_iter_cap);
      if (incumbent.entries.empty() || plan.objective < incumbent.objective)
        incumbent = plan;
      return plan.objective;
    }
    std::set<int> available = node.forced_on;
    available.insert(free_ids.begin(), free_ids.end());
    return restricted_cost(unit, available);
  };

  auto offer_incumbent = [&](const CoverPlan& plan) {
    if (incumbent.entries.empty() || plan.objective < incumbent.objective)
      incumbent = plan;
  };

  bool out_of_budget = false;
  long evaluated = 0;

  SearchNode root;
  root.seq = next_seq++;
  open.push(root);

  while (!open.empty()) {
    // The root is always processed so an incumbent exists even on timeout.
    if (evaluated > 0 &&
        (elapsed() > params.time_limit_s ||
         (params.node_limit > 0 && evaluated >= params.node_limit))) {
      out_of_budget = true;
      break;
    }
    SearchNode node = open.top();
    open.pop();
    const bool is_root = node.depth == 0;

    if (!is_root && !incumbent.entries.empty() &&
        node.lb >= fathom_threshold(incumbent.objective))
      continue;  // bound inherited from the parent already prunes

    ++evaluated;
    stats.max_depth = std::max(stats.max_depth, node.depth);

    std::set<int> free_ids;
    for (int id : all_ids)
      if (!node.forced_on.count(id) && !node.forced_off.count(id))
        free_ids.insert(id);

    if (free_ids.empty()) {
      // Every available disc is forced on: the node is a restricted problem.
      offer_incumbent(plan_from_selection(unit, node.forced_on));
      continue;
    }

    const double node_ub = node_upper_bound(node, free_ids, node.kappa);
    const DualParams& dual_params =
        is_root ? params.root_dual : params.node_dual;
    const DualResult dual = optimize_dual(unit, node.forced_on, free_ids,
                                          node_ub, dual_params, node.kappa);
    const double lb = std::max(node.lb, dual.best_lb);

    if (is_root) {
      stats.lb_root = dual.best_lb;
    }
    if (dual.proven_optimal_plan) offer_incumbent(*dual.proven_optimal_plan);
    if (params.heuristic_at_nodes && !dual.proven_optimal_plan) {
      CoverPlan reseeded = heuristic_solve(
          unit, node.forced_on, node.forced_off, dual.best_kappa,
          params.heuristic_iter_cap);
      offer_incumbent(reseeded);
    }
    if (is_root) stats.ub_root = incumbent.objective;
    if (params.observer)
      params.observer({evaluated - 1, node.depth, lb, dual.best_lb, node.lb,
                       incumbent.objective});

    if (dual.proven_optimal_plan) continue;  // node solved by its relaxation
    if (lb >= fathom_threshold(incumbent.objective)) continue;

    const std::optional<int> branch_id =
        select_branch_variable(dual.best_solution, dual.best_kappa, free_ids);
    if (!branch_id) {
      // Complementarity holds at the best multipliers: relaxation solution
      // is optimal for the node.
      std::map<int, double> positive;
      for (const auto& [id, x] : dual.best_solution.x)
        if (x > 0.0) positive[id] = x;
      offer_incumbent(make_plan(unit, positive));
      continue;
    }

    SearchNode on_child;
    on_child.forced_on = node.forced_on;
    on_child.forced_on.insert(*branch_id);
    on_child.forced_off = node.forced_off;
    on_child.kappa = without(dual.best_kappa, *branch_id);
    on_child.lb = lb;
    on_child.depth = node.depth + 1;
    on_child.seq = next_seq++;
    open.push(std::move(on_child));

    if (node.forced_on.size() + free_ids.size() > 1) {
      SearchNode off_child;
      off_child.forced_on = node.forced_on;
      off_child.forced_off = node.forced_off;
      off_child.forced_off.insert(*branch_id);
      off_child.kappa = without(dual.best_kappa, *branch_id);
      off_child.lb = lb;
      off_child.depth = node.depth + 1;
      off_child.seq = next_seq++;
      open.push(std::move(off_child));
    }
  }

  stats.nodes = std::max<long>(1, evaluated);
  stats.wall_time_s = elapsed();
  if (out_of_budget) {
    double open_min = incumbent.objective;
    while (!open.empty()) {
      open_min = std::min(open_min, open.top().lb);
      open.pop();
    }
    stats.best_bound = open_min;
  } else {
    stats.optimum = incumbent.objective;
    stats.best_bound = incumbent.objective;
  }
  stats.gap = (stats.ub_root > 0.0)
                  ? (stats.ub_root - stats.lb_root) / stats.ub_root
                  : 0.0;

  BnbResult result;
  result.plan = denormalize(incumbent, scale);
  result.stats = stats;
  return result;
}

}  // namespace linecover
