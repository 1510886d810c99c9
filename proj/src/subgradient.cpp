#include "linecover/subgradient.hpp"

#include <cmath>
#include <limits>

namespace linecover {

namespace {

void check_params(const DualParams& p) {
  if (!(p.alpha0 > 0.0 && p.alpha0 < 2.0))
    throw InvalidArgument("alpha0 must lie in (0, 2)");
  if (p.max_iters < 1) throw InvalidArgument("max_iters must be >= 1");
  if (p.stall_patience < 1)
    throw InvalidArgument("stall_patience must be >= 1");
}

// Feasibility plus complementary slackness of the relaxed solution on the
// free discs; holding, the iterate is optimal for the node subproblem.
bool is_node_optimal(const LrpSolution& sol, const std::set<int>& free_ids,
                     const Multipliers& kappa) {
  for (int id : free_ids) {
    const double x = sol.x.at(id);
    const int y = sol.y.at(id);
    if (y == 0 && x > 0.0) return false;
    const double ki = kappa.count(id) ? kappa.at(id) : 0.0;
    if (std::abs(ki * (static_cast<double>(y) - x)) > Tolerances::kkt_residual)
      return false;
  }
  return true;
}

CoverPlan plan_from_x(const Instance& unit, const std::map<int, double>& x) {
  std::map<int, double> positive;
  for (const auto& [id, xi] : x)
    if (xi > 0.0) positive[id] = xi;
  return make_plan(unit, positive);
}

}  // namespace

DualResult optimize_dual(const Instance& unit, const std::set<int>& forced_on,
                         const std::set<int>& free_ids, double ub,
                         const DualParams& params,
                         const Multipliers& warm_start,
                         const DualObserver& observer) {
  check_params(params);
  if (free_ids.empty()) throw InvalidArgument("free set is empty");
  if (!std::isfinite(ub)) throw InvalidArgument("ub must be finite");

  Multipliers kappa;
  for (int id : free_ids) {
    const auto it = warm_start.find(id);
    kappa[id] = (it != warm_start.end()) ? std::max(0.0, it->second) : 0.0;
  }

  DualResult result;
  result.best_lb = -std::numeric_limits<double>::infinity();
  double alpha = params.alpha0;
  int stall = 0;

  for (int iter = 1; iter <= params.max_iters; ++iter) {
    const LrpSolution sol = lrp_value(unit, forced_on, free_ids, kappa);
    result.iterations = iter;
    const double z = sol.value;
    if (z > ub + 1e-6 * std::abs(ub))
      throw Error("dual bound exceeds the supplied upper bound: ub is not "
                  "valid for this subproblem");

    const bool improved =
        z > result.best_lb +
                Tolerances::improvement_abs * std::max(1.0, std::abs(result.best_lb));
    if (z > result.best_lb) {
      result.best_lb = z;
      result.best_kappa = kappa;
    }

    double step = 0.0;
    if (is_node_optimal(sol, free_ids, kappa)) {
      result.best_lb = std::max(result.best_lb, z);
      result.best_kappa = kappa;
      result.proven_optimal_plan = plan_from_x(unit, sol.x);
      result.best_solution = sol;
      if (observer) observer({iter, z, result.best_lb, alpha, step});
      return result;
    }
    if (ub - result.best_lb <= params.stop_gap * std::abs(ub)) {
      if (observer) observer({iter, z, result.best_lb, alpha, step});
      break;
    }

    double norm_sq = 0.0;
    std::map<int, double> sub;
    for (int id : free_ids) {
      const double s = sol.x.at(id) - static_cast<double>(sol.y.at(id));
      sub[id] = s;
      norm_sq += s * s;
    }
    if (norm_sq == 0.0) {
      if (observer) observer({iter, z, result.best_lb, alpha, step});
      break;
    }

    if (improved) {
      stall = 0;
    } else if (++stall >= params.stall_patience) {
      alpha *= 0.5;
      stall = 0;
    }

    step = alpha * (ub - result.best_lb) / norm_sq;
    if (observer) observer({iter, z, result.best_lb, alpha, step});
    for (int id : free_ids)
      kappa[id] = std::max(0.0, kappa[id] + step * sub[id]);
  }

  result.best_solution = lrp_value(unit, forced_on, free_ids, result.best_kappa);
  return result;
}

}  // namespace linecover
