#include "linecover/heuristic.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "linecover/closed_form.hpp"

namespace linecover {

namespace {

double improve_eps(double z) {
  return Tolerances::improvement_abs * std::max(1.0, std::abs(z));
}

}  // namespace

std::set<int> active_set_from_multipliers(const Instance& unit,
                                          const std::set<int>& free_ids,
                                          const Multipliers& kappa) {
  const LrpPrimeSolution sol = solve_lrp_prime(unit, free_ids, kappa);
  std::set<int> active;
  for (const auto& [id, x] : sol.x)
    if (x > 0.0) active.insert(id);
  return active;
}

CoverPlan heuristic_solve(const Instance& unit, const std::set<int>& forced_on,
                          const std::set<int>& forbidden,
                          const Multipliers& kappa, int iter_cap) {
  for (int id : forced_on)
    if (forbidden.count(id))
      throw InvalidArgument("disc " + std::to_string(id) +
                            " is both forced on and forbidden");
  std::set<int> free_ids;
  for (int id : unit.ids())
    if (!forced_on.count(id) && !forbidden.count(id)) free_ids.insert(id);
  if (forced_on.empty() && free_ids.empty())
    throw InvalidArgument("every disc is forbidden");

  std::set<int> selected = forced_on;
  if (!free_ids.empty())
    for (int id : active_set_from_multipliers(unit, free_ids, kappa))
      selected.insert(id);

  if (iter_cap < 0) iter_cap = 2 * unit.size();
  double z = restricted_cost(unit, selected);

  // Candidate orders: drops by f nonincreasing, adds by f nondecreasing,
  // ties broken by id.
  auto by_f_desc = [&](int a, int c) {
    const double fa = unit.at(a).f;
    const double fc = unit.at(c).f;
    if (fa != fc) return fa > fc;
    return a < c;
  };
  auto by_f_asc = [&](int a, int c) {
    const double fa = unit.at(a).f;
    const double fc = unit.at(c).f;
    if (fa != fc) return fa < fc;
    return a < c;
  };

  for (int sweep = 0; sweep < iter_cap; ++sweep) {
    bool moved = false;

    std::vector<int> droppable;
    for (int id : selected)
      if (!forced_on.count(id)) droppable.push_back(id);
    std::sort(droppable.begin(), droppable.end(), by_f_desc);
    for (int id : droppable) {
      if (selected.size() <= 1) break;
      std::set<int> trial = selected;
      trial.erase(id);
      const double zt = restricted_cost(unit, trial);
      if (zt < z - improve_eps(z)) {
        selected = std::move(trial);
        z = zt;
        moved = true;
        break;
      }
    }

    std::vector<int> addable;
    for (int id : free_ids)
      if (!selected.count(id)) addable.push_back(id);
    std::sort(addable.begin(), addable.end(), by_f_asc);
    for (int id : addable) {
      std::set<int> trial = selected;
      trial.insert(id);
      const double zt = restricted_cost(unit, trial);
      if (zt < z - improve_eps(z)) {
        selected = std::move(trial);
        z = zt;
        moved = true;
        break;
      }
    }

    if (!moved) break;
  }

  return plan_from_selection(unit, selected);
}

CoverPlan solve_heuristic(const Instance& instance, const DualParams& params) {
  auto [unit, scale] = normalize(instance);
  std::set<int> free_ids;
  for (int id : unit.ids()) free_ids.insert(id);

  CoverPlan best = heuristic_solve(unit, {}, {}, {});
  const DualResult dual =
      optimize_dual(unit, {}, free_ids, best.objective, params);
  if (dual.proven_optimal_plan &&
      dual.proven_optimal_plan->objective < best.objective)
    best = *dual.proven_optimal_plan;
  const CoverPlan reseeded = heuristic_solve(unit, {}, {}, dual.best_kappa);
  if (reseeded.objective < best.objective) best = reseeded;
  return denormalize(best, scale);
}

}  // namespace linecover
