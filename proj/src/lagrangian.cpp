#include "linecover/lagrangian.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace linecover {

namespace {

void require_unit(const Instance& instance) {
  if (std::abs(instance.length - 1.0) > 1e-12)
    throw InvalidArgument("expected a unit-length instance");
}

struct WorkingDisc {
  int id;
  double b;
  double kappa;
};

// Shared kernel: sorts by (kappa, id), scans for the prefix cut, fills x.
// Returns index h of the last active disc (1-based).
struct KernelResult {
  std::vector<WorkingDisc> order;
  std::vector<double> x;  // aligned with order
  double lambda = 0.0;
  int h = 0;
  double value_x = 0.0;
};

KernelResult run_kernel(std::vector<WorkingDisc> discs) {
  std::sort(discs.begin(), discs.end(),
            [](const WorkingDisc& a, const WorkingDisc& b) {
              if (a.kappa != b.kappa) return a.kappa < b.kappa;
              return a.id < b.id;
            });
  const int n = static_cast<int>(discs.size());
  double inv2b = 0.0;      // sum 1/(2 b_i) over the prefix
  double kappa_term = 0.0;  // sum kappa_i/(2 b_i) over the prefix
  double lambda = 0.0;
  int h = 0;
  for (int k = 0; k < n; ++k) {
    inv2b += 0.5 / discs[k].b;
    kappa_term += 0.5 * discs[k].kappa / discs[k].b;
    const double lam = (1.0 + kappa_term) / inv2b;
    const double next_kappa = (k + 1 < n) ? discs[k + 1].kappa
                                          : std::numeric_limits<double>::infinity();
    if (discs[k].kappa < lam && lam <= next_kappa) {
      lambda = lam;
      h = k + 1;
      break;
    }
  }
  if (h == 0) throw Error("no feasible multiplier cut found");
  KernelResult res;
  res.lambda = lambda;
  res.h = h;
  res.x.assign(n, 0.0);
  for (int k = 0; k < h; ++k) {
    const double x = (lambda - discs[k].kappa) / (2.0 * discs[k].b);
    res.x[k] = x;
    res.value_x += discs[k].b * x * x + discs[k].kappa * x;
  }
  res.order = std::move(discs);
  return res;
}

double kappa_of(const Multipliers& kappa, int id) {
  const auto it = kappa.find(id);
  if (it == kappa.end()) return 0.0;
  if (it->second < 0.0)
    throw InvalidArgument("multiplier for disc " + std::to_string(id) +
                          " is negative");
  return it->second;
}

}  // namespace

LrpPrimeSolution solve_lrp_prime(const Instance& unit,
                                 const std::set<int>& free_ids,
                                 const Multipliers& kappa) {
  require_unit(unit);
  if (free_ids.empty()) throw InvalidArgument("free set is empty");
  std::vector<WorkingDisc> discs;
  discs.reserve(free_ids.size());
  for (int id : free_ids)
    discs.push_back({id, unit.at(id).b, kappa_of(kappa, id)});
  KernelResult res = run_kernel(std::move(discs));
  LrpPrimeSolution sol;
  sol.lambda = res.lambda;
  sol.value_x = res.value_x;
  sol.active_prefix = res.h;
  for (std::size_t k = 0; k < res.order.size(); ++k)
    sol.x[res.order[k].id] = res.x[k];
  return sol;
}

LrpSolution lrp_value(const Instance& unit, const std::set<int>& forced_on,
                      const std::set<int>& free_ids,
                      const Multipliers& kappa) {
  require_unit(unit);
  for (int id : forced_on)
    if (free_ids.count(id))
      throw InvalidArgument("disc " + std::to_string(id) +
                            " is both forced on and free");
  if (forced_on.empty() && free_ids.empty())
    throw InvalidArgument("no discs available");
  std::vector<WorkingDisc> discs;
  discs.reserve(forced_on.size() + free_ids.size());
  for (int id : forced_on) discs.push_back({id, unit.at(id).b, 0.0});
  for (int id : free_ids)
    discs.push_back({id, unit.at(id).b, kappa_of(kappa, id)});
  KernelResult res = run_kernel(std::move(discs));

  LrpSolution sol;
  sol.lambda = res.lambda;
  sol.active_prefix = res.h;
  for (std::size_t k = 0; k < res.order.size(); ++k)
    sol.x[res.order[k].id] = res.x[k];
  double value = res.value_x;
  for (int id : forced_on) value += unit.at(id).f;
  for (int id : free_ids) {
    const double f = unit.at(id).f;
    const double ki = kappa_of(kappa, id);
    if (f < ki) {
      sol.y[id] = 1;
      value += f - ki;
    } else {
      sol.y[id] = 0;
    }
  }
  sol.value = value;
  return sol;
}

}  // namespace linecover
