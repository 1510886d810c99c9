#pragma once

#include <set>

#include "linecover/subgradient.hpp"

namespace linecover {

// Discs that take a positive diameter in the relaxation at the given
// multipliers: the prefix of the free set in nondecreasing kappa order.
std::set<int> active_set_from_multipliers(const Instance& unit,
                                          const std::set<int>& free_ids,
                                          const Multipliers& kappa);

// Multiplier-seeded construction followed by add/drop local search.
// Starting from S = forced_on + active set, each sweep first tries to drop
// one disc (largest f first) and then to add one disc (smallest f first),
// accepting the first strict improvement of z(S). Discs in forced_on are
// never dropped, discs in forbidden never added. iter_cap < 0 means 2*q
// sweeps.
CoverPlan heuristic_solve(const Instance& unit, const std::set<int>& forced_on,
                          const std::set<int>& forbidden,
                          const Multipliers& kappa, int iter_cap = -1);

// Stand-alone upper bound for an instance of any length: a plain run at
// kappa = 0, a subgradient dual seeded with that bound, and a second run at
// the best multipliers; returns the better plan, denormalized.
CoverPlan solve_heuristic(const Instance& instance,
                          const DualParams& params = {});

}  // namespace linecover
