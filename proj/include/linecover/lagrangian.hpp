#pragma once

#include <map>
#include <set>

#include "linecover/core.hpp"

namespace linecover {

// Nonnegative multipliers for the relaxed linking constraints x_i <= y_i,
// keyed by disc id.
using Multipliers = std::map<int, double>;

// Solution of the x-part of the relaxation:
//   min sum b_i x_i^2 + kappa_i x_i   s.t.  sum x_i = 1, x >= 0.
// With kappa sorted nondecreasing the support is a prefix {1..h}: h is the
// unique cut with kappa_h < lambda(h) <= kappa_{h+1} where
//   lambda(h) = (1 + sum_{i<=h} kappa_i/(2 b_i)) / sum_{i<=h} 1/(2 b_i),
// and x_i = (lambda - kappa_i)/(2 b_i) on the prefix, 0 elsewhere.
struct LrpPrimeSolution {
  std::map<int, double> x;  // over the free set, zeros included
  double lambda = 0.0;
  double value_x = 0.0;  // sum b_i x_i^2 + kappa_i x_i
  int active_prefix = 0;  // h: number of discs with x_i > 0
};

LrpPrimeSolution solve_lrp_prime(const Instance& unit,
                                 const std::set<int>& free_ids,
                                 const Multipliers& kappa);

// Full relaxation value at a search node: discs in forced_on always pay
// their setup cost and carry kappa = 0; free discs contribute
// (f_i - kappa_i) exactly when f_i < kappa_i (then y_i = 1, else y_i = 0).
// The value is a lower bound on the node subproblem for every kappa >= 0.
struct LrpSolution {
  std::map<int, double> x;  // over forced_on and free, zeros included
  std::map<int, int> y;     // over the free set only
  double lambda = 0.0;
  int active_prefix = 0;
  double value = 0.0;  // z_LRP(kappa)
};

LrpSolution lrp_value(const Instance& unit, const std::set<int>& forced_on,
                      const std::set<int>& free_ids,
                      const Multipliers& kappa);

}  // namespace linecover
