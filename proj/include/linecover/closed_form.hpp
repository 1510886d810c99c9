#pragma once

#include <functional>
#include <map>
#include <set>

#include "linecover/core.hpp"

namespace linecover {

// Optimal diameters for a fixed selected set S on the unit segment. The KKT
// conditions equalize marginal costs: 2*b_i*x_i = lambda for every i in S,
// hence x_i proportional to 1/b_i and
//   lambda = 1 / sum_{j in S} 1/(2*b_j),
//   z(S)   = sum_{i in S} f_i + 1 / sum_{i in S} 1/b_i.
struct RestrictedSolution {
  std::set<int> selected;
  std::map<int, double> x;  // positive, sums to 1
  double lambda = 0.0;      // equalized marginal cost
  double cost = 0.0;        // z(S)
};

RestrictedSolution solve_restricted(const Instance& unit,
                                    const std::set<int>& selected);

// z(S) alone, in O(|S|).
double restricted_cost(const Instance& unit, const std::set<int>& selected);

// CoverPlan for a fixed selected set, diameters from solve_restricted.
CoverPlan plan_from_selection(const Instance& unit,
                              const std::set<int>& selected);

// Identical-disc case: k copies at equal diameter 1/k cost
// F(k) = k*f + k*g(1/k), convex in k, so the best k in 1..q is found by
// binary search on the first k with F(k) <= F(k+1).
struct UniformSolution {
  long k = 1;              // number of discs used
  double diameter = 1.0;   // 1/k each
  double cost = 0.0;       // F(k)
};

UniformSolution solve_uniform(double f, double b, long q);
UniformSolution solve_uniform(double f,
                              const std::function<double(double)>& g, long q);

}  // namespace linecover
