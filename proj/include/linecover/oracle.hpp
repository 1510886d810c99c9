#pragma once

#include "linecover/core.hpp"

namespace linecover {

// Exact reference solver: enumerates every nonempty subset of discs and
// scores it with the closed-form restricted cost. Exponential in q, intended
// for verification only; ties are broken toward the lexicographically
// smallest id set.
CoverPlan solve_brute_force(const Instance& instance, int max_q = 25);

}  // namespace linecover
