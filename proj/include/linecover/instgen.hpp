#pragma once

#include <cstdint>
#include <set>

#include "linecover/core.hpp"

namespace linecover {

// Instance class descriptor (q, s, t, u):
//   q       number of discs,
//   amp_s   amplification factor on the variable-cost vector b,
//   setup_t factor deriving setup costs from b: f_{q-i+1} = setup_t * b_i,
//   config_u structural perturbation of the discs selected in the optimal
//            solution of the unperturbed instance (0 = none).
// The base class has b strictly increasing (b_i = i deterministically, or
// unit-mean random increments) and f strictly decreasing, so no disc
// dominates another.
struct ClassSpec {
  int q = 1;
  double amp_s = 1.0;
  double setup_t = 1.0;
  int config_u = 0;  // supported: 0, 1, 2, 3, 5
  std::uint64_t seed = 0;
  bool deterministic = true;
};

std::string class_name(const ClassSpec& spec);

Instance generate_instance(const ClassSpec& spec);

// Perturbs the discs in base_opt_S (the optimal selection of the u = 0
// instance): u=1 raises their b to max b, u=2 raises f to max f, u=3 lowers
// f to min f, u=5 raises both b and f to their maxima. u=0 is the identity.
Instance apply_u_config(const Instance& base, int u,
                        const std::set<int>& base_opt_S);

}  // namespace linecover
