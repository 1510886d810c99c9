#include "linecover/oracle.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <vector>

#include "linecover/closed_form.hpp"

namespace linecover {

namespace {

// Depth-first enumeration over discs in ascending id order with running
// cost sums, so each subset is scored in O(1) amortized and the floating
// arithmetic matches restricted_cost exactly.
struct Enumerator {
  std::vector<DiscType> by_id;
  std::vector<int> current;
  std::vector<int> best;
  double best_cost = std::numeric_limits<double>::infinity();

  void recurse(std::size_t idx, double sum_f, double sum_inv_b) {
    if (idx == by_id.size()) {
      if (current.empty()) return;
      const double cost = sum_f + 1.0 / sum_inv_b;
      if (cost < best_cost ||
          (cost == best_cost &&
           std::lexicographical_compare(current.begin(), current.end(),
                                        best.begin(), best.end()))) {
        best_cost = cost;
        best = current;
      }
      return;
    }
    const DiscType& d = by_id[idx];
    current.push_back(d.id);
    recurse(idx + 1, sum_f + d.f, sum_inv_b + 1.0 / d.b);
    current.pop_back();
    recurse(idx + 1, sum_f, sum_inv_b);
  }
};

}  // namespace

CoverPlan solve_brute_force(const Instance& instance, int max_q) {
  validate(instance);
  if (instance.size() > max_q)
    throw InvalidArgument("brute force limited to q <= " +
                          std::to_string(max_q) + " discs, instance has " +
                          std::to_string(instance.size()));
  auto [unit, scale] = normalize(instance);

  Enumerator en;
  en.by_id = unit.discs;
  std::sort(en.by_id.begin(), en.by_id.end(),
            [](const DiscType& a, const DiscType& b) { return a.id < b.id; });
  en.recurse(0, 0.0, 0.0);

  const std::set<int> selected(en.best.begin(), en.best.end());
  return denormalize(plan_from_selection(unit, selected), scale);
}

}  // namespace linecover
