#include <random>

#include "doctest.h"
#include "linecover/closed_form.hpp"
#include "linecover/heuristic.hpp"
#include "linecover/oracle.hpp"
#include "test_util.hpp"

using namespace linecover;
using testutil::det_base;
using testutil::make_unit;

namespace {

std::set<int> all_ids(const Instance& ins) {
  std::set<int> out;
  for (int id : ins.ids()) out.insert(id);
  return out;
}

}  // namespace

TEST_CASE("active_set_from_multipliers: prefix of the multiplier order") {
  const Instance two = make_unit({{0.0, 1.0}, {0.0, 1.0}});
  CHECK(active_set_from_multipliers(two, {1, 2}, {}) ==
        std::set<int>{1, 2});
  CHECK(active_set_from_multipliers(two, {1, 2}, {{1, 0.0}, {2, 10.0}}) ==
        std::set<int>{1});
  CHECK(active_set_from_multipliers(two, {1, 2}, {{1, 0.0}, {2, 1.0}}) ==
        std::set<int>{1, 2});

  const Instance ten = det_base(10, 1, 1);
  CHECK(active_set_from_multipliers(ten, all_ids(ten), {}) == all_ids(ten));
}

TEST_CASE("heuristic_solve: finds the base class optimum") {
  const Instance ins = det_base(10, 10, 1);

  const CoverPlan cold = heuristic_solve(ins, {}, {}, {});
  CHECK(cold.objective == doctest::Approx(77.368).epsilon(1e-4));
  CHECK(cold.selected_ids() == std::vector<int>{9, 10});

  // Seeded with the multipliers of the root dual.
  const DualResult dual =
      optimize_dual(ins, {}, all_ids(ins), cold.objective, {});
  const CoverPlan seeded = heuristic_solve(ins, {}, {}, dual.best_kappa);
  CHECK(seeded.objective == doctest::Approx(77.368).epsilon(1e-4));
  CHECK(seeded.selected_ids() == std::vector<int>{9, 10});
}

TEST_CASE("heuristic_solve: perturbed class and trivial instance") {
  const Instance perturbed = det_base(10, 10, 1, /*u=*/1);
  const CoverPlan plan = heuristic_solve(perturbed, {}, {}, {});
  CHECK(plan.objective == doctest::Approx(80.0).epsilon(1e-9));

  const Instance one = make_unit({{5.0, 2.0}});
  const CoverPlan single = heuristic_solve(one, {}, {}, {});
  CHECK(single.objective == doctest::Approx(7.0));
  CHECK(single.selected_ids() == std::vector<int>{1});
}

TEST_CASE("heuristic_solve: respects forced and forbidden discs") {
  const Instance ins = det_base(10, 10, 1);
  const CoverPlan forced = heuristic_solve(ins, {1}, {}, {});
  const auto ids = forced.selected_ids();
  CHECK(std::find(ids.begin(), ids.end(), 1) != ids.end());

  const CoverPlan restricted = heuristic_solve(ins, {}, {9, 10}, {});
  for (int id : restricted.selected_ids()) {
    CHECK(id != 9);
    CHECK(id != 10);
  }

  std::set<int> everything = all_ids(ins);
  CHECK_THROWS_AS(heuristic_solve(ins, {}, everything, {}), InvalidArgument);
  CHECK_THROWS_AS(heuristic_solve(ins, {3}, {3}, {}), InvalidArgument);
}

TEST_CASE("heuristic_solve: feasible and never below the optimum") {
  std::mt19937_64 rng(43);
  std::uniform_real_distribution<double> kd(0.0, 6.0);
  for (int trial = 0; trial < 80; ++trial) {
    const int q = 1 + static_cast<int>(rng() % 10);
    const Instance ins = testutil::random_unit_instance(rng, q);
    Multipliers kappa;
    for (int id = 1; id <= q; ++id) kappa[id] = kd(rng);
    const CoverPlan plan = heuristic_solve(ins, {}, {}, kappa);
    validate_plan(ins, plan);
    const double opt = solve_brute_force(ins).objective;
    CHECK(plan.objective >= opt - 1e-9 * std::max(1.0, opt));
    // Never worse than the seed selection it started from.
    std::set<int> seed_set;
    for (int id = 1; id <= q; ++id) seed_set.insert(id);
    const std::set<int> active = active_set_from_multipliers(
        ins, seed_set, kappa);
    CHECK(plan.objective <= restricted_cost(ins, active) + 1e-9);
  }
}

TEST_CASE("solve_heuristic: full pipeline on any segment length") {
  Instance ins = det_base(10, 10, 1);
  ins.length = 4.0;
  for (DiscType& d : ins.discs) d.b /= 16.0;  // same unit problem
  const CoverPlan plan = solve_heuristic(ins);
  validate_plan(ins, plan);
  CHECK(plan.objective == doctest::Approx(77.368).epsilon(1e-4));
  double sum = 0.0;
  for (const PlanEntry& e : plan.entries) sum += e.diameter;
  CHECK(sum == doctest::Approx(4.0).epsilon(1e-12));
}
