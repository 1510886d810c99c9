#include <random>

#include "doctest.h"
#include "linecover/core.hpp"
#include "linecover/io.hpp"
#include "test_util.hpp"

using namespace linecover;
using testutil::make_unit;

TEST_CASE("evaluate: two-disc tail of the base class") {
  Instance ins;
  ins.length = 1.0;
  ins.discs = {{9, 2.0, 9.0}, {10, 1.0, 10.0}};
  // Closed form: z = f9 + f10 + 1/(1/b9 + 1/b10).
  const double expected = 3.0 + 1.0 / (1.0 / 9.0 + 1.0 / 10.0);
  CHECK(evaluate(ins, {{9, 10.0 / 19.0}, {10, 9.0 / 19.0}}) ==
        doctest::Approx(expected).epsilon(1e-12));
  CHECK(evaluate(ins, {{9, 0.5263}, {10, 0.4737}}) ==
        doctest::Approx(7.7368).epsilon(1e-3));
}

TEST_CASE("evaluate: single disc covering the whole segment") {
  const Instance ins = make_unit({{5.0, 2.0}});
  CHECK(evaluate(ins, {{1, 1.0}}) == doctest::Approx(7.0).epsilon(1e-15));
}

TEST_CASE("evaluate: rejects diameters that do not cover") {
  const Instance ins = make_unit({{1.0, 1.0}, {2.0, 2.0}});
  CHECK_THROWS_AS(evaluate(ins, {{1, 0.5}, {2, 0.4}}), CoverageError);
  CHECK_THROWS_AS(evaluate(ins, {{7, 1.0}}), UnknownDiscError);
}

TEST_CASE("normalize: rescales b by the squared length") {
  Instance ins;
  ins.length = 2.0;
  ins.discs = {{1, 3.0, 1.0}};
  const auto [unit, scale] = normalize(ins);
  CHECK(unit.length == 1.0);
  CHECK(unit.discs[0].b == doctest::Approx(4.0).epsilon(1e-15));
  CHECK(unit.discs[0].f == 3.0);
  CHECK(scale.length == 2.0);

  const auto [same, s1] = normalize(make_unit({{1.0, 1.0}}));
  CHECK(same.discs[0].b == 1.0);
  CHECK(s1.length == 1.0);
}

TEST_CASE("normalize: objective is invariant under the unit mapping") {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> len(0.1, 50.0);
  std::uniform_real_distribution<double> split(0.05, 1.0);
  for (int trial = 0; trial < 1000; ++trial) {
    const int q = 1 + static_cast<int>(rng() % 6);
    Instance ins = testutil::random_unit_instance(rng, q);
    ins.length = len(rng);
    const auto [unit, scale] = normalize(ins);

    std::vector<double> parts(q);
    double total = 0.0;
    for (double& p : parts) total += (p = split(rng));
    std::map<int, double> on_unit, on_orig;
    for (int i = 0; i < q; ++i) {
      on_unit[i + 1] = parts[i] / total;
      on_orig[i + 1] = parts[i] / total * ins.length;
    }
    const double direct = evaluate(ins, on_orig);
    const double scaled = evaluate(unit, on_unit);
    CHECK(std::abs(direct - scaled) <= 1e-12 * std::max(1.0, std::abs(direct)));
  }
}

TEST_CASE("layout: end-to-end centers") {
  CHECK(layout({0.5, 0.5}, 1.0) == std::vector<double>{0.25, 0.75});
  CHECK(layout({1.0}, 1.0) == std::vector<double>{0.5});
  const auto centers = layout({0.2, 0.3, 0.5}, 1.0);
  REQUIRE(centers.size() == 3);
  CHECK(centers[0] == doctest::Approx(0.1).epsilon(1e-15));
  CHECK(centers[1] == doctest::Approx(0.35).epsilon(1e-15));
  CHECK(centers[2] == doctest::Approx(0.75).epsilon(1e-15));
  CHECK_THROWS_AS(layout({0.2, 0.3}, 1.0), CoverageError);
}

TEST_CASE("layout: discs abut and centers increase") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> split(0.01, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 8);
    std::vector<double> parts(n);
    double total = 0.0;
    for (double& p : parts) total += (p = split(rng));
    for (double& p : parts) p /= total;
    const auto centers = layout(parts, 1.0);
    double offset = 0.0;
    for (int i = 0; i < n; ++i) {
      // Left edge of disc i must meet the right edge of disc i-1.
      CHECK(std::abs((centers[i] - 0.5 * parts[i]) - offset) <= 1e-12);
      if (i > 0) CHECK(centers[i] > centers[i - 1]);
      offset += parts[i];
    }
    CHECK(std::abs(offset - 1.0) <= 1e-12);
  }
}

TEST_CASE("dominated_pairs: definition") {
  CHECK(dominated_pairs(make_unit({{1.0, 1.0}, {2.0, 2.0}})) ==
        std::vector<std::pair<int, int>>{{1, 2}});
  CHECK(dominated_pairs(make_unit({{1.0, 1.0}, {1.0, 1.0}})).empty());
  CHECK(dominated_pairs(make_unit({{1.0, 2.0}, {2.0, 1.0}})).empty());
}

TEST_CASE("instance json: round trip and field errors") {
  Instance ins;
  ins.length = 2.5;
  ins.discs = {{1, 0.25, 1.0 / 3.0}, {7, 2.0, 9.125}};
  const Instance back = instance_from_json(instance_to_json(ins));
  CHECK(back.length == ins.length);
  REQUIRE(back.discs.size() == 2);
  CHECK(back.discs[0].b == ins.discs[0].b);
  CHECK(back.discs[1].id == 7);

  CHECK_THROWS_WITH_AS(instance_from_json("{\"version\":1}"),
                       doctest::Contains("length"), ParseError);
  CHECK_THROWS_WITH_AS(
      instance_from_json(
          "{\"version\":1,\"length\":1,\"discs\":[{\"id\":1,\"f\":0}]}"),
      doctest::Contains("\"b\""), ParseError);
  CHECK_THROWS_WITH_AS(
      instance_from_json(
          "{\"version\":1,\"length\":1,\"discs\":[{\"id\":1,\"f\":-1,"
          "\"b\":1}]}"),
      doctest::Contains("f must be >= 0"), ParseError);
  CHECK_THROWS_AS(instance_from_json("not json"), ParseError);
}

TEST_CASE("plan json: round trip") {
  const Instance ins = make_unit({{5.0, 2.0}});
  const CoverPlan plan = make_plan(ins, {{1, 1.0}});
  const CoverPlan back = plan_from_json(plan_to_json(plan));
  CHECK(back.objective == plan.objective);
  REQUIRE(back.entries.size() == 1);
  CHECK(back.entries[0].diameter == plan.entries[0].diameter);
  CHECK(back.entries[0].center == plan.entries[0].center);
  validate_plan(ins, back);
}

TEST_CASE("make_plan: validates and lays out ascending ids") {
  const Instance ins = make_unit({{1.0, 1.0}, {2.0, 4.0}, {3.0, 2.0}});
  const CoverPlan plan = make_plan(ins, {{3, 0.5}, {1, 0.5}, {2, 0.0}});
  REQUIRE(plan.entries.size() == 2);
  CHECK(plan.entries[0].id == 1);
  CHECK(plan.entries[1].id == 3);
  CHECK(plan.fixed_cost == doctest::Approx(4.0));
  CHECK(plan.variable_cost == doctest::Approx(0.25 + 0.5));
  validate_plan(ins, plan);
}
