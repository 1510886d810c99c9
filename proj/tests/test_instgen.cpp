#include <cmath>

#include "doctest.h"
#include "linecover/instgen.hpp"
#include "linecover/io.hpp"
#include "linecover/oracle.hpp"
#include "test_util.hpp"

using namespace linecover;

namespace {

ClassSpec spec_of(int q, double s, double t, int u, std::uint64_t seed = 0,
                  bool det = true) {
  ClassSpec spec;
  spec.q = q;
  spec.amp_s = s;
  spec.setup_t = t;
  spec.config_u = u;
  spec.seed = seed;
  spec.deterministic = det;
  return spec;
}

}  // namespace

TEST_CASE("generate_instance: deterministic base classes") {
  const Instance plain = generate_instance(spec_of(10, 1, 1, 0));
  REQUIRE(plain.size() == 10);
  CHECK(plain.length == 1.0);
  for (int i = 0; i < 10; ++i) {
    CHECK(plain.discs[i].b == doctest::Approx(i + 1).epsilon(1e-15));
    CHECK(plain.discs[i].f == doctest::Approx(10 - i).epsilon(1e-15));
  }

  const Instance amplified = generate_instance(spec_of(10, 10, 1, 0));
  for (int i = 0; i < 10; ++i) {
    CHECK(amplified.discs[i].b == doctest::Approx(10.0 * (i + 1)));
    CHECK(amplified.discs[i].f == doctest::Approx(10.0 * (10 - i)));
  }

  const Instance heavy_setup = generate_instance(spec_of(10, 1, 100, 0));
  for (int j = 1; j <= 10; ++j)
    CHECK(heavy_setup.at(j).f == doctest::Approx(100.0 * (11 - j)));
}

TEST_CASE("generate_instance: base classes are free of dominated pairs") {
  CHECK(dominated_pairs(generate_instance(spec_of(10, 1, 1, 0))).empty());
  CHECK(dominated_pairs(generate_instance(spec_of(40, 10, 100, 0))).empty());
  const Instance random = generate_instance(spec_of(30, 1, 1, 0, 5, false));
  CHECK(dominated_pairs(random).empty());
  for (int i = 1; i < random.size(); ++i) {
    CHECK(random.discs[i].b > random.discs[i - 1].b);
    CHECK(random.discs[i].f < random.discs[i - 1].f);
  }
}

TEST_CASE("generate_instance: seeded runs are reproducible") {
  const ClassSpec spec = spec_of(25, 10, 1, 0, 99, false);
  const Instance a = generate_instance(spec);
  const Instance b = generate_instance(spec);
  REQUIRE(a.size() == b.size());
  for (int i = 0; i < a.size(); ++i) {
    CHECK(a.discs[i].b == b.discs[i].b);  // bit identical
    CHECK(a.discs[i].f == b.discs[i].f);
  }
  const Instance c = generate_instance(spec_of(25, 10, 1, 0, 100, false));
  bool any_diff = false;
  for (int i = 0; i < a.size(); ++i)
    if (a.discs[i].b != c.discs[i].b) any_diff = true;
  CHECK(any_diff);
}

TEST_CASE("generate_instance: random increments average near one") {
  const Instance ins = generate_instance(spec_of(200, 1, 1, 0, 7, false));
  const double mean_increment =
      (ins.discs.back().b - ins.discs.front().b) / (ins.size() - 1);
  CHECK(mean_increment >= 0.9);
  CHECK(mean_increment <= 1.1);
}

TEST_CASE("apply_u_config: perturbs only the optimal selection") {
  const Instance base = generate_instance(spec_of(10, 1, 1, 0));

  const Instance same = apply_u_config(base, 0, {9, 10});
  for (int i = 0; i < 10; ++i) {
    CHECK(same.discs[i].b == base.discs[i].b);
    CHECK(same.discs[i].f == base.discs[i].f);
  }

  const Instance raised = generate_instance(spec_of(10, 1, 1, 1));
  CHECK(raised.at(9).b == doctest::Approx(10.0));
  CHECK(raised.at(10).b == doctest::Approx(10.0));
  CHECK(raised.at(8).b == doctest::Approx(8.0));
  const CoverPlan plan = solve_brute_force(raised);
  REQUIRE(plan.selected_ids() == std::vector<int>{9, 10});
  CHECK(plan.entries[0].diameter == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(plan.entries[1].diameter == doctest::Approx(0.5).epsilon(1e-12));

  const Instance both = generate_instance(spec_of(10, 10, 1, 5));
  CHECK(both.at(9).b == doctest::Approx(100.0));
  CHECK(both.at(10).b == doctest::Approx(100.0));
  CHECK(both.at(9).f == doctest::Approx(100.0));
  CHECK(both.at(10).f == doctest::Approx(100.0));
  CHECK(both.at(8).f == doctest::Approx(30.0));
}

TEST_CASE("generate_instance: thesis-only configurations are rejected") {
  for (int u : {4, 6, 7, 8, 9})
    CHECK_THROWS_AS(generate_instance(spec_of(10, 1, 1, u)), InvalidArgument);
  CHECK_THROWS_AS(generate_instance(spec_of(0, 1, 1, 0)), InvalidArgument);
  CHECK_THROWS_AS(generate_instance(spec_of(5, 1, 0.5, 0)), InvalidArgument);
}
