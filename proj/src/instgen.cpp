#include "linecover/instgen.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "linecover/branch_bound.hpp"
#include "linecover/oracle.hpp"

namespace linecover {

namespace {

constexpr int kOracleLimit = 25;

void check_u(int u) {
  switch (u) {
    case 0:
    case 1:
    case 2:
    case 3:
    case 5:
      return;
    default:
      throw InvalidArgument(
          "unsupported configuration u=" + std::to_string(u) +
          " (only 0, 1, 2, 3 and 5 are defined here)");
  }
}

std::set<int> optimal_selection(const Instance& instance) {
  if (instance.size() <= kOracleLimit) {
    const CoverPlan plan = solve_brute_force(instance, kOracleLimit);
    const auto ids = plan.selected_ids();
    return {ids.begin(), ids.end()};
  }
  const BnbResult res = solve_exact(instance);
  const auto ids = res.plan.selected_ids();
  return {ids.begin(), ids.end()};
}

}  // namespace

std::string class_name(const ClassSpec& spec) {
  std::ostringstream out;
  out << "(" << spec.q << "," << spec.amp_s << "," << spec.setup_t << ","
      << spec.config_u << (spec.deterministic ? ")" : ",rnd)");
  return out.str();
}

Instance generate_instance(const ClassSpec& spec) {
  if (spec.q < 1) throw InvalidArgument("q must be >= 1");
  if (!(spec.amp_s > 0.0)) throw InvalidArgument("s must be > 0");
  if (!(spec.setup_t >= 1.0)) throw InvalidArgument("t must be >= 1");
  check_u(spec.config_u);

  std::vector<double> b(spec.q);
  if (spec.deterministic) {
    for (int i = 0; i < spec.q; ++i) b[i] = static_cast<double>(i + 1);
  } else {
    std::mt19937_64 rng(spec.seed);
    std::uniform_real_distribution<double> unit_mean(0.5, 1.5);
    b[0] = unit_mean(rng);
    for (int i = 1; i < spec.q; ++i) b[i] = b[i - 1] + unit_mean(rng);
  }
  for (double& v : b) v *= spec.amp_s;

  Instance instance;
  instance.length = 1.0;
  instance.discs.resize(spec.q);
  for (int i = 0; i < spec.q; ++i) {
    instance.discs[i].id = i + 1;
    instance.discs[i].b = b[i];
    // f_{q-i+1} = t * b_i keeps f strictly decreasing as b increases.
    instance.discs[spec.q - 1 - i].f = spec.setup_t * b[i];
  }
  validate(instance);

  if (spec.config_u == 0) return instance;
  return apply_u_config(instance, spec.config_u,
                        optimal_selection(instance));
}

Instance apply_u_config(const Instance& base, int u,
                        const std::set<int>& base_opt_S) {
  check_u(u);
  if (u == 0) return base;
  double max_b = base.discs.front().b;
  double max_f = base.discs.front().f;
  double min_f = base.discs.front().f;
  for (const DiscType& d : base.discs) {
    max_b = std::max(max_b, d.b);
    max_f = std::max(max_f, d.f);
    min_f = std::min(min_f, d.f);
  }
  Instance out = base;
  for (DiscType& d : out.discs) {
    if (!base_opt_S.count(d.id)) continue;
    switch (u) {
      case 1:
        d.b = max_b;
        break;
      case 2:
        d.f = max_f;
        break;
      case 3:
        d.f = min_f;
        break;
      case 5:
        d.b = max_b;
        d.f = max_f;
        break;
      default:
        break;
    }
  }
  return out;
}

}  // namespace linecover
