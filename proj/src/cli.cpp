#include "linecover/cli.hpp"

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "linecover/bench.hpp"
#include "linecover/closed_form.hpp"
#include "linecover/io.hpp"
#include "linecover/oracle.hpp"

namespace linecover::cli {

namespace {

std::string real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

// LINECOVER_SEED, when set, overrides any --seed argument.
std::uint64_t effective_seed(std::uint64_t from_flag) {
  if (const char* env = std::getenv("LINECOVER_SEED"))
    return std::strtoull(env, nullptr, 10);
  return from_flag;
}

void print_plan(const CoverPlan& plan) {
  std::cout << "objective: " << real(plan.objective) << "\n"
            << "fixed_cost: " << real(plan.fixed_cost)
            << "  variable_cost: " << real(plan.variable_cost) << "\n"
            << "selected: " << plan.entries.size() << " disc(s)\n";
  for (const PlanEntry& e : plan.entries)
    std::cout << "  id " << e.id << "  diameter " << real(e.diameter)
              << "  center " << real(e.center) << "\n";
}

int cmd_generate(int q, double s, double t, int u, std::uint64_t seed,
                 bool random, const std::string& out_path) {
  ClassSpec spec;
  spec.q = q;
  spec.amp_s = s;
  spec.setup_t = t;
  spec.config_u = u;
  spec.seed = effective_seed(seed);
  spec.deterministic = !random;
  const Instance instance = generate_instance(spec);
  save_instance(instance, out_path);
  std::cout << "instance " << class_name(spec) << " with q=" << q
            << " written to " << out_path << "\n";
  return 0;
}

int cmd_solve(const std::string& file, const std::string& method,
              double time_limit, double alpha0, int max_iters,
              const std::string& json_out) {
  const Instance instance = load_instance(file);
  DualParams dual;
  dual.alpha0 = alpha0;
  if (max_iters > 0) dual.max_iters = max_iters;

  CoverPlan plan;
  std::optional<BnbStats> stats;
  if (method == "bnb") {
    BnbParams params;
    params.root_dual = dual;
    params.node_dual = dual;
    params.node_dual.max_iters = std::max(1, dual.max_iters / 5);
    params.time_limit_s = time_limit;
    BnbResult res = solve_exact(instance, params);
    plan = res.plan;
    stats = res.stats;
  } else if (method == "heuristic") {
    plan = solve_heuristic(instance, dual);
  } else if (method == "oracle") {
    plan = solve_brute_force(instance);
  } else if (method == "uniform") {
    const DiscType& first = instance.discs.front();
    for (const DiscType& d : instance.discs)
      if (d.f != first.f || d.b != first.b)
        throw InvalidArgument(
            "--method uniform requires all discs identical");
    auto [unit, scale] = normalize(instance);
    const UniformSolution sol =
        solve_uniform(first.f, unit.discs.front().b,
                      static_cast<long>(instance.discs.size()));
    std::map<int, double> diameters;
    for (long k = 0; k < sol.k; ++k)
      diameters[instance.discs[k].id] = sol.diameter;
    plan = denormalize(make_plan(unit, diameters), scale);
    std::cout << "uniform discs: k=" << sol.k << "  diameter "
              << real(sol.diameter * scale.length) << "  cost "
              << real(sol.cost) << "\n";
  } else {
    std::cerr << "unknown method: " << method << "\n";
    return 1;
  }

  std::cout << "method: " << method << "\n";
  print_plan(plan);
  if (stats) {
    std::cout << "nodes: " << stats->nodes << "  depth: " << stats->max_depth
              << "  ub_root: " << real(stats->ub_root)
              << "  lb_root: " << real(stats->lb_root)
              << "  gap: " << real(100.0 * stats->gap) << "%"
              << "  time: " << real(stats->wall_time_s) << "s\n";
    if (!stats->optimum)
      std::cout << "stopped at limit; best bound " << real(stats->best_bound)
                << ", incumbent not proven optimal\n";
  }
  if (!json_out.empty()) save_plan(plan, json_out);
  return (stats && !stats->optimum) ? 2 : 0;
}

int cmd_bench(const std::string& classes_path, int reps, double time_limit,
              const std::string& csv_path, int jobs) {
  const std::vector<ClassSpec> specs = load_class_specs(classes_path);
  const BenchReport report =
      run_benchmark(specs, reps, time_limit, csv_path, jobs);
  int unsolved = 0;
  for (const BenchRow& row : report.rows)
    if (!row.stats.optimum) ++unsolved;
  std::cout << report.rows.size() << " run(s), " << unsolved
            << " stopped at the time limit; CSV written to " << csv_path
            << "\n";
  for (const Correlation& c : report.time_node_correlation) {
    std::cout << "rho(time,nodes) q=" << c.q << ": ";
    if (c.defined)
      std::cout << real(c.rho);
    else
      std::cout << "n/a";
    std::cout << " (n=" << c.samples << ")\n";
  }
  return unsolved > 0 ? 2 : 0;
}

}  // namespace

int run(int argc, const char* const* argv) {
  CLI::App app{"Minimum-cost covering of a line segment with discs"};
  app.require_subcommand(1);

  auto* gen = app.add_subcommand("generate", "generate an instance file");
  int q = 1;
  double s = 1.0, t = 1.0;
  int u = 0;
  std::uint64_t seed = 0;
  bool random = false;
  std::string out_path;
  gen->add_option("--q", q, "number of discs")->required();
  gen->add_option("--s", s, "amplification of the b vector");
  gen->add_option("--t", t, "setup cost factor (f ~ t*b)");
  gen->add_option("--u", u, "perturbation configuration (0,1,2,3,5)");
  gen->add_option("--seed", seed, "random seed");
  gen->add_flag("--random", random, "randomized base class (default exact)");
  gen->add_option("-o,--output", out_path, "output instance path")
      ->required();

  auto* solve = app.add_subcommand("solve", "solve an instance file");
  std::string file, method, json_out;
  double time_limit = 3600.0, alpha0 = 1.95;
  int max_iters = 0;
  solve->add_option("file", file, "instance JSON path")->required();
  solve->add_option("--method", method, "bnb|heuristic|oracle|uniform")
      ->required()
      ->check(CLI::IsMember({"bnb", "heuristic", "oracle", "uniform"}));
  solve->add_option("--time-limit", time_limit, "seconds");
  solve->add_option("--alpha0", alpha0, "subgradient step scale in (0,2)");
  solve->add_option("--max-iters", max_iters, "subgradient iterations");
  solve->add_option("--json", json_out, "write the solution JSON here");

  auto* bench = app.add_subcommand("bench", "run the benchmark harness");
  std::string classes_path, csv_path;
  int reps = 1, jobs = 1;
  double bench_limit = 3600.0;
  bench->add_option("--classes", classes_path, "class list JSON")->required();
  bench->add_option("--reps", reps, "replications per class");
  bench->add_option("--time-limit", bench_limit, "seconds per instance");
  bench->add_option("--csv", csv_path, "output CSV path")->required();
  bench->add_option("--jobs", jobs, "parallel workers");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (gen->parsed()) return cmd_generate(q, s, t, u, seed, random, out_path);
    if (solve->parsed())
      return cmd_solve(file, method, time_limit, alpha0, max_iters, json_out);
    if (bench->parsed())
      return cmd_bench(classes_path, reps, bench_limit, csv_path, jobs);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace linecover::cli
