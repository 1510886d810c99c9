#include "linecover/bench.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <thread>

#include "json.hpp"

namespace linecover {

namespace {

std::string real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string gap6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

void write_row(std::ostream& out, const ClassSpec& spec,
               const std::string& seed, const std::string& rep,
               double wall, double nodes, double depth, double ub,
               const std::optional<double>& opt, double lb, double gap) {
  out << spec.q << ',' << real(spec.amp_s) << ',' << real(spec.setup_t) << ','
      << spec.config_u << ',' << seed << ',' << rep << ',' << gap6(wall) << ','
      << real(nodes) << ',' << real(depth) << ',' << real(ub) << ','
      << (opt ? real(*opt) : "-") << ',' << real(lb) << ',' << gap6(gap)
      << '\n';
}

Correlation pearson(int q, const std::vector<std::pair<double, double>>& xy) {
  Correlation c;
  c.q = q;
  c.samples = static_cast<int>(xy.size());
  if (xy.size() < 2) return c;
  double mx = 0.0, my = 0.0;
  for (const auto& [x, y] : xy) {
    mx += x;
    my += y;
  }
  mx /= xy.size();
  my /= xy.size();
  double sxx = 0.0, syy = 0.0, sxy = 0.0;
  for (const auto& [x, y] : xy) {
    sxx += (x - mx) * (x - mx);
    syy += (y - my) * (y - my);
    sxy += (x - mx) * (y - my);
  }
  if (sxx <= 0.0 || syy <= 0.0) return c;
  c.rho = sxy / std::sqrt(sxx * syy);
  c.defined = true;
  return c;
}

}  // namespace

BenchReport run_benchmark(const std::vector<ClassSpec>& specs,
                          int replications, double time_limit_s,
                          const std::string& csv_path, int jobs,
                          const BnbParams& solver_params) {
  if (replications < 1) throw InvalidArgument("replications must be >= 1");
  if (jobs < 1) jobs = 1;

  BenchReport report;
  report.rows.resize(specs.size() * static_cast<std::size_t>(replications));
  for (std::size_t s = 0; s < specs.size(); ++s) {
    for (int r = 1; r <= replications; ++r) {
      BenchRow& row = report.rows[s * replications + (r - 1)];
      row.spec = specs[s];
      row.rep = r;
      row.seed = specs[s].seed + static_cast<std::uint64_t>(r - 1);
    }
  }

  auto solve_row = [&](BenchRow& row) {
    ClassSpec spec = row.spec;
    spec.seed = row.seed;
    const Instance instance = generate_instance(spec);
    BnbParams params = solver_params;
    params.time_limit_s = time_limit_s;
    row.stats = solve_exact(instance, params).stats;
  };

  if (jobs == 1) {
    for (BenchRow& row : report.rows) solve_row(row);
  } else {
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      while (true) {
        const std::size_t k = next.fetch_add(1);
        if (k >= report.rows.size()) return;
        solve_row(report.rows[k]);
      }
    };
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }

  std::ofstream out(csv_path);
  if (!out) throw Error("cannot write " + csv_path);
  out << "class_q,class_s,class_t,class_u,seed,rep,wall_time_s,nodes,depth,"
         "ub_root,opt,lb_root,gap\n";
  for (std::size_t s = 0; s < specs.size(); ++s) {
    double wall = 0.0, nodes = 0.0, depth = 0.0, ub = 0.0, lb = 0.0,
           gap = 0.0, opt_sum = 0.0;
    bool all_solved = true;
    for (int r = 1; r <= replications; ++r) {
      const BenchRow& row = report.rows[s * replications + (r - 1)];
      const BnbStats& st = row.stats;
      write_row(out, row.spec, std::to_string(row.seed), std::to_string(r),
                st.wall_time_s, static_cast<double>(st.nodes), st.max_depth,
                st.ub_root, st.optimum, st.lb_root, st.gap);
      wall += st.wall_time_s;
      nodes += static_cast<double>(st.nodes);
      depth += st.max_depth;
      ub += st.ub_root;
      lb += st.lb_root;
      gap += st.gap;
      if (st.optimum)
        opt_sum += *st.optimum;
      else
        all_solved = false;
    }
    const double n = replications;
    std::optional<double> avg_opt;
    if (all_solved) avg_opt = opt_sum / n;
    write_row(out, specs[s], "-", "avg", wall / n, nodes / n, depth / n,
              ub / n, avg_opt, lb / n, gap / n);
  }

  // Pearson correlation of wall time against node count, per instance size.
  std::map<int, std::vector<std::pair<double, double>>> by_q;
  for (const BenchRow& row : report.rows)
    by_q[row.spec.q].emplace_back(row.stats.wall_time_s,
                                  static_cast<double>(row.stats.nodes));
  for (const auto& [q, xy] : by_q)
    report.time_node_correlation.push_back(pearson(q, xy));
  return report;
}

std::vector<ClassSpec> load_class_specs(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  nlohmann::json j = nlohmann::json::parse(buf.str(), nullptr, false);
  if (j.is_discarded()) throw ParseError("classes: not valid JSON");
  if (!j.is_object() || !j.contains("classes") || !j["classes"].is_array())
    throw ParseError("classes: expected {\"classes\": [...]}");
  std::vector<ClassSpec> specs;
  for (std::size_t k = 0; k < j["classes"].size(); ++k) {
    const auto& cj = j["classes"][k];
    const std::string where = "classes[" + std::to_string(k) + "]";
    if (!cj.is_object() || !cj.contains("q"))
      throw ParseError(where + ": missing field \"q\"");
    ClassSpec spec;
    spec.q = cj["q"].get<int>();
    if (cj.contains("s")) spec.amp_s = cj["s"].get<double>();
    if (cj.contains("t")) spec.setup_t = cj["t"].get<double>();
    if (cj.contains("u")) spec.config_u = cj["u"].get<int>();
    if (cj.contains("seed")) spec.seed = cj["seed"].get<std::uint64_t>();
    if (cj.contains("deterministic"))
      spec.deterministic = cj["deterministic"].get<bool>();
    specs.push_back(spec);
  }
  return specs;
}

}  // namespace linecover
