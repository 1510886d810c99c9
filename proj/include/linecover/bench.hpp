#pragma once

#include <optional>
#include <string>
#include <vector>

#include "linecover/branch_bound.hpp"
#include "linecover/instgen.hpp"

namespace linecover {

struct BenchRow {
  ClassSpec spec;
  int rep = 1;               // 1-based replication index
  std::uint64_t seed = 0;    // seed used for this replication
  BnbStats stats;
};

struct Correlation {
  int q = 0;
  double rho = 0.0;  // Pearson correlation of wall time vs node count
  int samples = 0;
  bool defined = false;
};

struct BenchReport {
  std::vector<BenchRow> rows;
  std::vector<Correlation> time_node_correlation;  // one entry per q
};

// Runs the exact solver on every (spec, replication) pair and writes a CSV
// with one row per run plus one average row per class. Replication r of a
// randomized class uses seed spec.seed + r - 1. Rows appear in spec order
// regardless of worker completion.
// CSV schema:
//   class_q,class_s,class_t,class_u,seed,rep,wall_time_s,nodes,depth,
//   ub_root,opt,lb_root,gap
// with gap as a 6-decimal fraction and "-" for an unreached optimum.
BenchReport run_benchmark(const std::vector<ClassSpec>& specs,
                          int replications, double time_limit_s,
                          const std::string& csv_path, int jobs = 1,
                          const BnbParams& solver_params = {});

// Class list file: {"classes":[{"q":..,"s":..,"t":..,"u":..,
//                               "seed":..,"deterministic":..},...]}
// Every field except q is optional.
std::vector<ClassSpec> load_class_specs(const std::string& path);

}  // namespace linecover
