#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace linecover {

// Shared floating-point tolerances. Feasibility is relative to the segment
// length, optimality and fathoming relative to the objective value.
struct Tolerances {
  static constexpr double feasibility_rel = 1e-9;
  static constexpr double optimality_rel = 1e-7;
  static constexpr double kkt_residual = 1e-10;
  static constexpr double improvement_abs = 1e-12;
  static constexpr double fathom_rel = 1e-9;
  static constexpr double fathom_abs = 1e-12;
};

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Selected diameters do not add up to the segment length.
class CoverageError : public Error {
 public:
  using Error::Error;
};

class UnknownDiscError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// One available disc: fixed setup cost f plus variable cost b*x^2 when used
// with diameter x > 0. An unused disc costs nothing.
struct DiscType {
  int id = 0;
  double f = 0.0;  // setup cost, f >= 0
  double b = 1.0;  // variable cost coefficient, b > 0
};

// A segment of given length and the catalog of discs available to cover it.
// At most one copy of each disc may be used.
struct Instance {
  double length = 1.0;
  std::vector<DiscType> discs;

  const DiscType* find(int id) const;
  const DiscType& at(int id) const;  // throws UnknownDiscError
  std::vector<int> ids() const;
  int size() const { return static_cast<int>(discs.size()); }
};

// Throws InvalidArgument unless length > 0, the catalog is nonempty, ids are
// unique and >= 1, every f >= 0 and every b > 0.
void validate(const Instance& instance);

struct PlanEntry {
  int id = 0;
  double diameter = 0.0;
  double center = 0.0;
};

// A feasible cover: the selected discs with their diameters and center
// positions, laid out end-to-end from coordinate 0 in ascending id order.
struct CoverPlan {
  std::vector<PlanEntry> entries;
  double objective = 0.0;
  double fixed_cost = 0.0;
  double variable_cost = 0.0;

  std::vector<int> selected_ids() const;
  std::map<int, double> diameters() const;
};

// Maps a unit-segment solution back to the original segment length.
struct Scaling {
  double length = 1.0;
};

// Total cost of covering the segment with the given diameters: sum of
// f_i + b_i*x_i^2 over the entries with x_i > 0. The diameters must sum to
// the segment length; ids absent from the map count as unused.
double evaluate(const Instance& instance,
                const std::map<int, double>& diameters);

// Equivalent unit-length instance: b_i is scaled by length^2, f_i kept.
// A unit solution maps back through the scale record with x -> length*x at
// identical cost.
std::pair<Instance, Scaling> normalize(const Instance& instance);

CoverPlan denormalize(const CoverPlan& unit_plan, const Scaling& scale);

// End-to-end placement of the given diameters starting at coordinate 0;
// returns the center of each disc in input order.
std::vector<double> layout(const std::vector<double>& diameters,
                           double length);

// Assembles a CoverPlan from positive diameters keyed by disc id.
CoverPlan make_plan(const Instance& instance,
                    const std::map<int, double>& diameters);

// All (dominating, dominated) pairs: i dominates j when b_i <= b_j,
// f_i <= f_j and the cost pairs differ.
std::vector<std::pair<int, int>> dominated_pairs(const Instance& instance);

// Checks the plan invariants against the instance: positive diameters
// summing to the length, abutting layout, objective consistent with
// evaluate. Throws on violation.
void validate_plan(const Instance& instance, const CoverPlan& plan);

}  // namespace linecover
