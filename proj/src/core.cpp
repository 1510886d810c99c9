#include "linecover/core.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace linecover {

namespace {

std::string fmt_id(int id) { return "disc " + std::to_string(id); }

}  // namespace

const DiscType* Instance::find(int id) const {
  for (const DiscType& d : discs) {
    if (d.id == id) return &d;
  }
  return nullptr;
}

const DiscType& Instance::at(int id) const {
  const DiscType* d = find(id);
  if (!d) throw UnknownDiscError("unknown disc id " + std::to_string(id));
  return *d;
}

std::vector<int> Instance::ids() const {
  std::vector<int> out;
  out.reserve(discs.size());
  for (const DiscType& d : discs) out.push_back(d.id);
  return out;
}

void validate(const Instance& instance) {
  if (!(instance.length > 0.0))
    throw InvalidArgument("instance length must be positive");
  if (instance.discs.empty())
    throw InvalidArgument("instance must contain at least one disc");
  std::set<int> seen;
  for (const DiscType& d : instance.discs) {
    if (d.id < 1)
      throw InvalidArgument(fmt_id(d.id) + ": id must be >= 1");
    if (!seen.insert(d.id).second)
      throw InvalidArgument(fmt_id(d.id) + ": duplicate id");
    if (!(d.f >= 0.0))
      throw InvalidArgument(fmt_id(d.id) + ": setup cost f must be >= 0");
    if (!(d.b > 0.0))
      throw InvalidArgument(fmt_id(d.id) + ": cost coefficient b must be > 0");
  }
}

std::vector<int> CoverPlan::selected_ids() const {
  std::vector<int> out;
  out.reserve(entries.size());
  for (const PlanEntry& e : entries) out.push_back(e.id);
  return out;
}

std::map<int, double> CoverPlan::diameters() const {
  std::map<int, double> out;
  for (const PlanEntry& e : entries) out[e.id] = e.diameter;
  return out;
}

double evaluate(const Instance& instance,
                const std::map<int, double>& diameters) {
  double sum = 0.0;
  double cost = 0.0;
  for (const auto& [id, x] : diameters) {
    const DiscType& d = instance.at(id);
    if (x < 0.0)
      throw InvalidArgument(fmt_id(id) + ": diameter must be nonnegative");
    sum += x;
    if (x > 0.0) cost += d.f + d.b * x * x;
  }
  if (std::abs(sum - instance.length) >
      Tolerances::feasibility_rel * instance.length)
    throw CoverageError("diameters sum to " + std::to_string(sum) +
                        ", segment length is " +
                        std::to_string(instance.length));
  return cost;
}

std::pair<Instance, Scaling> normalize(const Instance& instance) {
  validate(instance);
  Instance unit = instance;
  const double ell = instance.length;
  unit.length = 1.0;
  for (DiscType& d : unit.discs) d.b *= ell * ell;
  return {std::move(unit), Scaling{ell}};
}

CoverPlan denormalize(const CoverPlan& unit_plan, const Scaling& scale) {
  CoverPlan plan = unit_plan;
  for (PlanEntry& e : plan.entries) {
    e.diameter *= scale.length;
    e.center *= scale.length;
  }
  return plan;
}

std::vector<double> layout(const std::vector<double>& diameters,
                           double length) {
  double sum = 0.0;
  for (double x : diameters) sum += x;
  if (std::abs(sum - length) > Tolerances::feasibility_rel * length)
    throw CoverageError("diameters sum to " + std::to_string(sum) +
                        ", segment length is " + std::to_string(length));
  std::vector<double> centers;
  centers.reserve(diameters.size());
  double offset = 0.0;
  for (double x : diameters) {
    centers.push_back(offset + 0.5 * x);
    offset += x;
  }
  return centers;
}

CoverPlan make_plan(const Instance& instance,
                    const std::map<int, double>& diameters) {
  CoverPlan plan;
  std::vector<double> widths;
  for (const auto& [id, x] : diameters) {
    const DiscType& d = instance.at(id);
    if (x < 0.0)
      throw InvalidArgument(fmt_id(id) + ": diameter must be nonnegative");
    if (x == 0.0) continue;
    plan.entries.push_back(PlanEntry{id, x, 0.0});
    widths.push_back(x);
    plan.fixed_cost += d.f;
    plan.variable_cost += d.b * x * x;
  }
  const std::vector<double> centers = layout(widths, instance.length);
  for (std::size_t k = 0; k < centers.size(); ++k)
    plan.entries[k].center = centers[k];
  plan.objective = plan.fixed_cost + plan.variable_cost;
  return plan;
}

std::vector<std::pair<int, int>> dominated_pairs(const Instance& instance) {
  std::vector<std::pair<int, int>> out;
  const auto& ds = instance.discs;
  for (std::size_t i = 0; i < ds.size(); ++i) {
    for (std::size_t j = 0; j < ds.size(); ++j) {
      if (i == j) continue;
      const bool dominates = ds[i].b <= ds[j].b && ds[i].f <= ds[j].f &&
                             (ds[i].b != ds[j].b || ds[i].f != ds[j].f);
      if (dominates) out.emplace_back(ds[i].id, ds[j].id);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

void validate_plan(const Instance& instance, const CoverPlan& plan) {
  if (plan.entries.empty()) throw InvalidArgument("plan has no entries");
  std::set<int> seen;
  double sum = 0.0;
  for (const PlanEntry& e : plan.entries) {
    instance.at(e.id);
    if (!(e.diameter > 0.0))
      throw InvalidArgument(fmt_id(e.id) + ": plan diameter must be > 0");
    if (!seen.insert(e.id).second)
      throw InvalidArgument(fmt_id(e.id) + ": appears twice in plan");
    sum += e.diameter;
  }
  const double ell = instance.length;
  if (std::abs(sum - ell) > Tolerances::feasibility_rel * ell)
    throw CoverageError("plan diameters sum to " + std::to_string(sum));
  const double recomputed = evaluate(instance, plan.diameters());
  const double scale = std::max(1.0, std::abs(plan.objective));
  if (std::abs(recomputed - plan.objective) >
      Tolerances::feasibility_rel * scale)
    throw InvalidArgument("plan objective disagrees with evaluate()");
  if (std::abs(plan.fixed_cost + plan.variable_cost - plan.objective) >
      Tolerances::feasibility_rel * scale)
    throw InvalidArgument("plan cost breakdown disagrees with objective");
  // Entries abut end to end starting at 0.
  double offset = 0.0;
  double prev_center = -1.0;
  for (const PlanEntry& e : plan.entries) {
    const double expected = offset + 0.5 * e.diameter;
    if (std::abs(e.center - expected) > 1e-12 * std::max(1.0, ell))
      throw InvalidArgument(fmt_id(e.id) + ": center breaks the layout");
    if (e.center <= prev_center)
      throw InvalidArgument("plan centers are not strictly increasing");
    prev_center = e.center;
    offset += e.diameter;
  }
}

}  // namespace linecover
