#include "linecover/closed_form.hpp"

#include <cmath>

namespace linecover {

namespace {

void require_unit(const Instance& instance) {
  if (std::abs(instance.length - 1.0) > 1e-12)
    throw InvalidArgument("expected a unit-length instance");
}

}  // namespace

RestrictedSolution solve_restricted(const Instance& unit,
                                    const std::set<int>& selected) {
  require_unit(unit);
  if (selected.empty()) throw InvalidArgument("selected set is empty");
  double denom = 0.0;  // sum of 1/(2 b_j)
  for (int id : selected) denom += 0.5 / unit.at(id).b;
  RestrictedSolution sol;
  sol.selected = selected;
  sol.lambda = 1.0 / denom;
  double fixed = 0.0;
  double variable = 0.0;
  for (int id : selected) {
    const DiscType& d = unit.at(id);
    const double x = sol.lambda / (2.0 * d.b);
    sol.x[id] = x;
    fixed += d.f;
    variable += d.b * x * x;
  }
  sol.cost = fixed + variable;
  return sol;
}

double restricted_cost(const Instance& unit, const std::set<int>& selected) {
  require_unit(unit);
  if (selected.empty()) throw InvalidArgument("selected set is empty");
  double fixed = 0.0;
  double inv_b = 0.0;
  for (int id : selected) {
    const DiscType& d = unit.at(id);
    fixed += d.f;
    inv_b += 1.0 / d.b;
  }
  return fixed + 1.0 / inv_b;
}

CoverPlan plan_from_selection(const Instance& unit,
                              const std::set<int>& selected) {
  return make_plan(unit, solve_restricted(unit, selected).x);
}

namespace {

UniformSolution search_uniform(double f,
                               const std::function<double(double)>& g,
                               long q) {
  if (q < 1) throw InvalidArgument("q must be >= 1");
  auto F = [&](long k) { return k * f + k * g(1.0 / static_cast<double>(k)); };
  // Smallest k with F(k) <= F(k+1); convexity makes the predicate monotone.
  long lo = 1;
  long hi = q;
  while (lo < hi) {
    const long mid = lo + (hi - lo) / 2;
    if (F(mid) <= F(mid + 1))
      hi = mid;
    else
      lo = mid + 1;
  }
  // Settle exact ties (and any rounding wobble) toward the smaller k.
  while (lo > 1 && F(lo - 1) <= F(lo)) --lo;
  while (lo < q && F(lo + 1) < F(lo)) ++lo;
  UniformSolution sol;
  sol.k = lo;
  sol.diameter = 1.0 / static_cast<double>(lo);
  sol.cost = F(lo);
  return sol;
}

}  // namespace

UniformSolution solve_uniform(double f, double b, long q) {
  if (!(b > 0.0)) throw InvalidArgument("b must be > 0");
  return search_uniform(f, [b](double x) { return b * x * x; }, q);
}

UniformSolution solve_uniform(double f,
                              const std::function<double(double)>& g,
                              long q) {
  return search_uniform(f, g, q);
}

}  // namespace linecover
