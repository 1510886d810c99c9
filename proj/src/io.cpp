#include "linecover/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace linecover {

namespace {

using nlohmann::json;

double require_number(const json& j, const std::string& where,
                      const std::string& field) {
  if (!j.contains(field))
    throw ParseError(where + ": missing field \"" + field + "\"");
  if (!j[field].is_number())
    throw ParseError(where + ": field \"" + field + "\" must be a number");
  return j[field].get<double>();
}

int require_int(const json& j, const std::string& where,
                const std::string& field) {
  if (!j.contains(field))
    throw ParseError(where + ": missing field \"" + field + "\"");
  if (!j[field].is_number_integer())
    throw ParseError(where + ": field \"" + field + "\" must be an integer");
  return j[field].get<int>();
}

json parse_text(const std::string& text, const std::string& what) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ParseError(what + ": not valid JSON");
  return j;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void spit(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << text << '\n';
}

}  // namespace

std::string instance_to_json(const Instance& instance) {
  json j;
  j["version"] = 1;
  j["length"] = instance.length;
  j["discs"] = json::array();
  for (const DiscType& d : instance.discs)
    j["discs"].push_back({{"id", d.id}, {"f", d.f}, {"b", d.b}});
  return j.dump();
}

Instance instance_from_json(const std::string& text) {
  const json j = parse_text(text, "instance");
  if (!j.is_object()) throw ParseError("instance: expected a JSON object");
  const int version = require_int(j, "instance", "version");
  if (version != 1)
    throw ParseError("instance: unsupported \"version\" " +
                     std::to_string(version));
  Instance instance;
  instance.length = require_number(j, "instance", "length");
  if (!j.contains("discs") || !j["discs"].is_array())
    throw ParseError("instance: field \"discs\" must be an array");
  for (std::size_t k = 0; k < j["discs"].size(); ++k) {
    const json& dj = j["discs"][k];
    const std::string where = "discs[" + std::to_string(k) + "]";
    if (!dj.is_object()) throw ParseError(where + ": expected an object");
    DiscType d;
    d.id = require_int(dj, where, "id");
    d.f = require_number(dj, where, "f");
    d.b = require_number(dj, where, "b");
    instance.discs.push_back(d);
  }
  try {
    validate(instance);
  } catch (const InvalidArgument& e) {
    throw ParseError(std::string("instance: ") + e.what());
  }
  return instance;
}

std::string plan_to_json(const CoverPlan& plan) {
  json j;
  j["objective"] = plan.objective;
  j["fixed_cost"] = plan.fixed_cost;
  j["variable_cost"] = plan.variable_cost;
  j["selected"] = json::array();
  for (const PlanEntry& e : plan.entries)
    j["selected"].push_back(
        {{"id", e.id}, {"diameter", e.diameter}, {"center", e.center}});
  return j.dump();
}

CoverPlan plan_from_json(const std::string& text) {
  const json j = parse_text(text, "solution");
  if (!j.is_object()) throw ParseError("solution: expected a JSON object");
  CoverPlan plan;
  plan.objective = require_number(j, "solution", "objective");
  plan.fixed_cost = require_number(j, "solution", "fixed_cost");
  plan.variable_cost = require_number(j, "solution", "variable_cost");
  if (!j.contains("selected") || !j["selected"].is_array())
    throw ParseError("solution: field \"selected\" must be an array");
  for (std::size_t k = 0; k < j["selected"].size(); ++k) {
    const json& ej = j["selected"][k];
    const std::string where = "selected[" + std::to_string(k) + "]";
    PlanEntry e;
    e.id = require_int(ej, where, "id");
    e.diameter = require_number(ej, where, "diameter");
    e.center = require_number(ej, where, "center");
    plan.entries.push_back(e);
  }
  return plan;
}

Instance load_instance(const std::string& path) {
  return instance_from_json(slurp(path));
}

void save_instance(const Instance& instance, const std::string& path) {
  spit(path, instance_to_json(instance));
}

CoverPlan load_plan(const std::string& path) {
  return plan_from_json(slurp(path));
}

void save_plan(const CoverPlan& plan, const std::string& path) {
  spit(path, plan_to_json(plan));
}

}  // namespace linecover
