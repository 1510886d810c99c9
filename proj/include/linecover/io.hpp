#pragma once

#include <string>

#include "linecover/core.hpp"

namespace linecover {

// JSON instance format, version 1:
//   {"version":1,"length":<real>,"discs":[{"id":<int>,"f":<real>,"b":<real>},...]}
// JSON solution format:
//   {"objective":<real>,"fixed_cost":<real>,"variable_cost":<real>,
//    "selected":[{"id":<int>,"diameter":<real>,"center":<real>},...]}
// Reals are serialized losslessly (shortest round-trip representation).

std::string instance_to_json(const Instance& instance);
Instance instance_from_json(const std::string& text);  // throws ParseError

std::string plan_to_json(const CoverPlan& plan);
CoverPlan plan_from_json(const std::string& text);  // throws ParseError

Instance load_instance(const std::string& path);
void save_instance(const Instance& instance, const std::string& path);
CoverPlan load_plan(const std::string& path);
void save_plan(const CoverPlan& plan, const std::string& path);

}  // namespace linecover
