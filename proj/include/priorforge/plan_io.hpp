#pragma once

#include <string>

#include "json.hpp"
#include "priorforge/plan.hpp"

namespace priorforge {

using Json = nlohmann::ordered_json;

// Stable machine format for plan documents. Field order is fixed so that
// identical plans serialize to identical bytes; parse(serialize(p)) == p.
inline const char* kSchemaVersion = "1";

Json divisor_to_json(DivisorClass d);
DivisorClass divisor_from_json(const Json& j);

Json sheaf_to_json(const SheafPtr& e);
SheafPtr sheaf_from_json(const Json& j);

Json cert_to_json(const Certificate& c);
Certificate cert_from_json(const Json& j);

Json request_to_json(const PlanRequest& r);
PlanRequest request_from_json(const Json& j);

Json plan_to_json(const ConstructionPlan& p);
ConstructionPlan plan_from_json(const Json& j);

// Human-readable rendering for --format text.
std::string plan_to_text(const ConstructionPlan& p);

}  // namespace priorforge
