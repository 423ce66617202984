#pragma once

#include <optional>
#include <string>
#include <vector>

#include "priorforge/certificate.hpp"
#include "priorforge/sheaf.hpp"

namespace priorforge {

// One theorem instantiation request: surface (g,e), rank, target Chern data
// c1 = s*C0 + t*f and c2, plus an optional explicit case tag.
struct PlanRequest {
    Int g = 0;
    Int e = 0;
    Int rank = 3;
    Int s = 0;
    Int t = 0;
    Int c2 = 0;
    std::string theorem;  // empty = dispatch by (rank, s, t, ebar)
};

enum class CheckStatus { Certified, PaperAsserted, Failed };

std::string to_string(CheckStatus s);

// Machine-readable description of what a checklist item checked, so a plan
// document can be re-verified without recomputation context.
//
// kinds: h0_zero | h2_zero | h1_positive | ext1_positive | non_effective |
//        cayley_bacharach | bound | divisor_eq | chi_report | axiom
struct CheckSpec {
    std::string kind;
    std::string node;                    // chain path for engine queries
    DivisorClass twist{0, 0};            // engine queries
    std::string quot_node, sub_node;     // ext1_positive
    std::vector<DivisorClass> divisors;  // non_effective list / divisor_eq pair
    DivisorClass divisor{0, 0};          // cayley_bacharach system
    Int length = 0;                      // cayley_bacharach |Z|
    bool generic = false;
    Int lhs = 0, rhs = 0;                // bound / chi_report values
    std::string op;                      // bound comparison: <, <=, >, >=, ==
};

struct ChecklistItem {
    std::string name;
    std::string hypothesis;  // human-readable statement
    CheckStatus status = CheckStatus::Failed;
    CheckSpec spec;
    Certificate cert;
    std::string note;
};

struct PlanParams {
    std::optional<Int> b;                       // deg of the fiber divisor
    std::optional<Int> l;                       // residue-window length
    std::optional<DivisorClass> twist_divisor;  // D in the rank-3/4 chains
    std::vector<DivisorClass> divisors;
    std::vector<Int> lengths;
};

struct ConstructionPlan {
    std::string schema_version = "1";
    PlanRequest request;
    std::string theorem;  // resolved case tag
    DivisorClass normalizing_twist{0, 0};
    PlanParams params;
    SheafPtr chain;
    std::vector<ChecklistItem> checklist;
    ChernData computed;             // after un-twisting; equals the request target
    ChernData computed_normalized;  // chern_of(chain)
    Int chain_chi = 0;
    Int h0_lower = 0;    // certified chain bound
    Int h0_theorem = 0;  // the theorem's displayed bound
    Int c2_threshold = 0;
    bool threshold_strict = false;  // generic-rank planner needs c2 > threshold
    std::vector<std::string> warnings;
    bool accepted = false;  // no Failed checklist items
};

}  // namespace priorforge
