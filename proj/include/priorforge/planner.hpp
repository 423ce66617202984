#pragma once

#include "priorforge/engine.hpp"
#include "priorforge/plan.hpp"

namespace priorforge {

// Case tags:
//   rank3-s2        c1 = 2C0 + tf, t <= min{-2, -2g+1}
//   rank3-s1        c1 =  C0 + df, d >= 0
//   rank3-s0        c1 =       df, d >= 0
//   rank4-s0-epos   c1 = f, ebar >= 0
//   rank4-s0-eneg   c1 = f, ebar <  0
//   rank4-s1        c1 = C0 + mf, m in {0,1}
//   rankr-epos      ebar >  0, rank >= 4
//   rankr-e0        ebar == 0, rank >= 4
//   rankr-em1       ebar == -1, rank >= 4
//   rankr-eneg      ebar < -1, rank >= 4
//
// Requests with s outside [0, rank-1] are normalized by a C0-twist; the plan
// records the twist and reports un-twisted Chern data.

// Resolves the case for a normalized request (throws InputOutOfRange if the
// request fits no case or an explicit tag does not apply).
std::string resolve_theorem(const PlanRequest& req);

// Smallest admissible c2 for the request's case; the generic-rank cases need
// strict excess (c2 > threshold), the others c2 >= threshold.
struct ThresholdInfo {
    Int threshold = 0;
    bool strict = false;
};
ThresholdInfo c2_threshold(const PlanRequest& req);

// Full pipeline: normalize, dispatch, derive parameters, build the extension
// chain, run the hypothesis checklist, compute exact Chern data and the h0
// bound. Throws InputError subclasses on bad requests; checklist failures
// come back as Failed items with accepted = false.
ConstructionPlan plan(const PlanRequest& req);

ConstructionPlan plan_rank3(const PlanRequest& req);
ConstructionPlan plan_rank4(const PlanRequest& req);
ConstructionPlan plan_rank_r(const PlanRequest& req);

struct VerifyReport {
    std::vector<std::string> mismatches;
    bool clean() const { return mismatches.empty(); }
};

// Recomputes the chain's Chern data, replays every checklist certificate from
// its recorded instantiation, recomputes the threshold and the Whitney c2.
VerifyReport verify_plan(const SurfaceParams& S, const ConstructionPlan& plan);

}  // namespace priorforge
