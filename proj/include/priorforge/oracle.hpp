#pragma once

#include <random>

#include "priorforge/plan.hpp"
#include "priorforge/sheaf.hpp"

namespace priorforge {
namespace oracle {

// Independent recomputations used to cross-check the main calculus. Nothing
// here calls chern_of/extension folding; c2 comes from the direct Whitney
// expansion over the flattened constituents.

// c2 of a sheaf assembled from rank-1 pieces:
//   sum of lengths + sum over pairs of D_i . D_j
// independent of the extension bracketing.
Int whitney_c2(const SurfaceParams& S, const ChainConstituents& pieces);

struct Report {
    Int checked = 0;
    std::vector<std::string> mismatches;
    bool clean() const { return mismatches.empty(); }
};

struct GridSpec {
    Int gmax = 3;
    Int emax = 3;
    Int bmin = -3, bmax = 5;
    Int dmin = 0, dmax = 6;
    Int lmax = 4;
    Int zmax = 6;
    Int tmin = -5, tmax = -2;
};

// Evaluates both sides of the displayed closed forms over a finite grid:
//   chi O(-C0 - (m-2b)f) = 0
//   chi O(-3C0 - (d-3b-2)f) = -6 + 2g - 3e + 2d - 6b
//   chi E2(-D) = 2 - g - |Z|           (the 2C0 + tf chain)
//   c2 E2*(bf) = 2e - d + 3b + 3 + l   (the C0 + df chain dual)
//   c2 E2 = l + 2e + 4b + 3 - d        (the C0 + df chain)
//   ext1 lower bound = l + 6 - 2g + 3e - 2d + 6b
Report closed_form_suite(const GridSpec& grid = {});

// Random expression tree of total rank <= max_rank with arbitrary bracketing.
SheafPtr random_expr(std::mt19937_64& rng, int max_rank);

// whitney_c2(flatten(T)) == chern_of(T).c2 over `count` random trees.
Report tree_equivalence_suite(Int count, unsigned long long seed, int max_rank = 10);

// Re-derives every parameter of the plan from its request, by case, and
// compares against the plan's own numbers; recomputes c2 by Whitney.
Report cross_check_plan(const SurfaceParams& S, const ConstructionPlan& plan);

}  // namespace oracle
}  // namespace priorforge
