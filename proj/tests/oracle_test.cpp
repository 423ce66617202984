#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "priorforge/engine.hpp"
#include "priorforge/oracle.hpp"
#include "priorforge/planner.hpp"

using namespace priorforge;

TEST_CASE("whitney_c2 on small hand chains")
{
    SurfaceParams S = make_surface(0, 2);
    // two line bundles D, -D: c2 = D.(-D) = -D^2
    DivisorClass D{2, -1};
    ChainConstituents two{{{D, 0}, {-D, 0}}};
    CHECK(oracle::whitney_c2(S, two) == -intersect(S, D, D));

    // the ebar>0 worked instance: lengths 0,1,4,44 and pairwise sum 51
    SurfaceParams S1 = make_surface(0, 1);
    ChainConstituents cc{{{{0, 2}, 0}, {{-5, 3}, 1}, {{2, 2}, 4}, {{3, -7}, 44}}};
    CHECK(oracle::whitney_c2(S1, cc) == 100);
}

TEST_CASE("closed-form suite is clean on the default grid")
{
    oracle::Report rep = oracle::closed_form_suite();
    CHECK(rep.checked > 1000);
    CHECK(rep.mismatches.empty());
}

TEST_CASE("whitney equals the folded c2 on random trees")
{
    oracle::Report rep = oracle::tree_equivalence_suite(300, 777);
    CHECK(rep.checked == 300);
    CHECK(rep.mismatches.empty());
}

TEST_CASE("flatten preserves rank and bracketing independence")
{
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 100; ++i) {
        SheafPtr t = oracle::random_expr(rng, 10);
        SurfaceParams S = make_surface(1, 1);
        ChainConstituents cc = flatten(t);
        CHECK((Int)cc.pieces.size() == t->rank());
        CHECK(oracle::whitney_c2(S, cc) == chern_of(S, t).c2);
    }
}

TEST_CASE("cross_check_plan is clean on planner output and catches edits")
{
    for (const PlanRequest& q : {PlanRequest{0, 0, 4, 1, 0, 20, ""},
                                 PlanRequest{0, 0, 3, 1, 0, 103, ""},
                                 PlanRequest{0, 1, 4, 0, 0, 100, ""},
                                 PlanRequest{2, 0, 4, 1, 0, 40, "rankr-eneg"}}) {
        ConstructionPlan P = plan(q);
        SurfaceParams S = make_surface(q.g, q.e);
        oracle::Report rep = oracle::cross_check_plan(S, P);
        CHECK(rep.mismatches.empty());

        ConstructionPlan bad = P;
        REQUIRE(!bad.params.lengths.empty());
        bad.params.lengths.back() -= 1;
        CHECK(!oracle::cross_check_plan(S, bad).clean());
    }
}
