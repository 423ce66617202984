#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "priorforge/engine.hpp"

using namespace priorforge;

namespace {

SheafPtr s3_e2_tree(Int b, Int d, Int l, Int m_plus_1)
{
    return SheafExpr::extension(SheafExpr::line({-1, b + 1}),
                                SheafExpr::ideal({m_plus_1, d - 2 * b - 1}, l, false, "Z"), true);
}

}  // namespace

TEST_CASE("chern_of folds the tree")
{
    SurfaceParams S = make_surface(0, 0);
    CHECK(chern_of(S, SheafExpr::line({1, 0})) == ChernData{1, {1, 0}, 0});

    // E2 of the C0 + df chain: c2 = l + 2e + 4b + 3 - d
    for (Int g = 0; g <= 2; ++g)
        for (Int e = 0; e <= 2; ++e) {
            SurfaceParams Sge = make_surface(g, e);
            for (Int b = 2; b <= 5; ++b)
                for (Int d = 0; d <= 3; ++d)
                    for (Int l = 0; l <= 3; ++l)
                        CHECK(chern_of(Sge, s3_e2_tree(b, d, l, 2)).c2 ==
                              l + 2 * e + 4 * b + 3 - d);
        }

    // rank-4 c1 = f chain, g = e = 0, c2 = 50
    SheafPtr e2 = SheafExpr::extension(SheafExpr::line({0, 0}),
                                       SheafExpr::ideal({0, 1}, 48, true, "Z"), true);
    SheafPtr e3 = SheafExpr::extension(e2, SheafExpr::line({1, -1}), true);
    SheafPtr e4 = SheafExpr::extension(e3, SheafExpr::line({-1, 1}), true);
    CHECK(chern_of(S, e4) == ChernData{4, {0, 1}, 50});
}

TEST_CASE("h0 verdicts: line bundles and ideal sheaves")
{
    SurfaceParams S = make_surface(0, 0);
    auto r1 = h0_verdict(S, SheafExpr::line({3, 2}), {-4, 0});
    CHECK(r1.verdict == Verdict::Zero);
    REQUIRE(r1.cert.trace.size() == 1);
    CHECK(r1.cert.trace[0].rule == "V1");
    CHECK(r1.cert.trace[0].divisor == DivisorClass{-1, 2});

    auto r2 = h0_verdict(S, SheafExpr::ideal({0, 3}, 4, true, "Z"), {0, 0});
    CHECK(r2.verdict == Verdict::Zero);
    REQUIRE(r2.cert.trace.size() == 1);
    CHECK(r2.cert.trace[0].rule == "V3");
    CHECK(r2.cert.trace[0].n2 == Int{4});

    // without genericity the same query stays open
    auto r3 = h0_verdict(S, SheafExpr::ideal({0, 3}, 4, false, "Z"), {0, 0});
    CHECK(r3.verdict == Verdict::Unknown);
    CHECK(r3.cert.trace.empty());

    auto r4 = h0_verdict(S, SheafExpr::line({1, 0}), {0, 0});
    CHECK(r4.verdict == Verdict::NonZero);

    // non-effective underlying divisor kills the ideal sheaf without genericity
    auto r5 = h0_verdict(S, SheafExpr::ideal({2, 1}, 1, false, "Z"), {0, -2});
    CHECK(r5.verdict == Verdict::Zero);
    CHECK(r5.cert.trace[0].rule == "V1");
}

TEST_CASE("h0 on extensions: sandwich and injection")
{
    SurfaceParams S = make_surface(0, 0);
    // sandwich
    SheafPtr both = SheafExpr::extension(SheafExpr::line({-1, 0}), SheafExpr::line({0, -1}),
                                         false);
    auto rs = h0_verdict(S, both, {0, 0});
    CHECK(rs.verdict == Verdict::Zero);
    CHECK(rs.cert.trace.back().rule == "V4");

    // V5: quotient O(L) queried at -L; here L = 0 so the quotient itself has
    // sections and only the injection argument concludes
    SheafPtr ext = SheafExpr::extension(SheafExpr::line({-1, 0}), SheafExpr::line({0, 0}), true);
    auto rv = h0_verdict(S, ext, {0, 0});
    CHECK(rv.verdict == Verdict::Zero);
    CHECK(rv.cert.trace.back().rule == "V5");

    // same tree with a trivial extension: no injection, stays Unknown
    SheafPtr triv = SheafExpr::extension(SheafExpr::line({-1, 0}), SheafExpr::line({0, 0}), false);
    CHECK(h0_verdict(S, triv, {0, 0}).verdict == Verdict::Unknown);

    // nontrivial extension by O(L) at a twist other than -L gets no V5
    auto off = h0_verdict(S, ext, {0, 1});
    CHECK(off.verdict == Verdict::Unknown);
}

TEST_CASE("h2 verdicts")
{
    SurfaceParams S = make_surface(0, 0);
    auto r1 = h2_verdict(S, SheafExpr::line({3, 2}), {0, 0});
    CHECK(r1.verdict == Verdict::Zero);
    CHECK(r1.cert.trace[0].rule == "V2");
    CHECK(r1.cert.trace[1].divisor == DivisorClass{-5, -4});

    // h2 I_Z(K) is dual to h0 O_X: nonzero
    auto r2 = h2_verdict(S, SheafExpr::ideal(S.K, 3, true, "Z"), {0, 0});
    CHECK(r2.verdict == Verdict::NonZero);

    SheafPtr ext = SheafExpr::extension(SheafExpr::line({0, 0}), SheafExpr::line({1, 1}), false);
    auto r3 = h2_verdict(S, ext, {0, 0});
    CHECK(r3.verdict == Verdict::Zero);
    CHECK(r3.cert.trace.back().rule == "V4");
}

TEST_CASE("h1 positivity via chi")
{
    // E2(-D) of the 2C0+tf chain has chi = 2 - g - |Z|
    for (Int g = 0; g <= 2; ++g) {
        SurfaceParams S = make_surface(g, 1);
        Int t = -2, b = -t - 1, z = 10;
        SheafPtr e2 = SheafExpr::extension(SheafExpr::line({0, b}),
                                           SheafExpr::ideal({1, -b}, z, true, "Z"), true);
        auto r = h1_positive(S, e2, {-1, -t});
        CHECK(r.verdict == Verdict::NonZero);
        CHECK(r.cert.trace[0].n1 == Int{2 - g - z});
    }
    SurfaceParams S0 = make_surface(0, 0);
    auto ru = h1_positive(S0, SheafExpr::line({0, 0}), {0, 0});
    CHECK(ru.verdict == Verdict::Unknown);
    CHECK(ru.cert.trace[0].n1 == Int{1});
}

TEST_CASE("ext1 lower bounds")
{
    // C0 + df case: bound = l + 6 - 2g + 3e - 2d + 6b
    for (Int g = 0; g <= 2; ++g)
        for (Int e = 0; e <= 2; ++e) {
            SurfaceParams S = make_surface(g, e);
            for (Int b = 3; b <= 6; ++b)
                for (Int d = 0; d <= 2; ++d)
                    for (Int l = 0; l <= 3; ++l) {
                        Ext1Bound eb =
                            ext1_lower(S, SheafExpr::ideal({2, d - 2 * b - 1}, l, false, "Z"),
                                       SheafExpr::line({-1, b + 1}));
                        CHECK(-eb.chi == l + 6 - 2 * g + 3 * e - 2 * d + 6 * b);
                    }
        }

    // the C0 + (m-b)f quotient over O(bf): bound |Z| exactly
    for (Int m = 0; m <= 1; ++m) {
        SurfaceParams S = make_surface(1, 2);
        Int b = 4, z = 9;
        Ext1Bound eb = ext1_lower(S, SheafExpr::ideal({1, m - b}, z, true, "Z"),
                                  SheafExpr::line({0, b}));
        CHECK(eb.bound == z);
    }

    SurfaceParams S0 = make_surface(0, 0);
    Ext1Bound self = ext1_lower(S0, SheafExpr::line({0, 0}), SheafExpr::line({0, 0}));
    CHECK(self.bound == 0);
    CHECK(self.chi == 1);

    CHECK_THROWS_AS(ext1_lower(S0,
                               SheafExpr::extension(SheafExpr::line({0, 0}),
                                                    SheafExpr::line({0, 0}), false),
                               SheafExpr::line({0, 0})),
                    UnsupportedRank);
}

TEST_CASE("cayley-bacharach")
{
    SurfaceParams S = make_surface(0, 0);
    CHECK(cayley_bacharach(S, {-1, 7}, 0, false).holds);
    CHECK(!cayley_bacharach(S, {0, 0}, 0, false).holds);
    // generic strict count
    CHECK(cayley_bacharach(S, {0, 1}, 3, true).holds);
    CHECK(!cayley_bacharach(S, {0, 1}, 2, true).holds);   // h0_upper = 2, needs strict
    CHECK(!cayley_bacharach(S, {0, 1}, 3, false).holds);  // genericity required
}

TEST_CASE("extension_step reproduces the 2C0+tf chain checks")
{
    SurfaceParams S = make_surface(0, 0);
    Int t = -2, b = -t - 1, z = 103;  // c2 = 100, e = 0
    SheafPtr e2 = SheafExpr::extension(SheafExpr::line({0, b}),
                                       SheafExpr::ideal({1, -b}, z, true, "Z"), true);
    StepResult st = extension_step(S, e2, true, true, {1, t});
    CHECK(st.nontrivial_ok);
    CHECK(st.simple);
    CHECK(st.prioritary);

    StepResult none = extension_step(S, SheafExpr::line({0, 0}), true, true, {0, 0});
    CHECK(!none.nontrivial_ok);
}

TEST_CASE("certificate replay accepts honest certs and rejects edits")
{
    SurfaceParams S = make_surface(0, 1);
    SheafPtr e2 = SheafExpr::extension(SheafExpr::line({0, 3}),
                                       SheafExpr::ideal({1, -3}, 12, true, "Z"), true);
    auto r = h0_verdict(S, e2, {-1, 2});
    REQUIRE(r.verdict == Verdict::Zero);
    std::string why;
    CHECK(replay_certificate(S, e2, r.cert, &why));

    Certificate tampered = r.cert;
    tampered.trace[0].divisor = {0, 0};
    CHECK(!replay_certificate(S, e2, tampered, &why));
    CHECK(!why.empty());

    Certificate flipped = r.cert;
    flipped.verdict = Verdict::NonZero;
    CHECK(!replay_certificate(S, e2, flipped, nullptr));
}

// a small randomized soundness sweep: replayability, no unsupported NonZero,
// and the sandwich direction with planted zero leaves
TEST_CASE("randomized soundness")
{
    std::mt19937_64 rng(12345);
    auto ri = [&](Int lo, Int hi) {
        return lo + (Int)(rng() % (unsigned long long)(hi - lo + 1));
    };

    for (int iter = 0; iter < 500; ++iter) {
        SurfaceParams S = make_surface(ri(0, 3), ri(0, 3));
        // random depth-2 tree
        auto leaf = [&]() -> SheafPtr {
            DivisorClass d{ri(-4, 4), ri(-4, 4)};
            if (ri(0, 1))
                return SheafExpr::line(d);
            return SheafExpr::ideal(d, ri(1, 5), ri(0, 1) == 1, "Z");
        };
        SheafPtr tree = SheafExpr::extension(SheafExpr::extension(leaf(), leaf(), ri(0, 1) == 1),
                                             leaf(), ri(0, 1) == 1);
        DivisorClass tw{ri(-3, 3), ri(-3, 3)};

        auto h0 = h0_verdict(S, tree, tw);
        auto h2 = h2_verdict(S, tree, tw);
        std::string why;
        CHECK(replay_certificate(S, tree, h0.cert, &why));
        CHECK(replay_certificate(S, tree, h2.cert, &why));
        if (h0.verdict == Verdict::NonZero) {
            // only an effective line bundle can certify NonZero for h0
            REQUIRE(h0.cert.trace.size() == 1);
            CHECK(h0.cert.trace[0].rule == "V1");
            CHECK(h0.cert.trace[0].note == "b>2g-2");
        }
        auto h1 = h1_positive(S, tree, tw);
        if (h1.verdict == Verdict::NonZero)
            CHECK(*h1.cert.trace[0].n1 < 0);
    }

    // planted-zero sandwich: all leaves certified Zero at the twist forces the
    // extension Zero at that twist
    for (int iter = 0; iter < 300; ++iter) {
        SurfaceParams S = make_surface(ri(0, 2), ri(0, 2));
        DivisorClass tw{ri(-3, 3), ri(-3, 3)};
        auto zero_leaf = [&]() -> SheafPtr {
            // choose a divisor whose twisted total has a < 0
            DivisorClass d{-1 - ri(0, 3) - tw.a, ri(-3, 3)};
            return ri(0, 1) ? SheafExpr::line(d) : SheafExpr::ideal(d, ri(1, 4), false, "Z");
        };
        SheafPtr tree = SheafExpr::extension(zero_leaf(),
                                             SheafExpr::extension(zero_leaf(), zero_leaf(),
                                                                  ri(0, 1) == 1),
                                             ri(0, 1) == 1);
        CHECK(h0_verdict(S, tree, tw).verdict == Verdict::Zero);
    }
}
