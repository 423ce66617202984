#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "priorforge/lattice.hpp"

using namespace priorforge;

TEST_CASE("make_surface derived invariants")
{
    SurfaceParams q = make_surface(0, 0);
    CHECK(q.ebar == 2);
    CHECK(q.K == DivisorClass{-2, -2});

    SurfaceParams el = make_surface(1, 0);
    CHECK(el.ebar == 0);
    CHECK(el.K == DivisorClass{-2, 0});

    SurfaceParams g2 = make_surface(2, 1);
    CHECK(g2.ebar == -1);
    CHECK(g2.K == DivisorClass{-2, 1});

    CHECK_THROWS_AS(make_surface(-1, 0), InvalidSurface);
    CHECK_THROWS_AS(make_surface(0, -2), InvalidSurface);
}

TEST_CASE("intersection form constants")
{
    for (Int e = 0; e <= 5; ++e) {
        SurfaceParams S = make_surface(0, e);
        CHECK(intersect(S, kSection, kSection) == -e);
        CHECK(intersect(S, kSection, kFiber) == 1);
        CHECK(intersect(S, kFiber, kFiber) == 0);
    }
    SurfaceParams S = make_surface(0, 1);
    CHECK(intersect(S, {2, 3}, {1, -1}) == -1);
}

TEST_CASE("intersection form is symmetric and bilinear")
{
    SurfaceParams S = make_surface(1, 2);
    for (Int a1 = -3; a1 <= 3; ++a1)
        for (Int b1 = -3; b1 <= 3; ++b1)
            for (Int a2 = -2; a2 <= 2; ++a2)
                for (Int b2 = -2; b2 <= 2; ++b2) {
                    DivisorClass x{a1, b1}, y{a2, b2}, z{a2 - a1, b1 + b2};
                    CHECK(intersect(S, x, y) == intersect(S, y, x));
                    CHECK(intersect(S, x + z, y) ==
                          intersect(S, x, y) + intersect(S, z, y));
                }
}

TEST_CASE("adjunction parity: D.D - D.K is even")
{
    for (Int g = 0; g <= 3; ++g)
        for (Int e = 0; e <= 3; ++e) {
            SurfaceParams S = make_surface(g, e);
            for (Int a = -4; a <= 4; ++a)
                for (Int b = -4; b <= 4; ++b) {
                    DivisorClass d{a, b};
                    CHECK((intersect(S, d, d) - intersect(S, d, S.K)) % 2 == 0);
                }
        }
}

TEST_CASE("effectivity verdicts")
{
    SurfaceParams p1 = make_surface(0, 0);
    CHECK(effectivity(p1, {-1, 5}).verdict == Effectivity::NonEffective);
    CHECK(effectivity(p1, {3, -1}).verdict == Effectivity::NonEffective);
    CHECK(effectivity(p1, {1, 0}).verdict == Effectivity::Effective);

    SurfaceParams g2 = make_surface(2, 0);
    CHECK(effectivity(g2, {1, 2}).verdict == Effectivity::Unknown);
    CHECK(effectivity(g2, {1, 3}).verdict == Effectivity::Effective);
    CHECK(effectivity(g2, {0, 0}).verdict == Effectivity::Unknown);
}

TEST_CASE("h0_upper values and properties")
{
    SurfaceParams e1 = make_surface(0, 1);
    CHECK(h0_upper(e1, {-1, 5}) == 0);
    CHECK(h0_upper(e1, {2, 1}) == 3);  // 2 + 1 + 0

    for (Int g = 0; g <= 2; ++g)
        for (Int e = 0; e <= 3; ++e) {
            SurfaceParams S = make_surface(g, e);
            for (Int a = -2; a <= 4; ++a)
                for (Int b = -2; b <= 6; ++b) {
                    DivisorClass d{a, b};
                    if (effectivity(S, d).verdict == Effectivity::NonEffective)
                        CHECK(h0_upper(S, d) == 0);
                    // monotone in b
                    CHECK(h0_upper(S, d) <= h0_upper(S, {a, b + 1}));
                    // coarse product bound
                    if (a >= 0 && b >= 0)
                        CHECK(h0_upper(S, d) <= (a + 1) * (b + 1));
                }
            // e = 0 closed form
            if (e == 0)
                for (Int a = 0; a <= 4; ++a)
                    for (Int b = -2; b <= 6; ++b)
                        CHECK(h0_upper(S, {a, b}) ==
                              (a + 1) * std::max<Int>(0, b + 1));
        }
}

TEST_CASE("curve h0 interval")
{
    CHECK(curve_h0_interval(0, -1) == std::pair<Int, Int>{0, 0});
    CHECK(curve_h0_interval(1, 3) == std::pair<Int, Int>{3, 3});
    CHECK(curve_h0_interval(2, 2) == std::pair<Int, Int>{1, 2});
    CHECK(curve_h0_interval(0, 4) == std::pair<Int, Int>{5, 5});
    CHECK(curve_h0_interval(3, 0) == std::pair<Int, Int>{0, 1});
}
