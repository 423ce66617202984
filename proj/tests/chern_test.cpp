#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "priorforge/chern.hpp"

using namespace priorforge;

TEST_CASE("constructors")
{
    CHECK(line_bundle({0, 0}) == ChernData{1, {0, 0}, 0});
    CHECK(line_bundle({1, -1}) == ChernData{1, {1, -1}, 0});
    CHECK(ideal_sheaf({1, 0}, 0) == ChernData{1, {1, 0}, 0});
    CHECK(ideal_sheaf({0, 1}, 5) == ChernData{1, {0, 1}, 5});
    CHECK_THROWS_AS(ideal_sheaf({0, 0}, -1), NegativeLength);
}

TEST_CASE("twist formula matches the rank-2 computations")
{
    SurfaceParams S = make_surface(0, 0);
    // E2 of the 2C0+tf chain, t = -3: c1 = C0, c2 = |Z| + b
    Int t = -3, b = -t - 1, z = 7;
    ChernData e2{2, {1, 0}, z + b};
    ChernData tw = twist(S, e2, {-1, -t});
    CHECK(tw.c1 == DivisorClass{-1, -2 * t});
    CHECK(tw.c2 == z - 1);

    ChernData any{3, {2, -5}, 11};
    CHECK(twist(S, any, {0, 0}) == any);
}

TEST_CASE("twist inverse on a grid")
{
    SurfaceParams S = make_surface(1, 2);
    for (Int r = 1; r <= 4; ++r)
        for (Int a = -2; a <= 2; ++a)
            for (Int b = -2; b <= 2; ++b) {
                ChernData c{r, {a, 2 - b}, a + b + 5};
                DivisorClass d{b, a - 1};
                CHECK(twist(S, twist(S, c, d), -d) == c);
            }
}

TEST_CASE("dual is an involution on rank <= 2 and refuses rank 3")
{
    CHECK(dual(ChernData{1, {2, -3}, 0}) == ChernData{1, {-2, 3}, 0});
    ChernData c{2, {1, 4}, 9};
    CHECK(dual(dual(c)) == c);
    CHECK_THROWS_AS(dual(ChernData{3, {0, 0}, 0}), UnsupportedRank);
}

TEST_CASE("extension sums")
{
    SurfaceParams S = make_surface(0, 0);
    CHECK(extension_sum(S, line_bundle({0, 0}), line_bundle({0, 0})) ==
          ChernData{2, {0, 0}, 0});

    // 2C0+tf chain: c2(E3) = c2(E2) + D.c1(E2) = |Z| - 1 - e
    for (Int g = 0; g <= 2; ++g)
        for (Int e = 0; e <= 2; ++e) {
            SurfaceParams Sge = make_surface(g, e);
            Int t = -2, b = -t - 1, z = 41;
            ChernData e2 = extension_sum(Sge, line_bundle({0, b}), ideal_sheaf({1, -b}, z));
            CHECK(e2 == ChernData{2, {1, 0}, z + b});
            ChernData e3 = extension_sum(Sge, e2, line_bundle({1, t}));
            CHECK(e3.c2 == z - 1 - e);
        }

    // rank-4 c1 = f chain at g = 0, e = 0, c2 = 50
    {
        Int c2 = 50, z = c2 - 2;
        ChernData e2 = extension_sum(S, line_bundle({0, 0}), ideal_sheaf({0, 1}, z));
        ChernData e3 = extension_sum(S, e2, line_bundle({1, -1}));
        ChernData e4 = extension_sum(S, e3, line_bundle({-1, 1}));
        CHECK(e4 == ChernData{4, {0, 1}, 50});
    }
}

TEST_CASE("euler characteristic closed forms")
{
    for (Int g = 0; g <= 3; ++g)
        for (Int e = 0; e <= 3; ++e) {
            SurfaceParams S = make_surface(g, e);
            CHECK(euler_char(S, line_bundle({0, 0})) == 1 - g);
            for (Int b = -3; b <= 5; ++b) {
                for (Int m = 0; m <= 1; ++m)
                    CHECK(euler_char(S, line_bundle({-1, -(m - 2 * b)})) == 0);
                for (Int d = -3; d <= 5; ++d)
                    CHECK(euler_char(S, line_bundle({-3, -(d - 3 * b - 2)})) ==
                          -6 + 2 * g - 3 * e + 2 * d - 6 * b);
            }
        }
}

TEST_CASE("chi is additive across extension sums")
{
    SurfaceParams S = make_surface(2, 3);
    for (Int a = -2; a <= 2; ++a)
        for (Int b = -2; b <= 2; ++b) {
            ChernData x{2, {a, b}, a + 3};
            ChernData y{1, {b, -a}, 0};
            CHECK(euler_char(S, extension_sum(S, x, y)) ==
                  euler_char(S, x) + euler_char(S, y));
        }
}

TEST_CASE("Serre chi identity for rank <= 2")
{
    // chi(E(K - M)) == chi(E*(M))
    for (Int g = 0; g <= 2; ++g)
        for (Int e = 0; e <= 2; ++e) {
            SurfaceParams S = make_surface(g, e);
            for (Int a = -2; a <= 2; ++a)
                for (Int b = -2; b <= 2; ++b) {
                    ChernData E{2, {a, b}, 2 * a - b + 4};
                    DivisorClass M{b, a};
                    CHECK(euler_char(S, twist(S, E, S.K - M)) ==
                          euler_char(S, twist(S, dual(E), M)));
                }
        }
}

TEST_CASE("ideal sheaf chi drops by the length")
{
    SurfaceParams S = make_surface(1, 1);
    for (Int a = -2; a <= 2; ++a)
        for (Int b = -2; b <= 2; ++b)
            for (Int n = 0; n <= 4; ++n)
                CHECK(euler_char(S, ideal_sheaf({a, b}, n)) ==
                      euler_char(S, line_bundle({a, b})) - n);
}
