#include "priorforge/oracle.hpp"

#include <algorithm>

#include "priorforge/engine.hpp"

namespace priorforge {
namespace oracle {

Int whitney_c2(const SurfaceParams& S, const ChainConstituents& cc)
{
    Int total = 0;
    for (size_t i = 0; i < cc.pieces.size(); ++i) {
        total += cc.pieces[i].second;
        for (size_t j = i + 1; j < cc.pieces.size(); ++j)
            total += intersect(S, cc.pieces[i].first, cc.pieces[j].first);
    }
    return total;
}

namespace {

void expect(Report& rep, bool ok, const std::string& what)
{
    ++rep.checked;
    if (!ok)
        rep.mismatches.push_back(what);
}

std::string at(Int g, Int e)
{
    return " at g=" + std::to_string(g) + " e=" + std::to_string(e);
}

}  // namespace

Report closed_form_suite(const GridSpec& grid)
{
    Report rep;
    for (Int g = 0; g <= grid.gmax; ++g)
        for (Int e = 0; e <= grid.emax; ++e) {
            SurfaceParams S = make_surface(g, e);
            for (Int b = grid.bmin; b <= grid.bmax; ++b) {
                for (Int m = 0; m <= 1; ++m) {
                    Int chi = euler_char(S, line_bundle({-1, -(m - 2 * b)}));
                    expect(rep, chi == 0,
                           "chi O(-C0-(m-2b)f) != 0" + at(g, e) + " m=" + std::to_string(m) +
                               " b=" + std::to_string(b));
                }
                for (Int d = grid.dmin; d <= grid.dmax; ++d) {
                    Int chi = euler_char(S, line_bundle({-3, -(d - 3 * b - 2)}));
                    Int rhs = -6 + 2 * g - 3 * e + 2 * d - 6 * b;
                    expect(rep, chi == rhs,
                           "chi O(-3C0-(d-3b-2)f) mismatch" + at(g, e) + " d=" +
                               std::to_string(d) + " b=" + std::to_string(b));
                }
            }
            // 2C0 + tf chain: chi E2(-D) = 2 - g - |Z|
            for (Int t = grid.tmin; t <= grid.tmax; ++t)
                for (Int z = 0; z <= grid.zmax; ++z) {
                    Int b = -t - 1;
                    ChernData e2 = extension_sum(S, line_bundle({0, b}),
                                                 ideal_sheaf({1, -b}, z));
                    Int chi = euler_char(S, twist(S, e2, {-1, -t}));
                    expect(rep, chi == 2 - g - z,
                           "chi E2(-D) != 2-g-|Z|" + at(g, e) + " t=" + std::to_string(t) +
                               " z=" + std::to_string(z));
                }
            // C0 + df chain: c2, the dual twist c2, and the ext1 bound
            for (Int d = grid.dmin; d <= grid.dmax; ++d)
                for (Int b = grid.bmin; b <= grid.bmax; ++b)
                    for (Int l = 0; l <= grid.lmax; ++l) {
                        ChernData e2 = extension_sum(S, line_bundle({-1, b + 1}),
                                                     ideal_sheaf({2, d - 2 * b - 1}, l));
                        std::string ctx = at(g, e) + " d=" + std::to_string(d) +
                                          " b=" + std::to_string(b) + " l=" + std::to_string(l);
                        expect(rep, e2.c2 == l + 2 * e + 4 * b + 3 - d,
                               "c2(E2) != l+2e+4b+3-d" + ctx);
                        ChernData dual_tw = twist(S, dual(e2), {0, b});
                        expect(rep, dual_tw.c2 == 2 * e - d + 3 * b + 3 + l,
                               "c2(E2*(bf)) != 2e-d+3b+3+l" + ctx);
                        Ext1Bound eb = ext1_lower(
                            S, SheafExpr::ideal({2, d - 2 * b - 1}, l, true),
                            SheafExpr::line({-1, b + 1}));
                        expect(rep, -eb.chi == l + 6 - 2 * g + 3 * e - 2 * d + 6 * b,
                               "-chi of the ext1 complex != l+6-2g+3e-2d+6b" + ctx);
                    }
        }
    return rep;
}

SheafPtr random_expr(std::mt19937_64& rng, int max_rank)
{
    auto randint = [&](Int lo, Int hi) {
        return lo + (Int)(rng() % (unsigned long long)(hi - lo + 1));
    };
    // build with an exact leaf budget
    struct B {
        std::mt19937_64& rng;
        Int counter = 0;
        SheafPtr go(Int leaves)
        {
            auto ri = [&](Int lo, Int hi) {
                return lo + (Int)(rng() % (unsigned long long)(hi - lo + 1));
            };
            if (leaves == 1) {
                DivisorClass d{ri(-6, 6), ri(-6, 6)};
                if (ri(0, 1) == 0)
                    return SheafExpr::line(d);
                return SheafExpr::ideal(d, ri(1, 6), ri(0, 1) == 1,
                                        "Z" + std::to_string(++counter));
            }
            Int left = ri(1, leaves - 1);
            return SheafExpr::extension(go(left), go(leaves - left), ri(0, 1) == 1);
        }
    } builder{rng};
    Int leaves = randint(1, max_rank);
    return builder.go(leaves);
}

Report tree_equivalence_suite(Int count, unsigned long long seed, int max_rank)
{
    Report rep;
    std::mt19937_64 rng(seed);
    for (Int i = 0; i < count; ++i) {
        Int g = (Int)(rng() % 4);
        Int e = (Int)(rng() % 4);
        SurfaceParams S = make_surface(g, e);
        SheafPtr tree = random_expr(rng, max_rank);
        Int direct = whitney_c2(S, flatten(tree));
        Int folded = chern_of(S, tree).c2;
        expect(rep, direct == folded,
               "whitney_c2 != chern_of c2 on random tree #" + std::to_string(i) + at(g, e));
    }
    return rep;
}

// ---------------------------------------------------------------------------
// plan cross-check: re-derive everything straight from the displayed formulas
// ---------------------------------------------------------------------------

namespace {

Int omod(Int a, Int m)
{
    Int r = a % m;
    return r < 0 ? r + m : r;
}

void check_vec(Report& rep, const std::vector<DivisorClass>& got,
               const std::vector<DivisorClass>& want, const std::string& what)
{
    expect(rep, got == want, what);
}

}  // namespace

Report cross_check_plan(const SurfaceParams& S, const ConstructionPlan& P)
{
    Report rep;
    Int g = S.g, e = S.e;
    // re-derive against the normalized target recorded in the plan
    Int s = P.computed_normalized.c1.a;
    Int t = P.computed_normalized.c1.b;
    Int c2 = P.computed_normalized.c2;
    Int r = P.request.rank;
    const std::string& tag = P.theorem;

    Int b = P.params.b.value_or(0);

    if (tag == "rank3-s2") {
        expect(rep, b == -t - 1, "b != -t-1");
        expect(rep, P.params.lengths == std::vector<Int>{c2 + e + 1}, "|Z| != c2+e+1");
        expect(rep, P.params.twist_divisor == DivisorClass{1, t}, "D != C0+tf");
        check_vec(rep, P.params.divisors, {{0, b}, {1, -b}}, "E2 divisors differ");
        expect(rep, P.h0_lower == -t - g, "h0 lower != -t-g");
    } else if (tag == "rank3-s1" || tag == "rank3-s0") {
        Int d = t;
        Int l, bb;
        if (tag == "rank3-s1") {
            l = omod(c2 - 2 * e - 3 + d, 5);
            bb = (c2 - 2 * e - 3 + d - l) / 5;
        } else {
            Int r3 = omod(c2 + d + 1 - 3 * g - e, 3);
            l = r3 == 0 ? 3 : r3;
            bb = (c2 + d - 2 - e - l) / 3;
        }
        expect(rep, P.params.l == l, "l mismatch");
        expect(rep, b == bb, "b mismatch");
        check_vec(rep, P.params.divisors, {{-1, bb + 1}, {s + 1, d - 2 * bb - 1}},
                  "E2 divisors differ");
        expect(rep, P.params.lengths == std::vector<Int>{l}, "|Z| != l");
        expect(rep, P.h0_lower == bb + 1 - g, "h0 lower != b+1-g");
    } else if (tag == "rank4-s0-epos" || tag == "rank4-s0-eneg") {
        bool epos = tag == "rank4-s0-epos";
        Int z = epos ? c2 - 2 - e : c2 + e - 4 * g + 2;
        DivisorClass D = epos ? DivisorClass{1, -1} : DivisorClass{1, S.ebar - 1};
        expect(rep, P.params.lengths == std::vector<Int>{z}, "|Z| mismatch");
        expect(rep, P.params.twist_divisor == D, "D mismatch");
        expect(rep, P.h0_lower == 1, "h0 lower != 1");
    } else if (tag == "rank4-s1") {
        Int l = 3 + omod(c2 - 2 - e, 3);
        Int bb = (c2 - 2 - e - l) / 3;
        expect(rep, P.params.l == l, "l mismatch");
        expect(rep, b == bb, "b mismatch");
        expect(rep, P.params.lengths == std::vector<Int>{l}, "|Z| != l");
        expect(rep, P.params.twist_divisor == DivisorClass{1, -(bb + 1)}, "D mismatch");
        expect(rep, P.h0_lower == bb + 1 - g, "h0 lower != b+1-g");
    } else if (tag.rfind("rankr-", 0) == 0) {
        Int sumj = r * (r - 1) / 2 - 1;
        Int bb = 0;
        std::vector<DivisorClass> D;
        if (tag == "rankr-epos" || tag == "rankr-e0") {
            bb = (tag == "rankr-epos" ? r - 2 : r - 3) + t;
            D.push_back({-sumj, r - 1 + t});
            for (Int i = 2; i <= r - 2; ++i)
                D.push_back({i, r - i});
            D.push_back({r - 1 + s, -(bb + sumj)});
        } else if (tag == "rankr-em1") {
            bb = r - 6 + t;
            D.push_back({-sumj, r - 3 + t});
            for (Int i = 2; i <= r - 2; ++i)
                D.push_back({i, r - 3 * i});
            DivisorClass acc{0, bb};
            for (const auto& x : D)
                acc = acc + x;
            D.push_back(DivisorClass{s, t} - acc);
        } else {
            Int coef = ((r - 1) * (r - 2) + 2) / 2;
            bb = t - 1 - coef * S.ebar;
            DivisorClass acc{0, bb};
            for (Int i = 1; i <= r - 2; ++i) {
                D.push_back({i, i * S.ebar});
                acc = acc + D.back();
            }
            D.push_back(DivisorClass{s, t} - acc);
        }
        expect(rep, b == bb, "b mismatch");
        check_vec(rep, P.params.divisors, D, "divisor family differs");
        DivisorClass total{0, bb};
        for (const auto& x : D)
            total = total + x;
        expect(rep, total == DivisorClass{s, t}, "divisors do not reconstruct c1");
        // lengths: re-derive all but the last, then the last from c2
        if (P.params.lengths.size() == D.size() && !P.params.lengths.empty()) {
            Int pairs = 0;
            for (size_t i = 0; i < D.size(); ++i)
                for (size_t j = i + 1; j < D.size(); ++j)
                    pairs += intersect(S, D[i], D[j]);
            Int bfrow = intersect(S, DivisorClass{0, bb}, total - DivisorClass{0, bb});
            Int fixed = 0;
            for (size_t i = 0; i + 1 < P.params.lengths.size(); ++i)
                fixed += P.params.lengths[i];
            expect(rep, P.params.lengths.back() == c2 - fixed - pairs - bfrow,
                   "|Z_{r-1}| does not absorb c2");
        } else {
            expect(rep, false, "lengths/divisors size mismatch");
        }
        expect(rep, P.h0_lower == bb + 1 - g, "h0 lower != b+1-g");
    } else {
        expect(rep, false, "unknown theorem tag " + tag);
    }

    // Whitney recomputation from the flattened chain
    Int w = whitney_c2(S, flatten(P.chain));
    expect(rep, w == c2, "whitney c2 != normalized target c2");
    expect(rep, w == P.computed_normalized.c2, "whitney c2 != recorded computed c2");
    ChernData untw = twist(S, P.computed_normalized, -P.normalizing_twist);
    expect(rep, untw == P.computed, "un-twisted Chern data mismatch");
    expect(rep,
           P.computed == ChernData{P.request.rank,
                                   DivisorClass{P.request.s, P.request.t}, P.request.c2},
           "computed Chern data != request target");
    return rep;
}

}  // namespace oracle
}  // namespace priorforge
