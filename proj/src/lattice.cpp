#include "priorforge/lattice.hpp"

namespace priorforge {

std::string to_string(DivisorClass d)
{
    return "(" + std::to_string(d.a) + "," + std::to_string(d.b) + ")";
}

SurfaceParams make_surface(Int g, Int e)
{
    if (g < 0 || e < 0)
        throw InvalidSurface("make_surface: need g >= 0 and e >= 0, got g=" + std::to_string(g) +
                             ", e=" + std::to_string(e));
    SurfaceParams S;
    S.g = g;
    S.e = e;
    S.ebar = e - 2 * (g - 1);
    S.K = DivisorClass{-2, -S.ebar};
    return S;
}

Int intersect(const SurfaceParams& S, DivisorClass d1, DivisorClass d2)
{
    return d1.a * d2.b + d2.a * d1.b - d1.a * d2.a * S.e;
}

EffectivityVerdict effectivity(const SurfaceParams& S, DivisorClass d)
{
    if (d.a < 0)
        return {Effectivity::NonEffective, "a<0"};
    if (d.b < 0)
        return {Effectivity::NonEffective, "b<0"};
    if (d.b > 2 * S.g - 2)
        return {Effectivity::Effective, "b>2g-2"};
    return {Effectivity::Unknown, "gray-zone"};
}

Int h0_upper(const SurfaceParams& S, DivisorClass d)
{
    if (d.a < 0 || d.b < 0)
        return 0;
    Int total = 0;
    for (Int j = 0; j <= d.a; ++j) {
        Int deg = d.b - j * S.e;
        if (deg + 1 > 0)
            total += deg + 1;
    }
    return total;
}

std::pair<Int, Int> curve_h0_interval(Int g, Int deg)
{
    if (g < 0)
        throw InvalidSurface("curve_h0_interval: need g >= 0");
    if (deg < 0)
        return {0, 0};
    if (deg > 2 * g - 2) {
        Int h = deg + 1 - g;
        return {h, h};
    }
    Int lo = deg + 1 - g;
    if (lo < 0)
        lo = 0;
    return {lo, deg / 2 + 1};
}

}  // namespace priorforge
