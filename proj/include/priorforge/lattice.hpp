#pragma once

#include <cstdint>
#include <string>
#include <utility>

#include "priorforge/errors.hpp"

namespace priorforge {

using Int = long long;

// Element a*C0 + b*f of Num(X) = Z + Z for a ruled surface X -> C,
// written in the section/fiber basis.
struct DivisorClass {
    Int a = 0;
    Int b = 0;

    friend DivisorClass operator+(DivisorClass x, DivisorClass y) { return {x.a + y.a, x.b + y.b}; }
    friend DivisorClass operator-(DivisorClass x, DivisorClass y) { return {x.a - y.a, x.b - y.b}; }
    friend DivisorClass operator-(DivisorClass x) { return {-x.a, -x.b}; }
    friend DivisorClass operator*(Int k, DivisorClass x) { return {k * x.a, k * x.b}; }
    friend bool operator==(DivisorClass x, DivisorClass y) { return x.a == y.a && x.b == y.b; }
    friend bool operator!=(DivisorClass x, DivisorClass y) { return !(x == y); }
};

inline const DivisorClass kFiber{0, 1};
inline const DivisorClass kSection{1, 0};

std::string to_string(DivisorClass d);

// Numerical invariants of the surface: genus g of the base curve, the
// invariant e = -deg(e-divisor) >= 0, the shifted invariant ebar = e - 2(g-1),
// and the canonical class K = -2*C0 - ebar*f.
struct SurfaceParams {
    Int g = 0;
    Int e = 0;
    Int ebar = 2;
    DivisorClass K{-2, -2};
};

SurfaceParams make_surface(Int g, Int e);

// Intersection pairing with C0^2 = -e, C0.f = 1, f^2 = 0.
Int intersect(const SurfaceParams& S, DivisorClass d1, DivisorClass d2);

enum class Effectivity { NonEffective, Effective, Unknown };

struct EffectivityVerdict {
    Effectivity verdict = Effectivity::Unknown;
    // short rule tag: "a<0", "b<0", "b>2g-2", "gray-zone"
    std::string reason;
};

// Lemma-2.2 style verdict on the numerical class. NonEffective is a
// certificate; Effective holds whenever a,b >= 0 and b > 2g-2 (the class then
// has h0 >= b+1-g > 0); the remaining strip 0 <= b <= 2g-2 depends on the
// actual divisor on C, which Num(X) does not see.
EffectivityVerdict effectivity(const SurfaceParams& S, DivisorClass d);

// Upper bound on h0(O_X(aC0 + bf)): 0 off the effective quadrant, otherwise
// sum_{j=0..a} max(0, b - j*e + 1), the degree-sum bound with the coarse
// per-term curve estimate h0 <= max(0, deg+1).
Int h0_upper(const SurfaceParams& S, DivisorClass d);

// Exact interval for h0 of a degree-deg line bundle on the genus-g base
// curve: pinned by Riemann-Roch outside [0, 2g-2], Clifford-type upper end
// inside.
std::pair<Int, Int> curve_h0_interval(Int g, Int deg);

}  // namespace priorforge
