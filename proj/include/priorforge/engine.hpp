#pragma once

#include "priorforge/certificate.hpp"
#include "priorforge/sheaf.hpp"

namespace priorforge {

// Rule-based vanishing deduction over sheaf expressions. Sound but
// incomplete: Zero/NonZero only when one of the fixed rules derives it,
// Unknown otherwise, and every non-Unknown verdict carries a replayable trace.

ChernData chern_of(const SurfaceParams& S, const SheafPtr& expr);

struct EngineResult {
    Verdict verdict = Verdict::Unknown;
    Certificate cert;
};

// h0 of expr twisted by D.
EngineResult h0_verdict(const SurfaceParams& S, const SheafPtr& expr, DivisorClass D);

// h2 of expr twisted by D (Serre-reduced to h0 queries; ideal-sheaf lengths
// drop out of h2).
EngineResult h2_verdict(const SurfaceParams& S, const SheafPtr& expr, DivisorClass D);

// NonZero when chi(expr(D)) < 0 (then h1 >= -chi > 0); Unknown otherwise.
// The certificate records the computed chi either way.
EngineResult h1_positive(const SurfaceParams& S, const SheafPtr& expr, DivisorClass D);

struct Ext1Bound {
    Int bound = 0;   // max(0, -chi) lower bound for ext^1(quot, sub)
    Int chi = 0;     // chi of the Hom complex: chi(sub(-D_quot)) - |Z_quot|
    Certificate cert;
};

// Lower bound for ext^1(quot, sub) where quot is a rank-1 leaf (line bundle
// or ideal sheaf): ext^1 >= -chi, with chi = chi(sub(-D)) - |Z| for an
// ideal-sheaf quotient. Throws UnsupportedRank when quot is not a leaf.
Ext1Bound ext1_lower(const SurfaceParams& S, const SheafPtr& quot, const SheafPtr& sub);

struct CbResult {
    bool holds = false;
    Certificate cert;
};

// Cayley-Bacharach property of (O_X(dprime), Z): holds when the system is
// non-effective, or when Z is generic with |Z| strictly above h0_upper.
CbResult cayley_bacharach(const SurfaceParams& S, DivisorClass dprime, Int length, bool generic);

struct StepResult {
    bool nontrivial_ok = false;  // h1(base(-L)) certified nonzero
    bool simple = false;
    bool prioritary = false;
    Certificate cert_nontrivial;
    Certificate cert_simple_h0;      // h0 base(-L)
    Certificate cert_simple_h2;      // h2 base(K-L)
    Certificate cert_prioritary_h0;  // h0 base(K-L+f)
    Certificate cert_prioritary_h2;  // h2 base(-f-L)
};

// Recursion-theorem checks for 0 -> base -> E -> O_X(L) -> 0. base_simple and
// base_prioritary must themselves have been certified by the caller.
StepResult extension_step(const SurfaceParams& S, const SheafPtr& base, bool base_simple,
                          bool base_prioritary, DivisorClass L);

// Re-derives the certificate's query on expr and revalidates every recorded
// step's arithmetic from its own instantiation. On failure, *why (if non-null)
// gets a short reason.
bool replay_certificate(const SurfaceParams& S, const SheafPtr& expr, const Certificate& cert,
                        std::string* why = nullptr);

// Revalidates a single step's local arithmetic (the part that does not need
// the expression context).
bool replay_step(const SurfaceParams& S, const TraceStep& step, std::string* why = nullptr);

}  // namespace priorforge
