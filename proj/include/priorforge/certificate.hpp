#pragma once

#include <optional>
#include <string>
#include <vector>

#include "priorforge/lattice.hpp"

namespace priorforge {

enum class Verdict { Zero, NonZero, Unknown };

std::string to_string(Verdict v);

// One applied deduction rule with its instantiation. Rules:
//   V1  effectivity lemma (a<0 or b<0 forces h0 = 0; the Effective direction
//       certifies h0 > 0)
//   V2  Serre duality reduction h2(M) = h0(K - M)
//   V3  generic-Z vanishing: |Z| >= h0_upper(D) kills h0 I_Z(D)
//   V4  extension sandwich: both constituents vanish
//   V5  coboundary injection: h0 E(-L) = 0 across a nontrivial extension by O(L)
//   V6  chi bound: chi < 0 forces h1 > 0 (also the ext^1 >= -chi counts)
struct TraceStep {
    std::string rule;            // "V1".."V6"
    std::string path;            // node path inside the queried expression
    DivisorClass divisor{0, 0};  // instantiated divisor the rule looked at
    std::optional<Int> n1;       // V3: length; V6: chi
    std::optional<Int> n2;       // V3: h0_upper; V6: clamped bound
    std::string note;            // short tag, e.g. "a<0", "serre", "strict"

    friend bool operator==(const TraceStep& x, const TraceStep& y)
    {
        return x.rule == y.rule && x.path == y.path && x.divisor == y.divisor && x.n1 == y.n1 &&
               x.n2 == y.n2 && x.note == y.note;
    }
    friend bool operator!=(const TraceStep& x, const TraceStep& y) { return !(x == y); }
};

struct CertQuery {
    std::string kind;           // "h0", "h2", "h1pos", "ext1", "cb", "noneff"
    DivisorClass twist{0, 0};

    friend bool operator==(const CertQuery& x, const CertQuery& y)
    {
        return x.kind == y.kind && x.twist == y.twist;
    }
};

struct Certificate {
    CertQuery query;
    Verdict verdict = Verdict::Unknown;
    std::vector<TraceStep> trace;

    friend bool operator==(const Certificate& x, const Certificate& y)
    {
        return x.query == y.query && x.verdict == y.verdict && x.trace == y.trace;
    }
    friend bool operator!=(const Certificate& x, const Certificate& y) { return !(x == y); }
};

// Deterministic one-line-per-step text form, e.g.
//   h0 @ (-1,2) => Zero
//     V1[s] (-1,3) a<0
std::string to_text(const Certificate& cert);

}  // namespace priorforge
