#pragma once

#include "priorforge/lattice.hpp"

namespace priorforge {

// (rank, c1, c2) of a coherent sheaf on X; higher Chern classes vanish on a
// surface, so this triple carries every numeric invariant we use.
struct ChernData {
    Int rank = 1;
    DivisorClass c1{0, 0};
    Int c2 = 0;

    friend bool operator==(const ChernData& x, const ChernData& y)
    {
        return x.rank == y.rank && x.c1 == y.c1 && x.c2 == y.c2;
    }
    friend bool operator!=(const ChernData& x, const ChernData& y) { return !(x == y); }
};

ChernData line_bundle(DivisorClass d);

// Twisted ideal sheaf I_Z(d) of a length-n subscheme: rank 1, c2 = n.
ChernData ideal_sheaf(DivisorClass d, Int n);

// Chern data of C (x) O_X(d):
//   c1' = c1 + rank*d,  c2' = c2 + (rank-1)*(c1.d) + C(rank,2)*d^2.
ChernData twist(const SurfaceParams& S, ChernData c, DivisorClass d);

// (rank, -c1, c2). Exact for rank <= 2; refused above that, the calculus
// never dualizes higher rank.
ChernData dual(const ChernData& c);

// Whitney data of the middle term of 0 -> sub -> E -> quot -> 0.
ChernData extension_sum(const SurfaceParams& S, const ChernData& sub, const ChernData& quot);

// Riemann-Roch: chi = rank(1-g) - c1.K/2 + c1^2/2 - c2, exact over Z.
// The half-terms combine into an integer by adjunction parity; a failure of
// that parity throws InternalInconsistency.
Int euler_char(const SurfaceParams& S, const ChernData& c);

}  // namespace priorforge
