#include "priorforge/chern.hpp"

namespace priorforge {

ChernData line_bundle(DivisorClass d)
{
    return {1, d, 0};
}

ChernData ideal_sheaf(DivisorClass d, Int n)
{
    if (n < 0)
        throw NegativeLength("ideal_sheaf: length must be >= 0, got " + std::to_string(n));
    return {1, d, n};
}

ChernData twist(const SurfaceParams& S, ChernData c, DivisorClass d)
{
    ChernData out;
    out.rank = c.rank;
    out.c1 = c.c1 + c.rank * d;
    Int pairs = c.rank * (c.rank - 1) / 2;
    out.c2 = c.c2 + (c.rank - 1) * intersect(S, c.c1, d) + pairs * intersect(S, d, d);
    return out;
}

ChernData dual(const ChernData& c)
{
    if (c.rank > 2)
        throw UnsupportedRank("dual: only rank <= 2 is ever dualized here, got rank " +
                              std::to_string(c.rank));
    return {c.rank, -c.c1, c.c2};
}

ChernData extension_sum(const SurfaceParams& S, const ChernData& sub, const ChernData& quot)
{
    ChernData out;
    out.rank = sub.rank + quot.rank;
    out.c1 = sub.c1 + quot.c1;
    out.c2 = sub.c2 + quot.c2 + intersect(S, sub.c1, quot.c1);
    return out;
}

Int euler_char(const SurfaceParams& S, const ChernData& c)
{
    Int self = intersect(S, c.c1, c.c1);
    Int with_k = intersect(S, c.c1, S.K);
    Int num = self - with_k;
    if (num % 2 != 0)
        throw InternalInconsistency("euler_char: c1^2 - c1.K is odd for c1=" + to_string(c.c1));
    return c.rank * (1 - S.g) + num / 2 - c.c2;
}

}  // namespace priorforge
