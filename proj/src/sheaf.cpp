#include "priorforge/sheaf.hpp"

namespace priorforge {

SheafPtr SheafExpr::line(DivisorClass d)
{
    return SheafPtr(new SheafExpr(LineBundleNode{d}));
}

SheafPtr SheafExpr::ideal(DivisorClass d, Int length, bool generic, std::string label)
{
    if (length < 0)
        throw NegativeLength("SheafExpr::ideal: length must be >= 0");
    if (length == 0)
        return line(d);
    return SheafPtr(new SheafExpr(IdealSheafNode{d, length, generic, std::move(label)}));
}

SheafPtr SheafExpr::extension(SheafPtr sub, SheafPtr quot, bool nontrivial)
{
    if (!sub || !quot)
        throw InternalInconsistency("SheafExpr::extension: null constituent");
    return SheafPtr(new SheafExpr(ExtensionNode{std::move(sub), std::move(quot), nontrivial}));
}

SheafPtr SheafExpr::direct_sum(const std::vector<SheafPtr>& pieces)
{
    if (pieces.empty())
        throw InternalInconsistency("SheafExpr::direct_sum: empty sum");
    SheafPtr acc = pieces.back();
    for (auto it = pieces.rbegin() + 1; it != pieces.rend(); ++it)
        acc = extension(*it, acc, false);
    return acc;
}

Int SheafExpr::rank() const
{
    if (is_extension())
        return as_extension().sub->rank() + as_extension().quot->rank();
    return 1;
}

bool same_expr(const SheafPtr& x, const SheafPtr& y)
{
    if (x == y)
        return true;
    if (!x || !y)
        return false;
    if (x->node().index() != y->node().index())
        return false;
    if (x->is_line())
        return x->as_line().d == y->as_line().d;
    if (x->is_ideal()) {
        const auto& a = x->as_ideal();
        const auto& b = y->as_ideal();
        return a.d == b.d && a.length == b.length && a.generic == b.generic && a.label == b.label;
    }
    const auto& a = x->as_extension();
    const auto& b = y->as_extension();
    return a.nontrivial == b.nontrivial && same_expr(a.sub, b.sub) && same_expr(a.quot, b.quot);
}

SheafPtr node_at(const SheafPtr& root, std::string_view path)
{
    SheafPtr cur = root;
    size_t pos = 0;
    while (pos < path.size()) {
        size_t dot = path.find('.', pos);
        std::string_view seg = path.substr(pos, dot == std::string_view::npos ? path.size() - pos
                                                                              : dot - pos);
        if (!cur->is_extension())
            throw InternalInconsistency("node_at: path descends past a leaf: " + std::string(path));
        if (seg == "s")
            cur = cur->as_extension().sub;
        else if (seg == "q")
            cur = cur->as_extension().quot;
        else
            throw InternalInconsistency("node_at: bad segment '" + std::string(seg) + "'");
        pos = (dot == std::string_view::npos) ? path.size() : dot + 1;
    }
    return cur;
}

static void flatten_into(const SheafPtr& e, ChainConstituents& out)
{
    if (e->is_extension()) {
        flatten_into(e->as_extension().sub, out);
        flatten_into(e->as_extension().quot, out);
        return;
    }
    if (e->is_line())
        out.pieces.emplace_back(e->as_line().d, 0);
    else
        out.pieces.emplace_back(e->as_ideal().d, e->as_ideal().length);
}

ChainConstituents flatten(const SheafPtr& expr)
{
    ChainConstituents out;
    flatten_into(expr, out);
    return out;
}

}  // namespace priorforge
