#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "priorforge/chern.hpp"

namespace priorforge {

class SheafExpr;
using SheafPtr = std::shared_ptr<const SheafExpr>;

struct LineBundleNode {
    DivisorClass d;
};

struct IdealSheafNode {
    DivisorClass d;
    Int length = 0;     // > 0 after normalization
    bool generic = false;
    std::string label;  // disjointness tag, e.g. "Z2"
};

struct ExtensionNode {
    SheafPtr sub;
    SheafPtr quot;
    bool nontrivial = false;
};

// Expression tree the vanishing engine reasons about: line bundles, twisted
// ideal sheaves, and extensions. Immutable; share freely.
class SheafExpr {
public:
    using Node = std::variant<LineBundleNode, IdealSheafNode, ExtensionNode>;

    static SheafPtr line(DivisorClass d);
    // Length 0 normalizes to a plain line bundle.
    static SheafPtr ideal(DivisorClass d, Int length, bool generic, std::string label = "Z");
    static SheafPtr extension(SheafPtr sub, SheafPtr quot, bool nontrivial);
    // Right comb of trivial extensions; models a direct sum of the pieces.
    static SheafPtr direct_sum(const std::vector<SheafPtr>& pieces);

    const Node& node() const { return node_; }
    bool is_line() const { return std::holds_alternative<LineBundleNode>(node_); }
    bool is_ideal() const { return std::holds_alternative<IdealSheafNode>(node_); }
    bool is_extension() const { return std::holds_alternative<ExtensionNode>(node_); }
    const LineBundleNode& as_line() const { return std::get<LineBundleNode>(node_); }
    const IdealSheafNode& as_ideal() const { return std::get<IdealSheafNode>(node_); }
    const ExtensionNode& as_extension() const { return std::get<ExtensionNode>(node_); }

    Int rank() const;

private:
    explicit SheafExpr(Node n) : node_(std::move(n)) {}
    Node node_;
};

bool same_expr(const SheafPtr& x, const SheafPtr& y);

// Node lookup by path: "" is the root, segments "s"/"q" descend into an
// extension's sub/quot, joined by '.', e.g. "s.q". Throws on a bad path.
SheafPtr node_at(const SheafPtr& root, std::string_view path);

// In-order rank-1 constituents (divisor class, length), flattening every
// extension. Total rank = number of leaves.
struct ChainConstituents {
    std::vector<std::pair<DivisorClass, Int>> pieces;
};
ChainConstituents flatten(const SheafPtr& expr);

}  // namespace priorforge
