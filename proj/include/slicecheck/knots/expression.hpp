#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <variant>

#include "slicecheck/knots/seifert.hpp"

namespace slicecheck::knots {

struct KnotNode;

/// Immutable expression tree for a knot: unknot, atoms, mirror, reverse,
/// connected sum, (p, q)-cable and torus knots. Copies share structure.
class KnotExpression {
public:
    static KnotExpression unknot();
    /// Atom with an explicit Seifert matrix, or a symbolic atom (no matrix)
    /// whose invariants come from elsewhere.
    static KnotExpression atom(std::string name, std::optional<SeifertMatrix> seifert = std::nullopt);
    static KnotExpression mirror(KnotExpression e);
    static KnotExpression reverse(KnotExpression e);
    static KnotExpression sum(KnotExpression a, KnotExpression b);
    /// e_(p,q): winding number p, requires p >= 2 and gcd(p, q) = 1.
    static KnotExpression cable(KnotExpression e, int p, int q);
    /// T(p,q), same validity rule as cable.
    static KnotExpression torus(int p, int q);

    const KnotNode& node() const { return *node_; }

    /// Text in the CLI grammar, e.g. "sum(atom(A),cable(atom(B),2,3))".
    std::string to_string() const;
    /// Conventional notation, e.g. "A # B_(2,3)", "m(7_2)", "A # B^r # T(2,7)".
    std::string pretty() const;

private:
    explicit KnotExpression(std::shared_ptr<const KnotNode> n) : node_(std::move(n)) {}
    std::shared_ptr<const KnotNode> node_;
};

namespace node {
struct Unknot {};
struct Atom {
    std::string name;
    std::optional<SeifertMatrix> seifert;
};
struct Mirror {
    KnotExpression inner;
};
struct Reverse {
    KnotExpression inner;
};
struct Sum {
    KnotExpression left;
    KnotExpression right;
};
struct Cable {
    KnotExpression companion;
    int p;
    int q;
};
struct Torus {
    int p;
    int q;
};
}  // namespace node

struct KnotNode {
    std::variant<node::Unknot, node::Atom, node::Mirror, node::Reverse, node::Sum, node::Cable, node::Torus> value;
};

/// Looks up a Seifert matrix for atom(NAME); nullopt leaves the atom symbolic.
using AtomLookup = std::function<std::optional<SeifertMatrix>(const std::string& name)>;

/// Parses unknot | atom(NAME) | mirror(E) | reverse(E) | sum(E,E) | cable(E,p,q) | torus(p,q).
/// Whitespace is ignored. Throws InputError with the offending position.
KnotExpression parse_expression(const std::string& text, const AtomLookup& lookup = {});

}  // namespace slicecheck::knots
