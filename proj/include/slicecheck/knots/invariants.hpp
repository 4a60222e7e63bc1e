#pragma once

#include <functional>
#include <map>
#include <optional>

#include "slicecheck/knots/expression.hpp"

namespace slicecheck::knots {

using exact::RootOfUnity;

/// Supplies sigma values for atoms that carry no Seifert matrix.
using AtomResolver = std::function<std::optional<int>(const std::string& name, const RootOfUnity& w)>;

struct EvalOptions {
    exact::SignatureOptions arithmetic{};
    AtomResolver resolver{};
};

/// True iff w is a root of det(V - t V^T). Exact: tests divisibility by the
/// cyclotomic polynomial of w's order.
bool is_alexander_root(const SeifertMatrix& v, const RootOfUnity& w);

/// Levine-Tristram signature of the form (1 - w)V + (1 - conj w)V^T.
/// Throws SignatureAtAlexanderRoot when the form is degenerate; sigma(1) = 0.
int lt_signature(const SeifertMatrix& v, const RootOfUnity& w, const exact::SignatureOptions& options = {});

int lt_signature(const KnotExpression& e, const RootOfUnity& w, const EvalOptions& options = {});

/// sigma of T(2, q), memoised for the default arithmetic mode.
int torus_signature(int q, const RootOfUnity& w, const exact::SignatureOptions& options = {});

/// |det(V + V^T)| = |Alexander polynomial at -1|.
long determinant_at_minus_one(const KnotExpression& e);

int arf(const KnotExpression& e);

/// Arf from a determinant: 0 iff det = +-1 mod 8.
int arf_from_determinant(long det);

struct KnotInvariants {
    int arf = 0;
    long determinant = 1;
    std::map<RootOfUnity, int> sigma;

    /// Throws InconsistentInvariant-style InputError if the record breaks the
    /// arithmetic relations between its fields.
    void validate() const;
};

KnotInvariants compute_invariants(const KnotExpression& e, const std::vector<RootOfUnity>& roots,
                                  const EvalOptions& options = {});

}  // namespace slicecheck::knots
