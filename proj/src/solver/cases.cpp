#include "slicecheck/solver/cases.hpp"

#include <algorithm>
#include <cstdlib>

#include "slicecheck/error.hpp"

namespace slicecheck::solver {

using fourmanifold::AffineInt;
using knots::KnotExpression;
namespace node = knots::node;

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};

bool mentions(const Instantiation& inst, char var) {
    for (const Slot& s : {inst.alpha.first, inst.alpha.second, inst.beta.first, inst.beta.second})
        if (s.is_variable() && s.var == var) return true;
    return false;
}

AffineClass build_class(const ClassPattern& p, AffineInt x, AffineInt y) {
    auto coord = [&](const Slot& s) -> AffineInt {
        if (!s.is_variable()) return {s.value, 0};
        return s.sign * (s.var == 'x' ? x : y);
    };
    return {coord(p.first), coord(p.second)};
}

struct Assignment {
    AffineInt x;
    AffineInt y;
};

// Solutions of poly = target over the variables of inst; t is the parameter.
std::vector<Assignment> solve_equation(const CellPolynomial& poly, long target, const Instantiation& inst,
                                       const std::string& where) {
    const AffineInt t{0, 1};
    const AffineInt zero{0, 0};
    const bool has_x = mentions(inst, 'x');
    const bool has_y = mentions(inst, 'y');
    const long n = target - poly.c_1;
    auto unsupported = [&]() {
        return UnsupportedEquationShape("cell " + where + ": cannot solve " + poly.to_string() + " = " +
                                        std::to_string(target));
    };
    std::vector<Assignment> out;

    if (poly.c_xy == 0 && poly.c_x == 0 && poly.c_y == 0) {
        if (n != 0) return out;
        if (has_x && has_y) throw unsupported();  // two free parameters
        out.push_back({has_x ? t : zero, has_y ? t : zero});
        return out;
    }

    if (poly.c_xy == 0) {
        if (poly.c_x != 0 && poly.c_y != 0) {
            if (std::labs(poly.c_y) == 1) {
                out.push_back({t, {n * poly.c_y, -poly.c_x * poly.c_y}});
            } else if (std::labs(poly.c_x) == 1) {
                out.push_back({{n * poly.c_x, -poly.c_y * poly.c_x}, t});
            } else {
                throw unsupported();
            }
            return out;
        }
        const bool on_y = poly.c_y != 0;
        const long c = on_y ? poly.c_y : poly.c_x;
        if (std::labs(c) > 2) throw unsupported();
        if (n % c != 0) return out;
        const AffineInt value{n / c, 0};
        const bool other_free = on_y ? has_x : has_y;
        const AffineInt other = other_free ? t : zero;
        out.push_back(on_y ? Assignment{other, value} : Assignment{value, other});
        return out;
    }

    if (std::labs(poly.c_xy) != 1 || poly.c_x != 0 || poly.c_y != 0) throw unsupported();
    const long m = n * poly.c_xy;
    if (m == 0) {
        out.push_back({zero, t});
        out.push_back({t, zero});
        return out;
    }
    const long am = std::labs(m);
    for (long d = 1; d <= am; ++d) {
        if (am % d != 0) continue;
        for (const long x : {d, -d}) out.push_back({{x, 0}, {m / x, 0}});
    }
    return out;
}

std::optional<PrunedSolution> arf_prune(const CasePair& pair, const AffineClass& alpha, const AffineClass& beta,
                                        const Assumptions& a) {
    const std::array<std::tuple<char, const AffineClass*, int>, 2> sides{
        {{'A', &alpha, a.arf_a}, {'B', &beta, a.arf_b}}};
    for (const auto& [component, cls, arf] : sides) {
        if (arf != 1 || !fourmanifold::is_identically_characteristic(*cls)) continue;
        if (fourmanifold::family_square(*cls) != fourmanifold::IntQuadratic{}) continue;
        auto outcome = obstructions::arf_obstruction(arf, *cls);
        if (outcome.eliminated()) return PrunedSolution{pair, component, *cls, std::move(outcome)};
    }
    return std::nullopt;
}

void collect_terms(const KnotExpression& e, const RootOfUnity& w, int sign, const Assumptions& a,
                   const exact::SignatureOptions& options, std::vector<SignatureTerm>& out) {
    std::visit(overloaded{
                   [](const node::Unknot&) {},
                   [&](const node::Atom& atom) {
                       if (atom.seifert) {
                           const int v = knots::lt_signature(*atom.seifert, w, options);
                           out.push_back({atom.name, w.normalized(), sign, sign * v, "seifert"});
                           return;
                       }
                       std::optional<int> v;
                       if (atom.name == "A" || atom.name == "B") v = a.sigma(atom.name[0], w);
                       if (!v) throw UnresolvedAtom(atom.name + " at " + w.to_string());
                       out.push_back({atom.name, w.normalized(), sign, sign * *v, "assumption"});
                   },
                   [&](const node::Mirror& m) { collect_terms(m.inner, w, -sign, a, options, out); },
                   [&](const node::Reverse& r) { collect_terms(r.inner, w, sign, a, options, out); },
                   [&](const node::Sum& s) {
                       collect_terms(s.left, w, sign, a, options, out);
                       collect_terms(s.right, w, sign, a, options, out);
                   },
                   [&](const node::Cable& c) {
                       if (c.p != 2) throw UnsupportedTorusParameters("cables are only supported with winding number 2");
                       collect_terms(c.companion, w.pow(c.p), sign, a, options, out);
                       const int v = knots::torus_signature(c.q, w, options);
                       out.push_back({"T(2," + std::to_string(c.q) + ")", w.normalized(), sign, sign * v, "torus"});
                   },
                   [&](const node::Torus& t) {
                       if (t.p != 2) throw UnsupportedTorusParameters("torus knots are only supported for p = 2");
                       const int v = knots::torus_signature(t.q, w, options);
                       out.push_back({"T(2," + std::to_string(t.q) + ")", w.normalized(), sign, sign * v, "torus"});
                   },
               },
               e.node().value);
}

ObstructionOutcome inapplicable(const std::string& rule, std::string reason) {
    ObstructionOutcome o;
    o.verdict = obstructions::Verdict::inapplicable;
    o.rule = rule;
    o.reason = std::move(reason);
    return o;
}

Attempt signature_attempt(Rule rule, const obstructions::SliceHypothesis& h, long m, long r,
                          const Assumptions& a, const exact::SignatureOptions& options) {
    Attempt at;
    at.rule = rule;
    at.hypothesis = h;
    at.square = fourmanifold::family_square(h.cls);
    const std::string at_root = " at " + RootOfUnity(m, r).to_string();
    if (!h.knot) {
        at.outcome = inapplicable("signature", h.note);
    } else if (!fourmanifold::is_identically_divisible(h.cls, m)) {
        at.outcome = inapplicable("signature", "class " + h.cls.to_string() + " is not divisible by " + std::to_string(m));
    } else if (!at.square.is_constant()) {
        at.outcome = inapplicable("signature", "square " + at.square.to_string() + " depends on t");
    } else {
        try {
            at.terms = signature_terms(*h.knot, RootOfUnity(m, r), a, options);
            int sigma = 0;
            for (const auto& term : at.terms) sigma += term.value;
            at.outcome = obstructions::signature_obstruction(sigma, at.square.c0, h.genus, m, r,
                                                             obstructions::AmbientData::s2xs2(), h.cls.constant());
        } catch (const SignatureAtAlexanderRoot& e) {
            at.terms.clear();
            at.outcome = inapplicable("signature", std::string(e.what()) + at_root);
        } catch (const UnresolvedAtom& e) {
            at.terms.clear();
            at.outcome = inapplicable("signature", "no signature value for " + std::string(e.what()));
        }
    }
    return at;
}

}  // namespace

CellSolution solve_cell(const TableCell& cell, long target, const Assumptions& assumptions) {
    CellSolution out;
    out.cell = cell.ref;
    for (std::size_t i = 0; i < cell.instantiations.size(); ++i) {
        const Instantiation& inst = cell.instantiations[i];
        const CellPolynomial& poly = cell.polynomials[i];
        out.equations.push_back(poly.to_string() + " = " + std::to_string(target));
        for (const auto& s : solve_equation(poly, target, inst, cell.ref.to_string())) {
            const AffineClass alpha = build_class(inst.alpha, s.x, s.y);
            const AffineClass beta = build_class(inst.beta, s.x, s.y);
            CasePair pair;
            if (alpha.is_constant() && beta.is_constant()) pair = ConcretePair{*alpha.constant(), *beta.constant()};
            else pair = FamilyPair(alpha, beta);
            if (auto pruned = arf_prune(pair, alpha, beta, assumptions)) {
                out.pruned.push_back(std::move(*pruned));
                continue;
            }
            if (auto* c = std::get_if<ConcretePair>(&pair)) out.sporadics.push_back(*c);
            else out.families.push_back(std::get<FamilyPair>(pair));
        }
    }
    return out;
}

std::vector<CaseEntry> SolutionSet::cases() const {
    std::vector<CaseEntry> out = families;
    out.insert(out.end(), sporadics.begin(), sporadics.end());
    return out;
}

SolutionSet dedupe_solutions(const std::vector<CellSolution>& cells) {
    SolutionSet out;
    for (const auto& cell : cells) {
        for (const auto& f : cell.families) {
            const CasePair key = fourmanifold::canonical_pair(CasePair(f));
            const auto it = std::find_if(out.families.begin(), out.families.end(),
                                         [&](const CaseEntry& e) { return e.canonical == key; });
            if (it != out.families.end()) {
                out.duplicates.push_back({f, cell.cell, it->id});
                continue;
            }
            out.families.push_back({"F" + std::to_string(out.families.size() + 1), f, key, cell.cell});
        }
    }
    for (const auto& cell : cells) {
        for (const auto& s : cell.sporadics) {
            const CasePair key = fourmanifold::canonical_pair(CasePair(s));
            const auto it = std::find_if(out.sporadics.begin(), out.sporadics.end(),
                                         [&](const CaseEntry& e) { return e.canonical == key; });
            if (it != out.sporadics.end()) {
                out.duplicates.push_back({s, cell.cell, it->id});
                continue;
            }
            bool absorbed = false;
            for (const auto& f : out.families) {
                if (auto m = fourmanifold::family_member(std::get<FamilyPair>(f.pair), s)) {
                    out.absorbed.push_back({s, cell.cell, f.id, m->t, m->element});
                    absorbed = true;
                    break;
                }
            }
            if (!absorbed) out.sporadics.push_back({"S" + std::to_string(out.sporadics.size() + 1), s, key, cell.cell});
        }
    }
    return out;
}

std::vector<SignatureTerm> signature_terms(const KnotExpression& e, const RootOfUnity& w, const Assumptions& a,
                                           const exact::SignatureOptions& options) {
    std::vector<SignatureTerm> out;
    collect_terms(e, w, 1, a, options, out);
    return out;
}

std::string to_string(Rule r) {
    switch (r) {
        case Rule::genus: return "genus";
        case Rule::classical_signature: return "classical-signature";
        case Rule::cable_signature: return "cable-signature";
    }
    return "?";
}

CaseOutcome eliminate_case(const CasePair& c, const Assumptions& a, const exact::SignatureOptions& options) {
    AffineClass alpha, beta;
    if (const auto* p = std::get_if<ConcretePair>(&c)) {
        alpha = p->alpha;
        beta = p->beta;
    } else {
        alpha = std::get<FamilyPair>(c).alpha;
        beta = std::get<FamilyPair>(c).beta;
    }
    const long n = obstructions::required_intersection(a.lk);
    auto hypotheses = obstructions::component_facts(alpha, beta);
    if (a.structure_a1) {
        auto derived = obstructions::derived_facts(alpha, beta, n, fourmanifold::family_square(beta));
        hypotheses.insert(hypotheses.end(), derived.begin(), derived.end());
        if (a.symmetric_link) {
            // the isotopy exchanging A and B realizes (beta, alpha) as well
            for (auto h : obstructions::derived_facts(beta, alpha, n, fourmanifold::family_square(alpha))) {
                if (h.kind != obstructions::HypothesisKind::sum_cable) continue;
                h.swapped = true;
                h.label += " (swapped)";
                hypotheses.push_back(std::move(h));
            }
        }
    }

    CaseOutcome out;
    // (i) a disc for A # B capped by a surface of genus g4(A) + g4(B)
    if (a.structure_a1) {
        Attempt at;
        at.rule = Rule::genus;
        at.hypothesis = hypotheses[2];
        at.hypothesis.genus = static_cast<int>(a.g4_a + a.g4_b);
        at.square = fourmanifold::family_square(at.hypothesis.cls);
        at.outcome = obstructions::genus_obstruction(a.g4_a + a.g4_b, at.hypothesis.cls);
        out.chain.push_back(std::move(at));
        if (out.eliminated()) return out;
    }
    // (ii) classical signature, then (iii) higher-order signatures where the cable terms enter
    const std::array<std::pair<Rule, long>, 3> passes{
        {{Rule::classical_signature, 2}, {Rule::cable_signature, 8}, {Rule::cable_signature, 4}}};
    for (const auto& [rule, m] : passes) {
        for (const auto& h : hypotheses) {
            out.chain.push_back(signature_attempt(rule, h, m, 1, a, options));
            if (out.eliminated()) return out;
        }
    }
    return out;
}

}  // namespace slicecheck::solver
