#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "slicecheck/fourmanifold/homology.hpp"
#include "slicecheck/knots/expression.hpp"

namespace slicecheck::obstructions {

using fourmanifold::AffineClass;
using fourmanifold::HomologyClass;
using fourmanifold::IntQuadratic;
using knots::KnotExpression;

/// Invariants of the closed 4-manifold the discs live in.
struct AmbientData {
    int sigma_x = 0;
    int b2 = 2;
    bool even_form = true;
    int ks = 0;

    static AmbientData s2xs2() { return {}; }
};

enum class HypothesisKind { component_a, component_b, sum, sum_reverse_torus, sum_cable };
std::string to_string(HypothesisKind k);

/// "knot bounds a genus-g surface in the given class".
struct SliceHypothesis {
    std::string label;                  // e.g. "A # B_(2,3)"
    std::optional<KnotExpression> knot; // empty when the knot depends on the family parameter
    AffineClass cls;
    int genus = 0;
    std::string note;                   // why knot is empty, if it is
    HypothesisKind kind = HypothesisKind::component_a;
    long coeff_alpha = 1;               // cls = coeff_alpha * alpha + coeff_beta * beta
    long coeff_beta = 0;
    long q = 0;                         // torus or cable parameter, when the kind has one
    bool swapped = false;               // built from (beta, alpha); needs an isotopy swapping A and B
};

enum class Verdict { eliminated, survives, inapplicable };
std::string to_string(Verdict v);

struct SignatureWitness {
    int sigma = 0;
    long square = 0;
    int genus = 0;
    long m = 2;
    long r = 1;
    int sigma_x = 0;
    int b2 = 2;
    mpq_class value;  // sigma + sigma_X - 2 r (m - r) square / m^2
    long bound = 0;   // b2 + 2 g
};

struct ArfWitness {
    int arf = 0;
    long square = 0;
    int sigma_x = 0;
    long quotient = 0;  // (sigma_X - square) / 8
};

struct GenusWitness {
    HomologyClass cls;
    long min_genus = 0;
    long genus_bound = 0;
};

using Witness = std::variant<std::monostate, SignatureWitness, ArfWitness, GenusWitness>;

struct ObstructionOutcome {
    Verdict verdict = Verdict::inapplicable;
    std::string rule;  // "signature", "arf" or "genus"
    Witness witness;
    std::string reason;  // set for inapplicable outcomes

    bool eliminated() const { return verdict == Verdict::eliminated; }
    /// One-line human-readable account of the numbers involved.
    std::string describe() const;
};

/// n = -lk: both the twist parameter and the forced value of alpha . beta.
inline long required_intersection(long lk) { return -lk; }

bool is_prime_power(long m);

/// Signature bound |sigma(zeta_m^r) + sigma(X) - 2r(m-r)[S]^2/m^2| <= b2(X) + 2g.
/// If a concrete class is supplied it must be divisible by m.
ObstructionOutcome signature_obstruction(int sigma, long square, int genus, long m, long r,
                                         const AmbientData& x = AmbientData::s2xs2(),
                                         const std::optional<HomologyClass>& cls = std::nullopt);

/// (sigma(X) - [S]^2)/8 = Arf(K) mod 2 for a characteristic disc.
ObstructionOutcome arf_obstruction(int arf, const HomologyClass& cls, const AmbientData& x = AmbientData::s2xs2());
/// Family version: applies when the class is characteristic for every t and
/// its square does not depend on t.
ObstructionOutcome arf_obstruction(int arf, const AffineClass& cls, const AmbientData& x = AmbientData::s2xs2());

/// Capping a disc with a genus-g4 surface gives a closed surface of genus g4.
ObstructionOutcome genus_obstruction(long g4, const HomologyClass& cls);
ObstructionOutcome genus_obstruction(long g4, const AffineClass& cls);

/// (A, alpha) and (B, beta).
std::vector<SliceHypothesis> component_facts(const AffineClass& alpha, const AffineClass& beta);

/// The five discs built from D_A and D_B by band moves, in the order
/// A#B, A#B^r#T(2,2n-1), A#B^r#T(2,2n+1), A#B_(2,-2b^2-2n-1), A#B_(2,-2b^2-2n+1).
std::vector<SliceHypothesis> derived_facts(const AffineClass& alpha, const AffineClass& beta, long n,
                                           const IntQuadratic& beta_square);

struct ExoticReport {
    long f_a = 0;
    long f_b = 0;
    long lk = 0;
    bool framings_even = false;
    long det = 0;
    bool rank_two = false;
    bool indefinite = false;
    bool det_even = false;
    bool lk_even = false;
    std::vector<std::string> failures;

    bool passes() const { return failures.empty(); }
};

/// Matrix conditions on Q = [[f_A, lk], [lk, f_B]]: even, rank 2, indefinite.
ExoticReport exotic_precondition_check(long f_a, long f_b, long lk);

}  // namespace slicecheck::obstructions
