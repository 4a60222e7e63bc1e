#pragma once

#include <optional>
#include <string>
#include <vector>

#include "slicecheck/exact/hermitian.hpp"
#include "slicecheck/knots/invariants.hpp"
#include "slicecheck/obstructions/obstructions.hpp"
#include "slicecheck/solver/table.hpp"

namespace slicecheck::solver {

using fourmanifold::AffineClass;
using fourmanifold::CasePair;
using fourmanifold::ConcretePair;
using fourmanifold::FamilyPair;
using obstructions::ObstructionOutcome;

/// A raw solution discarded because one of its classes is characteristic
/// with square 0 while that component has Arf invariant 1.
struct PrunedSolution {
    CasePair pair;
    char component = 'A';
    AffineClass cls;
    ObstructionOutcome outcome;
};

struct CellSolution {
    CellRef cell;
    std::vector<std::string> equations;  // one per sign choice, e.g. "y + x = 4"
    std::vector<FamilyPair> families;
    std::vector<ConcretePair> sporadics;
    std::vector<PrunedSolution> pruned;
};

/// All pairs of the cell with alpha . beta = target. Family parameters are
/// the cell variable that stays free.
CellSolution solve_cell(const TableCell& cell, long target, const Assumptions& assumptions);

struct CaseEntry {
    std::string id;  // "F1", "S3", ...
    CasePair pair;   // as found in its cell
    CasePair canonical;
    CellRef source;
};

struct Absorption {
    ConcretePair pair;
    CellRef source;
    std::string family_id;
    long t = 0;
    GroupElement element;  // element.apply(pair) == family.at(t)
};

struct Duplicate {
    CasePair pair;
    CellRef source;
    std::string same_as;
};

struct SolutionSet {
    std::vector<CaseEntry> families;
    std::vector<CaseEntry> sporadics;
    std::vector<Absorption> absorbed;
    std::vector<Duplicate> duplicates;

    std::vector<CaseEntry> cases() const;
};

/// Families first, then sporadics not lying on any family up to symmetry,
/// each kept once per symmetry class; order is discovery order.
SolutionSet dedupe_solutions(const std::vector<CellSolution>& cells);

/// One summand of a signature evaluation.
struct SignatureTerm {
    std::string knot;  // "A", "B", "T(2,3)"
    RootOfUnity at;
    int sign = 1;      // -1 for summands under a mirror
    int value = 0;     // contribution, sign already applied
    std::string source;  // "assumption", "torus" or "seifert"
};

/// Cable and sum formulas applied down to atoms and torus knots.
std::vector<SignatureTerm> signature_terms(const knots::KnotExpression& e, const RootOfUnity& w,
                                           const Assumptions& assumptions,
                                           const exact::SignatureOptions& options = {});

enum class Rule { genus, classical_signature, cable_signature };
std::string to_string(Rule r);

struct Attempt {
    Rule rule = Rule::genus;
    obstructions::SliceHypothesis hypothesis;
    std::vector<SignatureTerm> terms;  // signature rules only
    fourmanifold::IntQuadratic square;
    ObstructionOutcome outcome;
};

struct CaseOutcome {
    std::vector<Attempt> chain;  // every attempt up to and including the first elimination

    bool eliminated() const { return !chain.empty() && chain.back().outcome.eliminated(); }
    const Attempt* decisive() const { return eliminated() ? &chain.back() : nullptr; }
};

/// Genus rule, then the classical signature at zeta_2, then signatures at
/// zeta_8 and zeta_4; stops at the first elimination.
CaseOutcome eliminate_case(const CasePair& c, const Assumptions& assumptions,
                           const exact::SignatureOptions& options = {});

}  // namespace slicecheck::solver
