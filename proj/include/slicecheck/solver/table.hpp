#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "slicecheck/fourmanifold/symmetry.hpp"
#include "slicecheck/solver/assumptions.hpp"

namespace slicecheck::solver {

using fourmanifold::GroupElement;

/// One coordinate of a class pattern: a constant, a constant with a free
/// sign (the "+-2" of (2,+-2)), or a free variable, possibly negated.
struct Slot {
    enum class Kind { constant, signed_constant, variable };
    Kind kind = Kind::constant;
    long value = 0;  // magnitude for signed constants
    char var = 0;    // 'x' or 'y'
    int sign = 1;    // for variables: +v or -v

    static Slot constant(long v) { return {Kind::constant, v, 0, 1}; }
    static Slot plus_minus(long v) { return {Kind::signed_constant, v, 0, 1}; }
    static Slot variable(char v) { return {Kind::variable, 0, v, 1}; }

    bool is_variable() const { return kind == Kind::variable; }
    Slot negated() const;
    std::string to_string() const;

    friend bool operator==(const Slot&, const Slot&) = default;
};

struct ClassPattern {
    Slot first;
    Slot second;

    std::string to_string() const { return "(" + first.to_string() + "," + second.to_string() + ")"; }
    friend bool operator==(const ClassPattern&, const ClassPattern&) = default;
};

/// A pattern pair with every free sign chosen.
struct Instantiation {
    ClassPattern alpha;
    ClassPattern beta;

    std::string to_string() const { return "(" + alpha.to_string() + "," + beta.to_string() + ")"; }
    friend bool operator==(const Instantiation&, const Instantiation&) = default;
};

Instantiation apply(const GroupElement& g, const Instantiation& inst);

/// Coefficients of alpha . beta = xy * c_xy + x * c_x + y * c_y + c_1.
struct CellPolynomial {
    long c_xy = 0;
    long c_x = 0;
    long c_y = 0;
    long c_1 = 0;

    std::string to_string() const;
    friend bool operator==(const CellPolynomial&, const CellPolynomial&) = default;
};

CellPolynomial cell_polynomial(const Instantiation& inst);

struct CellRef {
    int row = 0;  // 1-based, as in the printed table
    int col = 0;

    std::string to_string() const { return "(" + std::to_string(row) + "," + std::to_string(col) + ")"; }
    friend auto operator<=>(const CellRef&, const CellRef&) = default;
};

struct Equivalence {
    CellRef target;
    std::vector<GroupElement> elements;  // one per instantiation of the source cell
    GroupElement required;               // generators used by every instantiation
    GroupElement possibly;               // generators used by some instantiations only

    /// "s3 (+s2)" style.
    std::string describe() const;
};

struct TableCell {
    CellRef ref;
    ClassPattern row_pattern;
    ClassPattern col_pattern;
    std::vector<Instantiation> instantiations;  // row signs outermost, '+' before '-'
    std::vector<CellPolynomial> polynomials;    // parallel to instantiations
    std::string value;                          // rendered intersection, e.g. "y ± x"
    bool highlighted = false;
    std::optional<Equivalence> equivalence;
};

const std::array<ClassPattern, 3>& row_patterns();
const std::array<ClassPattern, 5>& column_patterns();

/// Every sign choice of the pair of patterns.
std::vector<Instantiation> instantiate(const ClassPattern& row, const ClassPattern& col);

/// Whether every member of inst is a member of target (as sets of class pairs).
bool contained_in(const Instantiation& inst, const Instantiation& target);

/// Renders the cell value from the per-sign polynomials.
std::string render_value(const std::vector<CellPolynomial>& polys);

/// The 15 cells in row-major order, with the highlight set derived from the
/// symmetry group. Requires g4 = 1 for both components.
std::vector<TableCell> build_table(const Assumptions& assumptions);

struct SymmetryCheck {
    CellRef cell;
    CellRef equivalent;
    GroupElement required;
    GroupElement possibly;
    std::vector<std::pair<Instantiation, GroupElement>> witnesses;
    std::vector<Instantiation> images;
};

/// Re-applies every recorded group element at pattern level; throws
/// SymmetryCheckFailed if an image is not contained in the stated cell.
std::vector<SymmetryCheck> check_table_symmetries(const std::vector<TableCell>& table);

}  // namespace slicecheck::solver
