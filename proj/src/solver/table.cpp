#include "slicecheck/solver/table.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

#include "slicecheck/error.hpp"

namespace slicecheck::solver {

namespace {

const char* const kPlusMinus = "±";

ClassPattern apply_class(const GroupElement& g, const ClassPattern& p) {
    ClassPattern out = g.s1() ? ClassPattern{p.second, p.first} : p;
    if (g.s2()) out = {out.first.negated(), out.second.negated()};
    return out;
}

std::string monomial(long magnitude, const std::string& m) {
    if (m.empty()) return std::to_string(magnitude);
    return (magnitude == 1 ? std::string() : std::to_string(magnitude)) + m;
}

bool slot_contained(const Slot& s, const Slot& target) {
    if (target.is_variable()) return true;
    return !s.is_variable() && s.value == target.value;
}

GroupElement from_flags(bool s1, bool s2, bool s3) { return {s1, s2, s3}; }

// Shortest group element carrying inst into some sign choice of the target cell.
std::optional<GroupElement> covering_element(const Instantiation& inst, const TableCell& target) {
    for (const auto& g : fourmanifold::elements_by_length()) {
        const auto image = apply(g, inst);
        if (std::any_of(target.instantiations.begin(), target.instantiations.end(),
                        [&](const Instantiation& t) { return contained_in(image, t); }))
            return g;
    }
    return std::nullopt;
}

}  // namespace

Slot Slot::negated() const {
    Slot s = *this;
    if (kind == Kind::constant) s.value = -value;
    if (kind == Kind::variable) s.sign = -sign;
    return s;
}

std::string Slot::to_string() const {
    switch (kind) {
        case Kind::constant: return std::to_string(value);
        case Kind::signed_constant: return std::string(kPlusMinus) + std::to_string(value);
        case Kind::variable: return (sign < 0 ? "-" : "") + std::string(1, var);
    }
    return "?";
}

Instantiation apply(const GroupElement& g, const Instantiation& inst) {
    Instantiation out{apply_class(g, inst.alpha), apply_class(g, inst.beta)};
    if (g.s3()) std::swap(out.alpha, out.beta);
    return out;
}

CellPolynomial cell_polynomial(const Instantiation& inst) {
    CellPolynomial p;
    auto add = [&](const Slot& a, const Slot& b) {
        if (a.kind == Slot::Kind::signed_constant || b.kind == Slot::Kind::signed_constant)
            throw InputError("cell polynomial needs every sign chosen");
        if (!a.is_variable() && !b.is_variable()) {
            p.c_1 += a.value * b.value;
        } else if (a.is_variable() && b.is_variable()) {
            p.c_xy += a.sign * b.sign;
        } else {
            const Slot& v = a.is_variable() ? a : b;
            const Slot& c = a.is_variable() ? b : a;
            (v.var == 'x' ? p.c_x : p.c_y) += v.sign * c.value;
        }
    };
    // Q(a, b) = a1 b2 + a2 b1
    add(inst.alpha.first, inst.beta.second);
    add(inst.alpha.second, inst.beta.first);
    return p;
}

std::string CellPolynomial::to_string() const {
    std::string s;
    const std::array<std::pair<long, const char*>, 4> terms{{{c_xy, "xy"}, {c_y, "y"}, {c_x, "x"}, {c_1, ""}}};
    for (const auto& [c, m] : terms) {
        if (c == 0) continue;
        if (s.empty()) s = (c < 0 ? "-" : "") + monomial(std::labs(c), m);
        else s += (c < 0 ? " - " : " + ") + monomial(std::labs(c), m);
    }
    return s.empty() ? "0" : s;
}

std::string Equivalence::describe() const {
    std::string s = required.to_string();
    if (possibly != GroupElement::identity()) s += " (+" + possibly.to_string() + ")";
    return s;
}

const std::array<ClassPattern, 3>& row_patterns() {
    static const std::array<ClassPattern, 3> rows{{
        {Slot::constant(0), Slot::variable('x')},
        {Slot::constant(1), Slot::variable('x')},
        {Slot::constant(2), Slot::plus_minus(2)},
    }};
    return rows;
}

const std::array<ClassPattern, 5>& column_patterns() {
    static const std::array<ClassPattern, 5> cols{{
        {Slot::constant(0), Slot::variable('y')},
        {Slot::variable('y'), Slot::constant(0)},
        {Slot::plus_minus(1), Slot::variable('y')},
        {Slot::variable('y'), Slot::plus_minus(1)},
        {Slot::plus_minus(2), Slot::plus_minus(2)},
    }};
    return cols;
}

std::vector<Instantiation> instantiate(const ClassPattern& row, const ClassPattern& col) {
    std::array<Slot, 4> slots{row.first, row.second, col.first, col.second};
    std::vector<std::size_t> signed_slots;
    for (std::size_t i = 0; i < 4; ++i)
        if (slots[i].kind == Slot::Kind::signed_constant) signed_slots.push_back(i);
    const std::size_t k = signed_slots.size();
    std::vector<Instantiation> out;
    for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
        auto s = slots;
        for (std::size_t i = 0; i < k; ++i) {
            const bool minus = (mask >> (k - 1 - i)) & 1U;
            Slot& slot = s[signed_slots[i]];
            slot = Slot::constant(minus ? -slot.value : slot.value);
        }
        out.push_back({{s[0], s[1]}, {s[2], s[3]}});
    }
    return out;
}

bool contained_in(const Instantiation& inst, const Instantiation& target) {
    return slot_contained(inst.alpha.first, target.alpha.first) &&
           slot_contained(inst.alpha.second, target.alpha.second) &&
           slot_contained(inst.beta.first, target.beta.first) && slot_contained(inst.beta.second, target.beta.second);
}

std::string render_value(const std::vector<CellPolynomial>& polys) {
    if (polys.empty()) return "";
    struct Term {
        const char* name;
        long CellPolynomial::*coeff;
    };
    const std::array<Term, 4> fixed_order{{{"xy", &CellPolynomial::c_xy},
                                           {"y", &CellPolynomial::c_y},
                                           {"x", &CellPolynomial::c_x},
                                           {"", &CellPolynomial::c_1}}};
    std::string fixed_part;
    std::vector<std::pair<long, std::string>> varying;
    bool representable = true;
    for (const auto& t : fixed_order) {
        std::set<long> values;
        for (const auto& p : polys) values.insert(p.*(t.coeff));
        if (values.size() == 1) {
            const long c = *values.begin();
            if (c == 0) continue;
            if (fixed_part.empty()) fixed_part = (c < 0 ? "-" : "") + monomial(std::labs(c), t.name);
            else fixed_part += (c < 0 ? " - " : " + ") + monomial(std::labs(c), t.name);
        } else if (values.size() == 2 && *values.begin() == -*values.rbegin()) {
            varying.emplace_back(*values.rbegin(), t.name);
        } else {
            representable = false;
        }
    }
    if (!representable) {
        // list the possible values instead, grouping +c and -c
        std::set<std::string> seen;
        std::vector<std::string> parts;
        std::set<long> constants;
        bool all_constant = true;
        for (const auto& p : polys) {
            if (p.c_xy != 0 || p.c_x != 0 || p.c_y != 0) all_constant = false;
            constants.insert(p.c_1);
        }
        if (all_constant) {
            std::set<long> magnitudes;
            for (long c : constants) magnitudes.insert(std::labs(c));
            for (long m : magnitudes) {
                const bool pos = constants.count(m) > 0, neg = constants.count(-m) > 0;
                if (m == 0) parts.push_back("0");
                else if (pos && neg) parts.push_back(kPlusMinus + std::to_string(m));
                else parts.push_back((neg ? "-" : "") + std::to_string(m));
            }
        } else {
            for (const auto& p : polys)
                if (seen.insert(p.to_string()).second) parts.push_back(p.to_string());
        }
        std::string s;
        for (const auto& part : parts) s += (s.empty() ? "" : ", ") + part;
        return s;
    }
    // varying terms go after the fixed ones, constants first
    std::reverse(varying.begin(), varying.end());
    std::string s = fixed_part;
    for (const auto& [c, name] : varying) {
        if (s.empty()) s = kPlusMinus + monomial(c, name);
        else s += std::string(" ") + kPlusMinus + " " + monomial(c, name);
    }
    return s.empty() ? "0" : s;
}

std::vector<TableCell> build_table(const Assumptions& assumptions) {
    if (assumptions.g4_a != 1 || assumptions.g4_b != 1)
        throw UnsupportedGenusBound("the case table is only derived for slice genus 1 (got " +
                                    std::to_string(assumptions.g4_a) + ", " + std::to_string(assumptions.g4_b) + ")");
    std::vector<TableCell> table;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 5; ++j) {
            TableCell cell;
            cell.ref = {i + 1, j + 1};
            cell.row_pattern = row_patterns()[static_cast<std::size_t>(i)];
            cell.col_pattern = column_patterns()[static_cast<std::size_t>(j)];
            cell.instantiations = instantiate(cell.row_pattern, cell.col_pattern);
            for (const auto& inst : cell.instantiations) cell.polynomials.push_back(cell_polynomial(inst));
            cell.value = render_value(cell.polynomials);
            table.push_back(std::move(cell));
        }
    }

    // A cell is discarded when each of its members is carried by a symmetry
    // into one retained cell further left in the table.
    auto at = [&](CellRef r) -> TableCell& { return table[static_cast<std::size_t>((r.row - 1) * 5 + r.col - 1)]; };
    for (int col = 1; col <= 5; ++col) {
        for (int row = 1; row <= 3; ++row) {
            TableCell& cell = at({row, col});
            for (int tc = 1; tc < col && !cell.highlighted; ++tc) {
                for (int tr = 1; tr <= 3 && !cell.highlighted; ++tr) {
                    const TableCell& target = at({tr, tc});
                    if (target.highlighted) continue;
                    std::vector<GroupElement> used;
                    for (const auto& inst : cell.instantiations) {
                        const auto g = covering_element(inst, target);
                        if (!g) break;
                        used.push_back(*g);
                    }
                    if (used.size() != cell.instantiations.size()) continue;
                    bool all1 = true, all2 = true, all3 = true, any1 = false, any2 = false, any3 = false;
                    for (const auto& g : used) {
                        all1 = all1 && g.s1();
                        all2 = all2 && g.s2();
                        all3 = all3 && g.s3();
                        any1 = any1 || g.s1();
                        any2 = any2 || g.s2();
                        any3 = any3 || g.s3();
                    }
                    cell.highlighted = true;
                    cell.equivalence = Equivalence{target.ref, used, from_flags(all1, all2, all3),
                                                   from_flags(any1 && !all1, any2 && !all2, any3 && !all3)};
                }
            }
        }
    }
    return table;
}

std::vector<SymmetryCheck> check_table_symmetries(const std::vector<TableCell>& table) {
    std::vector<SymmetryCheck> out;
    auto find = [&](CellRef r) -> const TableCell& {
        for (const auto& c : table)
            if (c.ref == r) return c;
        throw SymmetryCheckFailed("cell " + r.to_string() + " is missing from the table");
    };
    for (const auto& cell : table) {
        if (!cell.highlighted) {
            if (cell.equivalence) throw SymmetryCheckFailed("retained cell " + cell.ref.to_string() + " has an equivalence");
            continue;
        }
        if (!cell.equivalence) throw SymmetryCheckFailed("highlighted cell " + cell.ref.to_string() + " has no equivalence");
        const auto& eq = *cell.equivalence;
        const TableCell& target = find(eq.target);
        if (target.highlighted)
            throw SymmetryCheckFailed("cell " + cell.ref.to_string() + " maps to a discarded cell");
        if (eq.elements.size() != cell.instantiations.size())
            throw SymmetryCheckFailed("cell " + cell.ref.to_string() + " lacks a group element per sign choice");
        SymmetryCheck check{cell.ref, eq.target, eq.required, eq.possibly, {}, {}};
        for (std::size_t i = 0; i < eq.elements.size(); ++i) {
            const auto image = apply(eq.elements[i], cell.instantiations[i]);
            const bool ok = std::any_of(target.instantiations.begin(), target.instantiations.end(),
                                        [&](const Instantiation& t) { return contained_in(image, t); });
            if (!ok)
                throw SymmetryCheckFailed(cell.instantiations[i].to_string() + " under " + eq.elements[i].to_string() +
                                          " is not contained in cell " + eq.target.to_string());
            check.witnesses.emplace_back(cell.instantiations[i], eq.elements[i]);
            check.images.push_back(image);
        }
        out.push_back(std::move(check));
    }
    return out;
}

}  // namespace slicecheck::solver
