#pragma once

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "slicecheck/fourmanifold/homology.hpp"

namespace slicecheck::fourmanifold {

struct ConcretePair {
    HomologyClass alpha;
    HomologyClass beta;

    std::string to_string() const { return "(" + alpha.to_string() + "," + beta.to_string() + ")"; }
    friend auto operator<=>(const ConcretePair&, const ConcretePair&) = default;
};

/// (alpha(t), beta(t)) sharing one parameter; at least one side depends on t.
struct FamilyPair {
    AffineClass alpha;
    AffineClass beta;

    FamilyPair() = default;
    FamilyPair(AffineClass a, AffineClass b);

    ConcretePair at(long t) const { return {alpha.at(t), beta.at(t)}; }
    FamilyPair reparametrized(long sign, long shift) const {
        return {alpha.reparametrized(sign, shift), beta.reparametrized(sign, shift)};
    }
    std::string to_string(const std::string& var = "t") const {
        return "(" + alpha.to_string(var) + "," + beta.to_string(var) + ")";
    }
    friend auto operator<=>(const FamilyPair&, const FamilyPair&) = default;
};

using CasePair = std::variant<ConcretePair, FamilyPair>;

std::string to_string(const CasePair& c, const std::string& var = "t");

/// Element of the group (Z/2)^3 generated by the commuting involutions
/// s1 (swap the S^2 factors), s2 (negate both factors), s3 (swap alpha, beta).
class GroupElement {
public:
    constexpr GroupElement() = default;
    constexpr GroupElement(bool s1, bool s2, bool s3) : bits_((s1 ? 1 : 0) | (s2 ? 2 : 0) | (s3 ? 4 : 0)) {}

    static const std::array<GroupElement, 8>& all();
    static GroupElement identity() { return {}; }

    bool s1() const { return bits_ & 1; }
    bool s2() const { return bits_ & 2; }
    bool s3() const { return bits_ & 4; }
    int generator_count() const { return s1() + s2() + s3(); }

    GroupElement operator*(GroupElement o) const { return from_bits(bits_ ^ o.bits_); }

    HomologyClass apply(const HomologyClass& x) const;
    AffineClass apply(const AffineClass& x) const;
    ConcretePair apply(const ConcretePair& c) const;
    FamilyPair apply(const FamilyPair& c) const;
    CasePair apply(const CasePair& c) const;

    /// "id", "s1", "s3+s1" ... generators listed s3, s1, s2.
    std::string to_string() const;
    static GroupElement parse(const std::string& text);

    friend auto operator<=>(const GroupElement&, const GroupElement&) = default;

private:
    static constexpr GroupElement from_bits(int b) { return {(b & 1) != 0, (b & 2) != 0, (b & 4) != 0}; }
    int bits_ = 0;
};

/// Reparametrize so the first t-dependent coordinate has positive slope and
/// constant term reduced into [0, slope).
FamilyPair normalize_family(const FamilyPair& f);

/// Distinct images under the 8 group elements. Families are compared after
/// normalization; the returned images keep the parametrization the group
/// element produced.
std::vector<CasePair> symmetry_orbit(const CasePair& c);

/// Lexicographic minimum of the orbit (after normalization for families).
CasePair canonical_pair(const CasePair& c);
ConcretePair canonical_pair(const ConcretePair& c);
FamilyPair canonical_pair(const FamilyPair& f);

struct FamilyMembership {
    long t;
    GroupElement element;  // element.apply(pair) == family.at(t)
};

/// Parameter value at which some symmetry image of x lies on the family.
/// Elements are tried by increasing number of generators.
std::optional<FamilyMembership> family_member(const FamilyPair& family, const ConcretePair& x);

/// Group elements ordered by generator count, then s3 before s1 before s2.
const std::array<GroupElement, 8>& elements_by_length();

}  // namespace slicecheck::fourmanifold
