#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>

#include "slicecheck/exact/root_of_unity.hpp"

namespace slicecheck::solver {

using exact::RootOfUnity;

/// Machine form of the hypotheses on the link L = A u B.
struct Assumptions {
    bool structure_a1 = true;    // L has the twist-box shape, so n = -lk
    bool symmetric_link = true;  // swapping A and B is an isotopy
    long lk = -4;
    long g4_a = 1;
    long g4_b = 1;
    int arf_a = 1;
    int arf_b = 1;
    std::map<RootOfUnity, int> sigma_a;
    std::map<RootOfUnity, int> sigma_b;

    /// lk = -4, g4 = 1, Arf = 1 and sigma = 2 at zeta_2, zeta_4, zeta_8 for both components.
    static Assumptions defaults();

    /// The roots every assumption set must cover.
    static const std::array<RootOfUnity, 3>& required_roots();

    /// Throws InputError on a malformed or internally contradictory record.
    void validate() const;

    std::optional<int> sigma(char component, const RootOfUnity& w) const;
};

}  // namespace slicecheck::solver
