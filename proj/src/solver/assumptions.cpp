#include "slicecheck/solver/assumptions.hpp"

#include <array>

#include "slicecheck/error.hpp"

namespace slicecheck::solver {

Assumptions Assumptions::defaults() {
    Assumptions a;
    for (const auto& w : required_roots()) {
        a.sigma_a[w] = 2;
        a.sigma_b[w] = 2;
    }
    return a;
}

const std::array<RootOfUnity, 3>& Assumptions::required_roots() {
    static const std::array<RootOfUnity, 3> roots{exact::zeta(2), exact::zeta(4), exact::zeta(8)};
    return roots;
}

void Assumptions::validate() const {
    if (g4_a < 0 || g4_b < 0) throw InputError("slice genera must be non-negative");
    if ((arf_a != 0 && arf_a != 1) || (arf_b != 0 && arf_b != 1)) throw InputError("Arf invariants must be 0 or 1");
    for (const auto* m : {&sigma_a, &sigma_b}) {
        for (const auto& [w, s] : *m) {
            if (w.is_one()) throw InputError("signatures are given at roots of unity other than 1");
            if (s % 2 != 0) throw InputError("signature at " + w.to_string() + " must be even");
        }
        for (const auto& w : required_roots())
            if (!m->count(w)) throw InputError("missing signature value at " + w.to_string());
    }
    if (symmetric_link && (g4_a != g4_b || arf_a != arf_b || sigma_a != sigma_b))
        throw InputError("a symmetric link needs equal invariants for A and B");
}

std::optional<int> Assumptions::sigma(char component, const RootOfUnity& w) const {
    if (w.is_one()) return 0;
    const auto& m = component == 'A' ? sigma_a : sigma_b;
    // keys are compared after normalisation, so zeta_8^2 finds zeta_4
    if (auto it = m.find(w); it != m.end()) return it->second;
    return std::nullopt;
}

}  // namespace slicecheck::solver
