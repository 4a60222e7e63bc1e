#include "slicecheck/fourmanifold/symmetry.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

#include "slicecheck/error.hpp"

namespace slicecheck::fourmanifold {

namespace {

// floor division for a positive divisor
long floor_div(long a, long b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }

}  // namespace

FamilyPair::FamilyPair(AffineClass a, AffineClass b) : alpha(a), beta(b) {
    if (alpha.is_constant() && beta.is_constant()) throw InputError("a family pair must depend on its parameter");
}

std::string to_string(const CasePair& c, const std::string& var) {
    if (const auto* p = std::get_if<ConcretePair>(&c)) return p->to_string();
    return std::get<FamilyPair>(c).to_string(var);
}

const std::array<GroupElement, 8>& GroupElement::all() {
    static const std::array<GroupElement, 8> elements = [] {
        std::array<GroupElement, 8> out{};
        for (int b = 0; b < 8; ++b) out[static_cast<std::size_t>(b)] = from_bits(b);
        return out;
    }();
    return elements;
}

const std::array<GroupElement, 8>& elements_by_length() {
    static const std::array<GroupElement, 8> elements = [] {
        // s3 first, then s1, then s2
        auto rank = [](GroupElement g) {
            return std::make_tuple(g.generator_count(), !g.s3(), !g.s1(), !g.s2());
        };
        auto out = GroupElement::all();
        std::stable_sort(out.begin(), out.end(), [&](GroupElement a, GroupElement b) { return rank(a) < rank(b); });
        return out;
    }();
    return elements;
}

HomologyClass GroupElement::apply(const HomologyClass& x) const {
    HomologyClass y = s1() ? HomologyClass{x.a2, x.a1} : x;
    if (s2()) y = {-y.a1, -y.a2};
    return y;
}

AffineClass GroupElement::apply(const AffineClass& x) const {
    AffineClass y = s1() ? AffineClass{x.x2, x.x1} : x;
    if (s2()) y = {-y.x1, -y.x2};
    return y;
}

ConcretePair GroupElement::apply(const ConcretePair& c) const {
    ConcretePair out{apply(c.alpha), apply(c.beta)};
    if (s3()) std::swap(out.alpha, out.beta);
    return out;
}

FamilyPair GroupElement::apply(const FamilyPair& c) const {
    FamilyPair out{apply(c.alpha), apply(c.beta)};
    if (s3()) std::swap(out.alpha, out.beta);
    return out;
}

CasePair GroupElement::apply(const CasePair& c) const {
    return std::visit([&](const auto& p) -> CasePair { return apply(p); }, c);
}

std::string GroupElement::to_string() const {
    std::string s;
    auto add = [&](const char* g) { s += (s.empty() ? "" : "+") + std::string(g); };
    if (s3()) add("s3");
    if (s1()) add("s1");
    if (s2()) add("s2");
    return s.empty() ? "id" : s;
}

GroupElement GroupElement::parse(const std::string& text) {
    if (text == "id") return {};
    GroupElement g;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto end = std::min(text.find('+', start), text.size());
        const std::string part = text.substr(start, end - start);
        if (part == "s1") g = g * GroupElement(true, false, false);
        else if (part == "s2") g = g * GroupElement(false, true, false);
        else if (part == "s3") g = g * GroupElement(false, false, true);
        else throw InputError("unknown symmetry generator '" + part + "'");
        start = end + 1;
    }
    return g;
}

FamilyPair normalize_family(const FamilyPair& f) {
    const std::array<AffineInt, 4> slots{f.alpha.x1, f.alpha.x2, f.beta.x1, f.beta.x2};
    const auto lead = std::find_if(slots.begin(), slots.end(), [](const AffineInt& x) { return x.c1 != 0; });
    if (lead == slots.end()) throw InputError("a family pair must depend on its parameter");
    const long sign = lead->c1 < 0 ? -1 : 1;
    const long slope = lead->c1 * sign;
    // after t -> sign t the lead constant is unchanged; shift t by -floor(c0 / slope)
    const long shift = -floor_div(lead->c0, slope);
    return f.reparametrized(sign, 0).reparametrized(1, shift);
}

std::vector<CasePair> symmetry_orbit(const CasePair& c) {
    std::vector<CasePair> out;
    std::vector<CasePair> keys;
    for (const auto& g : GroupElement::all()) {
        CasePair image = g.apply(c);
        CasePair key = image;
        if (auto* f = std::get_if<FamilyPair>(&key)) *f = normalize_family(*f);
        if (std::find(keys.begin(), keys.end(), key) != keys.end()) continue;
        keys.push_back(std::move(key));
        out.push_back(std::move(image));
    }
    return out;
}

ConcretePair canonical_pair(const ConcretePair& c) {
    ConcretePair best = c;
    for (const auto& g : GroupElement::all()) best = std::min(best, g.apply(c));
    return best;
}

FamilyPair canonical_pair(const FamilyPair& f) {
    FamilyPair best = normalize_family(f);
    for (const auto& g : GroupElement::all()) best = std::min(best, normalize_family(g.apply(f)));
    return best;
}

CasePair canonical_pair(const CasePair& c) {
    return std::visit([](const auto& p) -> CasePair { return canonical_pair(p); }, c);
}

std::optional<FamilyMembership> family_member(const FamilyPair& family, const ConcretePair& x) {
    const std::array<AffineInt, 4> slots{family.alpha.x1, family.alpha.x2, family.beta.x1, family.beta.x2};
    for (const auto& g : elements_by_length()) {
        const ConcretePair y = g.apply(x);
        const std::array<long, 4> target{y.alpha.a1, y.alpha.a2, y.beta.a1, y.beta.a2};
        std::optional<long> t;
        bool ok = true;
        for (std::size_t i = 0; i < 4 && ok; ++i) {
            const long diff = target[i] - slots[i].c0;
            if (slots[i].c1 == 0) {
                ok = diff == 0;
            } else if (diff % slots[i].c1 != 0) {
                ok = false;
            } else {
                const long v = diff / slots[i].c1;
                ok = !t || *t == v;
                t = v;
            }
        }
        if (ok && t) return FamilyMembership{*t, g};
    }
    return std::nullopt;
}

}  // namespace slicecheck::fourmanifold
