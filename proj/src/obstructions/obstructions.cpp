#include "slicecheck/obstructions/obstructions.hpp"

#include <cstdlib>
#include <numeric>
#include <sstream>

#include "slicecheck/error.hpp"

namespace slicecheck::obstructions {

namespace {

ObstructionOutcome inapplicable(std::string rule, std::string reason) {
    ObstructionOutcome o;
    o.verdict = Verdict::inapplicable;
    o.rule = std::move(rule);
    o.reason = std::move(reason);
    return o;
}

KnotExpression atom_a() { return KnotExpression::atom("A"); }
KnotExpression atom_b() { return KnotExpression::atom("B"); }

}  // namespace

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::eliminated: return "eliminated";
        case Verdict::survives: return "survives";
        case Verdict::inapplicable: return "inapplicable";
    }
    return "?";
}

std::string to_string(HypothesisKind k) {
    switch (k) {
        case HypothesisKind::component_a: return "component_a";
        case HypothesisKind::component_b: return "component_b";
        case HypothesisKind::sum: return "sum";
        case HypothesisKind::sum_reverse_torus: return "sum_reverse_torus";
        case HypothesisKind::sum_cable: return "sum_cable";
    }
    return "?";
}

std::string ObstructionOutcome::describe() const {
    std::ostringstream os;
    os << rule << ": " << to_string(verdict);
    std::visit(
        [&](const auto& w) {
            using W = std::decay_t<decltype(w)>;
            if constexpr (std::is_same_v<W, SignatureWitness>) {
                const mpq_class a = abs(w.value);
                os << ", |" << w.sigma << " + " << w.sigma_x << " - 2*" << w.r << "*" << (w.m - w.r) << "*("
                   << w.square << ")/" << w.m * w.m << "| = " << a.get_str() << (a > w.bound ? " > " : " <= ")
                   << w.bound;
            } else if constexpr (std::is_same_v<W, ArfWitness>) {
                os << ", (" << w.sigma_x << " - (" << w.square << "))/8 = " << w.quotient << ", Arf = " << w.arf;
            } else if constexpr (std::is_same_v<W, GenusWitness>) {
                os << ", min genus of " << w.cls.to_string() << " is " << w.min_genus
                   << (w.min_genus > w.genus_bound ? " > " : " <= ") << w.genus_bound;
            }
        },
        witness);
    if (!reason.empty()) os << " (" << reason << ")";
    return os.str();
}

bool is_prime_power(long m) {
    if (m < 2) return false;
    long p = 2;
    while (p * p <= m && m % p != 0) ++p;
    if (m % p != 0) return true;  // m itself is prime
    while (m % p == 0) m /= p;
    return m == 1;
}

ObstructionOutcome signature_obstruction(int sigma, long square, int genus, long m, long r, const AmbientData& x,
                                         const std::optional<HomologyClass>& cls) {
    if (!is_prime_power(m)) throw InputError("m = " + std::to_string(m) + " is not a prime power");
    if (r < 1 || r >= m) throw InputError("r must lie in 1..m-1");
    if (genus < 0) throw InputError("genus must be non-negative");
    if (cls && (cls->a1 % m != 0 || cls->a2 % m != 0))
        throw NotDivisible("class " + cls->to_string() + " is not divisible by " + std::to_string(m));
    SignatureWitness w;
    w.sigma = sigma;
    w.square = square;
    w.genus = genus;
    w.m = m;
    w.r = r;
    w.sigma_x = x.sigma_x;
    w.b2 = x.b2;
    w.value = mpq_class(sigma + x.sigma_x) - mpq_class(2 * r * (m - r) * square, m * m);
    w.value.canonicalize();
    w.bound = x.b2 + 2L * genus;
    ObstructionOutcome o;
    o.rule = "signature";
    o.verdict = abs(w.value) > w.bound ? Verdict::eliminated : Verdict::survives;
    o.witness = w;
    return o;
}

ObstructionOutcome arf_obstruction(int arf, const HomologyClass& cls, const AmbientData& x) {
    if (!fourmanifold::is_characteristic(cls))
        return inapplicable("arf", "class " + cls.to_string() + " is not characteristic");
    const long square = fourmanifold::square(cls);
    const long diff = x.sigma_x - square;
    if (diff % 8 != 0)
        throw CongruenceUndefined("sigma(X) - square = " + std::to_string(diff) + " is not divisible by 8");
    ArfWitness w{arf, square, x.sigma_x, diff / 8};
    ObstructionOutcome o;
    o.rule = "arf";
    o.verdict = (((w.quotient % 2) + 2) % 2) != arf ? Verdict::eliminated : Verdict::survives;
    o.witness = w;
    return o;
}

ObstructionOutcome arf_obstruction(int arf, const AffineClass& cls, const AmbientData& x) {
    if (auto c = cls.constant()) return arf_obstruction(arf, *c, x);
    if (!fourmanifold::is_identically_characteristic(cls))
        return inapplicable("arf", "class " + cls.to_string() + " is not characteristic for every t");
    const auto sq = fourmanifold::family_square(cls);
    if (!sq.is_constant()) return inapplicable("arf", "square " + sq.to_string() + " depends on t");
    // same verdict as any member; report t = 0
    return arf_obstruction(arf, cls.at(0), x);
}

ObstructionOutcome genus_obstruction(long g4, const HomologyClass& cls) {
    if (g4 < 0) throw InputError("slice genus must be non-negative");
    GenusWitness w{cls, fourmanifold::min_genus(cls), g4};
    ObstructionOutcome o;
    o.rule = "genus";
    o.verdict = w.min_genus > g4 ? Verdict::eliminated : Verdict::survives;
    o.witness = w;
    return o;
}

ObstructionOutcome genus_obstruction(long g4, const AffineClass& cls) {
    if (auto c = cls.constant()) return genus_obstruction(g4, *c);
    return inapplicable("genus", "class " + cls.to_string() + " depends on t");
}

std::vector<SliceHypothesis> component_facts(const AffineClass& alpha, const AffineClass& beta) {
    return {{"A", atom_a(), alpha, 0, {}, HypothesisKind::component_a, 1, 0, 0},
            {"B", atom_b(), beta, 0, {}, HypothesisKind::component_b, 0, 1, 0}};
}

std::vector<SliceHypothesis> derived_facts(const AffineClass& alpha, const AffineClass& beta, long n,
                                           const IntQuadratic& beta_square) {
    using fourmanifold::family_sum;
    std::vector<SliceHypothesis> out;
    out.push_back({"A # B", KnotExpression::sum(atom_a(), atom_b()), family_sum(alpha, beta), 0, {},
                   HypothesisKind::sum, 1, 1, 0});
    const auto a_br = KnotExpression::sum(atom_a(), KnotExpression::reverse(atom_b()));
    for (const long q : {2 * n - 1, 2 * n + 1}) {
        const auto k = KnotExpression::sum(a_br, KnotExpression::torus(2, static_cast<int>(q)));
        out.push_back({k.pretty(), k, family_sum(alpha, beta, 1, -1), 0, {}, HypothesisKind::sum_reverse_torus, 1, -1, q});
    }
    for (const long sign : {-1L, 1L}) {
        const AffineClass cls = family_sum(alpha, beta, 1, 2);
        if (!beta_square.is_constant()) {
            const std::string q = "-2(" + beta_square.to_string() + ")" + (n >= 0 ? "-" : "+") +
                                  std::to_string(std::labs(2 * n)) + (sign < 0 ? "-1" : "+1");
            out.push_back({"A # B_(2," + q + ")", std::nullopt, cls, 0, "cable coefficient depends on t",
                           HypothesisKind::sum_cable, 1, 2, 0});
            continue;
        }
        const long q = -2 * beta_square.c0 - 2 * n + sign;
        const auto k = KnotExpression::sum(atom_a(), KnotExpression::cable(atom_b(), 2, static_cast<int>(q)));
        out.push_back({k.pretty(), k, cls, 0, {}, HypothesisKind::sum_cable, 1, 2, q});
    }
    return out;
}

ExoticReport exotic_precondition_check(long f_a, long f_b, long lk) {
    ExoticReport r;
    r.f_a = f_a;
    r.f_b = f_b;
    r.lk = lk;
    r.framings_even = f_a % 2 == 0 && f_b % 2 == 0;
    r.det = f_a * f_b - lk * lk;
    r.rank_two = r.det != 0;
    // a 2x2 symmetric form is indefinite exactly when its determinant is negative
    r.indefinite = r.det < 0;
    r.det_even = r.det % 2 == 0;
    r.lk_even = lk % 2 == 0;
    if (!r.framings_even) r.failures.push_back("framings are not both even");
    if (!r.rank_two) r.failures.push_back("intersection form is degenerate");
    else if (!r.indefinite) r.failures.push_back("intersection form is definite");
    return r;
}

}  // namespace slicecheck::obstructions
