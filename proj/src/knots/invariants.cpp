#include "slicecheck/knots/invariants.hpp"

#include <cstdlib>
#include <mutex>
#include <tuple>

#include "slicecheck/exact/integer.hpp"

namespace slicecheck::knots {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};

bool is_zero(const exact::IntPolynomial& p) {
    for (const auto& c : p)
        if (c != 0) return false;
    return true;
}

struct TorusCache {
    std::mutex mutex;
    std::map<std::tuple<int, std::int64_t, std::int64_t>, int> values;
};

TorusCache& torus_cache() {
    static TorusCache cache;
    return cache;
}

}  // namespace

bool is_alexander_root(const SeifertMatrix& v, const RootOfUnity& w) {
    if (v.dim() == 0) return false;
    const IntMatrix& m = v.matrix();
    const auto delta = exact::determinant_pencil(m, IntMatrix(m.transpose()));
    const auto phi = exact::cyclotomic(w.primitive_order());
    return is_zero(exact::remainder_monic(delta, phi));
}

int lt_signature(const SeifertMatrix& v, const RootOfUnity& w, const exact::SignatureOptions& options) {
    if (w.is_one() || v.dim() == 0) return 0;
    if (is_alexander_root(v, w))
        throw SignatureAtAlexanderRoot(w.to_string() + " is a root of the Alexander polynomial");
    return exact::form_signature(v.matrix(), w, options);
}

int torus_signature(int q, const RootOfUnity& w, const exact::SignatureOptions& options) {
    const auto n = w.normalized();
    const bool cacheable = options.mode == exact::ArithmeticMode::automatic;
    const auto key = std::make_tuple(q, n.order(), n.index());
    if (cacheable) {
        std::lock_guard lock(torus_cache().mutex);
        if (auto it = torus_cache().values.find(key); it != torus_cache().values.end()) return it->second;
    }
    // computed outside the lock; a concurrent duplicate writes the same value
    const int s = lt_signature(torus_seifert(2, q), w, options);
    if (cacheable) {
        std::lock_guard lock(torus_cache().mutex);
        torus_cache().values.emplace(key, s);
    }
    return s;
}

int lt_signature(const KnotExpression& e, const RootOfUnity& w, const EvalOptions& options) {
    if (w.is_one()) return 0;
    return std::visit(
        overloaded{
            [](const node::Unknot&) { return 0; },
            [&](const node::Atom& a) {
                if (a.seifert) return lt_signature(*a.seifert, w, options.arithmetic);
                if (options.resolver)
                    if (auto s = options.resolver(a.name, w)) return *s;
                throw UnresolvedAtom(a.name);
            },
            [&](const node::Mirror& m) { return -lt_signature(m.inner, w, options); },
            [&](const node::Reverse& r) { return lt_signature(r.inner, w, options); },
            [&](const node::Sum& s) { return lt_signature(s.left, w, options) + lt_signature(s.right, w, options); },
            [&](const node::Cable& c) {
                if (c.p != 2) throw UnsupportedTorusParameters("cables are only supported with winding number 2");
                return lt_signature(c.companion, w.pow(c.p), options) + torus_signature(c.q, w, options.arithmetic);
            },
            [&](const node::Torus& t) {
                if (t.p != 2) throw UnsupportedTorusParameters("torus knots are only supported for p = 2");
                return torus_signature(t.q, w, options.arithmetic);
            },
        },
        e.node().value);
}

long determinant_at_minus_one(const KnotExpression& e) {
    return std::visit(
        overloaded{
            [](const node::Unknot&) { return 1L; },
            [](const node::Atom& a) -> long {
                if (!a.seifert) throw UnresolvedAtom(a.name);
                const IntMatrix& v = a.seifert->matrix();
                if (v.rows() == 0) return 1L;
                mpz_class d = exact::determinant(IntMatrix(v + v.transpose()));
                d = abs(d);
                if (!d.fits_slong_p()) throw Error("knot determinant does not fit in a long");
                return d.get_si();
            },
            [](const node::Mirror& m) { return determinant_at_minus_one(m.inner); },
            [](const node::Reverse& r) { return determinant_at_minus_one(r.inner); },
            [](const node::Sum& s) { return determinant_at_minus_one(s.left) * determinant_at_minus_one(s.right); },
            // the (p, q) cable with p even: Delta(-1) of the pattern times Delta_K(1) = 1
            [](const node::Cable& c) -> long {
                if (c.p != 2) throw UnsupportedTorusParameters("cables are only supported with winding number 2");
                return std::abs(c.q);
            },
            [](const node::Torus& t) -> long {
                if (t.p != 2) throw UnsupportedTorusParameters("torus knots are only supported for p = 2");
                return std::abs(t.q);
            },
        },
        e.node().value);
}

int arf_from_determinant(long det) {
    const long r = ((det % 8) + 8) % 8;
    if (r == 1 || r == 7) return 0;
    if (r == 3 || r == 5) return 1;
    throw InputError("determinant " + std::to_string(det) + " is even; not a knot determinant");
}

int arf(const KnotExpression& e) { return arf_from_determinant(determinant_at_minus_one(e)); }

void KnotInvariants::validate() const {
    if (arf != 0 && arf != 1) throw InputError("Arf invariant must be 0 or 1");
    if (arf_from_determinant(determinant) != arf)
        throw InputError("Arf invariant " + std::to_string(arf) + " contradicts determinant " +
                         std::to_string(determinant));
    for (const auto& [w, s] : sigma)
        if (s % 2 != 0) throw InputError("signature at " + w.to_string() + " is odd");
}

KnotInvariants compute_invariants(const KnotExpression& e, const std::vector<RootOfUnity>& roots,
                                  const EvalOptions& options) {
    KnotInvariants inv;
    inv.determinant = determinant_at_minus_one(e);
    inv.arf = arf_from_determinant(inv.determinant);
    for (const auto& w : roots) inv.sigma.emplace(w, lt_signature(e, w, options));
    return inv;
}

}  // namespace slicecheck::knots
