#include "slicecheck/exact/hermitian.hpp"

#include <algorithm>
#include <array>

namespace slicecheck::exact {

namespace {

// Entries of the form x + y*sqrt(D) with x, y in {0, +-1/2, +-1}, stored doubled.
struct HalfPair {
    int x2;
    int y2;
};

template <int D>
QuadraticReal<D> make(HalfPair h) {
    return {mpq_class(h.x2, 2), mpq_class(h.y2, 2)};
}

// cos and sin of k/8 of a turn over Q(sqrt 2)
constexpr std::array<std::pair<HalfPair, HalfPair>, 8> kEighths{{
    {{2, 0}, {0, 0}},
    {{0, 1}, {0, 1}},
    {{0, 0}, {2, 0}},
    {{0, -1}, {0, 1}},
    {{-2, 0}, {0, 0}},
    {{0, -1}, {0, -1}},
    {{0, 0}, {-2, 0}},
    {{0, 1}, {0, -1}},
}};

// cos and sin of k/12 of a turn over Q(sqrt 3)
constexpr std::array<std::pair<HalfPair, HalfPair>, 12> kTwelfths{{
    {{2, 0}, {0, 0}},
    {{0, 1}, {1, 0}},
    {{1, 0}, {0, 1}},
    {{0, 0}, {2, 0}},
    {{-1, 0}, {0, 1}},
    {{0, -1}, {1, 0}},
    {{-2, 0}, {0, 0}},
    {{0, -1}, {-1, 0}},
    {{-1, 0}, {0, -1}},
    {{0, 0}, {-2, 0}},
    {{1, 0}, {0, -1}},
    {{0, 1}, {-1, 0}},
}};

}  // namespace

HermitianMatrix<Sqrt2Real> to_hermitian(const IntMatrix& symmetric) {
    if (symmetric.rows() != symmetric.cols()) throw InputError("matrix must be square");
    const auto n = symmetric.rows();
    ComplexMatrix<Sqrt2Real> m(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) m(i, j) = Complex<Sqrt2Real>(Sqrt2Real(static_cast<long>(symmetric(i, j))));
    return HermitianMatrix<Sqrt2Real>(std::move(m));
}

int hermitian_signature(const IntMatrix& symmetric) { return hermitian_signature(to_hermitian(symmetric)); }

int signature_adaptive(const IntervalFormBuilder& build, const PrecisionPolicy& policy) {
    unsigned bits = std::max(policy.initial_bits, 2U);
    const unsigned cap = std::max(policy.cap_bits, bits);
    for (;;) {
        if (auto s = try_signature(build(static_cast<mpfr_prec_t>(bits)).matrix())) return *s;
        if (bits >= cap) throw PrecisionExhausted(cap);
        bits = std::min(bits * 2, cap);
    }
}

bool has_exact_path(RootOfUnity w) {
    const auto m = w.primitive_order();
    return 8 % m == 0 || 12 % m == 0;
}

std::pair<Sqrt2Real, Sqrt2Real> exact_cos_sin_sqrt2(RootOfUnity w) {
    const auto n = w.normalized();
    if (8 % n.order() != 0) throw UnsupportedExactOrder(n.order());
    const auto& [c, s] = kEighths[static_cast<std::size_t>(n.index() * (8 / n.order()))];
    return {make<2>(c), make<2>(s)};
}

std::pair<Sqrt3Real, Sqrt3Real> exact_cos_sin_sqrt3(RootOfUnity w) {
    const auto n = w.normalized();
    if (12 % n.order() != 0) throw UnsupportedExactOrder(n.order());
    const auto& [c, s] = kTwelfths[static_cast<std::size_t>(n.index() * (12 / n.order()))];
    return {make<3>(c), make<3>(s)};
}

ExactForm hermitian_form(const IntMatrix& v, RootOfUnity w) {
    const auto m = w.primitive_order();
    if (8 % m == 0) {
        auto [c, s] = exact_cos_sin_sqrt2(w);
        return hermitian_form(v, Sqrt2Real(1) - c, s);
    }
    if (12 % m == 0) {
        auto [c, s] = exact_cos_sin_sqrt3(w);
        return hermitian_form(v, Sqrt3Real(1) - c, s);
    }
    throw UnsupportedExactOrder(m);
}

HermitianMatrix<Interval> hermitian_form_interval(const IntMatrix& v, RootOfUnity w, mpfr_prec_t precision) {
    const auto n = w.normalized();
    const Interval c = Interval::cos_turn(n.index(), n.order(), precision);
    const Interval s = Interval::sin_turn(n.index(), n.order(), precision);
    return hermitian_form(v, Interval(1L, precision) - c, s);
}

int signature(const ExactForm& form) {
    return std::visit([](const auto& h) { return hermitian_signature(h); }, form);
}

int form_signature(const IntMatrix& v, RootOfUnity w, const SignatureOptions& options) {
    bool exact = false;
    switch (options.mode) {
        case ArithmeticMode::automatic: exact = has_exact_path(w); break;
        case ArithmeticMode::exact: exact = true; break;
        case ArithmeticMode::interval: exact = false; break;
    }
    if (exact) return signature(hermitian_form(v, w));
    return signature_adaptive([&](mpfr_prec_t p) { return hermitian_form_interval(v, w, p); }, options.precision);
}

Sign certified_sign(const CertifiedReal& x, const PrecisionPolicy& policy) {
    if (const auto* q2 = std::get_if<Sqrt2Real>(&x.value())) return q2->sign();
    if (const auto* q3 = std::get_if<Sqrt3Real>(&x.value())) return q3->sign();
    const auto& refine = std::get<CertifiedReal::Refiner>(x.value());
    unsigned bits = std::max(policy.initial_bits, 2U);
    const unsigned cap = std::max(policy.cap_bits, bits);
    for (;;) {
        if (auto s = refine(static_cast<mpfr_prec_t>(bits)).sign()) return *s;
        if (bits >= cap) throw PrecisionExhausted(cap);
        bits = std::min(bits * 2, cap);
    }
}

}  // namespace slicecheck::exact
