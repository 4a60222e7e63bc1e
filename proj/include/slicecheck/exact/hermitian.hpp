#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <functional>
#include <optional>
#include <variant>
#include <vector>

#include "slicecheck/error.hpp"
#include "slicecheck/exact/complex.hpp"
#include "slicecheck/exact/interval.hpp"
#include "slicecheck/exact/quadratic.hpp"
#include "slicecheck/exact/root_of_unity.hpp"

namespace slicecheck::exact {

using IntMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

/// Square matrix with entry(i, j) == conj(entry(j, i)).
///
/// For exact scalars the invariant is checked on construction; interval
/// matrices are only ever built by mirroring an upper triangle.
template <typename Real>
class HermitianMatrix {
public:
    explicit HermitianMatrix(ComplexMatrix<Real> m) : m_(std::move(m)) {
        if (m_.rows() != m_.cols()) throw InputError("hermitian matrix must be square");
        if constexpr (is_exact_v<Real>) {
            for (Eigen::Index i = 0; i < m_.rows(); ++i)
                for (Eigen::Index j = i; j < m_.cols(); ++j)
                    if (!(m_(i, j) == m_(j, i).conj())) throw InputError("matrix is not hermitian");
        }
    }

    Eigen::Index dim() const { return m_.rows(); }
    const Complex<Real>& operator()(Eigen::Index i, Eigen::Index j) const { return m_(i, j); }
    const ComplexMatrix<Real>& matrix() const { return m_; }

    HermitianMatrix operator-() const {
        ComplexMatrix<Real> n = m_;
        for (Eigen::Index i = 0; i < n.rows(); ++i)
            for (Eigen::Index j = 0; j < n.cols(); ++j) n(i, j) = -n(i, j);
        return HermitianMatrix(std::move(n));
    }

private:
    ComplexMatrix<Real> m_;
};

/// Embeds an integer symmetric matrix as an exact hermitian one.
HermitianMatrix<Sqrt2Real> to_hermitian(const IntMatrix& symmetric);

namespace detail {

template <typename Real>
ComplexMatrix<Real> schur_complement_1x1(const ComplexMatrix<Real>& a, Eigen::Index p) {
    const Eigen::Index n = a.rows();
    ComplexMatrix<Real> out(n - 1, n - 1);
    const Real& pivot = a(p, p).re;
    auto src = [p](Eigen::Index k) { return k < p ? k : k + 1; };
    for (Eigen::Index k = 0; k < n - 1; ++k) {
        const auto sk = src(k);
        out(k, k) = Complex<Real>(a(sk, sk).re - a(sk, p).norm() / pivot);
        for (Eigen::Index l = k + 1; l < n - 1; ++l) {
            const auto sl = src(l);
            out(k, l) = a(sk, sl) - a(sk, p) * a(p, sl) / pivot;
            out(l, k) = out(k, l).conj();
        }
    }
    return out;
}

template <typename Real>
ComplexMatrix<Real> schur_complement_2x2(const ComplexMatrix<Real>& a, Eigen::Index i, Eigen::Index j,
                                         const Real& det) {
    const Eigen::Index n = a.rows();
    std::vector<Eigen::Index> rest;
    for (Eigen::Index k = 0; k < n; ++k)
        if (k != i && k != j) rest.push_back(k);
    const Real& e11 = a(i, i).re;
    const Real& e22 = a(j, j).re;
    const Complex<Real>& e12 = a(i, j);
    // w_k = [a(k,i), a(k,j)] * E^{-1},  E^{-1} = [[e22, -e12], [-conj(e12), e11]] / det
    std::vector<std::pair<Complex<Real>, Complex<Real>>> w;
    w.reserve(rest.size());
    for (auto k : rest) {
        w.emplace_back((a(k, i) * e22 - a(k, j) * e12.conj()) / det, (a(k, j) * e11 - a(k, i) * e12) / det);
    }
    const auto m = static_cast<Eigen::Index>(rest.size());
    ComplexMatrix<Real> out(m, m);
    for (Eigen::Index k = 0; k < m; ++k) {
        for (Eigen::Index l = k; l < m; ++l) {
            const auto sl = rest[l];
            Complex<Real> v = a(rest[k], sl) - (w[k].first * a(i, sl) + w[k].second * a(j, sl));
            if (k == l) v = Complex<Real>(v.re);
            out(k, l) = v;
            if (k != l) out(l, k) = v.conj();
        }
    }
    return out;
}

}  // namespace detail

/// Signature by symmetric elimination with 1x1 and 2x2 block pivots.
///
/// Returns nullopt when some pivot sign cannot be decided (interval scalars
/// only). Exact scalars throw SingularForm when the remaining block is zero.
template <typename Real>
std::optional<int> try_signature(ComplexMatrix<Real> a) {
    int signature = 0;
    while (a.rows() > 0) {
        const Eigen::Index n = a.rows();

        Eigen::Index best = -1;
        double best_mag = -1.0;
        Sign best_sign = Sign::zero;
        for (Eigen::Index i = 0; i < n; ++i) {
            const auto s = try_sign(a(i, i).re);
            if (!s || *s == Sign::zero) continue;
            const double mag = magnitude(a(i, i).re);
            if (mag > best_mag) {
                best = i;
                best_mag = mag;
                best_sign = *s;
            }
        }
        if (best >= 0) {
            signature += to_int(best_sign);
            a = detail::schur_complement_1x1(a, best);
            continue;
        }

        // no usable diagonal: look for a 2x2 block with decided determinant
        Eigen::Index bi = -1, bj = -1;
        int contribution = 0;
        std::optional<Real> block_det;
        best_mag = -1.0;
        for (Eigen::Index i = 0; i < n; ++i) {
            for (Eigen::Index j = i + 1; j < n; ++j) {
                Real det = a(i, i).re * a(j, j).re - a(i, j).norm();
                const auto s = try_sign(det);
                if (!s || *s == Sign::zero) continue;
                int c = 0;
                if (*s == Sign::positive) {
                    const auto t = try_sign(a(i, i).re + a(j, j).re);
                    if (!t || *t == Sign::zero) continue;
                    c = 2 * to_int(*t);
                }
                const double mag = magnitude(det);
                if (mag > best_mag) {
                    bi = i;
                    bj = j;
                    best_mag = mag;
                    contribution = c;
                    block_det = std::move(det);
                }
            }
        }
        if (bi >= 0) {
            signature += contribution;
            a = detail::schur_complement_2x2(a, bi, bj, *block_det);
            continue;
        }

        if constexpr (is_exact_v<Real>) {
            throw SingularForm();
        } else {
            return std::nullopt;
        }
    }
    return signature;
}

/// Signature (#positive - #negative eigenvalues) of a nonsingular exact form.
template <typename Real>
int hermitian_signature(const HermitianMatrix<Real>& h) {
    static_assert(is_exact_v<Real>, "use signature_adaptive for interval matrices");
    return *try_signature(h.matrix());
}

int hermitian_signature(const IntMatrix& symmetric);

/// Builds an interval enclosure of a form at a requested precision.
using IntervalFormBuilder = std::function<HermitianMatrix<Interval>(mpfr_prec_t)>;

/// Interval-path signature: doubles the precision until every pivot sign is
/// certified, throwing PrecisionExhausted past the cap.
int signature_adaptive(const IntervalFormBuilder& build, const PrecisionPolicy& policy = {});

/// (cos, sin) of 2*pi*r/m in Q(sqrt 2); requires m | 8.
std::pair<Sqrt2Real, Sqrt2Real> exact_cos_sin_sqrt2(RootOfUnity w);
/// (cos, sin) of 2*pi*r/m in Q(sqrt 3); requires m | 12.
std::pair<Sqrt3Real, Sqrt3Real> exact_cos_sin_sqrt3(RootOfUnity w);

/// True when the exact path handles this root (order divides 8 or 12).
bool has_exact_path(RootOfUnity w);

/// (1 - w) V + (1 - conj w) V^T from the values 1 - cos(w) and sin(w).
///
/// Entry (k, l) is (1 - cos)(V_kl + V_lk) + i sin (V_lk - V_kl).
template <typename Real>
HermitianMatrix<Real> hermitian_form(const IntMatrix& v, const Real& one_minus_cos, const Real& sin_w) {
    if (v.rows() != v.cols()) throw InputError("Seifert matrix must be square");
    const Eigen::Index n = v.rows();
    ComplexMatrix<Real> h(n, n);
    for (Eigen::Index k = 0; k < n; ++k) {
        for (Eigen::Index l = k; l < n; ++l) {
            const auto sym = static_cast<long>(v(k, l) + v(l, k));
            const auto skew = static_cast<long>(v(l, k) - v(k, l));
            h(k, l) = Complex<Real>(scale(one_minus_cos, sym), scale(sin_w, skew));
            if (l != k) h(l, k) = h(k, l).conj();
        }
    }
    return HermitianMatrix<Real>(std::move(h));
}

using ExactForm = std::variant<HermitianMatrix<Sqrt2Real>, HermitianMatrix<Sqrt3Real>>;

/// Exact Levine-Tristram form of V at w (order of w must divide 8 or 12).
ExactForm hermitian_form(const IntMatrix& v, RootOfUnity w);

/// Interval enclosure of the same form at the given precision.
HermitianMatrix<Interval> hermitian_form_interval(const IntMatrix& v, RootOfUnity w, mpfr_prec_t precision);

int signature(const ExactForm& form);

enum class ArithmeticMode { automatic, exact, interval };

struct SignatureOptions {
    ArithmeticMode mode = ArithmeticMode::automatic;
    PrecisionPolicy precision{};
};

/// Signature of (1 - w) V + (1 - conj w) V^T, by the arithmetic the options select.
/// Does not screen for Alexander roots; a singular form surfaces as SingularForm
/// (exact) or PrecisionExhausted (interval).
int form_signature(const IntMatrix& v, RootOfUnity w, const SignatureOptions& options = {});

/// A real number with a decidable sign: exact in Q(sqrt 2) / Q(sqrt 3), or an
/// interval enclosure that can be recomputed at any precision.
class CertifiedReal {
public:
    using Refiner = std::function<Interval(mpfr_prec_t)>;

    CertifiedReal(Sqrt2Real v) : value_(std::move(v)) {}  // NOLINT(google-explicit-constructor)
    CertifiedReal(Sqrt3Real v) : value_(std::move(v)) {}  // NOLINT(google-explicit-constructor)
    explicit CertifiedReal(Refiner r) : value_(std::move(r)) {}

    bool is_exact() const { return !std::holds_alternative<Refiner>(value_); }
    const std::variant<Sqrt2Real, Sqrt3Real, Refiner>& value() const { return value_; }

private:
    std::variant<Sqrt2Real, Sqrt3Real, Refiner> value_;
};

Sign certified_sign(const CertifiedReal& x, const PrecisionPolicy& policy = {});

}  // namespace slicecheck::exact
