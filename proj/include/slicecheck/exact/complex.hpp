#pragma once

#include <Eigen/Core>

#include <string>

namespace slicecheck::exact {

/// re + i*im over an ordered field (or an interval type standing in for one).
template <typename Real>
struct Complex {
    Real re{};
    Real im{};

    Complex() = default;
    Complex(Real r) : re(std::move(r)), im(zero_like(re)) {}  // NOLINT(google-explicit-constructor)
    Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}

    Complex conj() const { return {re, -im}; }
    /// |z|^2
    Real norm() const { return re * re + im * im; }

    Complex operator-() const { return {-re, -im}; }
    Complex& operator+=(const Complex& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    Complex& operator-=(const Complex& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    friend Complex operator+(Complex a, const Complex& b) { return a += b; }
    friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
    friend Complex operator*(const Complex& a, const Complex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend Complex operator*(const Complex& a, const Real& s) { return {a.re * s, a.im * s}; }
    /// Requires b.norm() to be certifiably nonzero.
    friend Complex operator/(const Complex& a, const Complex& b) {
        const Real n = b.norm();
        const Complex p = a * b.conj();
        return {p.re / n, p.im / n};
    }
    friend Complex operator/(const Complex& a, const Real& s) { return {a.re / s, a.im / s}; }
};

template <typename Real>
bool operator==(const Complex<Real>& a, const Complex<Real>& b) {
    return a.re == b.re && a.im == b.im;
}

template <typename Real>
using ComplexMatrix = Eigen::Matrix<Complex<Real>, Eigen::Dynamic, Eigen::Dynamic>;

}  // namespace slicecheck::exact

namespace Eigen {

template <typename Real>
struct NumTraits<slicecheck::exact::Complex<Real>> : GenericNumTraits<slicecheck::exact::Complex<Real>> {
    using NonInteger = slicecheck::exact::Complex<Real>;
    using Nested = slicecheck::exact::Complex<Real>;
    using Literal = slicecheck::exact::Complex<Real>;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 4,
        AddCost = 8,
        MulCost = 32
    };
};

}  // namespace Eigen
