#pragma once

#include <gmpxx.h>

#include <optional>
#include <ostream>
#include <string>

namespace slicecheck::exact {

enum class Sign { negative = -1, zero = 0, positive = 1 };

inline int to_int(Sign s) { return static_cast<int>(s); }

inline Sign sign_of(int v) { return v < 0 ? Sign::negative : (v > 0 ? Sign::positive : Sign::zero); }

/// a + b*sqrt(D) with rational a, b. D must be a positive non-square integer.
template <int D>
class QuadraticReal {
    static_assert(D == 2 || D == 3, "only Q(sqrt 2) and Q(sqrt 3) are needed");

public:
    QuadraticReal() = default;
    QuadraticReal(long v) : a_(v) {}  // NOLINT(google-explicit-constructor)
    QuadraticReal(mpq_class a, mpq_class b) : a_(std::move(a)), b_(std::move(b)) {
        a_.canonicalize();
        b_.canonicalize();
    }

    const mpq_class& rational_part() const { return a_; }
    const mpq_class& radical_part() const { return b_; }

    /// Galois conjugate a - b*sqrt(D).
    QuadraticReal galois() const { return {a_, -b_}; }
    /// Field norm a^2 - D b^2, a rational.
    mpq_class norm() const { return mpq_class(a_ * a_ - D * b_ * b_); }

    QuadraticReal operator-() const { return {-a_, -b_}; }
    QuadraticReal& operator+=(const QuadraticReal& o) {
        a_ += o.a_;
        b_ += o.b_;
        return *this;
    }
    QuadraticReal& operator-=(const QuadraticReal& o) {
        a_ -= o.a_;
        b_ -= o.b_;
        return *this;
    }
    QuadraticReal& operator*=(const QuadraticReal& o) {
        mpq_class a = a_ * o.a_ + D * b_ * o.b_;
        mpq_class b = a_ * o.b_ + b_ * o.a_;
        a_ = std::move(a);
        b_ = std::move(b);
        return *this;
    }
    QuadraticReal& operator/=(const QuadraticReal& o) {
        const mpq_class n = o.norm();
        *this *= o.galois();
        a_ /= n;
        b_ /= n;
        return *this;
    }
    friend QuadraticReal operator+(QuadraticReal x, const QuadraticReal& y) { return x += y; }
    friend QuadraticReal operator-(QuadraticReal x, const QuadraticReal& y) { return x -= y; }
    friend QuadraticReal operator*(QuadraticReal x, const QuadraticReal& y) { return x *= y; }
    friend QuadraticReal operator/(QuadraticReal x, const QuadraticReal& y) { return x /= y; }
    friend bool operator==(const QuadraticReal& x, const QuadraticReal& y) { return x.a_ == y.a_ && x.b_ == y.b_; }

    Sign sign() const {
        const int sa = sgn(a_);
        const int sb = sgn(b_);
        if (sb == 0) return sign_of(sa);
        if (sa == 0 || sa == sb) return sign_of(sb);
        // opposite signs: compare a^2 with D b^2 (never equal, sqrt D is irrational)
        return mpq_class(a_ * a_) > mpq_class(D * b_ * b_) ? sign_of(sa) : sign_of(sb);
    }

    double to_double() const;
    std::string to_string() const;

private:
    mpq_class a_{0};
    mpq_class b_{0};
};

template <int D>
double QuadraticReal<D>::to_double() const {
    static const double root = D == 2 ? 1.4142135623730950488 : 1.7320508075688772935;
    return a_.get_d() + b_.get_d() * root;
}

template <int D>
std::string QuadraticReal<D>::to_string() const {
    if (b_ == 0) return a_.get_str();
    std::string s = a_ == 0 ? std::string() : a_.get_str() + (b_ > 0 ? "+" : "");
    return s + b_.get_str() + "*sqrt(" + std::to_string(D) + ")";
}

template <int D>
std::ostream& operator<<(std::ostream& os, const QuadraticReal<D>& x) {
    return os << x.to_string();
}

using Sqrt2Real = QuadraticReal<2>;
using Sqrt3Real = QuadraticReal<3>;

template <int D>
std::optional<Sign> try_sign(const QuadraticReal<D>& x) {
    return x.sign();
}

template <int D>
QuadraticReal<D> zero_like(const QuadraticReal<D>&) {
    return {};
}

template <int D>
QuadraticReal<D> scale(const QuadraticReal<D>& x, long k) {
    return x * QuadraticReal<D>(k);
}

/// True for scalar types whose comparisons are decided exactly.
template <typename T>
inline constexpr bool is_exact_v = false;
template <int D>
inline constexpr bool is_exact_v<QuadraticReal<D>> = true;

template <int D>
double magnitude(const QuadraticReal<D>& x) {
    const double v = x.to_double();
    return v < 0 ? -v : v;
}

}  // namespace slicecheck::exact
