#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <optional>
#include <string>

#include "slicecheck/exact/quadratic.hpp"

namespace slicecheck::exact {

/// Closed interval [lo, hi] with MPFR endpoints and outward rounding.
///
/// Every operation returns an enclosure of the exact result for all choices of
/// operands inside the input enclosures. Operations on mixed precisions work at
/// the larger one.
class Interval {
public:
    explicit Interval(mpfr_prec_t precision = 64);
    Interval(long v, mpfr_prec_t precision);
    Interval(const mpq_class& v, mpfr_prec_t precision);
    Interval(const Interval& o);
    Interval(Interval&& o) noexcept;
    Interval& operator=(const Interval& o);
    Interval& operator=(Interval&& o) noexcept;
    ~Interval();

    /// Enclosures of cos(2*pi*r/m) and sin(2*pi*r/m).
    static Interval cos_turn(long r, long m, mpfr_prec_t precision);
    static Interval sin_turn(long r, long m, mpfr_prec_t precision);

    mpfr_prec_t precision() const noexcept { return prec_; }
    bool contains_zero() const;
    /// Decided sign, or nullopt when the enclosure straddles zero.
    std::optional<Sign> sign() const;
    double midpoint() const;
    double width() const;
    std::string to_string() const;

    Interval operator-() const;
    Interval& operator+=(const Interval& o);
    Interval& operator-=(const Interval& o);
    Interval& operator*=(const Interval& o);
    /// Requires o to exclude zero.
    Interval& operator/=(const Interval& o);
    friend Interval operator+(Interval x, const Interval& y) { return x += y; }
    friend Interval operator-(Interval x, const Interval& y) { return x -= y; }
    friend Interval operator*(Interval x, const Interval& y) { return x *= y; }
    friend Interval operator/(Interval x, const Interval& y) { return x /= y; }

    mpfr_srcptr lower() const { return lo_; }
    mpfr_srcptr upper() const { return hi_; }

private:
    static Interval angle(long r, long m, mpfr_prec_t precision);
    static Interval lipschitz_image(const Interval& theta, int (*fn)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t));

    mpfr_prec_t prec_;
    mpfr_t lo_;
    mpfr_t hi_;
};

inline std::optional<Sign> try_sign(const Interval& x) { return x.sign(); }

inline Interval zero_like(const Interval& x) { return Interval(0L, x.precision()); }

inline Interval scale(const Interval& x, long k) { return x * Interval(k, x.precision()); }

inline double magnitude(const Interval& x) {
    const double m = x.midpoint();
    return m < 0 ? -m : m;
}

/// Precision schedule of the interval path: start, then double until the cap.
struct PrecisionPolicy {
    unsigned initial_bits = 64;
    unsigned cap_bits = 4096;
};

}  // namespace slicecheck::exact
