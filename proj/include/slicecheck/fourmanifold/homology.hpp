#pragma once

#include <Eigen/Core>

#include <compare>
#include <optional>
#include <string>

namespace slicecheck::fourmanifold {

/// Class a1 [S^2 x pt] + a2 [pt x S^2] in H_2(S^2 x S^2).
struct HomologyClass {
    long a1 = 0;
    long a2 = 0;

    Eigen::Matrix<long, 2, 1> vector() const { return {a1, a2}; }
    std::string to_string() const;

    friend auto operator<=>(const HomologyClass&, const HomologyClass&) = default;
};

HomologyClass operator+(HomologyClass x, HomologyClass y);
HomologyClass operator*(long k, HomologyClass x);

/// The hyperbolic form [[0,1],[1,0]].
const Eigen::Matrix<long, 2, 2>& intersection_form();

long intersection(const HomologyClass& x, const HomologyClass& y);
inline long square(const HomologyClass& x) { return intersection(x, x); }
bool is_characteristic(const HomologyClass& x);
/// Minimal genus of a smoothly embedded surface: 0 if a1 a2 = 0, else (|a1|-1)(|a2|-1).
long min_genus(const HomologyClass& x);

/// c0 + c1 t.
struct AffineInt {
    long c0 = 0;
    long c1 = 0;

    bool is_constant() const { return c1 == 0; }
    long at(long t) const { return c0 + c1 * t; }
    /// Substitute t -> sign * t + shift.
    AffineInt reparametrized(long sign, long shift) const { return {c0 + c1 * shift, c1 * sign}; }
    std::string to_string(const std::string& var = "t") const;

    friend auto operator<=>(const AffineInt&, const AffineInt&) = default;
};

AffineInt operator+(AffineInt x, AffineInt y);
AffineInt operator-(AffineInt x);
AffineInt operator*(long k, AffineInt x);

/// c0 + c1 t + c2 t^2.
struct IntQuadratic {
    long c0 = 0;
    long c1 = 0;
    long c2 = 0;

    /// 0 for t-independent, 1 for affine, 2 for genuinely quadratic.
    int degree() const { return c2 != 0 ? 2 : (c1 != 0 ? 1 : 0); }
    bool is_constant() const { return degree() == 0; }
    long at(long t) const { return c0 + c1 * t + c2 * t * t; }
    std::string to_string(const std::string& var = "t") const;

    friend auto operator<=>(const IntQuadratic&, const IntQuadratic&) = default;
};

/// t -> (p1 + q1 t, p2 + q2 t). A constant class is the special case q1 = q2 = 0.
struct AffineClass {
    AffineInt x1;
    AffineInt x2;

    AffineClass() = default;
    AffineClass(AffineInt a, AffineInt b) : x1(a), x2(b) {}
    AffineClass(const HomologyClass& c) : x1{c.a1, 0}, x2{c.a2, 0} {}  // NOLINT(google-explicit-constructor)

    bool is_constant() const { return x1.is_constant() && x2.is_constant(); }
    /// The class itself when t does not occur.
    std::optional<HomologyClass> constant() const;
    HomologyClass at(long t) const { return {x1.at(t), x2.at(t)}; }
    AffineClass reparametrized(long sign, long shift) const {
        return {x1.reparametrized(sign, shift), x2.reparametrized(sign, shift)};
    }
    std::string to_string(const std::string& var = "t") const;

    friend auto operator<=>(const AffineClass&, const AffineClass&) = default;
};

/// Q(a(t), b(t)) expanded in t.
IntQuadratic family_intersection(const AffineClass& a, const AffineClass& b);
IntQuadratic family_square(const AffineClass& a);

/// ka a + kb b, coordinate-wise. Constant exactly when the t-coefficients cancel.
AffineClass family_sum(const AffineClass& a, const AffineClass& b, long ka = 1, long kb = 1);

/// True iff a(t) is characteristic for every t.
bool is_identically_characteristic(const AffineClass& a);
/// True iff every coordinate of a(t) is divisible by m for every t.
bool is_identically_divisible(const AffineClass& a, long m);

}  // namespace slicecheck::fourmanifold
