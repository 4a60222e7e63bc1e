#include "slicecheck/fourmanifold/homology.hpp"

#include <cstdlib>

namespace slicecheck::fourmanifold {

namespace {

std::string signed_term(long c, const std::string& var, bool leading) {
    // "x", "-x", "2x", "+ 2x" style pieces without spaces
    std::string s;
    if (c < 0) s = "-";
    else if (!leading) s = "+";
    const long a = std::labs(c);
    if (a != 1 || var.empty()) s += std::to_string(a);
    return s + var;
}

}  // namespace

std::string HomologyClass::to_string() const { return "(" + std::to_string(a1) + "," + std::to_string(a2) + ")"; }

HomologyClass operator+(HomologyClass x, HomologyClass y) { return {x.a1 + y.a1, x.a2 + y.a2}; }
HomologyClass operator*(long k, HomologyClass x) { return {k * x.a1, k * x.a2}; }

const Eigen::Matrix<long, 2, 2>& intersection_form() {
    static const Eigen::Matrix<long, 2, 2> q = (Eigen::Matrix<long, 2, 2>() << 0, 1, 1, 0).finished();
    return q;
}

long intersection(const HomologyClass& x, const HomologyClass& y) {
    return x.vector().dot(intersection_form() * y.vector());
}

bool is_characteristic(const HomologyClass& x) { return x.a1 % 2 == 0 && x.a2 % 2 == 0; }

long min_genus(const HomologyClass& x) {
    if (x.a1 == 0 || x.a2 == 0) return 0;
    return (std::labs(x.a1) - 1) * (std::labs(x.a2) - 1);
}

std::string AffineInt::to_string(const std::string& var) const {
    if (c1 == 0) return std::to_string(c0);
    if (c0 == 0) return signed_term(c1, var, true);
    return std::to_string(c0) + signed_term(c1, var, false);
}

AffineInt operator+(AffineInt x, AffineInt y) { return {x.c0 + y.c0, x.c1 + y.c1}; }
AffineInt operator-(AffineInt x) { return {-x.c0, -x.c1}; }
AffineInt operator*(long k, AffineInt x) { return {k * x.c0, k * x.c1}; }

std::string IntQuadratic::to_string(const std::string& var) const {
    std::string s;
    if (c0 != 0) s = std::to_string(c0);
    if (c1 != 0) s += signed_term(c1, var, s.empty());
    if (c2 != 0) s += signed_term(c2, var + "^2", s.empty());
    return s.empty() ? "0" : s;
}

std::optional<HomologyClass> AffineClass::constant() const {
    if (!is_constant()) return std::nullopt;
    return HomologyClass{x1.c0, x2.c0};
}

std::string AffineClass::to_string(const std::string& var) const {
    return "(" + x1.to_string(var) + "," + x2.to_string(var) + ")";
}

IntQuadratic family_intersection(const AffineClass& a, const AffineClass& b) {
    // (p + q t)(r + s t) expanded, for both cross terms of the hyperbolic form
    auto product = [](AffineInt u, AffineInt v) {
        return IntQuadratic{u.c0 * v.c0, u.c0 * v.c1 + u.c1 * v.c0, u.c1 * v.c1};
    };
    const IntQuadratic l = product(a.x1, b.x2);
    const IntQuadratic r = product(a.x2, b.x1);
    return {l.c0 + r.c0, l.c1 + r.c1, l.c2 + r.c2};
}

IntQuadratic family_square(const AffineClass& a) { return family_intersection(a, a); }

AffineClass family_sum(const AffineClass& a, const AffineClass& b, long ka, long kb) {
    return {ka * a.x1 + kb * b.x1, ka * a.x2 + kb * b.x2};
}

bool is_identically_divisible(const AffineClass& a, long m) {
    for (const AffineInt& x : {a.x1, a.x2})
        if (x.c0 % m != 0 || x.c1 % m != 0) return false;
    return true;
}

bool is_identically_characteristic(const AffineClass& a) { return is_identically_divisible(a, 2); }

}  // namespace slicecheck::fourmanifold
