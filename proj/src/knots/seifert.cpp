#include "slicecheck/knots/seifert.hpp"

#include <cstdlib>
#include <numeric>

#include "slicecheck/exact/integer.hpp"

namespace slicecheck::knots {

SeifertMatrix::SeifertMatrix(IntMatrix entries) : v_(std::move(entries)) {
    if (v_.rows() != v_.cols()) throw InvalidSeifertMatrix("Seifert matrix must be square");
    if (v_.rows() % 2 != 0) throw InvalidSeifertMatrix("Seifert matrix must have even dimension");
    const IntMatrix skew = v_ - v_.transpose();
    const mpz_class det = exact::determinant(skew);
    if (det != 1) throw InvalidSeifertMatrix("det(V - V^T) = " + det.get_str() + ", expected 1");
}

SeifertMatrix SeifertMatrix::mirror() const { return SeifertMatrix(IntMatrix(-v_.transpose())); }

SeifertMatrix block_sum(const SeifertMatrix& a, const SeifertMatrix& b) {
    const auto n = a.dim();
    const auto m = b.dim();
    IntMatrix v = IntMatrix::Zero(n + m, n + m);
    v.topLeftCorner(n, n) = a.matrix();
    v.bottomRightCorner(m, m) = b.matrix();
    return SeifertMatrix(std::move(v));
}

SeifertMatrix torus_seifert(int p, int q) {
    if (p != 2) throw UnsupportedTorusParameters("torus knots T(p,q) are only supported for p = 2");
    if (std::gcd(p, q) != 1) throw InputError("T(2," + std::to_string(q) + ") needs q odd");
    const int n = std::abs(q) - 1;
    IntMatrix v = IntMatrix::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        v(i, i) = -1;
        if (i + 1 < n) v(i, i + 1) = 1;
    }
    SeifertMatrix s(std::move(v));
    return q > 0 ? s : s.mirror();
}

}  // namespace slicecheck::knots
