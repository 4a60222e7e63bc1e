#pragma once

#include "slicecheck/exact/hermitian.hpp"

namespace slicecheck::knots {

using exact::IntMatrix;

/// Integer matrix V of a Seifert pairing, validated by det(V - V^T) = 1.
///
/// The 0x0 matrix is the Seifert matrix of a disc (the unknot).
class SeifertMatrix {
public:
    explicit SeifertMatrix(IntMatrix entries);
    static SeifertMatrix empty() { return SeifertMatrix(IntMatrix(0, 0)); }

    const IntMatrix& matrix() const noexcept { return v_; }
    Eigen::Index dim() const noexcept { return v_.rows(); }
    int genus() const noexcept { return static_cast<int>(v_.rows() / 2); }

    /// Seifert matrix of the mirror image, -V^T.
    SeifertMatrix mirror() const;

    friend bool operator==(const SeifertMatrix& a, const SeifertMatrix& b) {
        return a.v_.rows() == b.v_.rows() && a.v_.cols() == b.v_.cols() && a.v_ == b.v_;
    }

private:
    IntMatrix v_;
};

/// Seifert matrix of a connected sum: diag(V1, V2).
SeifertMatrix block_sum(const SeifertMatrix& a, const SeifertMatrix& b);

/// Standard Seifert matrix of the (2, q) torus knot.
///
/// For q > 0: (q-1)x(q-1) bidiagonal, -1 on the diagonal and 1 directly above
/// it; for q < 0 the mirror -V^T. q = +-1 gives the unknot (0x0). Only p = 2 is
/// supported.
SeifertMatrix torus_seifert(int p, int q);

}  // namespace slicecheck::knots
