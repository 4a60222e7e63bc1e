#pragma once

// Independent oracles and generators shared by the test binaries. Nothing in
// here calls the library's signature engine.

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <numbers>
#include <optional>
#include <random>

#include "slicecheck/exact/hermitian.hpp"

namespace oracle {

using slicecheck::exact::IntMatrix;

/// Floating-point signature of (1-w)V + (1-conj w)V^T from eigenvalues;
/// nullopt if some eigenvalue is too close to zero to trust.
inline std::optional<int> numeric_signature(const IntMatrix& v, long m, long r) {
    const auto n = v.rows();
    if (n == 0) return 0;
    const double t = 2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(m);
    const std::complex<double> w(std::cos(t), std::sin(t));
    Eigen::MatrixXcd h(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            h(i, j) = (1.0 - w) * static_cast<double>(v(i, j)) + (1.0 - std::conj(w)) * static_cast<double>(v(j, i));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h, Eigen::EigenvaluesOnly);
    int s = 0;
    for (Eigen::Index i = 0; i < n; ++i) {
        const double e = es.eigenvalues()(i);
        if (std::abs(e) < 1e-8) return std::nullopt;
        s += e > 0 ? 1 : -1;
    }
    return s;
}

inline std::optional<int> numeric_signature(const IntMatrix& symmetric) {
    const auto n = symmetric.rows();
    Eigen::MatrixXd h = symmetric.cast<double>();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h, Eigen::EigenvaluesOnly);
    int s = 0;
    for (Eigen::Index i = 0; i < n; ++i) {
        const double e = es.eigenvalues()(i);
        if (std::abs(e) < 1e-8) return std::nullopt;
        s += e > 0 ? 1 : -1;
    }
    return s;
}

/// sigma of T(2,q) at exp(2 pi i r/m) by counting the roots of the Alexander
/// polynomial passed on the way from 1 to w. nullopt at a root.
inline std::optional<int> torus_signature(long q, long m, long r) {
    r %= m;
    if (r < 0) r += m;
    if (r == 0) return 0;
    if (2 * r > m) r = m - r;
    const long aq = q < 0 ? -q : q;
    int count = 0;
    for (long j = 1; j < aq; j += 2) {
        const long lhs = j * m;
        const long rhs = 2 * r * aq;
        if (lhs == rhs) return std::nullopt;
        if (lhs < rhs) ++count;
    }
    const int s = -2 * count;
    return q > 0 ? s : -s;
}

/// Random integer matrix with det(V - V^T) = 1, entries in [-3, 3], even
/// dimension in {0, ..., max_dim}. Half of the draws are rejection samples of
/// fully random matrices, the rest a random symmetric part plus the standard
/// symplectic block.
class SeifertGenerator {
public:
    explicit SeifertGenerator(unsigned seed) : rng_(seed) {}

    IntMatrix next(int max_dim = 6) {
        std::uniform_int_distribution<int> dims(0, max_dim / 2);
        const int n = 2 * dims(rng_);
        if (n <= 4 && coin()) {
            for (int attempt = 0; attempt < 2000; ++attempt) {
                IntMatrix v = random_matrix(n, -3, 3);
                if (n == 0 || std::llround((v - v.transpose()).cast<double>().determinant()) == 1) return v;
            }
        }
        IntMatrix v(n, n);
        std::uniform_int_distribution<int> entry(-3, 3);
        for (int i = 0; i < n; ++i) {
            for (int j = i; j < n; ++j) {
                const bool symplectic = (i % 2 == 0 && j == i + 1);
                int x = entry(rng_);
                if (symplectic && x == 3) x = 2;
                v(i, j) = x + (symplectic ? 1 : 0);
                v(j, i) = x;
            }
        }
        return v;
    }

    std::mt19937& rng() { return rng_; }

private:
    bool coin() { return std::uniform_int_distribution<int>(0, 1)(rng_) == 1; }
    IntMatrix random_matrix(int n, int lo, int hi) {
        std::uniform_int_distribution<int> entry(lo, hi);
        IntMatrix v(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) v(i, j) = entry(rng_);
        return v;
    }
    std::mt19937 rng_;
};

}  // namespace oracle
