#include "slicecheck/exact/integer.hpp"

#include <stdexcept>
#include <utility>

namespace slicecheck::exact {

namespace {

mpz_class bareiss(std::vector<std::vector<mpz_class>> a) {
    const std::size_t n = a.size();
    if (n == 0) return 1;
    int sign = 1;
    mpz_class prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && a[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

void trim(IntPolynomial& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

}  // namespace

mpz_class determinant(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
    const auto n = static_cast<std::size_t>(m.rows());
    std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = static_cast<long>(m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)));
    return bareiss(std::move(a));
}

IntPolynomial determinant_pencil(const IntMatrix& a, const IntMatrix& b) {
    const auto n = static_cast<std::size_t>(a.rows());
    // values at t = 0..n
    std::vector<mpz_class> values;
    for (std::size_t t = 0; t <= n; ++t) {
        std::vector<std::vector<mpz_class>> m(n, std::vector<mpz_class>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                const auto ii = static_cast<Eigen::Index>(i);
                const auto jj = static_cast<Eigen::Index>(j);
                m[i][j] = mpz_class(static_cast<long>(a(ii, jj))) - mpz_class(static_cast<long>(t)) * static_cast<long>(b(ii, jj));
            }
        values.push_back(bareiss(std::move(m)));
    }
    // Newton forward differences, then expand the Newton basis t(t-1)...(t-k+1)/k!
    std::vector<mpq_class> coeffs(n + 1, 0);
    std::vector<mpq_class> diff(values.begin(), values.end());
    std::vector<mpq_class> basis{1};  // falling factorial polynomial, increasing degree
    mpq_class factorial = 1;
    for (std::size_t k = 0; k <= n; ++k) {
        for (std::size_t d = 0; d < basis.size(); ++d) coeffs[d] += diff[0] * basis[d] / factorial;
        for (std::size_t i = 0; i + 1 < diff.size(); ++i) diff[i] = diff[i + 1] - diff[i];
        diff.pop_back();
        // basis *= (t - k)
        std::vector<mpq_class> next(basis.size() + 1, 0);
        for (std::size_t d = 0; d < basis.size(); ++d) {
            next[d + 1] += basis[d];
            next[d] -= basis[d] * static_cast<long>(k);
        }
        basis = std::move(next);
        factorial *= static_cast<long>(k + 1);
    }
    IntPolynomial out;
    for (auto& c : coeffs) {
        c.canonicalize();
        if (c.get_den() != 1) throw std::logic_error("non-integral interpolation coefficient");
        out.push_back(c.get_num());
    }
    trim(out);
    return out;
}

IntPolynomial remainder_monic(IntPolynomial p, const IntPolynomial& monic) {
    trim(p);
    const std::size_t dm = monic.size() - 1;
    while (p.size() > dm && !p.empty()) {
        const mpz_class lead = p.back();
        const std::size_t shift = p.size() - 1 - dm;
        for (std::size_t i = 0; i <= dm; ++i) p[shift + i] -= lead * monic[i];
        trim(p);
    }
    return p;
}

IntPolynomial cyclotomic(long k) {
    if (k < 1) throw std::invalid_argument("cyclotomic index must be positive");
    // t^k - 1 divided by Phi_d for every proper divisor d
    IntPolynomial p(static_cast<std::size_t>(k) + 1, 0);
    p[0] = -1;
    p[static_cast<std::size_t>(k)] = 1;
    for (long d = 1; d < k; ++d) {
        if (k % d != 0) continue;
        const IntPolynomial q = cyclotomic(d);
        // exact division by monic q
        const std::size_t dq = q.size() - 1;
        IntPolynomial quotient(p.size() - dq, 0);
        for (std::size_t i = p.size(); i-- > dq;) {
            const mpz_class c = p[i];
            quotient[i - dq] = c;
            for (std::size_t j = 0; j <= dq; ++j) p[i - dq + j] -= c * q[j];
        }
        p = std::move(quotient);
    }
    return p;
}

}  // namespace slicecheck::exact
