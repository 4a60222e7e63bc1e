#pragma once

#include <gmpxx.h>

#include <vector>

#include "slicecheck/exact/hermitian.hpp"

namespace slicecheck::exact {

/// Exact determinant of an integer matrix (fraction-free Bareiss elimination).
mpz_class determinant(const IntMatrix& m);

/// Integer polynomial, coefficients in increasing degree.
using IntPolynomial = std::vector<mpz_class>;

/// det(A - t B) as a polynomial in t, by evaluation at 0..n and interpolation.
IntPolynomial determinant_pencil(const IntMatrix& a, const IntMatrix& b);

/// The k-th cyclotomic polynomial.
IntPolynomial cyclotomic(long k);

/// Remainder of p modulo a monic divisor.
IntPolynomial remainder_monic(IntPolynomial p, const IntPolynomial& monic);

}  // namespace slicecheck::exact
