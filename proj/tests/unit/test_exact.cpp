#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "../support/oracles.hpp"
#include "slicecheck/exact/hermitian.hpp"
#include "slicecheck/exact/integer.hpp"

using namespace slicecheck;
using namespace slicecheck::exact;

namespace {

IntMatrix mat(int n, std::initializer_list<std::int64_t> xs) {
    IntMatrix m(n, n);
    auto it = xs.begin();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = *it++;
    return m;
}

const IntMatrix kTrefoil = mat(2, {-1, 1, 0, -1});

}  // namespace

TEST_CASE("root of unity normalisation") {
    CHECK(RootOfUnity(8, 2) == zeta(4));
    CHECK(RootOfUnity(8, 4) == zeta(2));
    CHECK(RootOfUnity(8, 0) == RootOfUnity(1, 0));
    CHECK(RootOfUnity(12, 4).primitive_order() == 3);
    CHECK(zeta(8).conjugate() == RootOfUnity(8, 7));
    CHECK(zeta(8).pow(2) == zeta(4));
    CHECK(zeta(2).pow(2).is_one());
    CHECK(zeta(8).pow(-1) == zeta(8).conjugate());
    CHECK_THROWS_AS(RootOfUnity(0, 0), InputError);
    CHECK_THROWS_AS(RootOfUnity(4, 4), InputError);
    CHECK(zeta(8).to_string() == "zeta_8");
}

TEST_CASE("quadratic field arithmetic and sign") {
    const Sqrt2Real one(1);
    const Sqrt2Real root2(mpq_class(0), mpq_class(1));
    CHECK((one - root2).sign() == Sign::negative);
    CHECK(Sqrt2Real(0).sign() == Sign::zero);
    CHECK((root2 - one).sign() == Sign::positive);
    CHECK(root2 * root2 == Sqrt2Real(2));
    CHECK((one / (root2 - one)) == root2 + one);
    // near-cancellation: 49 < 50 and 49 > 48
    CHECK(Sqrt2Real(mpq_class(7), mpq_class(-5)).sign() == Sign::negative);
    CHECK(Sqrt3Real(mpq_class(7), mpq_class(-4)).sign() == Sign::positive);
}

TEST_CASE("certified_sign examples") {
    CHECK(certified_sign(Sqrt2Real(mpq_class(1), mpq_class(-1))) == Sign::negative);
    CHECK(certified_sign(Sqrt2Real(0)) == Sign::zero);
    auto [c, s] = exact_cos_sin_sqrt2(zeta(8));
    CHECK(certified_sign(Sqrt2Real(2) * c - Sqrt2Real(1)) == Sign::positive);
    const CertifiedReal refined(CertifiedReal::Refiner(
        [](mpfr_prec_t p) { return Interval::cos_turn(1, 7, p) - Interval::cos_turn(2, 7, p); }));
    CHECK(certified_sign(refined) == Sign::positive);
    const CertifiedReal point_zero(CertifiedReal::Refiner([](mpfr_prec_t p) { return Interval(0L, p); }));
    CHECK(certified_sign(point_zero) == Sign::zero);
    // cos(pi/2) is never a point enclosure, so its sign is never certified
    const CertifiedReal zero(CertifiedReal::Refiner([](mpfr_prec_t p) { return Interval::cos_turn(1, 4, p); }));
    CHECK_THROWS_AS(certified_sign(zero, PrecisionPolicy{64, 256}), PrecisionExhausted);
}

TEST_CASE("interval cos/sin enclose the true values") {
    for (long m : {3L, 5L, 7L, 8L, 12L, 30L}) {
        for (long r = 0; r < m; ++r) {
            const double t = 2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(m);
            const Interval c = Interval::cos_turn(r, m, 128);
            const Interval s = Interval::sin_turn(r, m, 128);
            CHECK(mpfr_get_d(c.lower(), MPFR_RNDD) <= std::cos(t) + 1e-15);
            CHECK(mpfr_get_d(c.upper(), MPFR_RNDU) >= std::cos(t) - 1e-15);
            CHECK(mpfr_get_d(s.lower(), MPFR_RNDD) <= std::sin(t) + 1e-15);
            CHECK(mpfr_get_d(s.upper(), MPFR_RNDU) >= std::sin(t) - 1e-15);
            CHECK(c.width() < 1e-30);
        }
    }
}

TEST_CASE("hermitian_form examples") {
    SUBCASE("trefoil at -1") {
        const auto h = std::get<HermitianMatrix<Sqrt2Real>>(hermitian_form(kTrefoil, zeta(2)));
        CHECK(h(0, 0) == Complex<Sqrt2Real>(Sqrt2Real(-4)));
        CHECK(h(0, 1) == Complex<Sqrt2Real>(Sqrt2Real(2)));
        CHECK(h(1, 0) == Complex<Sqrt2Real>(Sqrt2Real(2)));
        CHECK(h(1, 1) == Complex<Sqrt2Real>(Sqrt2Real(-4)));
    }
    SUBCASE("trefoil at i") {
        const auto h = std::get<HermitianMatrix<Sqrt2Real>>(hermitian_form(kTrefoil, zeta(4)));
        CHECK(h(0, 0).re == Sqrt2Real(-2));
        CHECK(h(0, 0).im == Sqrt2Real(0));
        CHECK(h(0, 1).re == Sqrt2Real(1));
        CHECK(h(0, 1).im == Sqrt2Real(-1));
        CHECK(h(1, 0).im == Sqrt2Real(1));
        CHECK(h(1, 1).re == Sqrt2Real(-2));
    }
    SUBCASE("omega = 1 gives zero") {
        const auto h = std::get<HermitianMatrix<Sqrt2Real>>(hermitian_form(kTrefoil, RootOfUnity(1, 0)));
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                CHECK(h(i, j).re.sign() == Sign::zero);
                CHECK(h(i, j).im.sign() == Sign::zero);
            }
    }
    SUBCASE("twelfth roots use Q(sqrt 3)") {
        CHECK(std::holds_alternative<HermitianMatrix<Sqrt3Real>>(hermitian_form(kTrefoil, zeta(3))));
        CHECK(std::holds_alternative<HermitianMatrix<Sqrt3Real>>(hermitian_form(kTrefoil, zeta(12))));
        CHECK_THROWS_AS(hermitian_form(kTrefoil, zeta(5)), UnsupportedExactOrder);
    }
}

TEST_CASE("hermitian_signature examples") {
    CHECK(hermitian_signature(mat(2, {-4, 2, 2, -4})) == -2);
    CHECK(hermitian_signature(IntMatrix(IntMatrix::Identity(3, 3))) == 3);
    CHECK(hermitian_signature(mat(2, {0, 1, 1, 0})) == 0);
}

TEST_CASE("singular forms are rejected") {
    CHECK_THROWS_AS(hermitian_signature(mat(2, {1, 1, 1, 1})), SingularForm);
    CHECK_THROWS_AS(hermitian_signature(IntMatrix(IntMatrix::Zero(2, 2))), SingularForm);
    // trefoil at zeta_6 is degenerate: exact path refuses, interval path runs out of precision
    CHECK_THROWS_AS(form_signature(kTrefoil, zeta(6), {ArithmeticMode::exact, {}}), SingularForm);
    CHECK_THROWS_AS(form_signature(kTrefoil, zeta(6), {ArithmeticMode::interval, {64, 256}}), PrecisionExhausted);
}

TEST_CASE("zero-diagonal forms need 2x2 pivots") {
    CHECK(hermitian_signature(mat(4, {0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 2, 0, 0, 2, 0})) == 0);
    CHECK(hermitian_signature(mat(3, {0, 1, 1, 1, 0, 1, 1, 1, 0})) == -1);  // eigenvalues 2, -1, -1
    CHECK(hermitian_signature(mat(3, {0, 2, 0, 2, 0, 0, 0, 0, 5})) == 1);
}

TEST_CASE("property: integer symmetric forms match the eigenvalue oracle") {
    std::mt19937 rng(1234);
    std::uniform_int_distribution<int> entry(-3, 3), dim(1, 6);
    int checked = 0;
    for (int trial = 0; trial < 400; ++trial) {
        const int n = dim(rng);
        IntMatrix m(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) m(i, j) = m(j, i) = (trial % 3 == 0 && i == j) ? 0 : entry(rng);
        const auto want = oracle::numeric_signature(m);
        if (!want) {
            CHECK_THROWS_AS(hermitian_signature(m), SingularForm);
            continue;
        }
        const int got = hermitian_signature(m);
        CHECK(got == *want);
        CHECK(hermitian_signature(IntMatrix(-m)) == -got);
        // permutation invariance
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        IntMatrix p(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) p(i, j) = m(perm[i], perm[j]);
        CHECK(hermitian_signature(p) == got);
        ++checked;
    }
    CHECK(checked > 100);
}

TEST_CASE("property: block sums add signatures") {
    std::mt19937 rng(77);
    std::uniform_int_distribution<int> entry(-3, 3), dim(1, 3);
    for (int trial = 0; trial < 150; ++trial) {
        const int a = dim(rng), b = dim(rng);
        IntMatrix m = IntMatrix::Zero(a + b, a + b);
        for (int i = 0; i < a; ++i)
            for (int j = i; j < a; ++j) m(i, j) = m(j, i) = entry(rng);
        for (int i = a; i < a + b; ++i)
            for (int j = i; j < a + b; ++j) m(i, j) = m(j, i) = entry(rng);
        const IntMatrix top = m.topLeftCorner(a, a), bottom = m.bottomRightCorner(b, b);
        if (!oracle::numeric_signature(top) || !oracle::numeric_signature(bottom)) continue;
        CHECK(hermitian_signature(m) == hermitian_signature(top) + hermitian_signature(bottom));
    }
}

TEST_CASE("property: exact and interval paths agree on Levine-Tristram forms") {
    oracle::SeifertGenerator gen(99);
    const std::vector<RootOfUnity> roots{zeta(2), zeta(4), zeta(8), RootOfUnity(8, 3), zeta(3), zeta(6),
                                         zeta(12), RootOfUnity(12, 5)};
    int compared = 0;
    for (int trial = 0; trial < 120; ++trial) {
        const IntMatrix v = gen.next(6);
        for (const auto& w : roots) {
            const auto want = oracle::numeric_signature(v, w.order(), w.index());
            if (!want) continue;
            const int exact = form_signature(v, w, {ArithmeticMode::exact, {}});
            const int interval = form_signature(v, w, {ArithmeticMode::interval, {}});
            CHECK(exact == *want);
            CHECK(interval == exact);
            ++compared;
        }
    }
    CHECK(compared > 300);
}

TEST_CASE("interval path handles orders without an exact field") {
    oracle::SeifertGenerator gen(5);
    for (int trial = 0; trial < 60; ++trial) {
        const IntMatrix v = gen.next(6);
        for (long m : {5L, 7L, 10L}) {
            for (long r = 1; r < m; ++r) {
                const auto want = oracle::numeric_signature(v, m, r);
                if (!want) continue;
                CHECK(form_signature(v, RootOfUnity(m, r)) == *want);
            }
        }
    }
}

TEST_CASE("integer determinant and Alexander pencil") {
    CHECK(determinant(mat(2, {-2, 1, 1, -2})) == 3);
    CHECK(determinant(IntMatrix(0, 0)) == 1);
    CHECK(determinant(mat(3, {0, 1, 2, 1, 0, 3, 4, -3, 8})) == -2);
    // trefoil: det(V - tV^T) = t^2 - t + 1
    const auto delta = determinant_pencil(kTrefoil, IntMatrix(kTrefoil.transpose()));
    REQUIRE(delta.size() >= 3);
    CHECK(delta[0] == 1);
    CHECK(delta[1] == -1);
    CHECK(delta[2] == 1);
    CHECK(cyclotomic(6) == IntPolynomial{1, -1, 1});
    CHECK(cyclotomic(8) == IntPolynomial{1, 0, 0, 0, 1});
    CHECK(cyclotomic(1) == IntPolynomial{-1, 1});
    const auto rem = remainder_monic(delta, cyclotomic(6));
    CHECK(std::all_of(rem.begin(), rem.end(), [](const mpz_class& c) { return c == 0; }));
}
