#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "slicecheck/error.hpp"
#include "slicecheck/fourmanifold/symmetry.hpp"

using namespace slicecheck;
using namespace slicecheck::fourmanifold;

namespace {

const AffineInt t{0, 1};
AffineInt c(long v) { return {v, 0}; }

}  // namespace

TEST_CASE("intersection examples") {
    CHECK(intersection({2, 2}, {-1, 3}) == 4);
    CHECK(intersection({0, 5}, {0, -7}) == 0);
    CHECK(intersection({2, -2}, {2, -2}) == -8);
    CHECK(square({3, 5}) == 30);
}

TEST_CASE("is_characteristic examples") {
    CHECK(is_characteristic({0, 4}));
    CHECK_FALSE(is_characteristic({1, 0}));
    CHECK(is_characteristic({2, -2}));
    CHECK_FALSE(is_characteristic({2, 3}));
}

TEST_CASE("min_genus examples") {
    CHECK(min_genus({2, 4}) == 3);
    CHECK(min_genus({0, 17}) == 0);
    CHECK(min_genus({3, 3}) == 4);
    CHECK(min_genus({-1, 9}) == 0);
    CHECK(min_genus({-2, -3}) == 2);
}

TEST_CASE("family_sum examples") {
    const AffineClass a1{c(1), t};
    const AffineClass b1{c(1), c(4) + (-1) * t};
    CHECK(family_sum(a1, b1).constant() == HomologyClass{2, 4});
    const AffineClass b2{c(-1), c(4) + t};
    const auto s = family_sum(a1, b2);
    CHECK_FALSE(s.is_constant());
    CHECK(s.to_string("x") == "(0,4+2x)");
    CHECK(family_sum(HomologyClass{2, 2}, HomologyClass{-1, 3}, 1, 2).constant() == HomologyClass{0, 8});
    CHECK(family_sum(a1, b2, 1, -1).to_string("x") == "(2,-4)");
}

TEST_CASE("family_square examples") {
    const auto q1 = family_square(AffineClass{c(0), c(4) + 2 * t});
    CHECK(q1.is_constant());
    CHECK(q1.c0 == 0);
    const auto q2 = family_square(AffineClass{c(1), t});
    CHECK(q2.degree() == 1);
    CHECK(q2.to_string() == "2t");
    const auto q3 = family_square(AffineClass{c(1) + t, c(1)});
    CHECK(q3.degree() == 1);
    CHECK(q3.to_string() == "2+2t");
    CHECK(family_square(AffineClass{t, t}).degree() == 2);
}

TEST_CASE("affine printing") {
    CHECK((c(4) + (-1) * t).to_string("x") == "4-x");
    CHECK((c(-4) + (-1) * t).to_string("x") == "-4-x");
    CHECK(t.to_string("x") == "x");
    CHECK(c(0).to_string() == "0");
    CHECK((3 * t).to_string("x") == "3x");
}

TEST_CASE("symmetry_orbit examples") {
    const auto orbit = symmetry_orbit(ConcretePair{{0, 1}, {1, 0}});
    CHECK(orbit.size() == 4);
    std::set<ConcretePair> got;
    for (const auto& p : orbit) got.insert(std::get<ConcretePair>(p));
    CHECK(got == std::set<ConcretePair>{{{0, 1}, {1, 0}}, {{1, 0}, {0, 1}}, {{0, -1}, {-1, 0}}, {{-1, 0}, {0, -1}}});
    CHECK(symmetry_orbit(ConcretePair{{1, 1}, {1, 1}}).size() == 2);

    const FamilyPair f{AffineClass{c(1), t}, AffineClass{c(-1), c(4) + t}};
    const GroupElement s3s2(false, true, true);
    const FamilyPair image = s3s2.apply(f);
    CHECK(image.to_string("x") == "((1,-4-x),(-1,-x))");
    CHECK(image.reparametrized(-1, -4) == f);
    CHECK(normalize_family(image) == normalize_family(f));
    CHECK(symmetry_orbit(f).size() == 4);
}

TEST_CASE("canonical_pair examples") {
    CHECK(canonical_pair(ConcretePair{{0, 1}, {1, 0}}) == ConcretePair{{-1, 0}, {0, -1}});
    CHECK(canonical_pair(ConcretePair{{2, 2}, {1, 1}}) == canonical_pair(ConcretePair{{1, 1}, {2, 2}}));
    const ConcretePair m{{-1, -1}, {-1, -1}};
    CHECK(canonical_pair(m) == canonical_pair(GroupElement(false, true, false).apply(m)));
    CHECK(canonical_pair(m) == m);
}

TEST_CASE("family normalization") {
    const FamilyPair f{AffineClass{c(1), t}, AffineClass{c(1), c(4) + (-1) * t}};
    CHECK(normalize_family(f) == FamilyPair{AffineClass{c(1), t}, AffineClass{c(1), c(4) + (-1) * t}});
    CHECK(normalize_family(f.reparametrized(-1, 7)) == normalize_family(f));
    const FamilyPair g{AffineClass{c(2), c(5) + 3 * t}, AffineClass{c(0), c(1)}};
    const FamilyPair n = normalize_family(g);
    CHECK(n.alpha.x2 == AffineInt{2, 3});
    CHECK_THROWS_AS(FamilyPair(AffineClass{c(1), c(2)}, AffineClass{c(3), c(4)}), InputError);
}

TEST_CASE("family_member examples") {
    const FamilyPair f1{AffineClass{c(1), t}, AffineClass{c(1), c(4) + (-1) * t}};
    const FamilyPair f2{AffineClass{c(1), t}, AffineClass{c(-1), c(4) + t}};
    const auto m1 = family_member(f1, ConcretePair{{1, 4}, {1, 0}});
    REQUIRE(m1);
    CHECK(m1->t == 4);
    CHECK(m1->element == GroupElement::identity());
    const auto m2 = family_member(f2, ConcretePair{{1, -4}, {-1, 0}});
    REQUIRE(m2);
    CHECK(m2->t == -4);
    CHECK_FALSE(family_member(f1, ConcretePair{{2, 2}, {1, 1}}));
    // a symmetric image still counts
    const auto m3 = family_member(f1, ConcretePair{{0, 1}, {4, 1}});
    REQUIRE(m3);
    CHECK(m3->element.apply(ConcretePair{{0, 1}, {4, 1}}) == f1.at(m3->t));
}

TEST_CASE("group structure") {
    std::set<GroupElement> seen(GroupElement::all().begin(), GroupElement::all().end());
    CHECK(seen.size() == 8);
    for (const auto& a : GroupElement::all()) {
        CHECK(a * a == GroupElement::identity());
        CHECK(GroupElement::parse(a.to_string()) == a);
        for (const auto& b : GroupElement::all()) CHECK(a * b == b * a);
    }
    CHECK(elements_by_length()[0] == GroupElement::identity());
    CHECK(elements_by_length()[1].to_string() == "s3");
    CHECK(elements_by_length()[2].to_string() == "s1");
    CHECK(GroupElement(true, false, true).to_string() == "s3+s1");
    CHECK_THROWS_AS(GroupElement::parse("s4"), InputError);
}

TEST_CASE("property: bilinearity, symmetry and genus invariance") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<long> d(-20, 20);
    auto draw = [&] { return HomologyClass{d(rng), d(rng)}; };
    for (int i = 0; i < 500; ++i) {
        const auto x = draw(), y = draw(), z = draw();
        const long a = d(rng), b = d(rng);
        CHECK(intersection(x, y) == intersection(y, x));
        CHECK(intersection(a * x + b * y, z) == a * intersection(x, z) + b * intersection(y, z));
        CHECK(square(x) == 2 * x.a1 * x.a2);
        CHECK(min_genus(x) == min_genus({x.a2, x.a1}));
        CHECK(min_genus(x) == min_genus({-x.a1, -x.a2}));
        const ConcretePair p{x, y};
        for (const auto& g : GroupElement::all()) {
            const auto q = g.apply(p);
            CHECK(intersection(q.alpha, q.beta) == intersection(x, y));
            CHECK(canonical_pair(q) == canonical_pair(p));
        }
        CHECK(canonical_pair(canonical_pair(p)) == canonical_pair(p));
    }
}

TEST_CASE("property: family_square against expansion") {
    std::mt19937 rng(12);
    std::uniform_int_distribution<long> d(-6, 6);
    for (int i = 0; i < 500; ++i) {
        const AffineClass a{{d(rng), d(rng)}, {d(rng), d(rng)}};
        const auto sq = family_square(a);
        for (long tv = -5; tv <= 5; ++tv) CHECK(sq.at(tv) == square(a.at(tv)));
        const bool no_t = a.x1.c0 * a.x2.c1 + a.x2.c0 * a.x1.c1 == 0 && a.x1.c1 * a.x2.c1 == 0;
        CHECK(sq.is_constant() == no_t);
        if (a.is_constant()) continue;
        const FamilyPair f{a, AffineClass{{d(rng), d(rng)}, {d(rng), d(rng)}}};
        for (const auto& g : GroupElement::all())
            CHECK(canonical_pair(g.apply(f).reparametrized(-1, d(rng))) == canonical_pair(f));
        const long tv = d(rng);
        const auto m = family_member(f, f.at(tv));
        REQUIRE(m);
        CHECK(m->element.apply(f.at(tv)) == f.at(m->t));
    }
}
