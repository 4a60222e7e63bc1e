#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "slicecheck/error.hpp"
#include "slicecheck/solver/certificate.hpp"

using namespace slicecheck;
using namespace slicecheck::solver;
using fourmanifold::AffineInt;
using fourmanifold::HomologyClass;

namespace {

const TableCell& cell(const std::vector<TableCell>& table, int row, int col) {
    for (const auto& c : table)
        if (c.ref.row == row && c.ref.col == col) return c;
    throw std::logic_error("no such cell");
}

std::string text(const CasePair& p) { return fourmanifold::to_string(p, "t"); }

const ProofCertificate& default_certificate() {
    static const ProofCertificate cert = verify_proof(Assumptions::defaults());
    return cert;
}

Assumptions with_sigma(Assumptions a, long m, int value) {
    a.sigma_a[RootOfUnity(m, 1)] = value;
    a.sigma_b[RootOfUnity(m, 1)] = value;
    return a;
}

}  // namespace

TEST_CASE("assumptions validation") {
    CHECK_NOTHROW(Assumptions::defaults().validate());
    auto a = Assumptions::defaults();
    a.sigma_a[RootOfUnity(2, 1)] = 0;
    CHECK_THROWS_AS(a.validate(), InputError);  // symmetric link with different sigma
    a.symmetric_link = false;
    CHECK_NOTHROW(a.validate());
    a = Assumptions::defaults();
    a.arf_b = 2;
    CHECK_THROWS_AS(a.validate(), InputError);
    a = Assumptions::defaults();
    a.sigma_a.erase(RootOfUnity(8, 1));
    a.sigma_b.erase(RootOfUnity(8, 1));
    CHECK_THROWS_AS(a.validate(), InputError);
    a = with_sigma(Assumptions::defaults(), 4, 3);
    CHECK_THROWS_AS(a.validate(), InputError);
}

TEST_CASE("table values and highlights") {
    const auto table = build_table(Assumptions::defaults());
    REQUIRE(table.size() == 15);
    const std::vector<std::string> expected{"0", "xy", "±x", "xy", "±2x",           //
                                            "y", "xy", "y ± x", "xy ± 1", "±2 ± 2x",  //
                                            "2y", "±2y", "2y ± 2", "±2 ± 2y", "0, ±8"};
    std::set<std::string> highlighted;
    for (std::size_t i = 0; i < table.size(); ++i) {
        CHECK(table[i].value == expected[i]);
        if (table[i].highlighted) highlighted.insert(table[i].ref.to_string());
    }
    CHECK(highlighted == std::set<std::string>{"(1,3)", "(1,4)", "(1,5)", "(2,5)", "(3,2)", "(3,4)"});
    CHECK(cell(table, 1, 3).equivalence->target.to_string() == "(2,1)");
    CHECK(cell(table, 1, 3).equivalence->describe() == "s3 (+s2)");
    CHECK(cell(table, 3, 2).equivalence->target.to_string() == "(3,1)");
    CHECK(cell(table, 3, 2).equivalence->describe() == "s1 (+s2)");
    CHECK(cell(table, 3, 4).equivalence->target.to_string() == "(3,3)");
    CHECK(cell(table, 1, 4).equivalence->describe() == "s3+s1 (+s2)");

    auto g2 = Assumptions::defaults();
    g2.g4_a = 2;
    CHECK_THROWS_AS(build_table(g2), UnsupportedGenusBound);
}

TEST_CASE("symmetry checks") {
    const auto table = build_table(Assumptions::defaults());
    const auto checks = check_table_symmetries(table);
    REQUIRE(checks.size() == 6);
    for (const auto& c : checks) {
        CHECK_FALSE(cell(table, c.equivalent.row, c.equivalent.col).highlighted);
        REQUIRE(c.witnesses.size() == c.images.size());
        const auto& target = cell(table, c.equivalent.row, c.equivalent.col);
        for (std::size_t i = 0; i < c.images.size(); ++i) {
            CHECK(apply(c.witnesses[i].second, c.witnesses[i].first) == c.images[i]);
            bool inside = false;
            for (const auto& inst : target.instantiations) inside = inside || contained_in(c.images[i], inst);
            CHECK(inside);
        }
    }

    auto broken = table;
    for (auto& c : broken)
        if (c.ref.row == 1 && c.ref.col == 3) c.equivalence->target = {3, 3};
    CHECK_THROWS_AS(check_table_symmetries(broken), SymmetryCheckFailed);
}

TEST_CASE("solve_cell examples") {
    const auto a = Assumptions::defaults();
    const auto table = build_table(a);

    const auto s23 = solve_cell(cell(table, 2, 3), 4, a);
    REQUIRE(s23.families.size() == 2);
    CHECK(s23.families[0].to_string() == "((1,t),(1,4-t))");
    CHECK(s23.families[1].to_string() == "((1,t),(-1,4+t))");
    CHECK(s23.sporadics.empty());
    CHECK(s23.equations == std::vector<std::string>{"y + x = 4", "y - x = 4"});

    const auto s21 = solve_cell(cell(table, 2, 1), 4, a);
    CHECK(s21.families.empty());
    CHECK(s21.sporadics.empty());
    REQUIRE(s21.pruned.size() == 1);
    CHECK(text(s21.pruned[0].pair) == "((1,t),(0,4))");
    CHECK(s21.pruned[0].component == 'B');

    const auto s33 = solve_cell(cell(table, 3, 3), 4, a);
    REQUIRE(s33.sporadics.size() == 4);
    CHECK(s33.sporadics[0].to_string() == "((2,2),(1,1))");
    CHECK(s33.sporadics[1].to_string() == "((2,2),(-1,3))");
    CHECK(s33.sporadics[2].to_string() == "((2,-2),(1,3))");
    CHECK(s33.sporadics[3].to_string() == "((2,-2),(-1,1))");

    CHECK(solve_cell(cell(table, 1, 1), 4, a).sporadics.empty());
    CHECK(solve_cell(cell(table, 3, 5), 4, a).sporadics.empty());
    // cell (1,2): xy = 4 gives characteristic classes only, all pruned
    const auto s12 = solve_cell(cell(table, 1, 2), 4, a);
    CHECK(s12.sporadics.empty());
    CHECK(s12.pruned.size() == 6);
    // cell (2,4): xy +- 1 = 4 gives sporadics that dedupe absorbs
    CHECK(solve_cell(cell(table, 2, 4), 4, a).sporadics.size() == 8);
}

TEST_CASE("solve_cell without the Arf shortcut keeps characteristic solutions") {
    auto a = Assumptions::defaults();
    a.arf_a = a.arf_b = 0;
    const auto table = build_table(a);
    const auto s21 = solve_cell(cell(table, 2, 1), 4, a);
    REQUIRE(s21.families.size() == 1);
    CHECK(s21.families[0].to_string() == "((1,t),(0,4))");
    CHECK(s21.pruned.empty());
}

TEST_CASE("solve_cell grammar limits") {
    const auto a = Assumptions::defaults();
    const auto table = build_table(a);
    // 0 = 0 with both x and y free
    CHECK_THROWS_AS(solve_cell(cell(table, 1, 1), 0, a), UnsupportedEquationShape);
    // single-variable equations without solutions
    CHECK(solve_cell(cell(table, 3, 1), 3, a).sporadics.empty());
    CHECK(solve_cell(cell(table, 3, 1), 3, a).families.empty());
}

TEST_CASE("dedupe absorbs family members and duplicates") {
    using fourmanifold::FamilyPair;
    CellSolution fam;
    fam.cell = {2, 3};
    fam.families.push_back(FamilyPair({{1, 0}, {0, 1}}, {{1, 0}, {4, -1}}));
    CellSolution spor;
    spor.cell = {2, 2};
    spor.sporadics.push_back({{1, 4}, {1, 0}});
    spor.sporadics.push_back({{2, 2}, {1, 1}});
    CellSolution again;
    again.cell = {3, 3};
    again.sporadics.push_back({{2, 2}, {1, 1}});
    again.sporadics.push_back({{-1, -1}, {-2, -2}});  // s3 s2 image of the same pair

    const auto set = dedupe_solutions({fam, spor, again});
    REQUIRE(set.families.size() == 1);
    REQUIRE(set.sporadics.size() == 1);
    CHECK(set.sporadics[0].id == "S1");
    REQUIRE(set.absorbed.size() == 1);
    CHECK(set.absorbed[0].family_id == "F1");
    CHECK(set.absorbed[0].t == 4);
    CHECK(set.absorbed[0].element == GroupElement::identity());
    CHECK(set.duplicates.size() == 2);
    CHECK(set.cases().size() == 2);
}

TEST_CASE("signature_terms follows the cable formula") {
    const auto a = Assumptions::defaults();
    using knots::KnotExpression;
    const auto k = KnotExpression::sum(KnotExpression::atom("A"),
                                       KnotExpression::cable(KnotExpression::atom("B"), 2, 3));
    const auto terms = signature_terms(k, RootOfUnity(8, 1), a);
    REQUIRE(terms.size() == 3);
    CHECK(terms[0].knot == "A");
    CHECK(terms[0].value == 2);
    CHECK(terms[1].knot == "B");
    CHECK(terms[1].at == RootOfUnity(4, 1));
    CHECK(terms[1].value == 2);
    CHECK(terms[2].knot == "T(2,3)");
    CHECK(terms[2].value == 0);
    CHECK_THROWS_AS(signature_terms(KnotExpression::atom("C"), RootOfUnity(2, 1), a), UnresolvedAtom);
    const auto mirrored = signature_terms(KnotExpression::mirror(KnotExpression::atom("A")), RootOfUnity(2, 1), a);
    CHECK(mirrored[0].value == -2);
    CHECK(mirrored[0].sign == -1);
}

TEST_CASE("eliminate_case examples") {
    const auto a = Assumptions::defaults();
    using fourmanifold::FamilyPair;

    const auto f1 = eliminate_case(FamilyPair({{1, 0}, {0, 1}}, {{1, 0}, {4, -1}}), a);
    REQUIRE(f1.eliminated());
    CHECK(f1.decisive()->rule == Rule::genus);
    CHECK(std::get<obstructions::GenusWitness>(f1.decisive()->outcome.witness).min_genus == 3);

    const auto f2 = eliminate_case(FamilyPair({{1, 0}, {0, 1}}, {{-1, 0}, {4, 1}}), a);
    REQUIRE(f2.eliminated());
    CHECK(f2.decisive()->rule == Rule::classical_signature);
    CHECK(f2.decisive()->hypothesis.label == "A # B");
    const auto& w2 = std::get<obstructions::SignatureWitness>(f2.decisive()->outcome.witness);
    CHECK(w2.sigma == 4);
    CHECK(w2.square == 0);
    CHECK(f2.decisive()->square.is_constant());
    // the genus rule was tried first and did not apply to the t-dependent class
    CHECK(f2.chain.front().rule == Rule::genus);
    CHECK(f2.chain.front().outcome.verdict == obstructions::Verdict::inapplicable);

    const auto s2 = eliminate_case(ConcretePair{{2, 2}, {-1, 3}}, a);
    REQUIRE(s2.eliminated());
    CHECK(s2.decisive()->rule == Rule::cable_signature);
    CHECK(s2.decisive()->hypothesis.label == "A # B_(2,3)");
    const auto& w = std::get<obstructions::SignatureWitness>(s2.decisive()->outcome.witness);
    CHECK(w.m == 8);
    CHECK(w.sigma == 4);
    CHECK(s2.decisive()->hypothesis.cls.constant() == HomologyClass{0, 8});

    for (const ConcretePair p : {ConcretePair{{2, -2}, {1, 3}}, ConcretePair{{2, -2}, {-1, 1}}}) {
        const auto o = eliminate_case(p, a);
        REQUIRE(o.eliminated());
        CHECK(o.decisive()->hypothesis.label == "A");
        const auto& ws = std::get<obstructions::SignatureWitness>(o.decisive()->outcome.witness);
        CHECK(ws.square == -8);
        CHECK(ws.value == 6);
    }

    const auto s1 = eliminate_case(ConcretePair{{2, 2}, {1, 1}}, a);
    REQUIRE(s1.eliminated());
    CHECK(s1.decisive()->rule == Rule::genus);

    // nothing fires on trivial classes with trivial invariants
    auto zero = Assumptions::defaults();
    for (auto* m : {&zero.sigma_a, &zero.sigma_b})
        for (auto& [w0, v] : *m) v = 0;
    zero.arf_a = zero.arf_b = 0;
    zero.lk = 0;
    CHECK_FALSE(eliminate_case(ConcretePair{{0, 0}, {0, 0}}, zero).eliminated());
}

TEST_CASE("verify_proof reproduces the case analysis") {
    const auto& cert = default_certificate();
    CHECK(cert.proven());
    CHECK(cert.surviving().empty());
    REQUIRE(cert.solutions.families.size() == 2);
    REQUIRE(cert.solutions.sporadics.size() == 4);
    CHECK(text(cert.solutions.families[0].pair) == "((1,t),(1,4-t))");
    CHECK(text(cert.solutions.families[1].pair) == "((1,t),(-1,4+t))");
    const std::vector<std::string> spor{"((2,2),(1,1))", "((2,2),(-1,3))", "((2,-2),(1,3))", "((2,-2),(-1,1))"};
    for (std::size_t i = 0; i < 4; ++i) CHECK(text(cert.solutions.sporadics[i].pair) == spor[i]);
    CHECK(cert.cells.size() == 9);
    // every (2,4) solution lands on a family
    long from_24 = 0;
    for (const auto& ab : cert.solutions.absorbed) from_24 += ab.source.row == 2 && ab.source.col == 4;
    CHECK(from_24 == 8);
}

TEST_CASE("negative controls give a gap") {
    auto lk2 = Assumptions::defaults();
    lk2.lk = -2;
    auto arf0 = Assumptions::defaults();
    arf0.arf_a = arf0.arf_b = 0;
    const auto sigma0 = with_sigma(Assumptions::defaults(), 2, 0);
    for (const auto& a : {lk2, arf0, sigma0}) {
        const auto cert = verify_proof(a);
        CHECK_FALSE(cert.proven());
        CHECK_FALSE(cert.surviving().empty());
        const auto report = check_certificate(to_json(cert));
        CHECK(report.ok());
        CHECK(report.verdict == "gap");
    }
    const auto arf_cert = verify_proof(arf0);
    bool kept = false;
    for (const auto& c : arf_cert.cases) kept = kept || text(c.entry.pair) == "((1,t),(0,4))";
    CHECK(kept);
}

TEST_CASE("certificate is deterministic and contains the key evaluations") {
    const std::string a = serialize(verify_proof(Assumptions::defaults()));
    const std::string b = serialize(verify_proof(Assumptions::defaults()));
    CHECK(a == b);
    CHECK(a.back() == '\n');
    CHECK(a.find("|4 - 0| = 4 > 2") != std::string::npos);
    CHECK(a.find("|2 - (-8)/2| = 6 > 2") != std::string::npos);
    CHECK(a.find("= 2 + 2 + 0 = 4") != std::string::npos);
}

TEST_CASE("family eliminations are t-independent") {
    for (const auto& c : default_certificate().cases) {
        if (!std::holds_alternative<FamilyPair>(c.entry.pair)) continue;
        const Attempt* d = c.outcome.decisive();
        REQUIRE(d);
        if (d->rule == Rule::genus) CHECK(d->hypothesis.cls.is_constant());
        else CHECK(d->square.is_constant());
    }
}

TEST_CASE("swapped cable facts need the symmetric link") {
    auto a = Assumptions::defaults();
    const ConcretePair swapped{{-1, 3}, {2, 2}};
    const auto o = eliminate_case(swapped, a);
    REQUIRE(o.eliminated());
    CHECK(o.decisive()->hypothesis.swapped);
    CHECK(o.decisive()->hypothesis.cls.constant() == HomologyClass{0, 8});
    a.symmetric_link = false;
    CHECK_FALSE(eliminate_case(swapped, a).eliminated());
    CHECK_THROWS_AS(verify_proof(a), InputError);
}

TEST_CASE("orbit invariance of elimination") {
    const auto a = Assumptions::defaults();
    for (const auto& c : default_certificate().cases)
        for (const auto& image : fourmanifold::symmetry_orbit(c.entry.pair))
            CHECK_MESSAGE(eliminate_case(image, a).eliminated(), text(image));
}

TEST_CASE("check_certificate accepts genuine and rejects tampered certificates") {
    const Json good = to_json(default_certificate());
    const auto report = check_certificate(good);
    CHECK(report.ok());
    CHECK(report.cases_checked == 6);
    CHECK(report.witnesses_checked > 6);

    auto find_case = [](Json& j, const std::string& id) -> Json& {
        for (auto& c : j["cases"])
            if (c["id"] == id) return c;
        throw std::logic_error(id);
    };

    Json t1 = good;
    find_case(t1, "S2")["chain"].back()["terms"][1]["value"] = 4;
    CHECK_FALSE(check_certificate(t1).ok());

    Json t2 = good;
    find_case(t2, "S3")["chain"].back()["witness"]["lhs"] = "7";
    CHECK_FALSE(check_certificate(t2).ok());

    Json t3 = good;
    find_case(t3, "F1")["pair"]["beta"][1][0] = 5;
    CHECK_FALSE(check_certificate(t3).ok());

    Json t4 = good;
    t4["assumptions"]["sigma_a"]["2:1"] = 0;
    CHECK_FALSE(check_certificate(t4).ok());

    Json t5 = good;
    find_case(t5, "S2")["chain"].erase(find_case(t5, "S2")["chain"].size() - 1);
    CHECK_FALSE(check_certificate(t5).ok());

    Json t6 = good;
    t6["solutions"]["absorbed"][0]["t"] = 99;
    CHECK_FALSE(check_certificate(t6).ok());

    Json t7 = good;
    t7["verdict"] = "gap";
    CHECK_FALSE(check_certificate(t7).ok());

    Json t8 = good;
    t8["cells"][1]["pruned"][0]["component"] = "A";
    CHECK_FALSE(check_certificate(t8).ok());

    Json t10 = good;
    t10["assumptions"]["symmetric_link"] = false;
    t10["assumptions"]["arf_b"] = 0;
    CHECK_FALSE(check_certificate(t10).ok());

    Json t9 = good;
    t9.erase("cases");
    CHECK_FALSE(check_certificate(t9).ok());
}

TEST_CASE("random assumption sets produce checkable certificates") {
    std::mt19937 rng(20261016);
    std::uniform_int_distribution<int> lk_dist(-7, 7), sig(-2, 2), bit(0, 1);
    int proven = 0, gaps = 0;
    for (int trial = 0; trial < 60; ++trial) {
        Assumptions a = Assumptions::defaults();
        a.lk = lk_dist(rng);
        if (a.lk == 0) a.lk = -4;
        a.arf_a = a.arf_b = bit(rng);
        for (const long m : {2L, 4L, 8L}) a = with_sigma(a, m, 2 * sig(rng));
        const auto cert = verify_proof(a);
        const auto report = check_certificate(to_json(cert));
        CHECK_MESSAGE(report.ok(), "lk=" << a.lk << (report.errors.empty() ? "" : " " + report.errors.front()));
        CHECK(report.verdict == (cert.proven() ? "proven" : "gap"));
        (cert.proven() ? proven : gaps)++;
        for (const auto& c : cert.cases) CHECK(fourmanifold::intersection(
                                                   std::holds_alternative<ConcretePair>(c.entry.pair)
                                                       ? std::get<ConcretePair>(c.entry.pair).alpha
                                                       : std::get<FamilyPair>(c.entry.pair).at(0).alpha,
                                                   std::holds_alternative<ConcretePair>(c.entry.pair)
                                                       ? std::get<ConcretePair>(c.entry.pair).beta
                                                       : std::get<FamilyPair>(c.entry.pair).at(0).beta) == -a.lk);
    }
    CHECK(gaps > 0);
}
