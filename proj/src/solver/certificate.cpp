#include "slicecheck/solver/certificate.hpp"

#include <gmpxx.h>

#include <numeric>
#include <sstream>

namespace slicecheck::solver {

using fourmanifold::AffineInt;
using fourmanifold::HomologyClass;
using fourmanifold::IntQuadratic;
using obstructions::ArfWitness;
using obstructions::GenusWitness;
using obstructions::SignatureWitness;

namespace {

constexpr const char* kFormat = "slicecheck-certificate/1";

std::string root_key(const RootOfUnity& w) {
    const auto n = w.normalized();
    return std::to_string(n.order()) + ":" + std::to_string(n.index());
}

Json affine_json(const AffineClass& c) { return Json::array({{c.x1.c0, c.x1.c1}, {c.x2.c0, c.x2.c1}}); }

Json quadratic_json(const IntQuadratic& q) {
    Json j;
    j["c0"] = q.c0;
    j["c1"] = q.c1;
    j["c2"] = q.c2;
    j["text"] = q.to_string();
    return j;
}

std::string signed_term(long v) { return v < 0 ? "(" + std::to_string(v) + ")" : std::to_string(v); }

std::string inequality_display(const SignatureWitness& w) {
    mpq_class k(2 * w.r * (w.m - w.r), w.m * w.m);
    k.canonicalize();
    std::ostringstream os;
    os << "|" << w.sigma;
    if (w.sigma_x != 0) os << " + " << signed_term(w.sigma_x);
    os << " - ";
    if (w.square == 0) {
        os << "0";
    } else {
        if (k.get_num() != 1) os << k.get_num().get_str() << "*";
        os << signed_term(w.square);
        if (k.get_den() != 1) os << "/" << k.get_den().get_str();
    }
    const mpq_class lhs = abs(w.value);
    os << "| = " << lhs.get_str() << (lhs > w.bound ? " > " : " <= ") << w.bound;
    return os.str();
}

std::string evaluation_display(const Attempt& a, const SignatureWitness& w) {
    std::ostringstream os;
    os << "sigma_{" << (a.hypothesis.knot ? a.hypothesis.knot->pretty() : a.hypothesis.label) << "}(" << RootOfUnity(w.m, w.r).to_string() << ") = ";
    for (std::size_t i = 0; i < a.terms.size(); ++i) {
        const int v = a.terms[i].value;
        if (i == 0) os << v;
        else os << (v < 0 ? " - " : " + ") << std::abs(v);
    }
    os << " = " << w.sigma;
    return os.str();
}

Json witness_json(const obstructions::Witness& witness) {
    return std::visit(
        [](const auto& w) -> Json {
            using W = std::decay_t<decltype(w)>;
            Json j;
            if constexpr (std::is_same_v<W, SignatureWitness>) {
                j["type"] = "signature";
                j["sigma"] = w.sigma;
                j["sigma_x"] = w.sigma_x;
                j["square"] = w.square;
                j["m"] = w.m;
                j["r"] = w.r;
                j["genus"] = w.genus;
                j["b2"] = w.b2;
                j["lhs"] = mpq_class(abs(w.value)).get_str();
                j["bound"] = w.bound;
            } else if constexpr (std::is_same_v<W, ArfWitness>) {
                j["type"] = "arf";
                j["arf"] = w.arf;
                j["square"] = w.square;
                j["sigma_x"] = w.sigma_x;
                j["quotient"] = w.quotient;
            } else if constexpr (std::is_same_v<W, GenusWitness>) {
                j["type"] = "genus";
                j["class"] = {w.cls.a1, w.cls.a2};
                j["min_genus"] = w.min_genus;
                j["bound"] = w.genus_bound;
            } else {
                j = nullptr;
            }
            return j;
        },
        witness);
}

std::string outcome_display(const Attempt& a) {
    const auto& o = a.outcome;
    if (o.verdict == obstructions::Verdict::inapplicable) return o.reason;
    if (const auto* g = std::get_if<GenusWitness>(&o.witness))
        return "min genus of " + g->cls.to_string() + " is " + std::to_string(g->min_genus) +
               (g->min_genus > g->genus_bound ? " > " : " <= ") + std::to_string(g->genus_bound);
    if (const auto* s = std::get_if<SignatureWitness>(&o.witness)) {
        const std::string ineq = inequality_display(*s);
        if (a.terms.size() > 1) return evaluation_display(a, *s) + "; " + ineq;
        return ineq;
    }
    return o.describe();
}

Json cell_ref_json(const CellRef& c) { return c.to_string(); }

Json pruned_json(const PrunedSolution& p) {
    Json j;
    j["pair"] = to_json(p.pair);
    j["component"] = std::string(1, p.component);
    j["class"] = affine_json(p.cls);
    j["verdict"] = obstructions::to_string(p.outcome.verdict);
    j["witness"] = witness_json(p.outcome.witness);
    if (const auto* w = std::get_if<ArfWitness>(&p.outcome.witness))
        j["display"] = "(" + std::to_string(w->sigma_x) + " - " + signed_term(w->square) + ")/8 = " +
                       std::to_string(w->quotient) + " but Arf(" + std::string(1, p.component) + ") = " +
                       std::to_string(w->arf);
    else
        j["display"] = p.outcome.describe();
    return j;
}

}  // namespace

bool ProofCertificate::proven() const {
    return std::all_of(cases.begin(), cases.end(), [](const CaseRecord& c) { return c.outcome.eliminated(); });
}

std::vector<std::string> ProofCertificate::surviving() const {
    std::vector<std::string> out;
    for (const auto& c : cases)
        if (!c.outcome.eliminated()) out.push_back(c.entry.id);
    return out;
}

ProofCertificate verify_proof(const Assumptions& assumptions, const exact::SignatureOptions& options) {
    assumptions.validate();
    if (!assumptions.symmetric_link)
        throw InputError("the case analysis reduces by the isotopy swapping A and B; it needs a symmetric link");
    ProofCertificate cert;
    cert.assumptions = assumptions;
    cert.table = build_table(assumptions);
    cert.symmetry_checks = check_table_symmetries(cert.table);
    const long n = obstructions::required_intersection(assumptions.lk);
    for (const auto& cell : cert.table)
        if (!cell.highlighted) cert.cells.push_back(solve_cell(cell, n, assumptions));
    cert.solutions = dedupe_solutions(cert.cells);
    for (const auto& entry : cert.solutions.cases())
        cert.cases.push_back({entry, eliminate_case(entry.pair, assumptions, options)});
    return cert;
}

Json to_json(const Assumptions& a) {
    Json j;
    j["structure_a1"] = a.structure_a1;
    j["symmetric_link"] = a.symmetric_link;
    j["lk"] = a.lk;
    j["n"] = obstructions::required_intersection(a.lk);
    j["g4_a"] = a.g4_a;
    j["g4_b"] = a.g4_b;
    j["arf_a"] = a.arf_a;
    j["arf_b"] = a.arf_b;
    Json sa = Json::object(), sb = Json::object();
    for (const auto& [w, v] : a.sigma_a) sa[root_key(w)] = v;
    for (const auto& [w, v] : a.sigma_b) sb[root_key(w)] = v;
    j["sigma_a"] = sa;
    j["sigma_b"] = sb;
    return j;
}

Json to_json(const CasePair& pair) {
    AffineClass alpha, beta;
    if (const auto* c = std::get_if<ConcretePair>(&pair)) {
        alpha = c->alpha;
        beta = c->beta;
    } else {
        alpha = std::get<FamilyPair>(pair).alpha;
        beta = std::get<FamilyPair>(pair).beta;
    }
    Json j;
    j["text"] = fourmanifold::to_string(pair, "t");
    j["family"] = std::holds_alternative<FamilyPair>(pair);
    j["alpha"] = affine_json(alpha);
    j["beta"] = affine_json(beta);
    return j;
}

Json to_json(const Attempt& a) {
    const auto& h = a.hypothesis;
    Json j;
    j["rule"] = to_string(a.rule);
    j["hypothesis"] = h.label;
    j["kind"] = obstructions::to_string(h.kind);
    j["knot"] = h.knot ? Json(h.knot->to_string()) : Json(nullptr);
    j["coeff_alpha"] = h.coeff_alpha;
    j["coeff_beta"] = h.coeff_beta;
    j["q"] = h.q;
    j["swapped"] = h.swapped;
    j["genus"] = h.genus;
    j["class"] = affine_json(h.cls);
    j["class_text"] = h.cls.to_string("t");
    j["square"] = quadratic_json(a.square);
    j["t_independent"] = a.square.is_constant();
    if (const auto* s = std::get_if<SignatureWitness>(&a.outcome.witness)) {
        j["m"] = s->m;
        j["r"] = s->r;
    }
    Json terms = Json::array();
    for (const auto& t : a.terms) {
        Json tj;
        tj["knot"] = t.knot;
        tj["at"] = root_key(t.at);
        tj["sign"] = t.sign;
        tj["value"] = t.value;
        tj["source"] = t.source;
        terms.push_back(tj);
    }
    j["terms"] = terms;
    j["verdict"] = obstructions::to_string(a.outcome.verdict);
    j["witness"] = witness_json(a.outcome.witness);
    j["display"] = outcome_display(a);
    return j;
}

Json to_json(const std::vector<TableCell>& cells) {
    Json table = Json::array();
    for (const auto& c : cells) {
        Json cj;
        cj["cell"] = cell_ref_json(c.ref);
        cj["row"] = c.row_pattern.to_string();
        cj["column"] = c.col_pattern.to_string();
        cj["value"] = c.value;
        cj["highlighted"] = c.highlighted;
        cj["equivalent_to"] = c.equivalence ? Json(c.equivalence->target.to_string()) : Json(nullptr);
        cj["via"] = c.equivalence ? Json(c.equivalence->describe()) : Json(nullptr);
        table.push_back(cj);
    }
    return table;
}

Json to_json(const std::vector<SymmetryCheck>& symmetry_checks) {
    Json checks = Json::array();
    for (const auto& s : symmetry_checks) {
        Json sj;
        sj["cell"] = cell_ref_json(s.cell);
        sj["equivalent"] = cell_ref_json(s.equivalent);
        sj["required"] = s.required.to_string();
        sj["possibly"] = s.possibly.to_string();
        Json w = Json::array();
        for (std::size_t i = 0; i < s.witnesses.size(); ++i) {
            Json wj;
            wj["instance"] = s.witnesses[i].first.to_string();
            wj["element"] = s.witnesses[i].second.to_string();
            wj["image"] = i < s.images.size() ? s.images[i].to_string() : std::string();
            w.push_back(wj);
        }
        sj["witnesses"] = w;
        checks.push_back(sj);
    }
    return checks;
}

Json to_json(const ProofCertificate& cert) {
    Json j;
    j["format"] = kFormat;
    j["assumptions"] = to_json(cert.assumptions);

    j["table"] = to_json(cert.table);
    j["symmetry_checks"] = to_json(cert.symmetry_checks);

    const long n = obstructions::required_intersection(cert.assumptions.lk);
    Json cells = Json::array();
    for (const auto& c : cert.cells) {
        Json cj;
        cj["cell"] = cell_ref_json(c.cell);
        cj["target"] = n;
        cj["equations"] = c.equations;
        Json fams = Json::array(), spors = Json::array(), pruned = Json::array();
        for (const auto& f : c.families) fams.push_back(to_json(CasePair(f)));
        for (const auto& s : c.sporadics) spors.push_back(to_json(CasePair(s)));
        for (const auto& p : c.pruned) pruned.push_back(pruned_json(p));
        cj["families"] = fams;
        cj["sporadics"] = spors;
        cj["pruned"] = pruned;
        cells.push_back(cj);
    }
    j["cells"] = cells;

    Json sol;
    Json fam_ids = Json::array(), spor_ids = Json::array();
    for (const auto& f : cert.solutions.families) fam_ids.push_back(f.id);
    for (const auto& s : cert.solutions.sporadics) spor_ids.push_back(s.id);
    sol["families"] = fam_ids;
    sol["sporadics"] = spor_ids;
    Json absorbed = Json::array();
    for (const auto& a : cert.solutions.absorbed) {
        Json aj;
        aj["pair"] = to_json(CasePair(a.pair));
        aj["source"] = cell_ref_json(a.source);
        aj["family"] = a.family_id;
        aj["t"] = a.t;
        aj["element"] = a.element.to_string();
        absorbed.push_back(aj);
    }
    sol["absorbed"] = absorbed;
    Json dups = Json::array();
    for (const auto& d : cert.solutions.duplicates) {
        Json dj;
        dj["pair"] = to_json(d.pair);
        dj["source"] = cell_ref_json(d.source);
        dj["same_as"] = d.same_as;
        dups.push_back(dj);
    }
    sol["duplicates"] = dups;
    j["solutions"] = sol;

    Json cases = Json::array();
    for (const auto& c : cert.cases) {
        Json cj;
        cj["id"] = c.entry.id;
        cj["pair"] = to_json(c.entry.pair);
        cj["canonical"] = fourmanifold::to_string(c.entry.canonical, "t");
        cj["source"] = cell_ref_json(c.entry.source);
        cj["eliminated"] = c.outcome.eliminated();
        Json chain = Json::array();
        for (const auto& a : c.outcome.chain) chain.push_back(to_json(a));
        cj["chain"] = chain;
        cases.push_back(cj);
    }
    j["cases"] = cases;
    j["verdict"] = cert.proven() ? "proven" : "gap";
    j["surviving"] = cert.surviving();
    return j;
}

std::string serialize(const ProofCertificate& cert) { return to_json(cert).dump(2) + "\n"; }

}  // namespace slicecheck::solver
