// Independent re-check of a serialized proof certificate. Deliberately shares
// no arithmetic with the solver: classes, forms, torus signatures and the
// symmetry action are recomputed here from the recorded numbers.
#include <gmpxx.h>

#include <array>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>

#include "slicecheck/solver/certificate.hpp"

namespace slicecheck::solver {

namespace {

struct Aff {
    long c0 = 0;
    long c1 = 0;
    bool operator==(const Aff&) const = default;
};
using Cls = std::array<Aff, 2>;
struct Quad {
    long c0 = 0, c1 = 0, c2 = 0;
    bool operator==(const Quad&) const = default;
};

Quad mul(Aff a, Aff b) { return {a.c0 * b.c0, a.c0 * b.c1 + a.c1 * b.c0, a.c1 * b.c1}; }
Quad add(Quad a, Quad b) { return {a.c0 + b.c0, a.c1 + b.c1, a.c2 + b.c2}; }
// S^2 x S^2: x.y = x1 y2 + x2 y1
Quad form(const Cls& x, const Cls& y) { return add(mul(x[0], y[1]), mul(x[1], y[0])); }
Cls combine(const Cls& a, const Cls& b, long ka, long kb) {
    return {Aff{ka * a[0].c0 + kb * b[0].c0, ka * a[0].c1 + kb * b[0].c1},
            Aff{ka * a[1].c0 + kb * b[1].c0, ka * a[1].c1 + kb * b[1].c1}};
}
bool constant(const Cls& c) { return c[0].c1 == 0 && c[1].c1 == 0; }

Cls read_class(const Json& j) {
    return {Aff{j.at(0).at(0).get<long>(), j.at(0).at(1).get<long>()},
            Aff{j.at(1).at(0).get<long>(), j.at(1).at(1).get<long>()}};
}

struct Pair {
    Cls alpha;
    Cls beta;
};
Pair read_pair(const Json& j) { return {read_class(j.at("alpha")), read_class(j.at("beta"))}; }

long genus_bound_of(long a1, long a2) {
    if (a1 == 0 || a2 == 0) return 0;
    return (std::labs(a1) - 1) * (std::labs(a2) - 1);
}

// sigma of T(2,q) at exp(2 pi i r / m); nullopt at a root of the Alexander polynomial
std::optional<int> torus_sigma(long q, long m, long r) {
    r %= m;
    if (r < 0) r += m;
    if (r == 0 || q == 1 || q == -1) return 0;
    if (2 * r > m) r = m - r;
    const long aq = std::labs(q);
    int count = 0;
    for (long j = 1; j < aq; j += 2) {
        if (j * m == 2 * r * aq) return std::nullopt;
        if (j * m < 2 * r * aq) ++count;
    }
    return q > 0 ? -2 * count : 2 * count;
}

std::pair<long, long> reduce_root(long m, long r) {
    r %= m;
    if (r < 0) r += m;
    if (r == 0) return {1, 0};
    const long g = std::gcd(m, r);
    return {m / g, r / g};
}

std::pair<long, long> parse_root(const std::string& s) {
    const auto colon = s.find(':');
    if (colon == std::string::npos) throw InputError("bad root key '" + s + "'");
    return reduce_root(std::stol(s.substr(0, colon)), std::stol(s.substr(colon + 1)));
}

std::string root_text(std::pair<long, long> w) { return std::to_string(w.first) + ":" + std::to_string(w.second); }

struct Context {
    long n = 0;
    bool symmetric = false;
    long g4_a = 0, g4_b = 0;
    int arf_a = 0, arf_b = 0;
    std::map<std::pair<long, long>, int> sigma_a, sigma_b;
    std::vector<std::string>* errors = nullptr;
    long* witnesses = nullptr;

    void fail(const std::string& where, const std::string& what) const { errors->push_back(where + ": " + what); }

    std::optional<int> sigma(char c, std::pair<long, long> w) const {
        if (w.second == 0) return 0;
        const auto& m = c == 'A' ? sigma_a : sigma_b;
        const auto it = m.find(w);
        if (it == m.end()) return std::nullopt;
        return it->second;
    }
};

// (x1,x2) -> group action; the generators commute so order is irrelevant
Pair act(const std::string& element, Pair p) {
    std::set<std::string> gens;
    if (element != "id") {
        std::size_t start = 0;
        while (start <= element.size()) {
            const auto plus = element.find('+', start);
            gens.insert(element.substr(start, plus == std::string::npos ? std::string::npos : plus - start));
            if (plus == std::string::npos) break;
            start = plus + 1;
        }
    }
    for (const auto& g : gens) {
        if (g == "s1") {
            std::swap(p.alpha[0], p.alpha[1]);
            std::swap(p.beta[0], p.beta[1]);
        } else if (g == "s2") {
            for (auto* c : {&p.alpha, &p.beta})
                for (auto& a : *c) a = {-a.c0, -a.c1};
        } else if (g == "s3") {
            std::swap(p.alpha, p.beta);
        } else {
            throw InputError("unknown group element '" + element + "'");
        }
    }
    return p;
}

bool same(const Pair& a, const Pair& b) { return a.alpha == b.alpha && a.beta == b.beta; }

Pair at(const Pair& p, long t) {
    auto ev = [t](const Cls& c) { return Cls{Aff{c[0].c0 + c[0].c1 * t, 0}, Aff{c[1].c0 + c[1].c1 * t, 0}}; };
    return {ev(p.alpha), ev(p.beta)};
}

void check_intersection(const Context& ctx, const std::string& where, const Pair& p) {
    const Quad q = form(p.alpha, p.beta);
    if (!(q == Quad{ctx.n, 0, 0}))
        ctx.fail(where, "alpha . beta = " + std::to_string(q.c0) + " + " + std::to_string(q.c1) + "t + " +
                            std::to_string(q.c2) + "t^2, expected " + std::to_string(ctx.n));
}

struct ExpectedTerm {
    std::string knot;
    std::pair<long, long> at;
};

// Returns whether the attempt validly eliminates the case.
bool check_attempt(const Context& ctx, const std::string& where, const Json& a, Pair pair) {
    const std::string verdict = a.at("verdict").get<std::string>();
    if (verdict == "inapplicable") return false;
    if (a.at("swapped").get<bool>()) {
        if (!ctx.symmetric) {
            ctx.fail(where, "swapped hypothesis without a symmetric link");
            return false;
        }
        std::swap(pair.alpha, pair.beta);
    }
    const std::string rule = a.at("rule").get<std::string>();
    const std::string kind = a.at("kind").get<std::string>();
    const long ka = a.at("coeff_alpha").get<long>();
    const long kb = a.at("coeff_beta").get<long>();

    static const std::map<std::string, std::pair<long, long>> coefficients{
        {"component_a", {1, 0}}, {"component_b", {0, 1}}, {"sum", {1, 1}},
        {"sum_reverse_torus", {1, -1}}, {"sum_cable", {1, 2}}};
    const auto expected = coefficients.find(kind);
    if (expected == coefficients.end()) {
        ctx.fail(where, "unknown hypothesis kind " + kind);
        return false;
    }
    if (expected->second != std::make_pair(ka, kb)) {
        ctx.fail(where, "class coefficients do not match kind " + kind);
        return false;
    }
    const Cls cls = combine(pair.alpha, pair.beta, ka, kb);
    if (cls != read_class(a.at("class"))) {
        ctx.fail(where, "recorded class is not " + std::to_string(ka) + "a + " + std::to_string(kb) + "b");
        return false;
    }
    const Quad sq = form(cls, cls);
    const Json& sj = a.at("square");
    if (!(sq == Quad{sj.at("c0").get<long>(), sj.at("c1").get<long>(), sj.at("c2").get<long>()})) {
        ctx.fail(where, "recorded square is wrong");
        return false;
    }
    const bool t_independent = sq.c1 == 0 && sq.c2 == 0;
    if (a.at("t_independent").get<bool>() != t_independent) ctx.fail(where, "t_independent flag is wrong");
    const Json& w = a.at("witness");
    bool eliminates = false;

    if (rule == "genus") {
        if (kind != "sum") {
            ctx.fail(where, "genus rule must use A # B");
            return false;
        }
        if (!constant(cls)) {
            ctx.fail(where, "genus rule applied to a t-dependent class");
            return false;
        }
        const long mg = genus_bound_of(cls[0].c0, cls[1].c0);
        const long bound = ctx.g4_a + ctx.g4_b;
        if (w.at("min_genus").get<long>() != mg || w.at("bound").get<long>() != bound ||
            a.at("genus").get<long>() != bound)
            ctx.fail(where, "genus witness numbers are wrong");
        eliminates = mg > bound;
    } else if (rule == "classical-signature" || rule == "cable-signature") {
        const long m = a.at("m").get<long>();
        const long r = a.at("r").get<long>();
        if (rule == "classical-signature" && m != 2) ctx.fail(where, "classical signature must use m = 2");
        if (!t_independent) {
            ctx.fail(where, "signature rule needs a t-independent square");
            return false;
        }
        for (const Aff& c : cls)
            if (c.c0 % m != 0 || c.c1 % m != 0) {
                ctx.fail(where, "class is not divisible by " + std::to_string(m));
                return false;
            }
        if (a.at("genus").get<long>() != 0) ctx.fail(where, "slice hypotheses are discs");
        const auto base = reduce_root(m, r);
        const auto doubled = reduce_root(m, 2 * r);
        std::vector<ExpectedTerm> expect;
        std::optional<long> torus_q;
        const long q = a.at("q").get<long>();
        if (kind == "component_a") {
            expect = {{"A", base}};
        } else if (kind == "component_b") {
            expect = {{"B", base}};
        } else if (kind == "sum") {
            expect = {{"A", base}, {"B", base}};
        } else if (kind == "sum_reverse_torus") {
            if (q != 2 * ctx.n - 1 && q != 2 * ctx.n + 1) ctx.fail(where, "torus parameter is not 2n +- 1");
            expect = {{"A", base}, {"B", base}, {"T(2," + std::to_string(q) + ")", base}};
            torus_q = q;
        } else {
            const Quad bsq = form(pair.beta, pair.beta);
            if (bsq.c1 != 0 || bsq.c2 != 0) {
                ctx.fail(where, "cable parameter depends on t");
                return false;
            }
            const long centre = -2 * bsq.c0 - 2 * ctx.n;
            if (q != centre - 1 && q != centre + 1) ctx.fail(where, "cable parameter is not -2b^2 - 2n +- 1");
            expect = {{"A", base}, {"B", doubled}, {"T(2," + std::to_string(q) + ")", base}};
            torus_q = q;
        }
        const Json& terms = a.at("terms");
        if (terms.size() != expect.size()) {
            ctx.fail(where, "expected " + std::to_string(expect.size()) + " signature terms");
            return false;
        }
        long sigma = 0;
        for (std::size_t i = 0; i < expect.size(); ++i) {
            const Json& t = terms.at(i);
            const auto root = parse_root(t.at("at").get<std::string>());
            if (t.at("knot").get<std::string>() != expect[i].knot || root != expect[i].at) {
                ctx.fail(where, "term " + std::to_string(i + 1) + " should be " + expect[i].knot + " at " +
                                    root_text(expect[i].at));
                return false;
            }
            std::optional<int> v;
            if (expect[i].knot == "A" || expect[i].knot == "B") v = ctx.sigma(expect[i].knot[0], root);
            else v = torus_sigma(*torus_q, root.first, root.second);
            if (!v) {
                ctx.fail(where, "no signature value for " + expect[i].knot + " at " + root_text(root));
                return false;
            }
            if (t.at("value").get<long>() != *v || t.at("sign").get<int>() != 1) {
                ctx.fail(where, "value of " + expect[i].knot + " at " + root_text(root) + " is " + std::to_string(*v));
                return false;
            }
            sigma += *v;
        }
        // S^2 x S^2: sigma = 0, b2 = 2; a disc has genus 0
        const long bound = 2;
        mpq_class lhs = mpq_class(sigma) - mpq_class(2 * r * (m - r) * sq.c0, m * m);
        lhs.canonicalize();
        lhs = abs(lhs);
        if (w.at("sigma").get<long>() != sigma || w.at("square").get<long>() != sq.c0 || w.at("m").get<long>() != m ||
            w.at("r").get<long>() != r || w.at("sigma_x").get<long>() != 0 || w.at("b2").get<long>() != 2 ||
            w.at("bound").get<long>() != bound || w.at("lhs").get<std::string>() != lhs.get_str())
            ctx.fail(where, "signature witness numbers are wrong");
        eliminates = lhs > bound;
    } else {
        ctx.fail(where, "unknown rule " + rule);
        return false;
    }
    if (eliminates != (verdict == "eliminated")) ctx.fail(where, "recorded verdict " + verdict + " is wrong");
    if (eliminates) ++*ctx.witnesses;
    return eliminates;
}

void check_pruned(const Context& ctx, const std::string& where, const Json& p) {
    const Pair pair = read_pair(p.at("pair"));
    check_intersection(ctx, where, pair);
    const std::string comp = p.at("component").get<std::string>();
    const Cls& cls = comp == "A" ? pair.alpha : pair.beta;
    if (cls != read_class(p.at("class"))) return ctx.fail(where, "pruned class is not the component's class");
    for (const Aff& c : cls)
        if (c.c0 % 2 != 0 || c.c1 % 2 != 0) return ctx.fail(where, "pruned class is not characteristic for every t");
    const Quad sq = form(cls, cls);
    if (!(sq == Quad{0, 0, 0})) return ctx.fail(where, "pruned class does not have square 0");
    const int arf = comp == "A" ? ctx.arf_a : ctx.arf_b;
    // (sigma(X) - square)/8 = 0 must equal Arf mod 2
    if (arf != 1) return ctx.fail(where, "Arf invariant of " + comp + " is not 1");
    const Json& w = p.at("witness");
    if (w.at("quotient").get<long>() != 0 || w.at("arf").get<int>() != 1 || w.at("square").get<long>() != 0)
        ctx.fail(where, "Arf witness numbers are wrong");
    ++*ctx.witnesses;
}

}  // namespace

CheckReport check_certificate(const Json& cert) {
    CheckReport report;
    Context ctx;
    ctx.errors = &report.errors;
    ctx.witnesses = &report.witnesses_checked;
    try {
        if (cert.at("format").get<std::string>() != "slicecheck-certificate/1")
            report.errors.push_back("unknown certificate format");
        const Json& a = cert.at("assumptions");
        const long lk = a.at("lk").get<long>();
        ctx.n = a.at("n").get<long>();
        ctx.symmetric = a.at("symmetric_link").get<bool>();
        if (ctx.n != -lk) report.errors.push_back("assumptions: n must equal -lk");
        ctx.g4_a = a.at("g4_a").get<long>();
        ctx.g4_b = a.at("g4_b").get<long>();
        ctx.arf_a = a.at("arf_a").get<int>();
        ctx.arf_b = a.at("arf_b").get<int>();
        for (const auto& [k, v] : a.at("sigma_a").items()) ctx.sigma_a[parse_root(k)] = v.get<int>();
        for (const auto& [k, v] : a.at("sigma_b").items()) ctx.sigma_b[parse_root(k)] = v.get<int>();

        if (ctx.symmetric && (ctx.sigma_a != ctx.sigma_b || ctx.arf_a != ctx.arf_b || ctx.g4_a != ctx.g4_b))
            report.errors.push_back("assumptions: a symmetric link needs equal invariants for A and B");

        if (cert.at("table").size() != 15) report.errors.push_back("table: expected 15 cells");

        for (const auto& cell : cert.at("cells")) {
            const std::string where = "cell " + cell.at("cell").get<std::string>();
            if (cell.at("target").get<long>() != ctx.n) ctx.fail(where, "target is not n");
            for (const auto& f : cell.at("families")) check_intersection(ctx, where, read_pair(f));
            for (const auto& s : cell.at("sporadics")) check_intersection(ctx, where, read_pair(s));
            for (const auto& p : cell.at("pruned")) check_pruned(ctx, where + " pruned " + p.at("pair").at("text").get<std::string>(), p);
        }

        std::map<std::string, Pair> by_id;
        std::map<std::string, bool> family_ids;
        std::vector<std::string> surviving;
        for (const auto& c : cert.at("cases")) {
            const std::string id = c.at("id").get<std::string>();
            const std::string where = "case " + id;
            const Pair pair = read_pair(c.at("pair"));
            by_id[id] = pair;
            family_ids[id] = c.at("pair").at("family").get<bool>();
            check_intersection(ctx, where, pair);
            const Json& chain = c.at("chain");
            bool eliminated = false;
            for (std::size_t i = 0; i < chain.size(); ++i) {
                const bool e = check_attempt(ctx, where + " attempt " + std::to_string(i + 1), chain.at(i), pair);
                if (e && i + 1 != chain.size()) ctx.fail(where, "chain continues past an elimination");
                eliminated = e;
            }
            if (c.at("eliminated").get<bool>() != eliminated) ctx.fail(where, "eliminated flag does not match chain");
            if (!eliminated) surviving.push_back(id);
            ++report.cases_checked;
        }

        const Json& sol = cert.at("solutions");
        for (const auto& ab : sol.at("absorbed")) {
            const std::string fid = ab.at("family").get<std::string>();
            const std::string where = "absorbed " + ab.at("pair").at("text").get<std::string>();
            const auto it = by_id.find(fid);
            if (it == by_id.end() || !family_ids[fid]) {
                ctx.fail(where, "unknown family " + fid);
                continue;
            }
            const Pair p = read_pair(ab.at("pair"));
            check_intersection(ctx, where, p);
            if (!same(act(ab.at("element").get<std::string>(), p), at(it->second, ab.at("t").get<long>())))
                ctx.fail(where, "image under " + ab.at("element").get<std::string>() + " is not on " + fid);
            else ++report.witnesses_checked;
        }
        for (const auto& d : sol.at("duplicates")) {
            const std::string id = d.at("same_as").get<std::string>();
            if (!by_id.count(id)) ctx.fail("duplicate " + d.at("pair").at("text").get<std::string>(), "unknown case " + id);
        }

        report.verdict = cert.at("verdict").get<std::string>();
        const std::string expected = surviving.empty() ? "proven" : "gap";
        if (report.verdict != expected) report.errors.push_back("verdict should be " + expected);
        if (cert.at("surviving").get<std::vector<std::string>>() != surviving)
            report.errors.push_back("surviving list does not match the chains");
    } catch (const nlohmann::json::exception& e) {
        report.errors.push_back(std::string("malformed certificate: ") + e.what());
    } catch (const std::exception& e) {
        report.errors.push_back(std::string("malformed certificate: ") + e.what());
    }
    return report;
}

}  // namespace slicecheck::solver
