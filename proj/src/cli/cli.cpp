#include "slicecheck/cli/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#include "slicecheck/error.hpp"
#include "slicecheck/knotdb/knotdb.hpp"
#include "slicecheck/solver/certificate.hpp"

#ifndef SLICECHECK_DEFAULT_TABLE
#define SLICECHECK_DEFAULT_TABLE "data/knot_table.csv"
#endif

namespace slicecheck::cli {

namespace {

using exact::RootOfUnity;
using solver::Assumptions;
using solver::Json;

struct Config {
    std::string knot_table = SLICECHECK_DEFAULT_TABLE;
    std::string out_path;
    std::string format;
    unsigned precision_bits = 4096;

    std::optional<long> lk;
    std::optional<long> g4, g4_a, g4_b;
    std::optional<int> arf, arf_a, arf_b;
    std::vector<std::string> sigma, sigma_a, sigma_b;
    bool asymmetric = false;

    // signature
    std::string expression;
    std::vector<std::string> at;
    std::vector<long> orders;
    // search-knots
    bool allow_mirror = true;
    // obstruct
    std::string alpha, beta;
    // check-certificate
    std::string certificate;
};

std::vector<long> parse_ints(const std::string& text, char sep, std::size_t count, const std::string& what) {
    std::string s = text;
    if (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
    std::vector<long> out;
    std::istringstream is(s);
    std::string part;
    while (std::getline(is, part, sep)) {
        try {
            std::size_t used = 0;
            out.push_back(std::stol(part, &used));
            if (used != part.size()) throw std::invalid_argument(part);
        } catch (const std::exception&) {
            throw InputError(what + ": '" + text + "' is not a list of integers");
        }
    }
    if (out.size() != count) throw InputError(what + ": expected " + std::to_string(count) + " integers in '" + text + "'");
    return out;
}

std::map<RootOfUnity, int> parse_sigma(const std::vector<std::string>& items, const std::string& flag) {
    std::map<RootOfUnity, int> out;
    for (const auto& item : items) {
        const auto v = parse_ints(item, ':', 3, flag);
        if (v[0] < 1) throw InputError(flag + " '" + item + "': order must be positive");
        out[RootOfUnity(v[0], v[1])] = static_cast<int>(v[2]);
    }
    return out;
}

template <class T>
std::optional<T> first_of(std::initializer_list<std::optional<T>> xs) {
    for (const auto& x : xs)
        if (x) return x;
    return std::nullopt;
}

// Overrides on top of the default values. Under a symmetric link an override
// given for one component only carries over to the other.
Assumptions build_assumptions(const Config& c) {
    Assumptions a = Assumptions::defaults();
    a.symmetric_link = !c.asymmetric;
    const bool sym = a.symmetric_link;
    if (c.lk) a.lk = *c.lk;
    auto pick = [&](auto mine, auto both, auto other, auto fallback) {
        using T = typename decltype(mine)::value_type;
        const auto v = first_of<T>({mine, both, sym ? other : std::nullopt});
        return v ? *v : fallback;
    };
    a.g4_a = pick(c.g4_a, c.g4, c.g4_b, a.g4_a);
    a.g4_b = pick(c.g4_b, c.g4, c.g4_a, a.g4_b);
    a.arf_a = pick(c.arf_a, c.arf, c.arf_b, a.arf_a);
    a.arf_b = pick(c.arf_b, c.arf, c.arf_a, a.arf_b);
    const auto both = parse_sigma(c.sigma, "--sigma");
    const auto sa = parse_sigma(c.sigma_a, "--sigma-a");
    const auto sb = parse_sigma(c.sigma_b, "--sigma-b");
    auto lookup = [](const std::map<RootOfUnity, int>& m, const RootOfUnity& w) -> std::optional<int> {
        const auto it = m.find(w);
        return it == m.end() ? std::nullopt : std::optional<int>(it->second);
    };
    std::set<RootOfUnity> roots;
    for (const auto* m : {&both, &sa, &sb})
        for (const auto& [w, _] : *m) roots.insert(w);
    for (const auto& w : roots) {
        if (auto v = first_of<int>({lookup(sa, w), lookup(both, w), sym ? lookup(sb, w) : std::nullopt})) a.sigma_a[w] = *v;
        if (auto v = first_of<int>({lookup(sb, w), lookup(both, w), sym ? lookup(sa, w) : std::nullopt})) a.sigma_b[w] = *v;
    }
    return a;
}

exact::SignatureOptions signature_options(const Config& c) {
    exact::SignatureOptions o;
    o.precision.cap_bits = c.precision_bits;
    o.precision.initial_bits = std::min(o.precision.initial_bits, c.precision_bits);
    return o;
}

std::string format_or(const Config& c, const std::string& fallback, std::initializer_list<const char*> allowed) {
    const std::string f = c.format.empty() ? fallback : c.format;
    for (const char* a : allowed)
        if (f == a) return f;
    throw InputError("format '" + f + "' is not available for this command");
}

class Output {
public:
    Output(const Config& c, std::ostream& out) : path_(c.out_path), out_(out) {}

    void write(const std::string& text) {
        if (path_.empty()) {
            out_ << text;
            return;
        }
        std::ofstream f(path_, std::ios::binary);
        if (!f) throw Error("cannot write " + path_);
        f << text;
        if (!f) throw Error("cannot write " + path_);
    }
    bool to_file() const { return !path_.empty(); }

private:
    std::string path_;
    std::ostream& out_;
};

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"") == std::string::npos) return s;
    std::string q = "\"";
    for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    return q + "\"";
}

std::vector<knotdb::KnotRecord> load_records(const Config& c) { return knotdb::load_table_file(c.knot_table); }

std::string attempt_line(const solver::Attempt& a, bool with_verdict = true) {
    std::ostringstream os;
    os << to_string(a.rule) << " on " << a.hypothesis.label << " in " << a.hypothesis.cls.to_string("t");
    if (const auto* w = std::get_if<obstructions::SignatureWitness>(&a.outcome.witness))
        os << " at " << RootOfUnity(w->m, w->r).to_string();
    const std::string display = solver::to_json(a)["display"].get<std::string>();
    if (with_verdict) {
        os << ": " << obstructions::to_string(a.outcome.verdict);
        if (!display.empty()) os << ", " << display;
    } else if (!display.empty()) {
        os << ": " << display;
    }
    return os.str();
}

// ---- subcommands ----

int cmd_verify_proof(const Config& c, std::ostream& out) {
    const auto fmt = format_or(c, "json", {"json", "text"});
    const auto cert = solver::verify_proof(build_assumptions(c), signature_options(c));
    std::string text;
    std::ostringstream summary;
    summary << "verdict: " << (cert.proven() ? "proven" : "gap") << " (" << cert.solutions.families.size()
            << " families, " << cert.solutions.sporadics.size() << " sporadic cases";
    if (!cert.proven()) {
        summary << "; surviving:";
        for (const auto& id : cert.surviving()) summary << " " << id;
    }
    summary << ")\n";
    if (fmt == "json") {
        text = solver::serialize(cert);
    } else {
        std::ostringstream os;
        for (const auto& rec : cert.cases) {
            os << rec.entry.id << " " << fourmanifold::to_string(rec.entry.pair, "t") << ": ";
            if (const auto* d = rec.outcome.decisive()) os << "eliminated by " << attempt_line(*d, false) << "\n";
            else os << "survives " << rec.outcome.chain.size() << " attempts\n";
        }
        os << summary.str();
        text = os.str();
    }
    Output o(c, out);
    o.write(text);
    if (o.to_file()) out << summary.str();
    return cert.proven() ? exit_ok : exit_gap;
}

int cmd_table(const Config& c, std::ostream& out) {
    const auto fmt = format_or(c, "text", {"text", "json", "csv"});
    const auto table = solver::build_table(build_assumptions(c));
    const auto checks = solver::check_table_symmetries(table);
    std::ostringstream os;
    if (fmt == "json") {
        Json j;
        j["cells"] = solver::to_json(table);
        j["symmetry_checks"] = solver::to_json(checks);
        os << j.dump(2) << "\n";
    } else if (fmt == "csv") {
        os << "row,col,row_pattern,col_pattern,value,highlighted,equivalent_to,via\n";
        for (const auto& t : table) {
            os << t.ref.row << "," << t.ref.col << "," << csv_field(t.row_pattern.to_string()) << ","
               << csv_field(t.col_pattern.to_string()) << "," << csv_field(t.value) << ","
               << (t.highlighted ? "true" : "false") << ",";
            if (t.equivalence) os << csv_field(t.equivalence->target.to_string()) << "," << t.equivalence->describe();
            else os << ",";
            os << "\n";
        }
    } else {
        // the +- sign is two bytes in UTF-8; pad by code points
        auto width = [](const std::string& s) {
            return static_cast<int>(std::count_if(s.begin(), s.end(), [](char ch) { return (ch & 0xC0) != 0x80; }));
        };
        auto pad = [&](const std::string& s, int w) { return s + std::string(std::max(0, w - width(s)), ' '); };
        os << pad("", 10);
        for (int col = 1; col <= 5; ++col) os << pad(table[col - 1].col_pattern.to_string(), 14);
        os << "\n";
        for (int row = 1; row <= 3; ++row) {
            os << pad(table[(row - 1) * 5].row_pattern.to_string(), 10);
            for (int col = 1; col <= 5; ++col) {
                const auto& t = table[(row - 1) * 5 + col - 1];
                os << pad(t.highlighted ? "[" + t.value + "]" : t.value, 14);
            }
            os << "\n";
        }
        os << "\nhighlighted cells:\n";
        for (const auto& s : checks) {
            const auto& t = table[(s.cell.row - 1) * 5 + s.cell.col - 1];
            os << "  cell " << s.cell.to_string() << " ~ cell " << s.equivalent.to_string() << " via "
               << t.equivalence->describe() << "\n";
        }
    }
    Output(c, out).write(os.str());
    return exit_ok;
}

int cmd_signature(const Config& c, std::ostream& out) {
    const auto fmt = format_or(c, "csv", {"csv", "json", "text"});
    std::optional<std::vector<knotdb::KnotRecord>> records;
    const knots::AtomLookup lookup = [&](const std::string& name) -> std::optional<knots::SeifertMatrix> {
        if (!records) records = load_records(c);
        if (const auto* r = knotdb::find(*records, name)) return r->seifert;
        throw InputError("knot " + name + " is not in " + c.knot_table);
    };
    const auto e = knots::parse_expression(c.expression, lookup);

    std::vector<std::pair<long, long>> points;
    for (const auto& s : c.at) {
        const auto v = parse_ints(s, ':', 2, "--at");
        if (v[0] < 1) throw InputError("--at '" + s + "': order must be positive");
        points.push_back({v[0], v[1]});
    }
    for (const long m : c.orders) {
        if (m < 1) throw InputError("--m must be positive");
        for (long r = 1; r < m; ++r) points.push_back({m, r});
    }
    if (points.empty())
        for (long r = 1; r < 8; ++r) points.push_back({8, r});

    knots::EvalOptions opts;
    opts.arithmetic = signature_options(c);
    std::ostringstream os;
    Json rows = Json::array();
    if (fmt == "csv") os << "m,r,sigma,note\n";
    for (const auto& [m, r] : points) {
        std::optional<int> sigma;
        std::string note;
        try {
            sigma = knots::lt_signature(e, RootOfUnity(m, r), opts);
        } catch (const SignatureAtAlexanderRoot&) {
            note = "alexander-root";
        } catch (const PrecisionExhausted&) {
            note = "precision-exhausted";
        }
        if (fmt == "csv") {
            os << m << "," << r << "," << (sigma ? std::to_string(*sigma) : "") << "," << note << "\n";
        } else if (fmt == "json") {
            Json row;
            row["m"] = m;
            row["r"] = r;
            row["sigma"] = sigma ? Json(*sigma) : Json(nullptr);
            row["note"] = note;
            rows.push_back(row);
        } else {
            os << "sigma(" << RootOfUnity(m, r).to_string() << ") = " << (sigma ? std::to_string(*sigma) : note) << "\n";
        }
    }
    if (fmt == "json") {
        Json j;
        j["knot"] = e.to_string();
        j["samples"] = rows;
        os << j.dump(2) << "\n";
    }
    Output(c, out).write(os.str());
    return exit_ok;
}

int cmd_search(const Config& c, std::ostream& out) {
    const auto fmt = format_or(c, "text", {"text", "json", "csv"});
    auto predicate = knotdb::SearchPredicate::defaults();
    if (c.g4) predicate.g4 = *c.g4;
    if (c.arf) predicate.arf = *c.arf;
    if (!c.sigma.empty()) predicate.sigma = parse_sigma(c.sigma, "--sigma");
    predicate.allow_mirror = c.allow_mirror;
    const auto records = load_records(c);
    const auto matches = knotdb::search(records, predicate, signature_options(c));
    std::ostringstream os;
    if (fmt == "json") {
        Json arr = Json::array();
        for (const auto& m : matches) {
            Json j;
            j["name"] = m.display_name();
            j["record"] = m.record->name;
            j["mirrored"] = m.mirrored;
            j["g4"] = m.record->g4;
            j["arf"] = m.arf;
            j["determinant"] = m.determinant;
            Json s = Json::object();
            for (const auto& [w, v] : m.sigma) s[std::to_string(w.order()) + ":" + std::to_string(w.index())] = v;
            j["sigma"] = s;
            arr.push_back(j);
        }
        os << arr.dump(2) << "\n";
    } else if (fmt == "csv") {
        os << "name,record,mirrored,g4,arf,determinant";
        for (const auto& [w, _] : predicate.sigma) os << ",sigma_" << w.order() << "_" << w.index();
        os << "\n";
        for (const auto& m : matches) {
            os << m.display_name() << "," << m.record->name << "," << (m.mirrored ? "true" : "false") << ","
               << m.record->g4 << "," << m.arf << "," << m.determinant;
            for (const auto& [_, v] : m.sigma) os << "," << v;
            os << "\n";
        }
    } else {
        for (const auto& m : matches) {
            os << m.display_name() << ": g4 = " << m.record->g4 << ", Arf = " << m.arf << ", det = " << m.determinant;
            for (const auto& [w, v] : m.sigma) os << ", sigma(" << w.to_string() << ") = " << v;
            os << "\n";
        }
        if (matches.empty()) os << "no matching knots\n";
    }
    Output(c, out).write(os.str());
    return exit_ok;
}

int cmd_obstruct(const Config& c, std::ostream& out) {
    const auto fmt = format_or(c, "text", {"text", "json"});
    const auto av = parse_ints(c.alpha, ',', 2, "--alpha");
    const auto bv = parse_ints(c.beta, ',', 2, "--beta");
    const fourmanifold::ConcretePair pair{{av[0], av[1]}, {bv[0], bv[1]}};
    const long dot = fourmanifold::intersection(pair.alpha, pair.beta);
    Config adjusted = c;
    if (!c.lk) adjusted.lk = -dot;
    else if (-*c.lk != dot)
        throw InputError("alpha . beta = " + std::to_string(dot) + " but disjoint discs force alpha . beta = -lk = " +
                         std::to_string(-*c.lk));
    const Assumptions a = build_assumptions(adjusted);
    a.validate();
    const auto outcome = solver::eliminate_case(pair, a, signature_options(c));
    std::ostringstream os;
    if (fmt == "json") {
        Json j;
        j["pair"] = solver::to_json(fourmanifold::CasePair(pair));
        j["assumptions"] = solver::to_json(a);
        j["eliminated"] = outcome.eliminated();
        Json chain = Json::array();
        for (const auto& at : outcome.chain) chain.push_back(solver::to_json(at));
        j["chain"] = chain;
        os << j.dump(2) << "\n";
    } else {
        os << "case " << pair.to_string() << ", n = " << dot << "\n";
        for (const auto& at : outcome.chain) os << "  " << attempt_line(at) << "\n";
        if (const auto* d = outcome.decisive()) os << "eliminated by " << to_string(d->rule) << " on " << d->hypothesis.label << "\n";
        else os << "survives: no rule applies\n";
    }
    Output(c, out).write(os.str());
    return outcome.eliminated() ? exit_ok : exit_gap;
}

int cmd_check_certificate(const Config& c, std::ostream& out, std::ostream& err) {
    const auto fmt = format_or(c, "text", {"text", "json"});
    std::string text;
    if (c.certificate == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        text = ss.str();
    } else {
        std::ifstream f(c.certificate, std::ios::binary);
        if (!f) throw InputError("cannot open certificate " + c.certificate);
        std::ostringstream ss;
        ss << f.rdbuf();
        text = ss.str();
    }
    solver::CheckReport report;
    try {
        report = solver::check_certificate(Json::parse(text));
    } catch (const Json::parse_error& e) {
        report.errors.push_back(std::string("not JSON: ") + e.what());
    }
    std::ostringstream os;
    if (fmt == "json") {
        Json j;
        j["ok"] = report.ok();
        j["verdict"] = report.verdict;
        j["cases_checked"] = report.cases_checked;
        j["witnesses_checked"] = report.witnesses_checked;
        j["errors"] = report.errors;
        os << j.dump(2) << "\n";
    } else if (report.ok()) {
        os << "certificate accepted: verdict " << report.verdict << ", " << report.cases_checked << " cases, "
           << report.witnesses_checked << " witnesses re-verified\n";
    } else {
        os << "certificate rejected: " << report.errors.size() << " problem(s)\n";
        for (const auto& e : report.errors) err << "  " << e << "\n";
    }
    Output(c, out).write(os.str());
    return report.ok() ? exit_ok : exit_rejected;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Config c;
    CLI::App app{"Slice obstructions for two-component links in S^2 x S^2", "slicecheck"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--knot-table", c.knot_table, "Knot table CSV");
    app.add_option("--out", c.out_path, "Write the result to this file");
    app.add_option("--format", c.format, "json, text or csv")->check(CLI::IsMember({"json", "text", "csv"}));
    app.add_option("--precision-bits", c.precision_bits, "Interval precision cap in bits")->check(CLI::Range(2U, 1U << 20));
    app.add_option("--lk", c.lk, "Linking number of A and B");
    app.add_option("--g4", c.g4, "Smooth 4-genus of both components (search: required g4)");
    app.add_option("--g4-a", c.g4_a, "Smooth 4-genus of A");
    app.add_option("--g4-b", c.g4_b, "Smooth 4-genus of B");
    app.add_option("--arf", c.arf, "Arf invariant of both components (search: required Arf)");
    app.add_option("--arf-a", c.arf_a, "Arf invariant of A");
    app.add_option("--arf-b", c.arf_b, "Arf invariant of B");
    app.add_option("--sigma", c.sigma, "m:r:value for both components (search: required values)")->delimiter(',');
    app.add_option("--sigma-a", c.sigma_a, "m:r:value signatures of A")->delimiter(',');
    app.add_option("--sigma-b", c.sigma_b, "m:r:value signatures of B")->delimiter(',');
    app.add_flag("--asymmetric", c.asymmetric, "Do not assume an isotopy exchanging A and B");

    auto* verify = app.add_subcommand("verify-proof", "Run the full case analysis and emit a certificate");
    auto* table = app.add_subcommand("table", "Print the table of intersection numbers");
    auto* signature = app.add_subcommand("signature", "Sample the signature function of a knot expression");
    signature->add_option("expression", c.expression, "unknot | atom(NAME) | mirror(E) | reverse(E) | sum(E,E) | cable(E,p,q) | torus(p,q)")
        ->required();
    signature->add_option("--at", c.at, "m:r sample points")->delimiter(',');
    signature->add_option("--m", c.orders, "sample every r = 1..m-1")->delimiter(',');
    auto* search = app.add_subcommand("search-knots", "Search the knot table for a suitable component");
    search->add_flag("--allow-mirror,!--no-allow-mirror", c.allow_mirror, "Also match mirror images");
    auto* obstruct = app.add_subcommand("obstruct", "Run the obstruction cascade on one pair of classes");
    obstruct->add_option("--alpha", c.alpha, "class of A's disc, a1,a2")->required();
    obstruct->add_option("--beta", c.beta, "class of B's disc, b1,b2")->required();
    auto* check = app.add_subcommand("check-certificate", "Re-verify a certificate without repeating the search");
    check->add_option("certificate", c.certificate, "certificate path, or - for stdin")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::Success& e) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "slicecheck: " << e.what() << "\n";
        return exit_input_error;
    }

    try {
        if (verify->parsed()) return cmd_verify_proof(c, out);
        if (table->parsed()) return cmd_table(c, out);
        if (signature->parsed()) return cmd_signature(c, out);
        if (search->parsed()) return cmd_search(c, out);
        if (obstruct->parsed()) return cmd_obstruct(c, out);
        if (check->parsed()) return cmd_check_certificate(c, out, err);
    } catch (const PrecisionExhausted& e) {
        err << "slicecheck: " << e.what() << "\n";
        return exit_precision;
    } catch (const InputError& e) {
        err << "slicecheck: " << e.what() << "\n";
        return exit_input_error;
    } catch (const UnresolvedAtom& e) {
        err << "slicecheck: no signature for " << e.what() << "\n";
        return exit_input_error;
    } catch (const SignatureAtAlexanderRoot& e) {
        err << "slicecheck: " << e.what() << "\n";
        return exit_input_error;
    } catch (const std::exception& e) {
        err << "slicecheck: " << e.what() << "\n";
        return exit_failure;
    }
    return exit_failure;
}

}  // namespace slicecheck::cli
