#include "slicecheck/knotdb/knotdb.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include "slicecheck/error.hpp"

namespace slicecheck::knotdb {

namespace {

const std::vector<std::string> kColumns{"name", "genus", "seifert_dim", "seifert_entries", "g4", "arf", "signature"};

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string field;
    std::istringstream is(s);
    while (std::getline(is, field, sep)) out.push_back(trim(field));
    if (!s.empty() && s.back() == sep) out.emplace_back();
    return out;
}

long parse_long(const std::string& s, std::size_t line, const std::string& column) {
    long v = 0;
    const auto* end = s.data() + s.size();
    const auto [ptr, ec] = std::from_chars(s.data(), end, v);
    if (s.empty() || ec != std::errc() || ptr != end)
        throw ParseError(line, "column " + column + ": '" + s + "' is not an integer");
    return v;
}

std::optional<long> parse_optional(const std::string& s, std::size_t line, const std::string& column) {
    if (s.empty()) return std::nullopt;
    return parse_long(s, line, column);
}

KnotRecord parse_row(const std::vector<std::string>& f, std::size_t line) {
    KnotRecord r;
    r.name = f[0];
    if (r.name.empty()) throw ParseError(line, "empty knot name");
    r.genus = static_cast<int>(parse_long(f[1], line, "genus"));
    const long dim = parse_long(f[2], line, "seifert_dim");
    if (dim < 0) throw ParseError(line, "negative seifert_dim");
    const auto entries = f[3].empty() ? std::vector<std::string>{} : split(f[3], ';');
    if (static_cast<long>(entries.size()) != dim * dim)
        throw ParseError(line, "expected " + std::to_string(dim * dim) + " Seifert entries, found " +
                                   std::to_string(entries.size()));
    exact::IntMatrix v(dim, dim);
    for (long i = 0; i < dim * dim; ++i) v(i / dim, i % dim) = static_cast<int>(parse_long(entries[i], line, "seifert_entries"));
    try {
        r.seifert = SeifertMatrix(std::move(v));
    } catch (const InvalidSeifertMatrix& e) {
        throw InvalidSeifertMatrix(r.name + ": " + e.what());
    }
    r.g4 = parse_long(f[4], line, "g4");
    if (auto a = parse_optional(f[5], line, "arf")) r.reported_arf = static_cast<int>(*a);
    if (auto s = parse_optional(f[6], line, "signature")) r.reported_signature = static_cast<int>(*s);
    return r;
}

void validate(const KnotRecord& r) {
    if (r.genus < 0 || r.genus > r.seifert.genus())
        throw InconsistentInvariant(r.name, "genus", "genus " + std::to_string(r.genus) + " but the Seifert surface has genus " +
                                                         std::to_string(r.seifert.genus()));
    if (r.g4 < 0 || r.g4 > r.genus)
        throw InconsistentInvariant(r.name, "g4", "g4 " + std::to_string(r.g4) + " outside 0.." + std::to_string(r.genus));
    const auto e = r.expression();
    const int arf = knots::arf(e);
    if (r.reported_arf && *r.reported_arf != arf)
        throw InconsistentInvariant(r.name, "arf", "table says " + std::to_string(*r.reported_arf) + ", computed " +
                                                       std::to_string(arf));
    const int sigma = knots::lt_signature(r.seifert, RootOfUnity(2, 1));
    if (r.reported_signature && *r.reported_signature != sigma)
        throw InconsistentInvariant(r.name, "signature", "table says " + std::to_string(*r.reported_signature) +
                                                             ", computed " + std::to_string(sigma));
    if (2 * r.g4 < std::abs(sigma))
        throw InconsistentInvariant(r.name, "g4", "g4 " + std::to_string(r.g4) + " is below |sigma|/2 = " +
                                                      std::to_string(std::abs(sigma) / 2));
}

}  // namespace

std::vector<KnotRecord> load_table(std::istream& in) {
    std::vector<KnotRecord> out;
    std::set<std::string> names;
    std::string raw;
    std::size_t line = 0;
    bool header = false;
    while (std::getline(in, raw)) {
        ++line;
        if (line == 1 && raw.starts_with("\xEF\xBB\xBF")) raw.erase(0, 3);
        if (trim(raw).empty()) continue;
        const auto fields = split(raw, ',');
        if (!header) {
            if (fields != kColumns) throw ParseError(line, "expected header name,genus,seifert_dim,seifert_entries,g4,arf,signature");
            header = true;
            continue;
        }
        if (fields.size() != kColumns.size())
            throw ParseError(line, "expected " + std::to_string(kColumns.size()) + " columns, found " +
                                       std::to_string(fields.size()));
        KnotRecord r = parse_row(fields, line);
        if (!names.insert(r.name).second) throw InconsistentInvariant(r.name, "name", "duplicate record");
        validate(r);
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<KnotRecord> load_table_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open knot table " + path);
    return load_table(in);
}

std::string serialize(const std::vector<KnotRecord>& records) {
    std::ostringstream os;
    for (std::size_t i = 0; i < kColumns.size(); ++i) os << (i ? "," : "") << kColumns[i];
    os << "\n";
    for (const auto& r : records) {
        const auto& v = r.seifert.matrix();
        os << r.name << "," << r.genus << "," << v.rows() << ",";
        for (Eigen::Index i = 0; i < v.size(); ++i) os << (i ? ";" : "") << v(i / v.cols(), i % v.cols());
        os << "," << r.g4 << ",";
        if (r.reported_arf) os << *r.reported_arf;
        os << ",";
        if (r.reported_signature) os << *r.reported_signature;
        os << "\n";
    }
    return os.str();
}

const KnotRecord* find(const std::vector<KnotRecord>& records, const std::string& name) {
    for (const auto& r : records)
        if (r.name == name) return &r;
    return nullptr;
}

SearchPredicate SearchPredicate::defaults() {
    SearchPredicate p;
    p.g4 = 1;
    p.arf = 1;
    for (const long m : {2, 4, 8}) p.sigma[RootOfUnity(m, 1)] = 2;
    return p;
}

std::vector<SearchMatch> search(const std::vector<KnotRecord>& records, const SearchPredicate& predicate,
                                const exact::SignatureOptions& options) {
    std::vector<SearchMatch> out;
    for (const auto& r : records) {
        if (predicate.g4 && *predicate.g4 != r.g4) continue;
        const int arf = knots::arf(r.expression());
        if (predicate.arf && *predicate.arf != arf) continue;
        std::map<RootOfUnity, int> sigma;
        for (const auto& [w, _] : predicate.sigma) sigma[w] = knots::lt_signature(r.seifert, w, options);
        const long det = knots::determinant_at_minus_one(r.expression());
        for (const bool mirrored : {false, true}) {
            if (mirrored && !predicate.allow_mirror) break;
            bool ok = true;
            for (const auto& [w, want] : predicate.sigma) ok = ok && (mirrored ? -sigma.at(w) : sigma.at(w)) == want;
            if (!ok) continue;
            SearchMatch m{&r, mirrored, arf, det, sigma};
            if (mirrored)
                for (auto& [w, v] : m.sigma) v = -v;
            out.push_back(std::move(m));
        }
    }
    return out;
}

}  // namespace slicecheck::knotdb
