#pragma once

#include <istream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "slicecheck/knots/invariants.hpp"

namespace slicecheck::knotdb {

using exact::RootOfUnity;
using knots::SeifertMatrix;

struct KnotRecord {
    std::string name;
    int genus = 0;
    SeifertMatrix seifert = SeifertMatrix::empty();
    long g4 = 0;                    // taken from the table, not computed
    std::optional<int> reported_arf;
    std::optional<int> reported_signature;  // sigma at zeta_2, as printed in the table

    knots::KnotExpression expression() const { return knots::KnotExpression::atom(name, seifert); }
};

/// Reads the CSV table
///   name,genus,seifert_dim,seifert_entries,g4,arf,signature
/// with row-major ';'-separated entries and optional arf/signature columns.
/// Reported invariants are recomputed and must agree.
std::vector<KnotRecord> load_table(std::istream& in);
std::vector<KnotRecord> load_table_file(const std::string& path);

std::string serialize(const std::vector<KnotRecord>& records);

const KnotRecord* find(const std::vector<KnotRecord>& records, const std::string& name);

struct SearchPredicate {
    std::optional<long> g4;
    std::optional<int> arf;
    std::map<RootOfUnity, int> sigma;
    bool allow_mirror = true;

    /// g4 = 1, Arf = 1, sigma = 2 at zeta_2, zeta_4 and zeta_8.
    static SearchPredicate defaults();
};

struct SearchMatch {
    const KnotRecord* record = nullptr;
    bool mirrored = false;
    int arf = 0;
    long determinant = 0;
    std::map<RootOfUnity, int> sigma;  // of the matched knot, mirror included

    std::string display_name() const { return mirrored ? "m(" + record->name + ")" : record->name; }
};

/// Matches in table order; for each record the knot itself comes before its mirror.
std::vector<SearchMatch> search(const std::vector<KnotRecord>& records, const SearchPredicate& predicate,
                                const exact::SignatureOptions& options = {});

}  // namespace slicecheck::knotdb
