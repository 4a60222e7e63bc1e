#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "slicecheck/solver/cases.hpp"

namespace slicecheck::solver {

using Json = nlohmann::ordered_json;

struct CaseRecord {
    CaseEntry entry;
    CaseOutcome outcome;
};

/// Everything the proof run produced, in emission order.
struct ProofCertificate {
    Assumptions assumptions;
    std::vector<TableCell> table;
    std::vector<SymmetryCheck> symmetry_checks;
    std::vector<CellSolution> cells;  // non-highlighted cells, row-major
    SolutionSet solutions;
    std::vector<CaseRecord> cases;

    bool proven() const;
    std::vector<std::string> surviving() const;
};

/// Table, symmetry checks, cell solving, deduplication and elimination.
ProofCertificate verify_proof(const Assumptions& assumptions, const exact::SignatureOptions& options = {});

Json to_json(const Assumptions& a);
Json to_json(const CasePair& pair);
Json to_json(const Attempt& attempt);
Json to_json(const std::vector<TableCell>& table);
Json to_json(const std::vector<SymmetryCheck>& checks);
Json to_json(const ProofCertificate& cert);

/// Pretty-printed JSON with a trailing newline; identical input gives identical bytes.
std::string serialize(const ProofCertificate& cert);

struct CheckReport {
    std::vector<std::string> errors;
    long witnesses_checked = 0;
    long cases_checked = 0;
    std::string verdict;

    bool ok() const { return errors.empty(); }
};

/// Re-verifies a serialized certificate from its recorded numbers alone:
/// every case satisfies alpha . beta = n, every eliminating witness holds,
/// every absorption is a genuine symmetry image and the verdict matches the
/// chains. Does not repeat the search.
CheckReport check_certificate(const Json& cert);

}  // namespace slicecheck::solver
