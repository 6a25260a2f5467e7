#pragma once

#include "qplane/verify.hpp"

#include <string>
#include <vector>

namespace qplane {

// One informational (never failing) record, e.g. the antipode inverse
// probe: the derived value is printed next to the stated one.
struct InfoRecord {
    std::string id;
    std::string paper_eq;
    std::string detail;
    std::string derived;
    std::string stated;
    bool agrees = false;
};

/**
 * The result of one suite run. JSON serialization is byte-stable for a
 * fixed suite, seed and max_degree: checks and informational records are
 * sorted by id and all content is deterministic.
 */
struct CheckReport {
    std::string suite;
    std::string algebra;
    long long seed = 0;
    std::vector<AxiomCheck> checks;
    std::vector<InfoRecord> informational;
    std::string version;

    bool pass() const;
    void sort_records();
    std::string to_json() const;
    std::string to_text() const;
};

} // namespace qplane
