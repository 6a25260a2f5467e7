#pragma once

#include "qplane/report.hpp"

#include <string>
#include <vector>

namespace qplane {

// Suite vocabulary: all, hopf-A, diff-gamma, bicovariance, forms, borel,
// confluence.
const std::vector<std::string>& suite_names();

/**
 * Runs one named suite. max_degree bounds the word length used when
 * generating test elements (must be at least 2); seed drives every random
 * choice, so a report is reproducible bit-for-bit. Unknown suite names are
 * std::invalid_argument.
 */
CheckReport run_suite(const std::string& suite, int max_degree, long long seed);

// Gamma with the coefficient of the y.x^-1 rule mis-derived (q^-1 in
// place of q). Used as the confluence negative control: the critical-pair
// checker must flag this table. Exposed for tests.
Presentation make_misderived_gamma();

} // namespace qplane
