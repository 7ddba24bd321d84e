#pragma once

#include <string>
#include <vector>

namespace qst {

enum class VerifyLevel { Fast, Full };

struct SuiteResult {
    std::string name;
    double max_residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    std::string detail;
};

// Runs the property suites (operator unitarity, basis orthonormality and
// closure, coin/oracle decompositions, the phased Chebyshev recurrence,
// stage and end-to-end fidelity checks, backend agreement, overlap
// diagnostics). Full widens the grids, including the exhaustive 2..8
// backend-equivalence scan.
std::vector<SuiteResult> run_verification(VerifyLevel level);

// Number of suites run_verification returns, without running them.
size_t verification_suite_count();

bool all_passed(const std::vector<SuiteResult>& results);

}  // namespace qst
