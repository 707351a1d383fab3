#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qap/instance.hpp"

namespace qap {

// Minimum objective over all n! assignments; the ground truth for search
// quality tests. Feasible up to n ~ 10.
std::int64_t exhaustive_optimum(const QapInstance& inst);

enum class VerifyLevel { fast, full };

struct VerifyResult {
    bool passed = true;
    std::vector<std::string> lines;  // one PASS/FAIL/INFO line per check
};

// Runs the symbolic identity checks and the oracle sweeps over random
// instances (both shapes, general ones with nonzero diagonals included):
// full-delta vs oracle, reversal, disjoint and overlap O(1) updates, table
// soaks under both strategies, and cross-strategy equivalence. fast keeps
// sizes small (seconds); full sweeps up to n=30 with long soaks.
VerifyResult run_verification(VerifyLevel level);

}  // namespace qap
