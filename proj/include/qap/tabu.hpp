#pragma once

#include <cstdint>

#include "qap/delta_table.hpp"
#include "qap/instance.hpp"

namespace qap {

struct SolveOptions {
    std::uint64_t seed = 0;
    std::uint64_t iterations = 1000;
    Strategy strategy = Strategy::novel;
    // 0 means "use the size-based default": low = (9n)/10, high = (11n+9)/10.
    int tenure_low = 0;
    int tenure_high = 0;
    // Tests only: oracle-check the whole delta table after every swap.
    bool debug_verify_table = false;
    // Tests only: every K iterations, recompute the cost from scratch and
    // compare with the incrementally tracked value. 0 disables.
    std::uint64_t cost_check_interval = 0;
};

struct SearchResult {
    Permutation best_perm;
    std::int64_t best_cost = 0;
    std::int64_t initial_cost = 0;
    std::int64_t final_cost = 0;
    std::uint64_t iterations = 0;
    UpdateStats stats;
    double wall_seconds = 0.0;  // iteration loop only; init and I/O excluded
    std::uint64_t trajectory_hash = 0;
};

// Tabu search over the 2-exchange neighborhood. Every iteration scans all
// C(n,2) pairs from the delta table and applies the best admissible move:
// lowest delta, ties broken by lexicographically smallest (i,j). A move is
// tabu only if both reassignments it creates are still forbidden; a tabu
// move is admitted anyway when it would strictly beat the best cost so far
// (aspiration). If every move is tabu and none aspires, the overall best
// move is applied regardless. Tenures are drawn uniformly from
// [tenure_low, tenure_high] per reassignment. Fully deterministic in
// (instance, options); the strategy changes bookkeeping cost only.
SearchResult solve(const QapInstance& inst, const SolveOptions& options);

}  // namespace qap
