#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qap/instance.hpp"
#include "qap/tabu.hpp"

namespace qap {

struct BenchRecord {
    std::string instance_name;
    int n = 0;
    Strategy strategy = Strategy::classic;
    std::uint64_t iterations = 0;
    double total_wall_time = 0.0;     // seconds, iteration loop only
    double time_per_iteration = 0.0;  // seconds
    std::uint64_t full_recomputes = 0;
    std::uint64_t o1_disjoint = 0;
    std::uint64_t o1_overlap = 0;
    std::uint64_t o1_reversal = 0;
    std::int64_t best_cost = 0;
    std::uint64_t trajectory_hash = 0;
    std::uint64_t seed = 0;
};

struct BenchSummary {
    std::vector<BenchRecord> rows;  // one per (seed, strategy), classic first
    double median_speedup = 0.0;    // median over seeds of classic/novel time_per_iteration
};

// Runs both strategies for every seed on one instance. The two runs of a
// seed must visit identical trajectories (same best cost and trajectory
// hash); any divergence is a correctness bug and throws rather than being
// reported as a timing artifact.
BenchSummary run_bench(const QapInstance& inst, const std::vector<std::uint64_t>& seeds,
                       std::uint64_t iterations);

extern const char* const kBenchCsvHeader;

std::string to_string(Strategy strategy);
std::string bench_csv_row(const BenchRecord& record);
std::string bench_csv(const std::vector<BenchRecord>& records);  // header + rows

}  // namespace qap
