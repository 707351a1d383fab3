#include "qap/bench.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

namespace qap {

const char* const kBenchCsvHeader =
    "instance_name,n,strategy,iterations,total_wall_time,time_per_iteration,"
    "full_recomputes,o1_disjoint,o1_overlap,o1_reversal,best_cost,trajectory_hash,seed";

std::string to_string(Strategy strategy) {
    return strategy == Strategy::classic ? "classic" : "novel";
}

namespace {

std::string format_seconds(double s) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.9f", s);
    return buf;
}

std::string format_hash(std::uint64_t h) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "0x%016llx", static_cast<unsigned long long>(h));
    return buf;
}

BenchRecord make_record(const QapInstance& inst, const SearchResult& r, Strategy strategy,
                        std::uint64_t seed) {
    BenchRecord rec;
    rec.instance_name = inst.name().empty() ? "<anon>" : inst.name();
    rec.n = inst.n();
    rec.strategy = strategy;
    rec.iterations = r.iterations;
    rec.total_wall_time = r.wall_seconds;
    rec.time_per_iteration = r.wall_seconds / static_cast<double>(r.iterations);
    rec.full_recomputes = r.stats.full_recomputes;
    rec.o1_disjoint = r.stats.o1_disjoint;
    rec.o1_overlap = r.stats.o1_overlap;
    rec.o1_reversal = r.stats.o1_reversal;
    rec.best_cost = r.best_cost;
    rec.trajectory_hash = r.trajectory_hash;
    rec.seed = seed;
    return rec;
}

}  // namespace

BenchSummary run_bench(const QapInstance& inst, const std::vector<std::uint64_t>& seeds,
                       std::uint64_t iterations) {
    if (seeds.empty()) throw std::invalid_argument("at least one seed is required");
    BenchSummary summary;
    std::vector<double> speedups;
    for (const std::uint64_t seed : seeds) {
        SolveOptions opt;
        opt.seed = seed;
        opt.iterations = iterations;
        opt.strategy = Strategy::classic;
        const SearchResult classic = solve(inst, opt);
        opt.strategy = Strategy::novel;
        const SearchResult novel = solve(inst, opt);
        if (classic.trajectory_hash != novel.trajectory_hash ||
            classic.best_cost != novel.best_cost)
            throw std::runtime_error(
                "strategy divergence on seed " + std::to_string(seed) +
                ": classic and novel visited different trajectories (correctness bug)");
        summary.rows.push_back(make_record(inst, classic, Strategy::classic, seed));
        summary.rows.push_back(make_record(inst, novel, Strategy::novel, seed));
        speedups.push_back(classic.wall_seconds / novel.wall_seconds);
    }
    std::sort(speedups.begin(), speedups.end());
    const std::size_t m = speedups.size();
    summary.median_speedup =
        m % 2 == 1 ? speedups[m / 2] : (speedups[m / 2 - 1] + speedups[m / 2]) / 2.0;
    return summary;
}

std::string bench_csv_row(const BenchRecord& r) {
    std::string row;
    row += r.instance_name;
    row += "," + std::to_string(r.n);
    row += "," + to_string(r.strategy);
    row += "," + std::to_string(r.iterations);
    row += "," + format_seconds(r.total_wall_time);
    row += "," + format_seconds(r.time_per_iteration);
    row += "," + std::to_string(r.full_recomputes);
    row += "," + std::to_string(r.o1_disjoint);
    row += "," + std::to_string(r.o1_overlap);
    row += "," + std::to_string(r.o1_reversal);
    row += "," + std::to_string(r.best_cost);
    row += "," + format_hash(r.trajectory_hash);
    row += "," + std::to_string(r.seed);
    return row;
}

std::string bench_csv(const std::vector<BenchRecord>& records) {
    std::string out = kBenchCsvHeader;
    out += "\n";
    for (const auto& r : records) {
        out += bench_csv_row(r);
        out += "\n";
    }
    return out;
}

}  // namespace qap
