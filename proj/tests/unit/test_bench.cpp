#include <algorithm>
#include <string>
#include <vector>

#include "doctest.h"
#include "qap/bench.hpp"
#include "qap/instance.hpp"

using namespace qap;

TEST_CASE("bench: csv header is stable") {
    CHECK(std::string(kBenchCsvHeader) ==
          "instance_name,n,strategy,iterations,total_wall_time,time_per_iteration,"
          "full_recomputes,o1_disjoint,o1_overlap,o1_reversal,best_cost,trajectory_hash,seed");
    CHECK(to_string(Strategy::classic) == "classic");
    CHECK(to_string(Strategy::novel) == "novel");
}

TEST_CASE("bench: run produces matched strategy pairs with exact counters") {
    const QapInstance inst =
        random_instance(12, 9, 40, InstanceShape::symmetric_zero_diag, "bench-12");
    const std::vector<std::uint64_t> seeds{3, 8};
    const std::uint64_t iterations = 120;
    const BenchSummary summary = run_bench(inst, seeds, iterations);
    REQUIRE(summary.rows.size() == 4);

    // Per swap at n=12: classic recomputes 2*(n-2)=20 pairs in full; novel
    // does n-2=10 full and 10 overlap updates; both touch C(12,2)-21=45
    // disjoint pairs and reverse the swapped pair.
    for (std::size_t s = 0; s < seeds.size(); ++s) {
        const BenchRecord& classic = summary.rows[2 * s];
        const BenchRecord& novel = summary.rows[2 * s + 1];
        CHECK(classic.strategy == Strategy::classic);
        CHECK(novel.strategy == Strategy::novel);
        CHECK(classic.seed == seeds[s]);
        CHECK(novel.seed == seeds[s]);
        for (const BenchRecord* r : {&classic, &novel}) {
            CHECK(r->instance_name == "bench-12");
            CHECK(r->n == 12);
            CHECK(r->iterations == iterations);
            CHECK(r->o1_disjoint == iterations * 45);
            CHECK(r->o1_reversal == iterations);
            CHECK(r->total_wall_time >= 0.0);
            CHECK(r->time_per_iteration ==
                  doctest::Approx(r->total_wall_time / static_cast<double>(iterations)));
        }
        CHECK(classic.full_recomputes == iterations * 20);
        CHECK(classic.o1_overlap == 0);
        CHECK(novel.full_recomputes == iterations * 10);
        CHECK(novel.o1_overlap == iterations * 10);
        CHECK(classic.best_cost == novel.best_cost);
        CHECK(classic.trajectory_hash == novel.trajectory_hash);
    }
    CHECK(summary.median_speedup > 0.0);
}

TEST_CASE("bench: csv serialization") {
    BenchRecord r;
    r.instance_name = "toy";
    r.n = 4;
    r.strategy = Strategy::novel;
    r.iterations = 7;
    r.total_wall_time = 0.5;
    r.time_per_iteration = 0.5 / 7;
    r.full_recomputes = 14;
    r.o1_disjoint = 7;
    r.o1_overlap = 14;
    r.o1_reversal = 7;
    r.best_cost = -3;
    r.trajectory_hash = 0xabcdef0123456789ULL;
    r.seed = 9;
    const std::string row = bench_csv_row(r);
    CHECK(row.find("toy,4,novel,7,") == 0);
    CHECK(row.find(",14,7,14,7,-3,0xabcdef0123456789,9") != std::string::npos);
    CHECK(row.find('\n') == std::string::npos);

    const std::string csv = bench_csv({r, r});
    CHECK(csv.find(kBenchCsvHeader) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);  // header + 2 rows
}

TEST_CASE("bench: empty seed list is rejected") {
    const QapInstance inst = random_instance(6, 9, 1, InstanceShape::general);
    CHECK_THROWS_AS(run_bench(inst, {}, 10), std::invalid_argument);
}
