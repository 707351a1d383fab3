#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qap/bench.hpp"
#include "qap/delta_table.hpp"
#include "qap/instance.hpp"
#include "qap/tabu.hpp"
#include "qap/verify.hpp"

namespace {

using nlohmann::ordered_json;

qap::QapInstance load_instance(const std::string& path, bool swap_roles) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open instance file: " + path);
    return qap::parse_qaplib(in, swap_roles, std::filesystem::path(path).stem().string());
}

void write_text(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + out_path);
    out << text;
}

std::string hash_string(std::uint64_t h) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "0x%016llx", static_cast<unsigned long long>(h));
    return buf;
}

ordered_json stats_json(const qap::UpdateStats& s) {
    return ordered_json{{"init_computes", s.init_computes},
                        {"full_recomputes", s.full_recomputes},
                        {"o1_disjoint", s.o1_disjoint},
                        {"o1_overlap", s.o1_overlap},
                        {"o1_reversal", s.o1_reversal}};
}

qap::InstanceShape parse_shape(const std::string& shape) {
    return shape == "symmetric" ? qap::InstanceShape::symmetric_zero_diag
                                : qap::InstanceShape::general;
}

int cmd_solve(const std::string& path, bool swap_roles, const qap::SolveOptions& opt,
              const std::string& format, const std::string& out_path) {
    const qap::QapInstance inst = load_instance(path, swap_roles);
    const qap::SearchResult result = qap::solve(inst, opt);
    if (format == "json") {
        // Deterministic by design: repeated runs with the same inputs must be
        // byte-identical, so wall time stays out of the JSON rendering.
        ordered_json doc{{"instance", inst.name()},
                         {"n", inst.n()},
                         {"seed", opt.seed},
                         {"iterations", result.iterations},
                         {"strategy", qap::to_string(opt.strategy)},
                         {"initial_cost", result.initial_cost},
                         {"best_cost", result.best_cost},
                         {"final_cost", result.final_cost},
                         {"best_perm", result.best_perm.assign()},
                         {"trajectory_hash", hash_string(result.trajectory_hash)},
                         {"stats", stats_json(result.stats)}};
        write_text(doc.dump(2) + "\n", out_path);
        return 0;
    }
    std::ostringstream out;
    out << "instance " << inst.name() << " (n=" << inst.n() << ")\n"
        << "strategy " << qap::to_string(opt.strategy) << ", seed " << opt.seed << ", "
        << result.iterations << " iterations\n"
        << "initial cost " << result.initial_cost << ", best cost " << result.best_cost
        << ", final cost " << result.final_cost << "\n"
        << "trajectory hash " << hash_string(result.trajectory_hash) << "\n"
        << "best assignment:";
    for (int x = 0; x < result.best_perm.size(); ++x) out << " " << result.best_perm[x];
    const auto& s = result.stats;
    out << "\n"
        << "updates: " << s.full_recomputes << " full, " << s.o1_disjoint << " disjoint, "
        << s.o1_overlap << " overlap, " << s.o1_reversal << " reversal (init "
        << s.init_computes << ")\n"
        << "wall time " << result.wall_seconds << " s ("
        << result.wall_seconds / static_cast<double>(result.iterations) * 1e6
        << " us/iteration)\n";
    write_text(out.str(), out_path);
    return 0;
}

int cmd_bench(const std::string& path, bool swap_roles, int gen_n, std::int32_t gen_max,
              std::uint64_t gen_seed, const std::string& shape,
              const std::vector<std::uint64_t>& seeds, std::uint64_t iterations,
              const std::string& out_path) {
    qap::QapInstance inst = [&] {
        if (!path.empty()) return load_instance(path, swap_roles);
        std::ostringstream name;
        name << "rand-n" << gen_n << "-" << shape << "-s" << gen_seed;
        return qap::random_instance(gen_n, gen_max, gen_seed, parse_shape(shape), name.str());
    }();
    const qap::BenchSummary summary = qap::run_bench(inst, seeds, iterations);
    const std::string csv = qap::bench_csv(summary.rows);
    std::ostringstream note;
    note << "median speedup (classic / novel time per iteration): " << summary.median_speedup
         << "\n";
    if (out_path.empty()) {
        std::cout << csv;
        std::cerr << note.str();
    } else {
        write_text(csv, out_path);
        std::cout << note.str();
    }
    return 0;
}

int cmd_verify(const std::string& level) {
    const qap::VerifyResult result =
        qap::run_verification(level == "full" ? qap::VerifyLevel::full : qap::VerifyLevel::fast);
    for (const auto& line : result.lines) std::cout << line << "\n";
    std::cout << (result.passed ? "verification passed" : "verification FAILED") << "\n";
    return result.passed ? 0 : 1;
}

int cmd_gen(int n, std::int32_t max_entry, std::uint64_t seed, const std::string& shape,
            const std::string& out_path) {
    const qap::QapInstance inst = qap::random_instance(n, max_entry, seed, parse_shape(shape));
    write_text(qap::to_qaplib(inst), out_path);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"QAP tabu-search toolkit: solve, benchmark delta-table strategies, "
                 "verify the delta formulas, generate instances"};
    app.require_subcommand(1);

    const std::map<std::string, qap::Strategy> strategy_names{
        {"classic", qap::Strategy::classic}, {"novel", qap::Strategy::novel}};

    // solve
    auto* solve_cmd = app.add_subcommand("solve", "run tabu search on a QAPLIB instance");
    std::string solve_path, solve_format = "text", solve_out;
    bool solve_swap_roles = false;
    qap::SolveOptions solve_opt;
    solve_opt.iterations = 1000;
    solve_cmd->add_option("instance", solve_path, "QAPLIB instance file")->required();
    solve_cmd->add_flag("--swap-matrix-roles", solve_swap_roles,
                        "first matrix is flow, second is distance");
    solve_cmd->add_option("--seed", solve_opt.seed, "RNG seed");
    solve_cmd->add_option("--iterations", solve_opt.iterations, "tabu iterations");
    solve_cmd->add_option("--strategy", solve_opt.strategy, "delta-table strategy")
        ->transform(CLI::CheckedTransformer(strategy_names, CLI::ignore_case));
    solve_cmd->add_option("--tenure-low", solve_opt.tenure_low, "tabu tenure lower bound");
    solve_cmd->add_option("--tenure-high", solve_opt.tenure_high, "tabu tenure upper bound");
    solve_cmd->add_option("--format", solve_format, "output format")
        ->check(CLI::IsMember({"json", "text"}));
    solve_cmd->add_option("--out", solve_out, "write output to this file instead of stdout");

    // bench
    auto* bench_cmd =
        app.add_subcommand("bench", "compare classic and novel strategies on one instance");
    std::string bench_path, bench_shape = "symmetric", bench_out;
    bool bench_swap_roles = false;
    int bench_n = 100;
    std::int32_t bench_max = 50;
    std::uint64_t bench_gen_seed = 1, bench_iterations = 10000;
    std::vector<std::uint64_t> bench_seeds{1, 2, 3};
    bench_cmd->add_option("instance", bench_path,
                          "QAPLIB instance file (omit to use a generated instance)");
    bench_cmd->add_flag("--swap-matrix-roles", bench_swap_roles,
                        "first matrix is flow, second is distance");
    bench_cmd->add_option("--n", bench_n, "generated instance size");
    bench_cmd->add_option("--max-entry", bench_max, "generated entry upper bound");
    bench_cmd->add_option("--gen-seed", bench_gen_seed, "generated instance seed");
    bench_cmd->add_option("--shape", bench_shape, "generated instance shape")
        ->check(CLI::IsMember({"general", "symmetric"}));
    bench_cmd->add_option("--seeds", bench_seeds, "search seeds, one classic+novel pair each")
        ->delimiter(',');
    bench_cmd->add_option("--iterations", bench_iterations,
                          "tabu iterations per run (>= 10*n recommended for stable timing)");
    bench_cmd->add_option("--out", bench_out, "write CSV here instead of stdout");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "run formula verification suites");
    std::string verify_level = "fast";
    verify_cmd->add_option("--level", verify_level, "verification depth")
        ->check(CLI::IsMember({"fast", "full"}));

    // gen
    auto* gen_cmd = app.add_subcommand("gen", "emit a random instance as QAPLIB text");
    int gen_n = 0;
    std::int32_t gen_max = 9;
    std::uint64_t gen_seed = 0;
    std::string gen_shape = "general", gen_out;
    gen_cmd->add_option("--n", gen_n, "instance size")->required();
    gen_cmd->add_option("--max-entry", gen_max, "entry upper bound");
    gen_cmd->add_option("--seed", gen_seed, "generator seed");
    gen_cmd->add_option("--shape", gen_shape, "instance shape")
        ->check(CLI::IsMember({"general", "symmetric"}));
    gen_cmd->add_option("--out", gen_out, "write instance here instead of stdout");

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve_cmd->parsed())
            return cmd_solve(solve_path, solve_swap_roles, solve_opt, solve_format, solve_out);
        if (bench_cmd->parsed())
            return cmd_bench(bench_path, bench_swap_roles, bench_n, bench_max, bench_gen_seed,
                             bench_shape, bench_seeds, bench_iterations, bench_out);
        if (verify_cmd->parsed()) return cmd_verify(verify_level);
        if (gen_cmd->parsed()) return cmd_gen(gen_n, gen_max, gen_seed, gen_shape, gen_out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
