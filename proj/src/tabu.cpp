#include "qap/tabu.hpp"

#include <chrono>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "qap/hash.hpp"
#include "qap/rng.hpp"

namespace qap {

SearchResult solve(const QapInstance& inst, const SolveOptions& options) {
    const int n = inst.n();
    if (options.iterations < 1) throw std::invalid_argument("iterations must be at least 1");
    const int low = options.tenure_low != 0 ? options.tenure_low : (9 * n) / 10;
    const int high = options.tenure_high != 0 ? options.tenure_high : (11 * n + 9) / 10;
    if (low < 1 || low > high) throw std::invalid_argument("invalid tenure bounds");

    RngState rng(options.seed);
    Permutation perm = Permutation::random(n, rng);
    DeltaTable table(inst, perm, options.strategy);
    table.set_debug_verify(options.debug_verify_table);

    std::int64_t current = cost(inst, perm);
    std::int64_t best = current;
    Permutation best_perm = perm;
    const std::int64_t initial = current;

    // tabu_until[loc][fac]: first iteration at which placing facility fac at
    // location loc is allowed again.
    std::vector<std::vector<std::uint64_t>> tabu_until(
        static_cast<std::size_t>(n), std::vector<std::uint64_t>(static_cast<std::size_t>(n), 0));

    std::uint64_t hash = fnv1a64_push(kFnvOffset, static_cast<std::uint64_t>(current));

    const auto t0 = std::chrono::steady_clock::now();
    for (std::uint64_t it = 1; it <= options.iterations; ++it) {
        bool have_move = false, have_fallback = false;
        std::int64_t move_d = 0, fb_d = 0;
        int move_i = 0, move_j = 0, fb_i = 0, fb_j = 0;
        for (int i = 0; i < n; ++i) {
            const auto tabu_i = tabu_until[static_cast<std::size_t>(i)].data();
            for (int j = i + 1; j < n; ++j) {
                const std::int64_t d = table.at(i, j);
                if (!have_fallback || std::tie(d, i, j) < std::tie(fb_d, fb_i, fb_j)) {
                    have_fallback = true;
                    fb_d = d; fb_i = i; fb_j = j;
                }
                const bool is_tabu =
                    tabu_i[perm[j]] > it &&
                    tabu_until[static_cast<std::size_t>(j)][static_cast<std::size_t>(perm[i])] > it;
                if (is_tabu && !(current + d < best)) continue;
                if (!have_move || std::tie(d, i, j) < std::tie(move_d, move_i, move_j)) {
                    have_move = true;
                    move_d = d; move_i = i; move_j = j;
                }
            }
        }
        if (!have_move) {
            move_d = fb_d; move_i = fb_i; move_j = fb_j;
        }

        const int fac_i = perm[move_i], fac_j = perm[move_j];
        table.apply_swap(inst, perm, move_i, move_j);
        current += move_d;
        tabu_until[static_cast<std::size_t>(move_i)][static_cast<std::size_t>(fac_i)] =
            it + static_cast<std::uint64_t>(low) +
            rng.next_below(static_cast<std::uint64_t>(high - low) + 1);
        tabu_until[static_cast<std::size_t>(move_j)][static_cast<std::size_t>(fac_j)] =
            it + static_cast<std::uint64_t>(low) +
            rng.next_below(static_cast<std::uint64_t>(high - low) + 1);

        if (current < best) {
            best = current;
            best_perm = perm;
        }
        hash = fnv1a64_push(hash, static_cast<std::uint64_t>(current));

        if (options.cost_check_interval != 0 && it % options.cost_check_interval == 0 &&
            current != cost(inst, perm))
            throw std::logic_error("incremental cost diverged from the objective");
    }
    const auto t1 = std::chrono::steady_clock::now();

    if (best != cost(inst, best_perm))
        throw std::logic_error("best cost does not match its permutation");

    SearchResult result;
    result.best_perm = std::move(best_perm);
    result.best_cost = best;
    result.initial_cost = initial;
    result.final_cost = current;
    result.iterations = options.iterations;
    result.stats = table.stats();
    result.wall_seconds = std::chrono::duration<double>(t1 - t0).count();
    result.trajectory_hash = hash;
    return result;
}

}  // namespace qap
