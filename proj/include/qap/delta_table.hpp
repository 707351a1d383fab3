#pragma once

#include <cstdint>
#include <vector>

#include "qap/delta.hpp"
#include "qap/instance.hpp"

namespace qap {

// How overlap pairs (sharing one index with the last swap) are refreshed:
// classic recomputes both sides in O(N); novel recomputes one side in O(N)
// and derives the other in O(1) from the correlation between old and new
// deltas. Disjoint pairs and the reversal pair are O(1) under both.
enum class Strategy { classic, novel };

struct UpdateStats {
    std::uint64_t init_computes = 0;   // O(N) evaluations during init
    std::uint64_t full_recomputes = 0; // O(N) evaluations during swaps
    std::uint64_t o1_disjoint = 0;
    std::uint64_t o1_overlap = 0;
    std::uint64_t o1_reversal = 0;

    bool operator==(const UpdateStats&) const = default;
};

// All C(n,2) current delta values in a jagged triangular store, kept exact
// across swaps. rows_[i][j-i-1] holds the value for pair {i,j}, i<j.
class DeltaTable {
public:
    DeltaTable(const QapInstance& inst, const Permutation& perm, Strategy strategy);

    int n() const { return n_; }
    Strategy strategy() const { return strategy_; }
    const UpdateStats& stats() const { return stats_; }

    std::int64_t at(int i, int j) const;

    // Applies the exchange of locations p and q: updates perm in place and
    // refreshes every entry by the cheapest rule that is exact for it.
    void apply_swap(const QapInstance& inst, Permutation& perm, int p, int q);

    // When enabled, every apply_swap re-checks the whole table against the
    // brute-force oracle and throws on the first mismatch. Tests only.
    void set_debug_verify(bool on) { debug_verify_ = on; }

    bool operator==(const DeltaTable& other) const {
        return n_ == other.n_ && rows_ == other.rows_;
    }

private:
    std::int64_t& cell(int i, int j) {
        return rows_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j - i - 1)];
    }

    int n_ = 0;
    Strategy strategy_ = Strategy::novel;
    bool debug_verify_ = false;
    std::vector<std::vector<std::int64_t>> rows_;
    UpdateStats stats_;

    // Scratch reused across swaps by the novel path.
    Permutation pre_perm_;
    std::vector<std::int64_t> old_row_a_;
    std::vector<std::int64_t> old_row_b_;
};

}  // namespace qap
