#include "qap/delta_table.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace qap {

DeltaTable::DeltaTable(const QapInstance& inst, const Permutation& perm, Strategy strategy)
    : n_(inst.n()), strategy_(strategy) {
    if (perm.size() != n_) throw std::invalid_argument("permutation size does not match instance");
    rows_.resize(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) {
        rows_[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(n_ - i - 1));
        for (int j = i + 1; j < n_; ++j) {
            cell(i, j) = delta_full(inst, perm, i, j);
            ++stats_.init_computes;
        }
    }
    old_row_a_.resize(static_cast<std::size_t>(n_));
    old_row_b_.resize(static_cast<std::size_t>(n_));
}

std::int64_t DeltaTable::at(int i, int j) const {
    if (i == j || i < 0 || j < 0 || i >= n_ || j >= n_)
        throw std::invalid_argument("pair lookup needs two distinct locations");
    if (i > j) std::swap(i, j);
    return rows_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j - i - 1)];
}

void DeltaTable::apply_swap(const QapInstance& inst, Permutation& perm, int p, int q) {
    if (p == q || p < 0 || q < 0 || p >= n_ || q >= n_)
        throw std::invalid_argument("swap needs two distinct locations");
    if (perm.size() != n_) throw std::invalid_argument("permutation size does not match table");
    const int a = std::min(p, q), b = std::max(p, q);
    const std::int64_t old_ab = cell(a, b);

    const bool novel = strategy_ == Strategy::novel;
    if (novel) {
        // The O(1) overlap derivation needs the pre-swap deltas of both
        // overlap rows and the pre-swap permutation for its flow bracket.
        pre_perm_ = perm;
        for (int k = 0; k < n_; ++k) {
            if (k == a || k == b) continue;
            old_row_a_[static_cast<std::size_t>(k)] = at(a, k);
            old_row_b_[static_cast<std::size_t>(k)] = at(b, k);
        }
    }

    // Disjoint pairs first: their update reads flows through the pre-swap
    // permutation.
    for (int i = 0; i < n_; ++i) {
        if (i == a || i == b) continue;
        auto& row = rows_[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < n_; ++j) {
            if (j == a || j == b) continue;
            auto& entry = row[static_cast<std::size_t>(j - i - 1)];
            entry = delta_disjoint_update(inst, perm, entry, i, j, a, b);
        }
    }
    const std::uint64_t un = static_cast<std::uint64_t>(n_);
    stats_.o1_disjoint += un * (un - 1) / 2 - 2 * (un - 2) - 1;

    perm.swap(a, b);

    // Overlap pairs: the row of the smaller swapped index is always the one
    // recomputed in O(N); under novel the other row is derived in O(1).
    for (int k = 0; k < n_; ++k) {
        if (k == a || k == b) continue;
        cell(std::min(a, k), std::max(a, k)) = delta_full(inst, perm, a, k);
        ++stats_.full_recomputes;
    }
    for (int k = 0; k < n_; ++k) {
        if (k == a || k == b) continue;
        auto& entry = cell(std::min(b, k), std::max(b, k));
        if (novel) {
            entry = delta_overlap_update(
                inst, pre_perm_, old_ab, old_row_a_[static_cast<std::size_t>(k)],
                old_row_b_[static_cast<std::size_t>(k)],
                at(std::min(a, k), std::max(a, k)), a, b, k);
            ++stats_.o1_overlap;
        } else {
            entry = delta_full(inst, perm, b, k);
            ++stats_.full_recomputes;
        }
    }

    cell(a, b) = -old_ab;
    ++stats_.o1_reversal;

    if (debug_verify_) {
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j)
                if (at(i, j) != delta_oracle(inst, perm, i, j))
                    throw std::logic_error("delta table entry {" + std::to_string(i) + "," +
                                           std::to_string(j) + "} diverged from the oracle");
    }
}

}  // namespace qap
