#pragma once

#include <cstdint>
#include <stdexcept>

#include "qap/instance.hpp"

namespace qap {

// Full objective: sum over all ordered pairs, diagonals included.
inline std::int64_t cost(const QapInstance& inst, const Permutation& perm) {
    const int n = inst.n();
    std::int64_t total = 0;
    for (int i = 0; i < n; ++i) {
        const std::int32_t* d = inst.dist_row(i);
        const std::int32_t* f = inst.flow_row(perm[i]);
        for (int j = 0; j < n; ++j)
            total += static_cast<std::int64_t>(d[j]) * f[perm[j]];
    }
    return total;
}

// Ground truth for every delta formula: two full cost evaluations. O(N^2);
// tests and debug verification only.
inline std::int64_t delta_oracle(const QapInstance& inst, const Permutation& perm,
                                 int p, int q) {
    if (p == q) throw std::invalid_argument("delta requires two distinct locations");
    Permutation moved = perm;
    moved.swap(p, q);
    return cost(inst, moved) - cost(inst, perm);
}

// Cost change of exchanging the facilities at locations i and j, computed in
// O(N): the two within-pair terms plus the sum over every other location g.
// No symmetry or zero-diagonal assumptions.
inline std::int64_t delta_full(const QapInstance& inst, const Permutation& perm,
                               int i, int j) {
    if (i == j) throw std::invalid_argument("delta requires two distinct locations");
    const int n = inst.n();
    const int pi = perm[i], pj = perm[j];
    const std::int32_t* di = inst.dist_row(i);
    const std::int32_t* dj = inst.dist_row(j);
    const std::int32_t* fi = inst.flow_row(pi);
    const std::int32_t* fj = inst.flow_row(pj);

    // Differences are widened to 64 bits first: the constructor bound caps
    // products, not individual 32-bit subtractions.
    const auto w = [](std::int32_t lhs, std::int32_t rhs) {
        return static_cast<std::int64_t>(lhs) - rhs;
    };
    std::int64_t v = w(di[i], dj[j]) * w(fj[pj], fi[pi]) +
                     w(di[j], dj[i]) * w(fj[pi], fi[pj]);
    for (int g = 0; g < n; ++g) {
        if (g == i || g == j) continue;
        const int pg = perm[g];
        const std::int32_t* dg = inst.dist_row(g);
        const std::int32_t* fg = inst.flow_row(pg);
        v += w(dg[i], dg[j]) * w(fg[pj], fg[pi]) +
             w(di[g], dj[g]) * w(fj[pg], fi[pg]);
    }
    return v;
}

// O(1) update for a pair {i,j} disjoint from the swap {a,b}. `perm` is the
// permutation BEFORE swapping a and b; `old` is the pre-swap delta of {i,j}.
// The correction brackets read flows through the post-swap assignment, which
// with a pre-swap permutation in hand means the roles of a and b exchange
// inside the flow factors.
inline std::int64_t delta_disjoint_update(const QapInstance& inst, const Permutation& perm,
                                          std::int64_t old, int i, int j, int a, int b) {
    if (i == a || i == b || j == a || j == b)
        throw std::invalid_argument("pair must be disjoint from the swap");
    const std::int32_t* da = inst.dist_row(a);
    const std::int32_t* db = inst.dist_row(b);
    const std::int32_t* di = inst.dist_row(i);
    const std::int32_t* dj = inst.dist_row(j);
    const std::int32_t* fa = inst.flow_row(perm[a]);
    const std::int32_t* fb = inst.flow_row(perm[b]);
    const std::int32_t* fi = inst.flow_row(perm[i]);
    const std::int32_t* fj = inst.flow_row(perm[j]);
    const int pa = perm[a], pb = perm[b], pi = perm[i], pj = perm[j];

    const auto b4 = [](std::int32_t p1, std::int32_t m1, std::int32_t p2, std::int32_t m2) {
        return static_cast<std::int64_t>(p1) - m1 + p2 - m2;
    };
    return old +
           b4(da[i], da[j], db[j], db[i]) * b4(fb[pj], fb[pi], fa[pi], fa[pj]) +
           b4(di[a], dj[a], dj[b], di[b]) * b4(fj[pb], fi[pb], fi[pa], fj[pa]);
}

// Two formulations of the five within-triple correction terms used by the
// O(1) overlap update. In `literal` the starred/unstarred (i,k) and (j,k)
// terms trade places and the (i,j) term is negated relative to
// `pattern_consistent`; the two delta combinations differ by exactly twice
// the correction product, so they agree on symmetric zero-diagonal instances
// and only pattern_consistent is exact on general ones.
enum class RVariant { literal, pattern_consistent };

struct RTerms {
    std::int64_t r_ij;
    std::int64_t r_ik;
    std::int64_t r_jk;
    std::int64_t r_ik_star;
    std::int64_t r_jk_star;
};

namespace detail {

// Within-triple part of the full delta for pair (x,y): its two head terms
// plus the g==z summand. Flows go through `at`, a location->facility lookup.
template <typename FlowAt>
std::int64_t within_triple(const QapInstance& inst, int x, int y, int z, FlowAt at) {
    const auto d = [&](int r, int c) { return static_cast<std::int64_t>(inst.dist(r, c)); };
    const auto f = [&](int r, int c) {
        return static_cast<std::int64_t>(inst.flow(at(r), at(c)));
    };
    return (d(x, x) - d(y, y)) * (f(y, y) - f(x, x)) +
           (d(x, y) - d(y, x)) * (f(y, x) - f(x, y)) +
           (d(z, x) - d(z, y)) * (f(z, y) - f(z, x)) +
           (d(x, z) - d(y, z)) * (f(y, z) - f(x, z));
}

}  // namespace detail

inline RTerms r_terms(const QapInstance& inst, const Permutation& perm, int i, int j,
                      int k, RVariant variant) {
    if (i == j || i == k || j == k)
        throw std::invalid_argument("triple indices must be pairwise distinct");
    const auto d = [&](int r, int c) { return static_cast<std::int64_t>(inst.dist(r, c)); };
    const auto F = [&](int r, int c) {
        return static_cast<std::int64_t>(inst.flow(perm[r], perm[c]));
    };
    if (variant == RVariant::literal) {
        RTerms r;
        r.r_ij = (d(i, k) - d(j, k)) * (F(i, k) - F(j, k)) +
                 (d(k, i) - d(k, j)) * (F(k, i) - F(k, j)) +
                 (d(i, i) - d(j, j)) * (F(i, i) - F(j, j)) +
                 (d(i, j) - d(j, i)) * (F(i, j) - F(j, i));
        r.r_ik = (d(i, j) - d(k, j)) * (F(k, i) - F(j, i)) +
                 (d(j, i) - d(j, k)) * (F(i, k) - F(i, j)) +
                 (d(i, i) - d(k, k)) * (F(k, k) - F(j, j)) +
                 (d(k, i) - d(i, k)) * (F(j, k) - F(k, j));
        r.r_jk = (d(k, i) - d(j, i)) * (F(i, j) - F(k, j)) +
                 (d(i, k) - d(i, j)) * (F(j, i) - F(j, k)) +
                 (d(j, j) - d(k, k)) * (F(k, k) - F(i, i)) +
                 (d(k, j) - d(j, k)) * (F(i, k) - F(k, i));
        r.r_ik_star = (d(i, j) - d(k, j)) * (F(k, j) - F(i, j)) +
                      (d(j, i) - d(j, k)) * (F(j, k) - F(j, i)) +
                      (d(i, i) - d(k, k)) * (F(k, k) - F(i, i)) +
                      (d(i, k) - d(k, i)) * (F(k, i) - F(i, k));
        r.r_jk_star = (d(j, i) - d(k, i)) * (F(k, i) - F(j, i)) +
                      (d(i, j) - d(i, k)) * (F(i, k) - F(i, j)) +
                      (d(j, j) - d(k, k)) * (F(k, k) - F(j, j)) +
                      (d(j, k) - d(k, j)) * (F(k, j) - F(j, k));
        return r;
    }
    // pattern_consistent: every term is the within-triple part of the full
    // delta for its own pair; starred terms read flows through the post-swap
    // assignment (i and j exchanged).
    const auto pre = [&](int x) { return perm[x]; };
    const auto post = [&](int x) { return perm[x == i ? j : (x == j ? i : x)]; };
    RTerms r;
    r.r_ij = detail::within_triple(inst, i, j, k, pre);
    r.r_ik = detail::within_triple(inst, i, k, j, pre);
    r.r_jk = detail::within_triple(inst, j, k, i, pre);
    r.r_ik_star = detail::within_triple(inst, i, k, j, post);
    r.r_jk_star = detail::within_triple(inst, j, k, i, post);
    return r;
}

// Unsimplified O(1) overlap update: combines the three pre-swap deltas of the
// triple, the already-recomputed post-swap delta of (i,k), and the five
// correction terms.
inline std::int64_t delta_overlap_via_r(std::int64_t delta_ij, std::int64_t delta_ik,
                                        std::int64_t delta_jk, std::int64_t delta_ik_star,
                                        const RTerms& r) {
    return delta_ik + delta_jk - delta_ij - delta_ik_star -
           r.r_ik - r.r_jk + r.r_ij + r.r_ik_star + r.r_jk_star;
}

inline std::int64_t dist_bracket(const QapInstance& inst, int i, int j, int k) {
    const auto d = [&](int r, int c) { return static_cast<std::int64_t>(inst.dist(r, c)); };
    return d(i, j) - d(i, k) - d(j, i) + d(j, k) + d(k, i) - d(k, j);
}

inline std::int64_t flow_bracket(const QapInstance& inst, const Permutation& perm,
                                 int i, int j, int k) {
    const auto F = [&](int r, int c) {
        return static_cast<std::int64_t>(inst.flow(perm[r], perm[c]));
    };
    return F(i, j) - F(i, k) - F(j, i) + F(j, k) + F(k, i) - F(k, j);
}

// Which permutation the correction product's flow bracket is read through.
// The flow bracket flips sign under the (i,j) exchange, so exactly one frame
// gives the true post-swap delta; the oracle suite pins post_swap as exact
// on general instances (both agree when the bracket vanishes, e.g. on
// symmetric instances). pre_swap is kept for comparison runs.
enum class FlowFrame { post_swap, pre_swap };

inline constexpr FlowFrame kExactFlowFrame = FlowFrame::post_swap;

// Simplified O(1) overlap update, the production path: given the pre-swap
// deltas of the triple (i,j,k), the post-swap delta of (i,k), and the
// pre-swap permutation, returns the post-swap delta of (j,k).
inline std::int64_t delta_overlap_update(const QapInstance& inst, const Permutation& perm,
                                         std::int64_t delta_ij, std::int64_t delta_ik,
                                         std::int64_t delta_jk, std::int64_t delta_ik_star,
                                         int i, int j, int k,
                                         FlowFrame frame = kExactFlowFrame) {
    if (i == j || i == k || j == k)
        throw std::invalid_argument("triple indices must be pairwise distinct");
    const std::int64_t base = delta_jk + delta_ik - delta_ij - delta_ik_star;
    const std::int64_t prod = dist_bracket(inst, i, j, k) * flow_bracket(inst, perm, i, j, k);
    // The exact identity subtracts the product with the flow bracket read
    // post-swap; prod reads it pre-swap, which flips its sign, so the two
    // negations cancel and the post_swap frame adds prod.
    return frame == FlowFrame::post_swap ? base + prod : base - prod;
}

}  // namespace qap
