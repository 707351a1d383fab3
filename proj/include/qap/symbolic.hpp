#pragma once

#include <string>
#include <vector>

#include "qap/delta.hpp"
#include "qap/poly.hpp"

namespace qap {

// Symbolic variables for identity checking. The triple variables cover the
// 3x3 blocks d_xy and f_xy for x,y in {i,j,k} (f_xy standing for the flow
// between the facilities at locations x and y); the per-g variables cover
// both directions of the distance/flow links between the triple and one
// outside location g.
namespace sym {

inline constexpr int kTripleVarCount = 18;
inline constexpr int kVarCount = 30;

// x, y in {0,1,2} meaning {i,j,k}.
inline int dvar(int x, int y) { return 3 * x + y; }
inline int fvar(int x, int y) { return 9 + 3 * x + y; }
// x in {0,1,2}; "out" is the x->g direction, "in" is g->x.
inline int dvar_out(int x) { return 18 + x; }
inline int dvar_in(int x) { return 21 + x; }
inline int fvar_out(int x) { return 24 + x; }
inline int fvar_in(int x) { return 27 + x; }

std::string var_name(int id);

}  // namespace sym

// Values for the triple variables taken from a concrete instance at the
// locations (i,j,k), for cross-checking expansions numerically. The result
// indexes variables 0..17; the per-g variables are left zero.
std::vector<std::int64_t> triple_point(const QapInstance& inst, const Permutation& perm,
                                       int i, int j, int k);

// Expansion of the five-term correction combination
//   -R_ik - R_jk + R_ij + R*_ik + R*_jk
// over the triple variables, with the R terms built per the chosen variant.
Poly expand_r_combination(RVariant variant);

// Expansion of the production formula's correction term,
//   -(d_ij - d_ik - d_ji + d_jk + d_ki - d_kj)
//    *(f_ij - f_ik - f_ji + f_jk + f_ki - f_kj).
Poly simplified_product();

// Identify d_yx with d_xy, f_yx with f_xy and zero the diagonals: the
// quotient in which symmetric zero-diagonal instances live.
Poly symmetric_zero_diag_quotient(const Poly& p);

struct SimplificationReport {
    bool holds = false;
    Poly difference;  // expand_r_combination(variant) - simplified_product()
};

// Checks whether the five-term combination expands to exactly the simplified
// product; when it does not, `difference` lists every surviving monomial.
SimplificationReport verify_simplification(RVariant variant);

struct PerGReport {
    bool holds = false;      // both directions
    bool holds_out = false;  // x->g links only
    bool holds_in = false;   // g->x links only
    Poly residual_out;
    Poly residual_in;
};

// The per-element correlation identity behind the O(1) overlap update: for
// each outside location g, the post-swap contributions of pairs (i,k) and
// (j,k) equal the pre-swap contributions of (i,k) plus (j,k) minus (i,j).
// Checked symbolically for each link direction separately.
PerGReport verify_per_g_identity();

}  // namespace qap
