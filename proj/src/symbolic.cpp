#include "qap/symbolic.hpp"

#include <array>
#include <stdexcept>

namespace qap {

namespace sym {

std::string var_name(int id) {
    static constexpr std::array<const char*, 3> loc = {"i", "j", "k"};
    if (id >= 0 && id < 18) {
        const bool is_flow = id >= 9;
        const int xy = is_flow ? id - 9 : id;
        return std::string(is_flow ? "f_" : "d_") + loc[static_cast<std::size_t>(xy / 3)] +
               loc[static_cast<std::size_t>(xy % 3)];
    }
    if (id >= 18 && id < 30) {
        const int of = id - 18;
        const char* prefix = of < 6 ? "d_" : "f_";
        const int dir = (of / 3) % 2;  // 0: x->g, 1: g->x
        const auto x = static_cast<std::size_t>(of % 3);
        return dir == 0 ? std::string(prefix) + loc[x] + "g" : std::string(prefix) + "g" + loc[x];
    }
    throw std::invalid_argument("unknown variable id");
}

}  // namespace sym

namespace {

using sym::dvar;
using sym::fvar;

Poly D(int x, int y) { return Poly::var(dvar(x, y)); }
Poly F(int x, int y) { return Poly::var(fvar(x, y)); }

constexpr int I = 0, J = 1, K = 2;

// Within-triple part of the full delta for pair (x,y) with g==z, flows read
// through the relabeling `t` (identity for pre-swap terms, the (i j)
// transposition for post-swap ones).
template <typename Relabel>
Poly within_triple(int x, int y, int z, Relabel t) {
    return (D(x, x) - D(y, y)) * (F(t(y), t(y)) - F(t(x), t(x))) +
           (D(x, y) - D(y, x)) * (F(t(y), t(x)) - F(t(x), t(y))) +
           (D(z, x) - D(z, y)) * (F(t(z), t(y)) - F(t(z), t(x))) +
           (D(x, z) - D(y, z)) * (F(t(y), t(z)) - F(t(x), t(z)));
}

struct RPolys {
    Poly r_ij, r_ik, r_jk, r_ik_star, r_jk_star;
};

RPolys r_polys(RVariant variant) {
    RPolys r;
    if (variant == RVariant::literal) {
        r.r_ij = (D(I, K) - D(J, K)) * (F(I, K) - F(J, K)) +
                 (D(K, I) - D(K, J)) * (F(K, I) - F(K, J)) +
                 (D(I, I) - D(J, J)) * (F(I, I) - F(J, J)) +
                 (D(I, J) - D(J, I)) * (F(I, J) - F(J, I));
        r.r_ik = (D(I, J) - D(K, J)) * (F(K, I) - F(J, I)) +
                 (D(J, I) - D(J, K)) * (F(I, K) - F(I, J)) +
                 (D(I, I) - D(K, K)) * (F(K, K) - F(J, J)) +
                 (D(K, I) - D(I, K)) * (F(J, K) - F(K, J));
        r.r_jk = (D(K, I) - D(J, I)) * (F(I, J) - F(K, J)) +
                 (D(I, K) - D(I, J)) * (F(J, I) - F(J, K)) +
                 (D(J, J) - D(K, K)) * (F(K, K) - F(I, I)) +
                 (D(K, J) - D(J, K)) * (F(I, K) - F(K, I));
        r.r_ik_star = (D(I, J) - D(K, J)) * (F(K, J) - F(I, J)) +
                      (D(J, I) - D(J, K)) * (F(J, K) - F(J, I)) +
                      (D(I, I) - D(K, K)) * (F(K, K) - F(I, I)) +
                      (D(I, K) - D(K, I)) * (F(K, I) - F(I, K));
        r.r_jk_star = (D(J, I) - D(K, I)) * (F(K, I) - F(J, I)) +
                      (D(I, J) - D(I, K)) * (F(I, K) - F(I, J)) +
                      (D(J, J) - D(K, K)) * (F(K, K) - F(J, J)) +
                      (D(J, K) - D(K, J)) * (F(K, J) - F(J, K));
        return r;
    }
    const auto pre = [](int x) { return x; };
    const auto post = [](int x) { return x == I ? J : (x == J ? I : x); };
    r.r_ij = within_triple(I, J, K, pre);
    r.r_ik = within_triple(I, K, J, pre);
    r.r_jk = within_triple(J, K, I, pre);
    r.r_ik_star = within_triple(I, K, J, post);
    r.r_jk_star = within_triple(J, K, I, post);
    return r;
}

}  // namespace

std::vector<std::int64_t> triple_point(const QapInstance& inst, const Permutation& perm,
                                       int i, int j, int k) {
    if (i == j || i == k || j == k)
        throw std::invalid_argument("triple indices must be pairwise distinct");
    const std::array<int, 3> loc = {i, j, k};
    std::vector<std::int64_t> values(sym::kVarCount, 0);
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y) {
            const auto lx = loc[static_cast<std::size_t>(x)];
            const auto ly = loc[static_cast<std::size_t>(y)];
            values[static_cast<std::size_t>(dvar(x, y))] = inst.dist(lx, ly);
            values[static_cast<std::size_t>(fvar(x, y))] = inst.flow(perm[lx], perm[ly]);
        }
    return values;
}

Poly expand_r_combination(RVariant variant) {
    const RPolys r = r_polys(variant);
    return -r.r_ik - r.r_jk + r.r_ij + r.r_ik_star + r.r_jk_star;
}

Poly simplified_product() {
    const Poly db = D(I, J) - D(I, K) - D(J, I) + D(J, K) + D(K, I) - D(K, J);
    const Poly fb = F(I, J) - F(I, K) - F(J, I) + F(J, K) + F(K, I) - F(K, J);
    return -(db * fb);
}

Poly symmetric_zero_diag_quotient(const Poly& p) {
    std::map<int, Poly> mapping;
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y) {
            if (x == y) {
                mapping[dvar(x, y)] = Poly();
                mapping[fvar(x, y)] = Poly();
            } else if (x > y) {
                mapping[dvar(x, y)] = D(y, x);
                mapping[fvar(x, y)] = F(y, x);
            }
        }
    return p.substitute(mapping);
}

SimplificationReport verify_simplification(RVariant variant) {
    SimplificationReport report;
    report.difference = expand_r_combination(variant) - simplified_product();
    report.holds = report.difference.is_zero();
    return report;
}

PerGReport verify_per_g_identity() {
    // Per-g contribution of exchanging the facilities whose links are fx and
    // fy across the locations whose links are dx and dy, one direction only:
    // -dx*fx - dy*fy + dx*fy + dy*fx.
    const auto contribution = [](const Poly& dx, const Poly& dy, const Poly& fx, const Poly& fy) {
        return dx * fy + dy * fx - dx * fx - dy * fy;
    };

    PerGReport report;
    for (int dir = 0; dir < 2; ++dir) {
        const auto dv = [&](int x) {
            return Poly::var(dir == 0 ? sym::dvar_out(x) : sym::dvar_in(x));
        };
        const auto fv = [&](int x) {
            return Poly::var(dir == 0 ? sym::fvar_out(x) : sym::fvar_in(x));
        };
        const Poly d_ij = contribution(dv(I), dv(J), fv(I), fv(J));
        const Poly d_ik = contribution(dv(I), dv(K), fv(I), fv(K));
        const Poly d_jk = contribution(dv(J), dv(K), fv(J), fv(K));
        // After the (i,j) exchange, location i carries the facility whose
        // links are fv(J) and location j the one with fv(I).
        const Poly d_ik_star = contribution(dv(I), dv(K), fv(J), fv(K));
        const Poly d_jk_star = contribution(dv(J), dv(K), fv(I), fv(K));
        const Poly residual = d_ik_star + d_jk_star - (d_ik + d_jk - d_ij);
        if (dir == 0) {
            report.residual_out = residual;
            report.holds_out = residual.is_zero();
        } else {
            report.residual_in = residual;
            report.holds_in = residual.is_zero();
        }
    }
    report.holds = report.holds_out && report.holds_in;
    return report;
}

}  // namespace qap
