#include <limits>
#include <stdexcept>

#include "doctest.h"
#include "qap/instance.hpp"

using namespace qap;

namespace {

const std::int32_t kN5S42GeneralDist[5][5] = {{2, 2, 9, 3, 6},
                                              {4, 4, 7, 8, 5},
                                              {9, 3, 0, 2, 3},
                                              {0, 1, 6, 5, 8},
                                              {9, 5, 9, 5, 2}};
const std::int32_t kN5S42GeneralFlow[5][5] = {{8, 4, 4, 2, 0},
                                              {1, 2, 8, 4, 6},
                                              {0, 7, 9, 4, 1},
                                              {3, 7, 9, 2, 1},
                                              {3, 0, 1, 9, 7}};
const std::int32_t kN5S42SymDist[5][5] = {{0, 2, 2, 9, 3},
                                          {2, 0, 6, 4, 4},
                                          {2, 6, 0, 7, 8},
                                          {9, 4, 7, 0, 5},
                                          {3, 4, 8, 5, 0}};
const std::int32_t kN5S42SymFlow[5][5] = {{0, 9, 3, 0, 2},
                                          {9, 0, 3, 0, 1},
                                          {3, 3, 0, 6, 5},
                                          {0, 0, 6, 0, 8},
                                          {2, 1, 5, 8, 0}};

}  // namespace

TEST_CASE("parse_qaplib reads the smallest well-formed input") {
    const QapInstance inst = parse_qaplib(std::string("2\n0 1\n1 0\n0 3\n3 0"));
    CHECK(inst.n() == 2);
    CHECK(inst.dist(0, 1) == 1);
    CHECK(inst.dist(1, 0) == 1);
    CHECK(inst.flow(0, 1) == 3);
    CHECK(inst.dist(0, 0) == 0);
}

TEST_CASE("parse_qaplib rejects malformed input") {
    CHECK_THROWS_AS(parse_qaplib(std::string("2\n0 1\n1 0\n0 3\n3")), std::runtime_error);
    CHECK_THROWS_AS(parse_qaplib(std::string("2\n0 1\n1 0\n0 3\n3 0 7")), std::runtime_error);
    CHECK_THROWS_AS(parse_qaplib(std::string("2\n0 1\n1 x\n0 3\n3 0")), std::runtime_error);
    CHECK_THROWS_AS(parse_qaplib(std::string("1\n0\n0")), std::runtime_error);
    CHECK_THROWS_AS(parse_qaplib(std::string("2\n0 1\n1 0\n0 3\n3 0 junk")), std::runtime_error);
    // 64-bit cost bound: 2^2 * (2^31-1)^2 overflows 63 bits.
    const std::string big = std::to_string(std::numeric_limits<std::int32_t>::max());
    CHECK_THROWS(parse_qaplib("2\n" + big + " " + big + "\n" + big + " " + big + "\n" + big +
                              " " + big + "\n" + big + " " + big));
}

TEST_CASE("parse_qaplib tolerates arbitrary whitespace and trailing newlines") {
    const QapInstance inst = parse_qaplib(std::string("  2\n\n0   1\n\t1 0\n\n0 3\n3 0\n\n  \n"));
    CHECK(inst.n() == 2);
    CHECK(inst.flow(1, 0) == 3);
}

TEST_CASE("swap_matrix_roles flips the matrix assignment") {
    const QapInstance inst = parse_qaplib(std::string("2\n0 1\n1 0\n0 3\n3 0"), true);
    CHECK(inst.dist(0, 1) == 3);
    CHECK(inst.flow(0, 1) == 1);
}

TEST_CASE("QAPLIB round-trip preserves the matrices") {
    for (const auto shape : {InstanceShape::general, InstanceShape::symmetric_zero_diag}) {
        const QapInstance inst = random_instance(7, 9, 11, shape);
        const QapInstance back = parse_qaplib(to_qaplib(inst));
        CHECK(back.n() == inst.n());
        CHECK(back.dist_data() == inst.dist_data());
        CHECK(back.flow_data() == inst.flow_data());
    }
    // Large instance: generate, serialize, re-parse.
    const QapInstance big = random_instance(100, 99, 5, InstanceShape::symmetric_zero_diag);
    const QapInstance back = parse_qaplib(to_qaplib(big));
    CHECK(back.n() == 100);
    CHECK(back.dist_data() == big.dist_data());
    CHECK(back.flow_data() == big.flow_data());
}

TEST_CASE("random_instance reproduces the pinned n=5 seed=42 matrices") {
    const QapInstance gen = random_instance(5, 9, 42, InstanceShape::general);
    const QapInstance sym = random_instance(5, 9, 42, InstanceShape::symmetric_zero_diag);
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) {
            CHECK(gen.dist(i, j) == kN5S42GeneralDist[i][j]);
            CHECK(gen.flow(i, j) == kN5S42GeneralFlow[i][j]);
            CHECK(sym.dist(i, j) == kN5S42SymDist[i][j]);
            CHECK(sym.flow(i, j) == kN5S42SymFlow[i][j]);
        }
}

TEST_CASE("random_instance is deterministic and validates its arguments") {
    const QapInstance a = random_instance(6, 9, 7, InstanceShape::general);
    const QapInstance b = random_instance(6, 9, 7, InstanceShape::general);
    CHECK(a.dist_data() == b.dist_data());
    CHECK(a.flow_data() == b.flow_data());
    CHECK_THROWS_AS(random_instance(2, 0, 1, InstanceShape::general), std::invalid_argument);
    CHECK_THROWS_AS(random_instance(1, 9, 1, InstanceShape::general), std::invalid_argument);
}

TEST_CASE("symmetric_zero_diag output is symmetric with zero diagonal") {
    const QapInstance inst = random_instance(30, 99, 123, InstanceShape::symmetric_zero_diag);
    for (int i = 0; i < 30; ++i) {
        CHECK(inst.dist(i, i) == 0);
        CHECK(inst.flow(i, i) == 0);
        for (int j = 0; j < 30; ++j) {
            CHECK(inst.dist(i, j) == inst.dist(j, i));
            CHECK(inst.flow(i, j) == inst.flow(j, i));
        }
    }
}

TEST_CASE("permutation basics") {
    Permutation p(4);
    CHECK(p.size() == 4);
    CHECK(p[2] == 2);
    p.swap(0, 3);
    CHECK(p[0] == 3);
    CHECK(p[3] == 0);
    CHECK_THROWS_AS(Permutation({0, 0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation({0, 3}), std::invalid_argument);

    RngState rng(5);
    const Permutation r = Permutation::random(8, rng);
    CHECK(r.assign() == std::vector<int>{5, 2, 4, 7, 3, 6, 0, 1});
}
