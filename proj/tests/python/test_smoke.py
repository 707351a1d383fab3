"""Smoke tests for the qapkit Python bindings."""

import pytest

import qapkit as qk


@pytest.fixture(scope="module")
def n5_general():
    return qk.random_instance(5, 9, 42, qk.InstanceShape.general)


def test_parse_round_trip(n5_general):
    text = qk.to_qaplib(n5_general)
    parsed = qk.parse_qaplib(text, name="round-trip")
    assert parsed.n == 5
    assert parsed.name == "round-trip"
    for i in range(5):
        for j in range(5):
            assert parsed.dist(i, j) == n5_general.dist(i, j)
            assert parsed.flow(i, j) == n5_general.flow(i, j)


def test_pinned_cost_and_deltas(n5_general):
    ident = qk.Permutation(5)
    assert qk.cost(n5_general, ident) == 402
    assert qk.delta_oracle(n5_general, ident, 1, 3) == 44
    assert qk.delta_full(n5_general, ident, 0, 1) == 48


def test_delta_full_matches_oracle_everywhere():
    inst = qk.random_instance(7, 9, 12, qk.InstanceShape.symmetric_zero_diag)
    rng = qk.RngState(3)
    perm = qk.Permutation.random(7, rng)
    for i in range(7):
        for j in range(i + 1, 7):
            assert qk.delta_full(inst, perm, i, j) == qk.delta_oracle(inst, perm, i, j)


def test_solve_is_pinned_and_strategy_independent():
    inst = qk.random_instance(6, 9, 3, qk.InstanceShape.general)
    novel = qk.solve(inst, seed=7, iterations=50)
    assert novel.best_cost == 724
    assert novel.best_perm.assign == [2, 5, 0, 3, 4, 1]
    assert novel.trajectory_hash == 0x0E805B087E51357F
    classic = qk.solve(inst, seed=7, iterations=50, strategy=qk.Strategy.classic)
    assert classic.best_cost == novel.best_cost
    assert classic.trajectory_hash == novel.trajectory_hash
    assert novel.best_cost == qk.exhaustive_optimum(inst)


def test_delta_table_counters_and_updates():
    inst = qk.random_instance(10, 9, 5, qk.InstanceShape.general)
    perm = qk.Permutation(10)
    table = qk.DeltaTable(inst, perm, qk.Strategy.novel)
    assert table.stats.init_computes == 45
    table.apply_swap(inst, perm, 2, 7)
    assert perm[2] == 7 and perm[7] == 2
    assert table.stats.full_recomputes == 8
    assert table.stats.o1_overlap == 8
    assert table.stats.o1_disjoint == 28
    assert table.stats.o1_reversal == 1
    for i in range(10):
        for j in range(i + 1, 10):
            assert table.at(i, j) == qk.delta_oracle(inst, perm, i, j)


def test_symbolic_reports():
    per_g = qk.verify_per_g_identity()
    assert per_g["holds"] and per_g["holds_out"] and per_g["holds_in"]
    literal = qk.verify_simplification(qk.RVariant.literal)
    assert literal["holds"]
    assert literal["difference"] == "0"
    pattern = qk.verify_simplification(qk.RVariant.pattern_consistent)
    assert not pattern["holds"]
    assert pattern["difference_terms"] == 36


def test_overlap_update_exactness():
    inst = qk.random_instance(9, 9, 22, qk.InstanceShape.general)
    pre = qk.Permutation(9)
    post = qk.Permutation(9)
    post.swap(1, 4)
    d_ij = qk.delta_full(inst, pre, 1, 4)
    for k in range(9):
        if k in (1, 4):
            continue
        d_ik = qk.delta_full(inst, pre, 1, k)
        d_jk = qk.delta_full(inst, pre, 4, k)
        d_ik_star = qk.delta_full(inst, post, 1, k)
        got = qk.delta_overlap_update(inst, pre, d_ij, d_ik, d_jk, d_ik_star, 1, 4, k)
        assert got == qk.delta_full(inst, post, 4, k)
        r = qk.r_terms(inst, pre, 1, 4, k, qk.RVariant.pattern_consistent)
        assert qk.delta_overlap_via_r(d_ij, d_ik, d_jk, d_ik_star, r) == got


def test_errors_surface_as_python_exceptions():
    inst = qk.random_instance(5, 9, 1, qk.InstanceShape.general)
    with pytest.raises(ValueError):
        qk.delta_full(inst, qk.Permutation(5), 2, 2)
    with pytest.raises(RuntimeError):
        qk.parse_qaplib("1\n0")
    with pytest.raises(ValueError):
        qk.solve(inst, iterations=0)
