"""Controllability decisions: walk rank, product span, Lie closure, analyze."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from netctrl import (
    ALL_NEGATIVE,
    ALL_POSITIVE,
    CHECK_PASSED,
    CHECK_SKIPPED,
    CHECK_VIOLATED,
    MIXED,
    adjacency_matrix,
    analyze,
    build_matrix,
    complete_graph,
    cycle_graph,
    distance_power_defects,
    graph,
    kalman_controllable,
    laplacian_matrix,
    lie_closure,
    lie_controllable,
    matrix,
    p_span_dim,
    path_graph,
    pattern_matrix,
    projector,
    random_same_sign_matrix,
    rank,
    report_from_dict,
    walk_matrix,
)
from netctrl.control import control_generators
from netctrl.linalg import mat_mul

from . import oracles

P4_ADJ = [[0, 1, 0, 0], [1, 0, 1, 0], [0, 1, 0, 1], [0, 0, 1, 0]]
MIXED_CYCLE = [[0, 1, 0, 1], [1, 0, -1, 0], [0, -1, 0, 1], [1, 0, 1, 0]]
BLOCK_PAIRED = [[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]]


def symmetric_strategy(max_side=4, lo=-4, hi=4):
    def build(draw):
        n = draw(st.integers(min_value=1, max_value=max_side))
        e = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(i, n):
                x = draw(st.integers(min_value=lo, max_value=hi))
                e[i][j] = x
                e[j][i] = x
        s = draw(st.lists(st.integers(min_value=1, max_value=n), unique=True, min_size=1))
        return pattern_matrix(e), tuple(s)
    return st.composite(build)()


class TestPatternMatrix:
    def test_sign_classes(self):
        assert pattern_matrix(P4_ADJ).sign_class == ALL_POSITIVE
        assert pattern_matrix([[0, -1], [-1, 0]]).sign_class == ALL_NEGATIVE
        assert pattern_matrix(MIXED_CYCLE).sign_class == MIXED

    def test_diagonal_only_counts_as_all_positive(self):
        a = pattern_matrix([[3, 0], [0, -5]])
        assert a.sign_class == ALL_POSITIVE
        assert a.pattern.edges == frozenset()

    def test_pattern_ignores_diagonal(self):
        a = pattern_matrix([[7, 1], [1, -2]])
        assert a.pattern.edges == frozenset({(1, 2)})

    def test_rejects_nonsquare(self):
        with pytest.raises(ValueError):
            pattern_matrix([[1, 2, 3], [4, 5, 6]])

    def test_rejects_asymmetric(self):
        with pytest.raises(ValueError):
            pattern_matrix([[0, 1], [2, 0]])

    def test_rational_entries(self):
        a = pattern_matrix([[0, "1/2"], ["1/2", 0]])
        assert a.matrix[(0, 1)] == Fraction(1, 2)


class TestBuilders:
    def test_adjacency_of_path(self):
        a = adjacency_matrix(path_graph(4))
        assert a.matrix == matrix(P4_ADJ)
        assert a.pattern == path_graph(4)
        assert a.sign_class == ALL_POSITIVE

    def test_laplacian_of_path(self):
        a = laplacian_matrix(path_graph(4))
        expected = [[1, -1, 0, 0], [-1, 2, -1, 0], [0, -1, 2, -1], [0, 0, -1, 1]]
        assert a.matrix == matrix(expected)
        assert a.sign_class == ALL_NEGATIVE
        assert a.pattern == path_graph(4)

    def test_laplacian_of_singleton(self):
        a = laplacian_matrix(graph(1, []))
        assert a.matrix == matrix([[0]])

    def test_laplacian_rows_sum_to_zero(self):
        a = laplacian_matrix(cycle_graph(5))
        for row in a.matrix.entries:
            assert sum(row) == 0

    def test_random_matrix_deterministic(self):
        g = cycle_graph(5)
        a = random_same_sign_matrix(g, 7)
        b = random_same_sign_matrix(g, 7)
        assert a.matrix == b.matrix
        assert a.matrix != random_same_sign_matrix(g, 8).matrix

    def test_random_matrix_pattern_and_ranges(self):
        g = cycle_graph(6)
        a = random_same_sign_matrix(g, 3)
        assert a.pattern == g
        assert a.sign_class == ALL_POSITIVE
        for i in range(6):
            for j in range(6):
                x = a.matrix[(i, j)]
                if i == j:
                    assert -9 <= x <= 9
                elif x:
                    assert 1 <= x <= 9

    def test_build_matrix_dispatch(self):
        g = path_graph(3)
        assert build_matrix(g, "adjacency").matrix == adjacency_matrix(g).matrix
        assert build_matrix(g, "laplacian").matrix == laplacian_matrix(g).matrix
        assert build_matrix(g, "random:5").matrix == random_same_sign_matrix(g, 5).matrix
        with pytest.raises(ValueError):
            build_matrix(g, "hadamard")
        with pytest.raises(ValueError):
            build_matrix(g, "random:x")


class TestWalkMatrix:
    def test_path_single_vertex(self):
        a = adjacency_matrix(path_graph(4))
        w = walk_matrix(a, [2])
        assert w == matrix([[0, 1, 0, 2], [1, 0, 2, 0], [0, 1, 0, 3], [0, 0, 1, 0]])
        assert rank(w) == 4

    def test_block_order_ascending(self):
        a = adjacency_matrix(path_graph(3))
        w = walk_matrix(a, [3, 1])
        assert w.cols == 6
        # first block is vertex 1, second is vertex 3
        assert tuple(r[0] for r in w.entries) == (1, 0, 0)
        assert tuple(r[3] for r in w.entries) == (0, 0, 1)

    def test_empty_set_rejected(self):
        a = adjacency_matrix(path_graph(3))
        with pytest.raises(ValueError):
            walk_matrix(a, [])

    def test_out_of_range_rejected(self):
        a = adjacency_matrix(path_graph(3))
        with pytest.raises(ValueError):
            walk_matrix(a, [4])


class TestKalman:
    def test_path_examples(self):
        a = adjacency_matrix(path_graph(4))
        assert kalman_controllable(a, [1]) == (True, 4)
        assert kalman_controllable(a, [2]) == (True, 4)

    def test_zero_matrix(self):
        a = pattern_matrix([[0, 0], [0, 0]])
        assert kalman_controllable(a, [1]) == (False, 1)

    def test_cycle_needs_two(self):
        a = adjacency_matrix(cycle_graph(4))
        ok, r = kalman_controllable(a, [1])
        assert not ok and r < 4
        assert kalman_controllable(a, [1, 2])[0]

    @settings(max_examples=50, deadline=None)
    @given(symmetric_strategy())
    def test_matches_bruteforce(self, inst):
        a, s = inst
        entries = [list(r) for r in a.matrix.entries]
        assert kalman_controllable(a, s)[1] == oracles.walk_rank_bruteforce(entries, s)


class TestProductSpan:
    def test_examples(self):
        a = adjacency_matrix(path_graph(4))
        assert p_span_dim(a, [2]) == 16
        z = pattern_matrix([[0, 0], [0, 0]])
        assert p_span_dim(z, [1]) == 1

    def test_empty_set_rejected(self):
        a = adjacency_matrix(path_graph(3))
        with pytest.raises(ValueError):
            p_span_dim(a, [])

    @settings(max_examples=40, deadline=None)
    @given(symmetric_strategy(max_side=3))
    def test_matches_literal_products(self, inst):
        a, s = inst
        entries = [list(r) for r in a.matrix.entries]
        assert p_span_dim(a, s) == oracles.pspan_dim_bruteforce(entries, s)

    @settings(max_examples=40, deadline=None)
    @given(symmetric_strategy())
    def test_equals_walk_rank_squared(self, inst):
        a, s = inst
        _, r = kalman_controllable(a, s)
        assert p_span_dim(a, s) == r * r


class TestLieClosure:
    def test_single_scalar(self):
        dim, basis = lie_closure([matrix([[2]])])
        assert dim == 1
        assert basis.vectors() == ((Fraction(1),),)

    def test_single_projector_stays_one_dimensional(self):
        dim, _ = lie_closure([projector(1, 3)])
        assert dim == 1

    def test_full_gl4_from_path_control(self):
        a = adjacency_matrix(path_graph(4))
        dim, basis = lie_closure(control_generators(a, (2,)))
        assert dim == 16
        assert basis.dim == 16

    def test_mixed_cycle_stalls_at_eight(self):
        a = pattern_matrix(MIXED_CYCLE)
        dim, _ = lie_closure(control_generators(a, (1, 3)))
        assert dim == 8

    def test_cap_stops_early(self):
        a = adjacency_matrix(path_graph(4))
        dim, _ = lie_closure(control_generators(a, (2,)), cap=5)
        assert dim == 5

    def test_no_generators_rejected(self):
        with pytest.raises(ValueError):
            lie_closure([])

    def test_mismatched_sides_rejected(self):
        with pytest.raises(ValueError):
            lie_closure([matrix([[1]]), matrix([[1, 0], [0, 1]])])

    def test_order_cap_raises(self):
        big = [[0] * 13 for _ in range(13)]
        with pytest.raises(ValueError):
            lie_closure([matrix(big)])

    def test_order_past_twelve_warns(self):
        big = [[Fraction(0)] * 13 for _ in range(13)]
        big[0][0] = Fraction(1)
        with pytest.warns(UserWarning):
            dim, _ = lie_closure([matrix(big)], max_order=13)
        assert dim == 1

    def test_env_var_adjusts_cap(self, monkeypatch):
        monkeypatch.setenv("NETCTRL_MAX_ORDER", "2")
        with pytest.raises(ValueError):
            lie_closure([matrix([[0, 1, 0], [1, 0, 1], [0, 1, 0]])])
        monkeypatch.setenv("NETCTRL_MAX_ORDER", "13")
        big = [[Fraction(0)] * 13 for _ in range(13)]
        with pytest.warns(UserWarning):
            dim, _ = lie_closure([matrix(big)])
        assert dim == 0

    @settings(max_examples=25, deadline=None)
    @given(symmetric_strategy(max_side=3))
    def test_matches_fixpoint_oracle(self, inst):
        a, s = inst
        entries = [list(r) for r in a.matrix.entries]
        dim, _ = lie_closure(control_generators(a, s))
        assert dim == oracles.control_lie_dim_bruteforce(entries, s)

    @settings(max_examples=25, deadline=None)
    @given(symmetric_strategy(max_side=3))
    def test_closure_closed_under_brackets(self, inst):
        a, s = inst
        _, basis = lie_closure(control_generators(a, s))
        mats = basis.matrices()
        for x in mats:
            for y in mats:
                bracket = mat_mul(x, y) - mat_mul(y, x)
                assert basis.contains(bracket)


class TestLieControllable:
    def test_examples(self):
        a = adjacency_matrix(path_graph(4))
        assert lie_controllable(a, [2]) == (True, 16)
        m = pattern_matrix(MIXED_CYCLE)
        assert lie_controllable(m, [1, 3]) == (False, 8)
        b = pattern_matrix(BLOCK_PAIRED)
        assert lie_controllable(b, [1, 3]) == (False, 8)
        d = pattern_matrix([[1, 0], [0, 2]])
        assert lie_controllable(d, [1]) == (False, 2)

    def test_empty_set_rejected(self):
        a = adjacency_matrix(path_graph(3))
        with pytest.raises(ValueError):
            lie_controllable(a, [])


class TestAnalyze:
    def test_path_controllable_instance(self):
        a = adjacency_matrix(path_graph(4))
        rep = analyze(a, [1])
        assert rep.n == 4
        assert rep.control_set == (1,)
        assert rep.walk_rank == 4
        assert rep.kalman_controllable
        assert rep.p_span_dim == 16
        assert rep.lie_dim == 16
        assert rep.lie_controllable
        assert rep.zfs_status
        assert rep.hypotheses == {"connected": True, "same_sign": True}
        assert {c["check"]: c["status"] for c in rep.consistency} == {
            "kalman_iff_lie": CHECK_PASSED,
            "zfs_implies_lie": CHECK_PASSED,
            "span_dimension_identity": CHECK_PASSED,
        }
        assert rep.theorem_violations == ()

    def test_path_interior_vertex_not_forcing(self):
        a = adjacency_matrix(path_graph(4))
        rep = analyze(a, [2])
        assert rep.kalman_controllable and rep.lie_controllable
        assert not rep.zfs_status
        status = {c["check"]: c["status"] for c in rep.consistency}
        assert status["zfs_implies_lie"] == CHECK_PASSED

    def test_mixed_sign_checks_are_skipped(self):
        rep = analyze(pattern_matrix(MIXED_CYCLE), [1, 3])
        assert rep.hypotheses == {"connected": True, "same_sign": False}
        status = {c["check"]: c["status"] for c in rep.consistency}
        assert status["kalman_iff_lie"] == CHECK_SKIPPED
        assert status["zfs_implies_lie"] == CHECK_SKIPPED
        assert status["span_dimension_identity"] == CHECK_PASSED
        skipped = [c for c in rep.consistency if c["status"] == CHECK_SKIPPED]
        for c in skipped:
            assert c["detail"] == (
                "requires a connected pattern with same-sign off-diagonal entries"
            )
        # the genuine counterexample: kalman holds, lie fails, no violation
        assert rep.kalman_controllable and not rep.lie_controllable
        assert rep.theorem_violations == ()

    def test_disconnected_checks_are_skipped(self):
        rep = analyze(pattern_matrix(BLOCK_PAIRED), [1, 3])
        assert rep.hypotheses["connected"] is False
        status = {c["check"]: c["status"] for c in rep.consistency}
        assert status["kalman_iff_lie"] == CHECK_SKIPPED
        assert rep.kalman_controllable and not rep.lie_controllable
        assert rep.zfs_status
        assert rep.theorem_violations == ()

    def test_empty_set_rejected(self):
        with pytest.raises(ValueError):
            analyze(adjacency_matrix(path_graph(3)), [])

    def test_report_dict_round_trip(self):
        rep = analyze(adjacency_matrix(cycle_graph(4)), [1, 2])
        assert report_from_dict(rep.to_dict()) == rep

    @settings(max_examples=25, deadline=None)
    @given(symmetric_strategy())
    def test_span_identity_always_passes(self, inst):
        a, s = inst
        rep = analyze(a, s)
        status = {c["check"]: c["status"] for c in rep.consistency}
        assert status["span_dimension_identity"] == CHECK_PASSED

    @settings(max_examples=20, deadline=None)
    @given(
        symmetric_strategy(max_side=3),
        st.fractions(min_value="1/5", max_value=5),
        st.booleans(),
    )
    def test_decisions_invariant_under_scaling(self, inst, c, neg):
        a, s = inst
        if neg:
            c = -c
        scaled = pattern_matrix(a.matrix.scale(c))
        assert kalman_controllable(a, s)[1] == kalman_controllable(scaled, s)[1]
        assert p_span_dim(a, s) == p_span_dim(scaled, s)
        assert lie_controllable(a, s)[1] == lie_controllable(scaled, s)[1]


class TestDistancePowers:
    def test_connected_same_sign_has_no_defects(self):
        for g in (path_graph(5), cycle_graph(6), complete_graph(4)):
            assert distance_power_defects(adjacency_matrix(g)) == ()
            assert distance_power_defects(laplacian_matrix(g)) == ()
            assert distance_power_defects(random_same_sign_matrix(g, 11)) == ()

    def test_mixed_signs_can_cancel(self):
        # walks 2-1-4 and 2-3-4 contribute +1 and -1, so (A^2)_{2,4} = 0
        defects = distance_power_defects(pattern_matrix(MIXED_CYCLE))
        assert (2, 4, 2) in defects

    def test_disconnected_pairs_skipped(self):
        assert distance_power_defects(pattern_matrix(BLOCK_PAIRED)) == ()
