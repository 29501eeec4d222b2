"""Hamilton path constructors against stored rows, the oracle, and sweeps."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from primediff.errors import Infeasible, NonEdge
from primediff.graphs import Interval, PathWitness, verify_cycle, verify_path
from primediff.oracle import brute_infeasible_pairs
from primediff.paths import (
    BRIDGE_PATCH,
    EXCEPTION_PAIRS,
    INIT_1M,
    BASE_SEEDS,
    SMALL_ORDER_MIRRORS,
    SMALL_ORDER_ROWS,
    SPECIAL_ORDER9,
    base_path_1_to_m,
    hamilton_cycle,
    hamilton_cycle_through_edge,
    hamilton_path,
    infeasible_pairs,
    path_1_to_m,
)


def test_all_stored_rows_are_valid_paths():
    for (n, m), seq in {**BASE_SEEDS, **INIT_1M}.items():
        w = PathWitness(Interval(1, n), seq)
        assert verify_path(w, (1, m)), (n, m)
    for (n, (a, b)), seq in SMALL_ORDER_ROWS.items():
        # rows keep their original orientation, which may run b -> a
        w = PathWitness(Interval(1, n), seq)
        assert verify_path(w), (n, a, b)
        assert {seq[0], seq[-1]} == {a, b}, (n, a, b)
    for (a, b), seq in SPECIAL_ORDER9.items():
        assert verify_path(PathWitness(Interval(1, 9), seq), (a, b)), (a, b)
    for (n, a, b), seq in BRIDGE_PATCH.items():
        assert verify_path(PathWitness(Interval(1, n), seq), (a, b)), (n, a, b)


def test_stored_rows_mirror_consistency():
    # each mirrored pair of rows maps onto the other under v -> n + 1 - v
    for (n1, k1), (n2, k2) in SMALL_ORDER_MIRRORS:
        assert n1 == n2
        row = SMALL_ORDER_ROWS[n1, k1]
        mirrored = tuple(n1 + 1 - v for v in row)[::-1]
        other = SMALL_ORDER_ROWS[n2, k2]
        assert mirrored in (other, other[::-1]), (n1, k1, k2)


def test_base_range_validation():
    with pytest.raises(ValueError):
        base_path_1_to_m(12, 7)
    assert base_path_1_to_m(12, 2).endpoints == (1, 2)


def test_path_1_to_m_small_order_feasibility():
    assert path_1_to_m(5, 3).sequence == (1, 4, 2, 5, 3)
    assert path_1_to_m(5, 4).sequence == (1, 3, 5, 2, 4)
    for m in (2, 5):
        with pytest.raises(Infeasible):
            path_1_to_m(5, m)
    with pytest.raises(ValueError):
        path_1_to_m(4, 2)
    with pytest.raises(ValueError):
        path_1_to_m(9, 10)


@pytest.mark.parametrize("n", range(6, 90))
def test_path_1_to_m_sweep(n):
    for m in range(2, n + 1):
        w = path_1_to_m(n, m)
        assert verify_path(w, (1, m))


def test_exception_sets_match_oracle():
    for n in (5, 6, 7, 8):
        assert infeasible_pairs(n) == EXCEPTION_PAIRS[n]
        assert infeasible_pairs(n) == frozenset(brute_infeasible_pairs(n))
    for n in (9, 10, 11, 12):
        assert infeasible_pairs(n) == frozenset()
        assert brute_infeasible_pairs(n) == set()


@pytest.mark.parametrize("n", range(9, 36))
def test_all_pairs_feasible_from_order_nine(n):
    for a in range(1, n):
        for b in range(a + 1, n + 1):
            w = hamilton_path(n, a, b)
            assert verify_path(w, (a, b))


def test_feasible_small_order_pairs():
    for n in (5, 6, 7, 8):
        bad = EXCEPTION_PAIRS[n]
        for a in range(1, n):
            for b in range(a + 1, n + 1):
                if (a, b) in bad:
                    with pytest.raises(Infeasible):
                        hamilton_path(n, a, b)
                else:
                    assert verify_path(hamilton_path(n, a, b), (a, b))


def test_endpoint_order_is_respected():
    w = hamilton_path(11, 8, 3)
    assert w.endpoints == (8, 3)
    assert hamilton_path(11, 3, 8).sequence == w.sequence[::-1]


def test_argument_validation():
    with pytest.raises(ValueError):
        hamilton_path(4, 1, 2)
    with pytest.raises(ValueError):
        hamilton_path(9, 0, 5)
    with pytest.raises(ValueError):
        hamilton_path(9, 5, 10)
    with pytest.raises(ValueError):
        hamilton_path(9, 5, 5)
    with pytest.raises(ValueError):
        infeasible_pairs(4)


@given(st.integers(min_value=9, max_value=150), st.data())
def test_random_pair_property(n, data):
    a = data.draw(st.integers(min_value=1, max_value=n))
    b = data.draw(st.integers(min_value=1, max_value=n).filter(lambda x: x != a))
    w = hamilton_path(n, a, b)
    assert verify_path(w, (a, b))


def test_hamilton_cycle():
    for n in range(5, 40):
        assert verify_cycle(hamilton_cycle(n))
    for n in (1, 2, 3, 4):
        with pytest.raises(Infeasible):
            hamilton_cycle(n)
    with pytest.raises(ValueError):
        hamilton_cycle(0)


def test_cycle_through_edge():
    w = hamilton_cycle_through_edge(9, (2, 9))
    assert verify_cycle(w, required_edge=(2, 9))
    # order of the edge's ends does not matter
    assert verify_cycle(hamilton_cycle_through_edge(9, (9, 2)), required_edge=(2, 9))
    with pytest.raises(NonEdge):
        hamilton_cycle_through_edge(9, (1, 5))
    with pytest.raises(ValueError):
        hamilton_cycle_through_edge(9, (1, 10))
    with pytest.raises(ValueError):
        hamilton_cycle_through_edge(4, (1, 3))


@given(st.integers(min_value=5, max_value=60), st.data())
def test_cycle_through_every_edge_property(n, data):
    a = data.draw(st.integers(min_value=1, max_value=n - 1))
    choices = [b for b in range(1, n + 1) if b != a and abs(b - a) in (2, 3, 5, 7, 11, 13)]
    b = data.draw(st.sampled_from(choices))
    w = hamilton_cycle_through_edge(n, (a, b))
    assert verify_cycle(w, required_edge=(a, b))
