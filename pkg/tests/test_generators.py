"""Difference-restricted cycles, two-prime cycles, edge-disjoint families."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from primediff.errors import Infeasible, NotFound
from primediff.generators import (
    cycle_diff23,
    cycle_two_primes,
    edge_disjoint_cycles,
    n_for_t_disjoint,
    path_diff23,
)
from primediff.graphs import canonical_cycle, verify_cycle, verify_edge_disjoint, verify_path
from primediff.oracle import brute_diff_restricted_cycle
from primediff.primes import prime_pair_decompositions


def test_path_diff23_goldens():
    assert path_diff23(8).sequence == (8, 6, 3, 1, 4, 2, 5, 7)
    assert path_diff23(9).sequence == (9, 7, 5, 2, 4, 1, 3, 6, 8)
    with pytest.raises(ValueError):
        path_diff23(5)


@given(st.integers(min_value=6, max_value=400))
def test_path_diff23_property(n):
    w = path_diff23(n)
    assert verify_path(w, (n, n - 1))
    assert all(abs(x - y) in (2, 3) for x, y in zip(w.sequence, w.sequence[1:]))


def test_cycle_diff23_existence_boundary():
    assert cycle_diff23(5).sequence == (1, 4, 2, 5, 3)
    for n in (6, 7, 8, 9):
        with pytest.raises(Infeasible):
            cycle_diff23(n)
    with pytest.raises(ValueError):
        cycle_diff23(2)
    assert cycle_diff23(10).sequence == (6, 3, 1, 4, 2, 5, 8, 10, 7, 9)


def test_cycle_diff23_matches_oracle_on_small_orders():
    for n in range(4, 16):
        brute = brute_diff_restricted_cycle(n, {2, 3})
        if n == 5 or n >= 10:
            assert brute is not None
            assert verify_cycle(cycle_diff23(n), allowed_diffs={2, 3})
        else:
            assert brute is None


@given(st.integers(min_value=10, max_value=600))
def test_cycle_diff23_property(n):
    assert verify_cycle(cycle_diff23(n), allowed_diffs={2, 3})


def test_two_prime_golden():
    w = cycle_two_primes(9, (2, 7))
    assert w.sequence == (1, 3, 5, 7, 9, 2, 4, 6, 8)
    assert w.sequence == canonical_cycle(w.sequence)


def test_two_prime_validation():
    with pytest.raises(ValueError):
        cycle_two_primes(10, (5, 5))  # equal parts
    with pytest.raises(ValueError):
        cycle_two_primes(10, (3, 5))  # wrong sum
    with pytest.raises(ValueError):
        cycle_two_primes(10, (1, 9))  # not primes


@given(st.integers(min_value=5, max_value=400))
def test_two_prime_property(n):
    for p, q in prime_pair_decompositions(n):
        w = cycle_two_primes(n, (p, q))
        assert verify_cycle(w, allowed_diffs={p, q})


def test_disjoint_family_reference_sizes():
    f20 = edge_disjoint_cycles(20)
    f30 = edge_disjoint_cycles(30)
    assert len(f20) >= 2
    assert len(f30) >= 4
    assert verify_edge_disjoint(f20.cycles)
    assert verify_edge_disjoint(f30.cycles)


def test_disjoint_family_fallback():
    # 6 = 3 + 3 only, which is excluded; a single generic cycle remains
    fam = edge_disjoint_cycles(6)
    assert len(fam) == 1
    assert fam.sources == ("fallback",)
    with pytest.raises(ValueError):
        edge_disjoint_cycles(4)


def test_disjoint_family_sources_label_cycles():
    fam = edge_disjoint_cycles(20)
    assert len(fam.sources) == len(fam.cycles)
    assert any(s.startswith("pair:") for s in fam.sources)


@given(st.integers(min_value=5, max_value=200))
def test_disjoint_family_property(n):
    fam = edge_disjoint_cycles(n)
    assert len(fam) >= 1
    assert verify_edge_disjoint(fam.cycles)
    for c in fam.cycles:
        assert verify_cycle(c)


def test_n_for_t_disjoint_goldens():
    n1, f1 = n_for_t_disjoint(1)
    assert (n1, len(f1)) == (5, 1)
    n2, f2 = n_for_t_disjoint(2)
    assert (n2, len(f2)) == (28, 2)
    n3, f3 = n_for_t_disjoint(3)
    assert (n3, len(f3)) == (164, 3)
    assert verify_edge_disjoint(f3.cycles)


def test_n_for_t_disjoint_failure_modes():
    with pytest.raises(NotFound):
        n_for_t_disjoint(3, search_limit=20)
    with pytest.raises(ValueError):
        n_for_t_disjoint(0)
