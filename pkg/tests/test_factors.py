"""Cycle-cover realization: spec enumeration, totality, oracle agreement."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from primediff.errors import Infeasible
from primediff.factors import enumerate_specs, two_factor
from primediff.graphs import verify_two_factor
from primediff.oracle import brute_two_factor_exists


def test_enumerate_specs_goldens():
    assert list(enumerate_specs(6)) == [(6,), (3, 3)]
    assert list(enumerate_specs(7)) == [(7,), (3, 4)]
    assert list(enumerate_specs(9)) == [(9,), (3, 6), (4, 5), (3, 3, 3)]
    assert list(enumerate_specs(3)) == [(3,)]
    assert list(enumerate_specs(2)) == []
    assert list(enumerate_specs(12, max_parts=2)) == [
        (12,),
        (3, 9),
        (4, 8),
        (5, 7),
        (6, 6),
    ]


def test_enumerate_specs_properties():
    for n in range(3, 40):
        specs = list(enumerate_specs(n))
        assert len(set(specs)) == len(specs)
        for s in specs:
            assert sum(s) == n
            assert all(p >= 3 for p in s)
            assert tuple(sorted(s)) == s
        # part-count-major ordering
        counts = [len(s) for s in specs]
        assert counts == sorted(counts)


def test_golden_realizations():
    assert two_factor(7, (3, 4)).cycles == ((1, 3, 6), (2, 5, 7, 4))
    assert two_factor(11, (3, 4, 4)).cycles == ((1, 3, 8), (4, 6, 9, 11), (2, 5, 10, 7))


def test_invalid_specs():
    with pytest.raises(Infeasible):
        two_factor(10, (3, 4))  # wrong sum
    with pytest.raises(Infeasible):
        two_factor(10, (2, 8))  # part below 3
    with pytest.raises(Infeasible):
        two_factor(10, ())
    with pytest.raises(Infeasible):
        two_factor(4, (4,))


def test_small_orders_admit_only_the_full_cycle():
    assert verify_two_factor(two_factor(5, (5,)), expected_lengths=(5,))
    assert verify_two_factor(two_factor(6, (6,)), expected_lengths=(6,))
    with pytest.raises(Infeasible):
        two_factor(6, (3, 3))
    assert not brute_two_factor_exists(6, (3, 3))


@pytest.mark.parametrize("n", range(7, 41))
def test_totality_sweep(n):
    for spec in enumerate_specs(n):
        w = two_factor(n, spec)
        assert w.lengths == tuple(sorted(spec))
        assert verify_two_factor(w, expected_lengths=spec)


@pytest.mark.parametrize("n", range(7, 15))
def test_constructor_agrees_with_oracle(n):
    for spec in enumerate_specs(n):
        assert brute_two_factor_exists(n, spec), (n, spec)
        two_factor(n, spec)  # self-verifying


def test_lengths_given_in_any_order():
    w = two_factor(12, (5, 3, 4))
    assert w.lengths == (3, 4, 5)


@given(st.integers(min_value=7, max_value=90), st.data())
def test_random_spec_property(n, data):
    specs = list(enumerate_specs(n))
    spec = data.draw(st.sampled_from(specs))
    w = two_factor(n, spec)
    assert verify_two_factor(w, expected_lengths=spec)
    assert w.interval.order == n
