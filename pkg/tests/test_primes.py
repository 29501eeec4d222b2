import pytest
from hypothesis import given
from hypothesis import strategies as st

from primediff.primes import (
    PrimeTable,
    is_prime,
    prime_arithmetic_progression,
    prime_flags,
    prime_pair_decompositions,
    sieve,
)


def trial_division(k: int) -> bool:
    if k < 2:
        return False
    d = 2
    while d * d <= k:
        if k % d == 0:
            return False
        d += 1
    return True


def test_table_matches_trial_division():
    t = sieve(500)
    assert t.primes() == [k for k in range(2, 501) if trial_division(k)]


def test_table_refuses_out_of_range():
    t = PrimeTable(50)
    with pytest.raises(ValueError):
        t.is_prime(51)
    with pytest.raises(ValueError):
        t.is_prime(-1)
    # containment is a query, not a contract violation
    assert 51 not in t
    assert "x" not in t


def test_table_bad_limit():
    with pytest.raises(ValueError):
        PrimeTable(0)


@given(st.integers(min_value=-10, max_value=5000))
def test_shared_sieve_matches_trial_division(k):
    assert is_prime(k) == trial_division(k)


def test_shared_sieve_grows_on_demand():
    assert is_prime(104729)  # 10000th prime, far beyond the initial table


def test_prime_flags_cover_requested_range():
    flags = prime_flags(1000)
    assert len(flags) > 1000
    assert flags[997] == 1 and flags[999] == 0


def test_decompositions_examples():
    assert prime_pair_decompositions(9) == [(2, 7)]
    assert prime_pair_decompositions(16) == [(3, 13), (5, 11)]
    # 10 = 5 + 5 uses equal parts and is excluded
    assert prime_pair_decompositions(10) == [(3, 7)]
    assert prime_pair_decompositions(11) == []
    assert prime_pair_decompositions(4) == []


@given(st.integers(min_value=1, max_value=600))
def test_decomposition_parts(n):
    for p, q in prime_pair_decompositions(n):
        assert p < q and p + q == n
        assert trial_division(p) and trial_division(q)


@given(st.integers(min_value=4, max_value=600))
def test_decompositions_complete(n):
    got = set(prime_pair_decompositions(n))
    want = {
        (p, n - p)
        for p in range(2, n)
        if p < n - p and trial_division(p) and trial_division(n - p)
    }
    assert got == want


def test_progression_goldens():
    assert prime_arithmetic_progression(1, 100) == (2,)
    assert prime_arithmetic_progression(2, 100) == (2, 3)
    assert prime_arithmetic_progression(3, 100) == (3, 5, 7)
    assert prime_arithmetic_progression(4, 100) == (5, 11, 17, 23)
    assert prime_arithmetic_progression(6, 10_000) == (7, 37, 67, 97, 127, 157)


def test_progression_exhaustion_and_validation():
    assert prime_arithmetic_progression(6, 20) is None
    assert prime_arithmetic_progression(2, 1) is None
    with pytest.raises(ValueError):
        prime_arithmetic_progression(0, 100)


@given(st.integers(min_value=2, max_value=5), st.integers(min_value=2, max_value=300))
def test_progression_is_prime_and_equally_spaced(k, limit):
    ap = prime_arithmetic_progression(k, limit)
    if ap is None:
        return
    assert len(ap) == k
    assert all(trial_division(t) for t in ap)
    steps = {b - a for a, b in zip(ap, ap[1:])}
    assert len(steps) == 1 and steps.pop() > 0
    assert ap[0] <= limit
