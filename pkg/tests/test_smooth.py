import math
from fractions import Fraction

import numpy as np
import pytest

from primeplaces.errors import BoundExceededError, DomainError
from primeplaces.smooth import (
    density_profile,
    erdos_defect_bound,
    erdos_defect_profile,
    minimal_r_for_tail,
    prime_reciprocal_bounds,
    prime_reciprocal_partial_sum,
    smooth_exponents,
    smooth_members,
    tail_reciprocal_sum,
)

from primeplaces.report import render_rational

from oracles import bytearray_primes, smooth_brute, trial_primes


@pytest.mark.parametrize("strategy", ["sieve", "enumerate", "auto"])
def test_smooth_members_examples(strategy):
    assert smooth_members(2, 10, strategy).tolist() == [1, 2, 3, 4, 6, 8, 9]
    assert smooth_members(0, 7, strategy).tolist() == [1]
    assert smooth_members(1, 8, strategy).tolist() == [1, 2, 4, 8]


def test_smooth_members_match_brute_force():
    for r in range(0, 6):
        assert smooth_members(r, 3000).tolist() == smooth_brute(r, 3000)


def test_strategies_agree():
    for r in range(0, 6):
        a = smooth_members(r, 10**5, "sieve")
        b = smooth_members(r, 10**5, "enumerate")
        assert a == b


def test_sieve_crosses_segments():
    from primeplaces import smooth as mod

    n = mod._SEGMENT + 5000
    assert smooth_members(3, n, "sieve") == smooth_members(3, n, "enumerate")


def test_smooth_set_helpers():
    s = smooth_members(2, 10)
    assert 9 in s and 5 not in s and 11 not in s
    assert s.count_upto(4) == 4
    mask = s.mask()
    assert np.flatnonzero(mask).tolist() == s.tolist()


def test_smooth_errors():
    with pytest.raises(BoundExceededError):
        smooth_members(2, 10**3, limit=100)
    with pytest.raises(DomainError):
        smooth_members(-1, 10)
    with pytest.raises(DomainError):
        smooth_members(1, 0)


def test_enumeration_reaches_past_the_dense_limit():
    s = smooth_members(2, 10**15, "enumerate", limit=10**16)
    assert len(s) == sum(1 for a in range(50) for b in range(32) if 2**a * 3**b <= 10**15)


def test_smooth_exponents():
    members, exps = smooth_exponents(2, 100)
    assert members.tolist() == smooth_brute(2, 100)
    assert np.all(2 ** exps[:, 0] * 3 ** exps[:, 1] == members)


@pytest.mark.parametrize(
    "r, N, expected",
    [(2, 10, (3, 3)), (4, 10, (0, 0)), (1, 10, (6, 6))],
)
def test_erdos_defect_examples(r, N, expected):
    b = erdos_defect_bound(r, N)
    assert (b.defect, b.bound) == expected and b.holds


def test_defect_profile_matches_pointwise():
    prof = erdos_defect_profile(3, 2000)
    for n in [1, 2, 10, 97, 500, 1999, 2000]:
        b = erdos_defect_bound(3, n)
        assert (prof.at(n).defect, prof.at(n).bound) == (b.defect, b.bound)
    # direct definition for the bound
    primes = trial_primes(2000)[3:]
    assert prof.bound[1234] == sum(1234 // p for p in primes)


def test_defect_bound_holds_small_grid():
    for r in range(0, 7):
        assert erdos_defect_profile(r, 10**4).holds


@pytest.mark.parametrize(
    "r, B, expected",
    [(2, 10, Fraction(12, 35)), (4, 10, Fraction(0)), (0, 10, Fraction(247, 210)),
     (1, 10, Fraction(71, 105))],
)
def test_tail_sums(r, B, expected):
    assert tail_reciprocal_sum(r, B) == expected


def test_tail_sum_exact_limit():
    with pytest.raises(BoundExceededError):
        tail_reciprocal_sum(0, 10**6 + 1)


@pytest.mark.parametrize("B, theta, r", [(10, Fraction(1, 2), 2), (10, 0, 4), (10, 2, 0)])
def test_minimal_r_examples(B, theta, r):
    assert minimal_r_for_tail(B, theta) == r


def test_minimal_r_agrees_with_exact_search():
    for B in [30, 100, 1000, 5000]:
        for theta in [Fraction(0), Fraction(1, 10), Fraction(1, 2), Fraction(1)]:
            primes = trial_primes(B)
            exact = next(r for r in range(len(primes) + 1)
                         if sum(Fraction(1, p) for p in primes[r:]) <= theta)
            assert minimal_r_for_tail(B, theta) == exact


def test_minimal_r_exact_fallback_at_boundary():
    # theta equal to a tail value sits inside every enclosure
    theta = Fraction(12, 35)
    assert minimal_r_for_tail(10, theta, digits=2) == 2


def test_prime_reciprocal_partial_sum():
    assert prime_reciprocal_partial_sum(2) == Fraction(1, 2)
    assert prime_reciprocal_partial_sum(10) == Fraction(247, 210)


def test_prime_reciprocal_sum_at_one_million():
    s = prime_reciprocal_partial_sum(10**6)
    oracle = math.fsum(1.0 / p for p in bytearray_primes(10**6))
    assert abs(oracle - 2.887328099567673) < 1e-12
    assert abs(float(s) - oracle) < 1e-12
    assert render_rational(s, 6) == "2.887328"


def test_partial_sums_increase_over_primes():
    prev = Fraction(0)
    for p in trial_primes(200):
        cur = prime_reciprocal_partial_sum(p)
        assert cur > prev
        prev = cur


def test_reciprocal_bounds_enclose_exact():
    exact = prime_reciprocal_partial_sum(10**5)
    lo, hi = prime_reciprocal_bounds(10**5, digits=20)
    assert lo <= exact <= hi and hi - lo <= Fraction(10**4, 10**20)
    lo, hi = prime_reciprocal_bounds(10, 5, r=2)
    assert lo <= Fraction(12, 35) <= hi


def test_density_profile_examples():
    d = density_profile(2, [10])
    row = d.rows[0]
    assert (row.N, row.count, row.ratio, row.lower_bound) == (10, 7, Fraction(7, 10), Fraction(23, 35))
    d = density_profile(0, [5])
    assert (d.rows[0].count, d.rows[0].ratio) == (1, Fraction(1, 5))
    d = density_profile(3, [100])
    assert d.rows[0].count == 34


def test_density_profile_monotone_and_bounded():
    d = density_profile(4, [10, 100, 1000, 10**4, 10**5])
    counts = [row.count for row in d.rows]
    assert counts == sorted(counts)
    for row in d.rows:
        assert 0 < row.ratio <= 1
        assert row.bound_holds
    assert d.lower_bound == d.rows[-1].lower_bound


def test_density_profile_rejects_unsorted():
    with pytest.raises(DomainError):
        density_profile(2, [100, 10])
