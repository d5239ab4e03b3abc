import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from primeplaces.arith import (
    Factorization,
    factorize,
    factorize_large,
    first_primes,
    is_prime,
    iroot,
    normalize,
    nth_prime,
    parse_rational,
    prime_array,
    primes_up_to,
    reciprocal_sum,
)
from primeplaces.errors import BoundExceededError, DomainError

from oracles import trial_factor, trial_primes


def test_primes_up_to_examples():
    assert primes_up_to(10) == [2, 3, 5, 7]
    assert primes_up_to(1) == []
    assert primes_up_to(0) == []
    ps = primes_up_to(100)
    assert len(ps) == 25 and ps[-1] == 97


def test_primes_match_trial_division():
    assert primes_up_to(10**4) == trial_primes(10**4)


def test_segmented_sieve_agrees_with_simple():
    from primeplaces.arith import _segmented_sieve, _simple_sieve

    assert _segmented_sieve(3 * 10**5).tolist() == _simple_sieve(3 * 10**5).tolist()


def test_prime_table_is_read_only():
    arr = prime_array(50)
    with pytest.raises(ValueError):
        arr[0] = 4


def test_sieve_limit():
    with pytest.raises(BoundExceededError):
        primes_up_to(101, limit=100)
    with pytest.raises(DomainError):
        primes_up_to(-1)


@pytest.mark.parametrize("j, p", [(1, 2), (4, 7), (25, 97), (168, 997), (1229, 9973)])
def test_nth_prime(j, p):
    assert nth_prime(j) == p


def test_nth_prime_errors():
    with pytest.raises(DomainError):
        nth_prime(0)
    with pytest.raises(BoundExceededError):
        nth_prime(10, limit=20)


def test_first_primes():
    assert first_primes(0) == []
    assert first_primes(4) == [2, 3, 5, 7]


@pytest.mark.parametrize(
    "n, pairs",
    [(12, [(2, 2), (3, 1)]), (1, []), (9797, [(97, 1), (101, 1)]), (2**39, [(2, 39)])],
)
def test_factorize_examples(n, pairs):
    assert factorize(n).as_list() == pairs


def test_factorize_large_prime_and_semiprime():
    assert factorize(999999999989).as_list() == [(999999999989, 1)]
    assert factorize(999983 * 999979).as_list() == [(999979, 1), (999983, 1)]


def test_factorize_errors():
    for bad in (0, -5):
        with pytest.raises(DomainError):
            factorize(bad)
    with pytest.raises(BoundExceededError):
        factorize(10**13)


def test_factorize_reconstructs_every_n_up_to_1e5():
    for n in range(1, 10**5 + 1):
        assert factorize(n).value() == n


def test_factorize_matches_trial_division_sample():
    for n in list(range(1, 3000)) + [2**31 - 1, 600851475143]:
        assert factorize(n).as_list() == trial_factor(n)


def test_factorization_invariants():
    with pytest.raises(DomainError):
        Factorization(((3, 1), (2, 1)))
    with pytest.raises(DomainError):
        Factorization(((2, 0),))
    assert Factorization().value() == 1


def test_normalize():
    assert normalize(6, -4) == Fraction(-3, 2)
    q = normalize(6, -4)
    assert (q.numerator, q.denominator) == (-3, 2)
    z = normalize(0, 5)
    assert (z.numerator, z.denominator) == (0, 1)
    q = normalize(247, 210)
    assert (q.numerator, q.denominator) == (247, 210)
    with pytest.raises(ZeroDivisionError):
        normalize(1, 0)


def test_parse_rational():
    assert parse_rational("31/30") == Fraction(31, 30)
    assert parse_rational("-7") == -7
    assert parse_rational("0.25") == Fraction(1, 4)
    with pytest.raises(DomainError):
        parse_rational("x")


def test_reciprocal_sum_is_reduced_and_exact():
    s = reciprocal_sum(primes_up_to(10))
    assert s == Fraction(247, 210)
    assert (s.numerator, s.denominator) == (247, 210)
    ps = primes_up_to(2000)
    assert reciprocal_sum(ps) == sum((Fraction(1, p) for p in ps), Fraction(0))
    assert reciprocal_sum([]) == 0


def test_iroot():
    assert iroot(27, 3) == (3, True)
    assert iroot(28, 3) == (3, False)
    assert iroot(10**60, 5) == (10**12, True)


rationals = st.fractions(max_denominator=10**6).filter(lambda q: abs(q.numerator) <= 10**9)


@given(rationals, rationals, rationals)
def test_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + (-a) == 0
    if a != 0:
        assert a * (1 / a) == 1
        assert 1 / (1 / a) == a
    assert a.denominator >= 1


def test_factorize_large_matches_trial_division():
    rng = random.Random(11)
    for n in [1, 2, 10**4 + 7, 2**32 + 1] + [rng.randint(2, 10**10) for _ in range(15)]:
        assert factorize_large(n).as_list() == trial_factor(n)


def test_factorize_large_beyond_trial_range():
    p, q = 2**61 - 1, 1_000_000_007
    assert factorize_large(6 * 1_000_003 * q * q).as_list() == [(2, 1), (3, 1), (1_000_003, 1), (q, 2)]
    assert factorize_large(6 * p).as_list() == [(2, 1), (3, 1), (p, 1)]
    assert factorize_large(p).as_list() == [(p, 1)]
    # a semiprime with two large factors needs the rho step
    assert factorize_large(999_999_000_001 * 1_000_000_000_039).primes() == sorted(
        [999_999_000_001, 1_000_000_000_039])
    with pytest.raises(BoundExceededError):
        factorize_large((2**89 - 1) * 2**3)
    with pytest.raises(DomainError):
        factorize_large(0)


def test_is_prime_beyond_factor_limit():
    assert is_prime(2**61 - 1)
    assert not is_prime(2**61 + 1)
    # strong pseudoprime to every prime base up to 23
    assert not is_prime(3825123056546413051)
    assert [n for n in range(10**12, 10**12 + 100) if is_prime(n)] == [
        1000000000039, 1000000000061, 1000000000063, 1000000000091]
