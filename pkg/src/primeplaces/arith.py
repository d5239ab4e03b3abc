"""Exact arithmetic substrate: rationals, prime sieving, factorization.

Rationals are :class:`fractions.Fraction` throughout; it already keeps the
canonical reduced form with a positive denominator and never rounds.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from fractions import Fraction

import gmpy2
import numpy as np

from . import config
from .errors import BoundExceededError, DomainError

Rational = Fraction

__all__ = [
    "Rational",
    "Factorization",
    "normalize",
    "parse_rational",
    "primes_up_to",
    "prime_array",
    "prime_count",
    "nth_prime",
    "is_prime",
    "factorize",
    "factorize_large",
    "iroot",
    "reciprocal_sum",
]


def normalize(numerator: int, denominator: int) -> Fraction:
    """Return ``numerator/denominator`` in lowest terms with a positive denominator."""
    if denominator == 0:
        raise ZeroDivisionError(f"normalize({numerator}, 0)")
    return Fraction(int(numerator), int(denominator))


def parse_rational(text) -> Fraction:
    """Parse ``"p/q"``, ``"-7"`` or an exact decimal like ``"0.25"``."""
    if isinstance(text, Fraction):
        return text
    if isinstance(text, int):
        return Fraction(text)
    try:
        return Fraction(str(text).strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise DomainError(f"not a rational number: {text!r}") from exc


def _coprime_fraction(numerator: int, denominator: int) -> Fraction:
    # Caller guarantees gcd(numerator, denominator) == 1 and denominator > 0.
    # Skips a gcd that costs seconds on million-digit operands.
    f = Fraction.__new__(Fraction)
    f._numerator = int(numerator)
    f._denominator = int(denominator)
    return f


# ---------------------------------------------------------------------------
# sieving

_SEGMENT = 1 << 22


def _simple_sieve(limit: int) -> np.ndarray:
    if limit < 2:
        return np.zeros(0, dtype=np.int64)
    is_p = np.ones(limit + 1, dtype=bool)
    is_p[:2] = False
    is_p[4::2] = False
    for p in range(3, math.isqrt(limit) + 1, 2):
        if is_p[p]:
            is_p[p * p :: 2 * p] = False
    return np.flatnonzero(is_p).astype(np.int64)


def _segmented_sieve(limit: int) -> np.ndarray:
    base = _simple_sieve(math.isqrt(limit))
    chunks = [base]
    low = int(base[-1]) + 1 if base.size else 2
    while low <= limit:
        high = min(low + _SEGMENT, limit + 1)
        mask = np.ones(high - low, dtype=bool)
        for p in base.tolist():
            if p * p >= high:
                break
            start = max(p * p, -(-low // p) * p)
            mask[start - low :: p] = False
        chunks.append(np.flatnonzero(mask).astype(np.int64) + low)
        low = high
    return np.concatenate(chunks)


class _PrimeCache:
    """Grow-only prime table; readers get immutable views."""

    def __init__(self):
        self._lock = threading.Lock()
        self._bound = 1
        self._primes = np.zeros(0, dtype=np.int64)

    def upto(self, bound: int) -> np.ndarray:
        primes, have = self._primes, self._bound
        if bound > have:
            with self._lock:
                if bound > self._bound:
                    target = max(bound, 2 * self._bound, 1 << 16)
                    sieve = _simple_sieve if target <= 1 << 25 else _segmented_sieve
                    table = sieve(target)
                    table.flags.writeable = False
                    self._primes, self._bound = table, target
                primes = self._primes
        return primes[: np.searchsorted(primes, bound, side="right")]


_CACHE = _PrimeCache()


def prime_array(bound: int, *, limit: int = config.SIEVE_LIMIT) -> np.ndarray:
    """Primes ``<= bound`` as a read-only int64 array."""
    if bound < 0:
        raise DomainError("bound must be non-negative")
    if bound > limit:
        raise BoundExceededError(f"sieve bound {bound} exceeds limit {limit}")
    return _CACHE.upto(int(bound))


def primes_up_to(bound: int, *, limit: int = config.SIEVE_LIMIT) -> list[int]:
    """All primes in ``[2, bound]``, ascending.

    >>> primes_up_to(10)
    [2, 3, 5, 7]
    """
    return prime_array(bound, limit=limit).tolist()


def prime_count(bound: int, *, limit: int = config.SIEVE_LIMIT) -> int:
    return int(prime_array(bound, limit=limit).size)


def nth_prime(j: int, *, limit: int = config.SIEVE_LIMIT) -> int:
    """The j-th prime, 1-indexed so that ``nth_prime(1) == 2``."""
    if j < 1:
        raise DomainError(f"prime index must be >= 1, got {j}")
    # Rosser's bound p_j < j (ln j + ln ln j) for j >= 6
    bound = 15 if j < 6 else int(j * (math.log(j) + math.log(math.log(j)))) + 1
    primes = prime_array(min(bound, limit), limit=limit)
    if primes.size < j:
        raise BoundExceededError(f"p_{j} lies beyond the sieve limit {limit}")
    return int(primes[j - 1])


def first_primes(r: int, *, limit: int = config.SIEVE_LIMIT) -> list[int]:
    """``[p_1, ..., p_r]``."""
    if r < 0:
        raise DomainError("r must be non-negative")
    if r == 0:
        return []
    last = nth_prime(r, limit=limit)
    return prime_array(last, limit=limit)[:r].tolist()


# ---------------------------------------------------------------------------
# factorization


@dataclass(frozen=True)
class Factorization:
    """Canonical factorization of a positive integer.

    ``pairs`` holds ``(prime, exponent)`` with strictly increasing primes and
    positive exponents; the empty tuple stands for 1.
    """

    pairs: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        prev = 1
        for p, e in self.pairs:
            if p <= prev or e < 1:
                raise DomainError(f"malformed factorization {self.pairs!r}")
            prev = p

    def __iter__(self):
        return iter(self.pairs)

    def __len__(self):
        return len(self.pairs)

    def value(self) -> int:
        out = 1
        for p, e in self.pairs:
            out *= p**e
        return out

    def primes(self) -> list[int]:
        return [p for p, _ in self.pairs]

    def exponent(self, p: int) -> int:
        for q, e in self.pairs:
            if q == p:
                return e
        return 0

    def as_list(self) -> list[tuple[int, int]]:
        return list(self.pairs)


def factorize(n: int, *, limit: int = config.FACTOR_LIMIT) -> Factorization:
    """Trial division against the cached sieve.

    >>> factorize(12).as_list()
    [(2, 2), (3, 1)]
    """
    n = int(n)
    if n <= 0:
        raise DomainError(f"factorize needs n >= 1, got {n}")
    if n > limit:
        raise BoundExceededError(f"{n} exceeds the factorization limit {limit}")
    pairs = []
    if n > 1:
        candidates = prime_array(math.isqrt(n))
        if n < 2**63:
            divisors = candidates[n % candidates == 0].tolist()
        else:
            divisors = [p for p in candidates.tolist() if n % p == 0]
        for p in divisors:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            pairs.append((p, e))
        if n > 1:
            pairs.append((n, 1))
    return Factorization(tuple(pairs))


# Miller-Rabin with these bases is exact below this bound.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
_MR_EXACT_BELOW = 3_317_044_064_679_887_385_961_981


def _miller_rabin(n: int) -> bool:
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _brent(n: int) -> int:
    # a non-trivial factor of the odd composite n
    for c in range(1, n):
        y, m, g, r, q = 2, 128, 1, 1, 1
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g
    raise AssertionError(f"no factor found for {n}")


def factorize_large(n: int) -> Factorization:
    """Exact factorization beyond trial-division range.

    Primes below 10^4 are divided out first, then Pollard-Brent splits the
    cofactor and deterministic Miller-Rabin certifies the pieces. Exact
    whenever that cofactor is below ``3.3e24``; otherwise
    :class:`BoundExceededError` is raised.

    >>> factorize_large(7420738134811).as_list()
    [(181, 1), (60611, 1), (676421, 1)]
    """
    n = int(n)
    if n <= 0:
        raise DomainError(f"factorize needs n >= 1, got {n}")
    counts: dict[int, int] = {}
    for p in prime_array(10**4).tolist():
        while n % p == 0:
            n //= p
            counts[p] = counts.get(p, 0) + 1
    if n >= _MR_EXACT_BELOW:
        raise BoundExceededError(f"cofactor {n} is beyond the exact primality range")
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if _miller_rabin(m):
            counts[m] = counts.get(m, 0) + 1
        else:
            f = _brent(m)
            stack += [f, m // f]
    return Factorization(tuple(sorted(counts.items())))


def is_prime(n: int) -> bool:
    """Exact primality: trial division up to the factor limit, then Miller-Rabin."""
    if n < 2:
        return False
    if n > config.FACTOR_LIMIT:
        if n >= _MR_EXACT_BELOW:
            raise BoundExceededError(f"{n} is beyond the exact primality range")
        return _miller_rabin(n)
    fac = factorize(n)
    return len(fac) == 1 and fac.pairs[0][1] == 1


def iroot(n: int, k: int) -> tuple[int, bool]:
    """Floor of the k-th root of ``n >= 0`` and whether it is exact."""
    root, exact = gmpy2.iroot(gmpy2.mpz(n), k)
    return int(root), bool(exact)


def _binary_split(primes, lo, hi):
    if hi - lo == 1:
        return gmpy2.mpz(1), gmpy2.mpz(primes[lo])
    mid = (lo + hi) // 2
    a, b = _binary_split(primes, lo, mid)
    c, d = _binary_split(primes, mid, hi)
    return a * d + b * c, b * d


def reciprocal_sum(primes) -> Fraction:
    """Exact sum of ``1/p`` over distinct primes.

    The common denominator is the product of the primes and the numerator is
    prime to each of them, so the result is already in lowest terms.
    """
    primes = [int(p) for p in primes]
    if not primes:
        return Fraction(0)
    num, den = _binary_split(primes, 0, len(primes))
    return _coprime_fraction(num, den)
