"""Smooth sets P_r, the Erdos defect bound and prime-reciprocal sums.

``P_r`` is the set of positive integers with no prime factor beyond the
r-th prime ``p_r``; 1 belongs to every ``P_r``.
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass
from fractions import Fraction
from itertools import accumulate

import numpy as np

from . import config
from .arith import _coprime_fraction, first_primes, parse_rational, prime_array, reciprocal_sum
from .errors import BoundExceededError, DomainError

__all__ = [
    "SmoothSet",
    "smooth_members",
    "smooth_exponents",
    "DefectBound",
    "erdos_defect_bound",
    "DefectProfile",
    "erdos_defect_profile",
    "tail_reciprocal_sum",
    "minimal_r_for_tail",
    "prime_reciprocal_partial_sum",
    "prime_reciprocal_bounds",
    "DensityRow",
    "DensityReport",
    "density_profile",
]

_INT64_SAFE = 2**62
_SEGMENT = 1 << 20


@dataclass(frozen=True, eq=False)
class SmoothSet:
    r: int
    N: int
    members: np.ndarray

    def __len__(self):
        return int(self.members.size)

    def __contains__(self, n):
        i = np.searchsorted(self.members, n)
        return bool(i < self.members.size and self.members[i] == n)

    def __eq__(self, other):
        if not isinstance(other, SmoothSet):
            return NotImplemented
        return (self.r, self.N) == (other.r, other.N) and np.array_equal(
            self.members, other.members
        )

    def tolist(self) -> list[int]:
        return self.members.tolist()

    def mask(self) -> np.ndarray:
        """Bit vector over ``[0, N]``."""
        out = np.zeros(self.N + 1, dtype=bool)
        out[self.members] = True
        return out

    def count_upto(self, n: int) -> int:
        return int(np.searchsorted(self.members, n, side="right"))


def _check(r, N, limit):
    if r < 0:
        raise DomainError("r must be non-negative")
    if N < 1:
        raise DomainError("N must be positive")
    if N > limit:
        raise BoundExceededError(f"N = {N} exceeds the smooth-set limit {limit}")


def _enumerate(primes, N):
    dtype = np.int64 if N * (primes[-1] if primes else 1) < _INT64_SAFE else object
    members = np.array([1], dtype=dtype)
    for p in primes:
        parts = [members]
        cur = members
        while True:
            cur = cur * p
            cur = cur[cur <= N]
            if cur.size == 0:
                break
            parts.append(cur)
        members = np.concatenate(parts)
    members.sort()
    return members


def _sieve(primes, N):
    found = []
    for lo in range(1, N + 1, _SEGMENT):
        hi = min(lo + _SEGMENT, N + 1)
        residual = np.arange(lo, hi, dtype=np.int64)
        for p in primes:
            pk = p
            while pk < hi:
                start = -(-lo // pk) * pk
                residual[start - lo :: pk] //= p
                pk *= p
        found.append(np.flatnonzero(residual == 1) + lo)
    return np.concatenate(found).astype(np.int64)


def smooth_members(r: int, N: int, strategy: str = "auto", *,
                   limit: int = config.DENSE_SMOOTH_LIMIT) -> SmoothSet:
    """``P_r`` intersected with ``[1, N]``.

    ``strategy="sieve"`` divides the first r primes out of every integer in
    the range and keeps those reduced to 1; ``"enumerate"`` builds the
    products ``p_1^e_1 ... p_r^e_r <= N`` directly. ``"auto"`` sieves only
    when the set is dense enough for that to pay off.
    """
    _check(r, N, limit)
    primes = first_primes(r)
    if strategy == "auto":
        strategy = "sieve" if r > 12 and N <= 10**7 else "enumerate"
    if strategy == "sieve":
        members = _sieve(primes, N)
    elif strategy == "enumerate":
        members = _enumerate(primes, N)
    else:
        raise ValueError(f"unknown strategy {strategy!r}")
    members.flags.writeable = False
    return SmoothSet(r, N, members)


def smooth_exponents(r: int, N: int, *, limit: int = config.DENSE_SMOOTH_LIMIT):
    """Members of ``P_r`` up to N with their exponent vectors.

    Returns ``(members, exponents)``, ``exponents[i, j]`` being the exponent
    of ``p_{j+1}`` in ``members[i]``; rows sorted by member.
    """
    _check(r, N, limit)
    primes = first_primes(r)
    if N * (primes[-1] if primes else 1) >= _INT64_SAFE:
        raise BoundExceededError("N too large for exponent tracking")
    members = np.array([1], dtype=np.int64)
    exps = np.zeros((1, r), dtype=np.int64)
    for j, p in enumerate(primes):
        parts, eparts = [members], [exps]
        cur, ecur = members, exps
        while True:
            cur = cur * p
            keep = cur <= N
            if not keep.any():
                break
            cur, ecur = cur[keep], ecur[keep].copy()
            ecur[:, j] += 1
            parts.append(cur)
            eparts.append(ecur)
        members, exps = np.concatenate(parts), np.concatenate(eparts)
    order = np.argsort(members, kind="stable")
    return members[order], exps[order]


# ---------------------------------------------------------------------------
# Erdos' estimate


@dataclass(frozen=True)
class DefectBound:
    r: int
    N: int
    defect: int
    bound: int

    @property
    def holds(self) -> bool:
        return self.defect <= self.bound


def erdos_defect_bound(r: int, N: int, *, limit: int = config.DENSE_SMOOTH_LIMIT) -> DefectBound:
    """``N - #(P_r in [1, N])`` against ``sum_{j > r} floor(N / p_j)``.

    Terms with ``p_j > N`` vanish, so the sum runs over primes up to N.
    """
    _check(r, N, limit)
    count = len(smooth_members(r, N, limit=limit))
    primes = prime_array(N)
    bound = int((N // primes[r:]).sum()) if primes.size > r else 0
    return DefectBound(r, N, N - count, bound)


@dataclass(frozen=True, eq=False)
class DefectProfile:
    """Defect and bound for every ``n`` in ``[0, N]`` at once."""

    r: int
    N: int
    defect: np.ndarray
    bound: np.ndarray

    @property
    def holds(self) -> bool:
        return bool(np.all(self.defect <= self.bound))

    def violations(self) -> list[int]:
        return np.flatnonzero(self.defect > self.bound).tolist()

    def at(self, n: int) -> DefectBound:
        return DefectBound(self.r, n, int(self.defect[n]), int(self.bound[n]))


def _large_prime_multiplicity(r, N):
    # w[n] = number of primes p_j (j > r) dividing n
    primes = prime_array(N)
    w = np.zeros(N + 1, dtype=np.int32)
    for p in primes[r:].tolist():
        w[p::p] += 1
    return w


def erdos_defect_profile(r: int, N: int, *, limit: int = config.DENSE_SMOOTH_LIMIT) -> DefectProfile:
    """Vectorized :func:`erdos_defect_bound` for all ``n <= N``.

    ``sum_{j>r} floor(n/p_j)`` counts pairs (p_j, multiple of p_j <= n), so it
    equals the running total of the number of large prime divisors.
    """
    _check(r, N, limit)
    smooth = np.zeros(N + 1, dtype=np.int64)
    smooth[smooth_members(r, N, limit=limit).members] = 1
    n = np.arange(N + 1, dtype=np.int64)
    defect = n - np.cumsum(smooth)
    bound = np.cumsum(_large_prime_multiplicity(r, N), dtype=np.int64)
    return DefectProfile(r, N, defect, bound)


# ---------------------------------------------------------------------------
# prime reciprocal sums


def _exact_guard(B, exact_limit):
    if B < 0:
        raise DomainError("B must be non-negative")
    if B > exact_limit:
        raise BoundExceededError(
            f"exact reciprocal sums are limited to B <= {exact_limit}; "
            "use prime_reciprocal_bounds for larger B"
        )


def tail_reciprocal_sum(r: int, B: int, *,
                        exact_limit: int = config.EXACT_RECIPROCAL_LIMIT) -> Fraction:
    """Exact ``sum 1/p_j`` over ``j > r`` with ``p_j <= B``."""
    if r < 0:
        raise DomainError("r must be non-negative")
    _exact_guard(B, exact_limit)
    return reciprocal_sum(prime_array(B)[r:].tolist())


def prime_reciprocal_partial_sum(B: int, *,
                                 exact_limit: int = config.EXACT_RECIPROCAL_LIMIT) -> Fraction:
    """Exact ``sum 1/p`` over primes ``p <= B``.

    >>> prime_reciprocal_partial_sum(10)
    Fraction(247, 210)
    """
    return tail_reciprocal_sum(0, B, exact_limit=exact_limit)


def _scaled_terms(primes, digits):
    scale = 10**digits
    lo = [scale // p for p in primes]
    hi = [-(-scale // p) for p in primes]
    return scale, lo, hi


def prime_reciprocal_bounds(B: int, digits: int = 30, r: int = 0, *,
                            limit: int = config.SIEVE_LIMIT) -> tuple[Fraction, Fraction]:
    """Certified enclosure ``lo <= sum_{j>r, p_j<=B} 1/p_j <= hi``.

    Each term is rounded down and up at ``digits`` decimal places, so the
    width is at most ``pi(B) * 10**-digits``.
    """
    primes = prime_array(B, limit=limit)[r:].tolist()
    scale, lo, hi = _scaled_terms(primes, digits)
    return Fraction(sum(lo), scale), Fraction(sum(hi), scale)


def minimal_r_for_tail(B: int, theta=Fraction(1, 2), *, digits: int = 30,
                       limit: int = config.SIEVE_LIMIT) -> int:
    """Smallest ``r >= 0`` with ``tail_reciprocal_sum(r, B) <= theta``.

    Tails are compared through certified fixed-point enclosures; only an
    enclosure straddling ``theta`` falls back to the exact sum.
    """
    theta = parse_rational(theta)
    if theta < 0:
        raise DomainError("theta must be non-negative")
    primes = prime_array(B, limit=limit).tolist()
    scale, lo, hi = _scaled_terms(primes, digits)
    # suffix sums: lo_suf[r] = sum over primes with index >= r (0-based)
    lo_suf = list(accumulate(reversed(lo), initial=0))[::-1]
    hi_suf = list(accumulate(reversed(hi), initial=0))[::-1]
    threshold = theta * scale

    def small_enough(r):
        if hi_suf[r] <= threshold:
            return True
        if lo_suf[r] > threshold:
            return False
        return reciprocal_sum(primes[r:]) <= theta

    # tails decrease in r and the tail at r = pi(B) is empty
    return bisect.bisect_left(range(len(primes) + 1), True, key=small_enough)


@dataclass(frozen=True)
class DensityRow:
    N: int
    count: int
    ratio: Fraction
    lower_bound: Fraction

    @property
    def bound_holds(self) -> bool:
        return self.ratio >= self.lower_bound


@dataclass(frozen=True)
class DensityReport:
    r: int
    rows: tuple[DensityRow, ...]

    @property
    def checkpoints(self):
        return self.rows

    @property
    def lower_bound(self) -> Fraction:
        """``1 - tail sum`` at the last checkpoint."""
        return self.rows[-1].lower_bound if self.rows else Fraction(1)


def density_profile(r: int, checkpoints, *, limit: int = config.DENSE_SMOOTH_LIMIT,
                    exact_limit: int = config.EXACT_RECIPROCAL_LIMIT) -> DensityReport:
    """Counts and ratios of ``P_r`` at each checkpoint.

    ``lower_bound = 1 - sum_{j>r, p_j<=N} 1/p_j`` at each N; it bounds the
    ratio from below because ``floor(N/p) <= N/p``. A finite ratio is all
    that is reported: the upper density itself is a limit and is never
    claimed.
    """
    checkpoints = [int(n) for n in checkpoints]
    if any(b <= a for a, b in zip(checkpoints, checkpoints[1:])):
        raise DomainError("checkpoints must be strictly ascending")
    if not checkpoints:
        return DensityReport(r, ())
    smooth = smooth_members(r, checkpoints[-1], limit=limit)
    rows = []
    for N in checkpoints:
        count = smooth.count_upto(N)
        tail = tail_reciprocal_sum(r, N, exact_limit=exact_limit)
        # gcd(den - num, den) = gcd(num, den) = 1
        lower = _coprime_fraction(tail.denominator - tail.numerator, tail.denominator)
        rows.append(DensityRow(N, count, Fraction(count, N), lower))
    return DensityReport(r, tuple(rows))
