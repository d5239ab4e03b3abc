"""Exhaustive checks that no 3-term progression of n-th powers exists.

A 3-AP ``x^n < y^n < z^n`` is the same as ``x^n + z^n = 2 y^n``. The scan
fixes the middle root ``y`` and, for every ``x < y``, asks whether
``2 y^n - x^n`` is the n-th power of some ``z`` in ``(y, B]``. That settles
all ``(y - 1)(B - y)`` triples with middle root ``y`` at once; summed over
``y`` this is ``C(B, 3)``, the number reported as ``triples_checked``.
"""

from __future__ import annotations

import enum
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .ap import APWitness
from .arith import iroot
from .errors import DomainError

__all__ = [
    "Statement",
    "VerificationReport",
    "power_3ap_roots",
    "verify_no_cube_ap",
    "verify_no_power_ap",
    "verify_no_4_square_ap",
    "square_3ap_search",
]

_INT64_SAFE = 2**62


class Statement(str, enum.Enum):
    NO_CUBE_AP3 = "NoCubeAP3"
    NO_FOUR_SQUARE_AP = "NoFourSquareAP"
    NO_POWER_AP3 = "NoPowerAP3"


@dataclass(frozen=True)
class VerificationReport:
    statement: Statement
    exponent: int
    bound: int
    triples_checked: int
    counterexamples: tuple[tuple[int, ...], ...] = ()

    @property
    def holds(self) -> bool:
        return not self.counterexamples


def _scan_rows(n, B, ys, primitive_only):
    hits, checked = [], 0
    if 2 * B**n < _INT64_SAFE:
        powers = np.arange(B + 1, dtype=np.int64) ** n
        for y in ys:
            xs = np.arange(1, y, dtype=np.int64)
            if primitive_only:
                xs = xs[np.gcd(xs, y) == 1]
            checked += xs.size * (B - y)
            target = 2 * powers[y] - powers[xs]
            z = np.searchsorted(powers, target)
            ok = z <= B
            ok[ok] = powers[z[ok]] == target[ok]
            hits.extend((int(x), y, int(zz)) for x, zz in zip(xs[ok], z[ok]))
    else:
        for y in ys:
            for x in range(1, y):
                if primitive_only and math.gcd(x, y) != 1:
                    continue
                checked += B - y
                z, exact = iroot(2 * y**n - x**n, n)
                if exact and z <= B:
                    hits.append((x, y, z))
    return hits, checked


def power_3ap_roots(n: int, B: int, *, primitive_only: bool = False, threads: int = 1):
    """All ``(x, y, z)`` with ``1 <= x < y < z <= B`` and ``x^n + z^n = 2 y^n``.

    Returns ``(solutions, triples_checked)``. With ``primitive_only`` only
    pairs with ``gcd(x, y) = 1`` are tried; any solution is a multiple of
    one of those, since a common factor of x and y also divides z.
    """
    if n < 1 or B < 0:
        raise DomainError("need n >= 1 and B >= 0")
    ys = list(range(2, B))
    if threads > 1 and ys:
        strata = [ys[i::threads] for i in range(threads)]
        with ThreadPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(lambda s: _scan_rows(n, B, s, primitive_only), strata))
        hits = [h for part, _ in parts for h in part]
        checked = sum(c for _, c in parts)
    else:
        hits, checked = _scan_rows(n, B, ys, primitive_only)
    return sorted(hits), checked


def verify_no_power_ap(n: int, B: int, *, primitive_only: bool = False,
                       threads: int = 1) -> VerificationReport:
    """No 3-term progression of n-th powers with roots up to B (n >= 3)."""
    if n < 3:
        raise DomainError("n must be >= 3; squares do form 3-term progressions")
    if B < 1:
        raise DomainError("bound must be >= 1")
    hits, checked = power_3ap_roots(n, B, primitive_only=primitive_only, threads=threads)
    stmt = Statement.NO_CUBE_AP3 if n == 3 else Statement.NO_POWER_AP3
    return VerificationReport(stmt, n, B, checked, tuple(hits))


def verify_no_cube_ap(B: int, *, threads: int = 1) -> VerificationReport:
    """No ``x^3 + z^3 = 2 y^3`` with ``1 <= x < y < z <= B``."""
    return verify_no_power_ap(3, B, threads=threads)


def _is_square(n: int) -> tuple[bool, int]:
    if n < 0:
        return False, 0
    r = math.isqrt(n)
    return r * r == n, r


def verify_no_4_square_ap(B: int, *, threads: int = 1) -> VerificationReport:
    """No four squares with roots up to B in arithmetic progression.

    Every 4-term progression ``w^2, x^2, y^2, z^2`` ends in the 3-term one
    ``x^2, y^2, z^2``, so each square 3-AP is tested for the extra term
    ``w^2 = 2 x^2 - y^2`` below it. The term above, ``2 z^2 - y^2``, is
    tested too as a cross-check.
    """
    if B < 1:
        raise DomainError("bound must be >= 1")
    triples, checked = power_3ap_roots(2, B, threads=threads)
    found = set()
    for x, y, z in triples:
        ok, w = _is_square(2 * x * x - y * y)
        if ok and w >= 1:
            found.add((w, x, y, z))
        ok, u = _is_square(2 * z * z - y * y)
        if ok and u <= B:
            found.add((x, y, z, u))
    return VerificationReport(Statement.NO_FOUR_SQUARE_AP, 2, B, checked, tuple(sorted(found)))


def square_3ap_search(B: int) -> list[APWitness]:
    """Every progression ``x^2 < y^2 < z^2`` with ``z <= B``, as witnesses.

    >>> square_3ap_search(7)
    [APWitness(a=1, d=24, k=3)]
    """
    if B < 1:
        raise DomainError("bound must be >= 1")
    triples, _ = power_3ap_roots(2, B)
    return sorted(APWitness(x * x, y * y - x * x, 3) for x, y, _ in triples)
