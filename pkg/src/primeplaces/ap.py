"""Arithmetic-progression search over finite sets of positive integers.

Sets are converted to a sorted member array plus a membership bit vector;
every search is a scan over (first term, second term) pairs in ascending
order, so the first hit is the lexicographically smallest ``(a, d)``.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import config
from .arith import iroot
from .classes import ExponentClass, class_representative, exponent_class, partition_classes
from .errors import BoundExceededError, ClassMismatchError, DomainError
from .smooth import SmoothSet

__all__ = [
    "APWitness",
    "find_3ap",
    "find_kap",
    "all_3aps",
    "ap_free_max",
    "class_ap_scan",
    "scan_partition",
    "ap_to_power_witness",
]


@dataclass(frozen=True, order=True)
class APWitness:
    """``a, a+d, ..., a+(k-1)d`` with ``a >= 1`` and ``d >= 1``."""

    a: int
    d: int
    k: int = 3

    def __post_init__(self):
        if self.d < 1:
            raise DomainError("progressions need a common difference d >= 1")
        if self.a < 1:
            raise DomainError("progressions live in the positive integers")
        if self.k < 3:
            raise DomainError("progression length must be >= 3")

    def terms(self) -> list[int]:
        return [self.a + i * self.d for i in range(self.k)]

    def lies_in(self, members) -> bool:
        members = members if isinstance(members, (set, frozenset)) else set(_as_array(members).tolist())
        return all(t in members for t in self.terms())

    @classmethod
    def certify(cls, a, d, k, members) -> APWitness:
        w = cls(int(a), int(d), int(k))
        if not w.lies_in(members):
            raise DomainError(f"{w.terms()} is not contained in the given set")
        return w


def _as_array(members) -> np.ndarray:
    if isinstance(members, SmoothSet):
        return members.members
    if isinstance(members, np.ndarray):
        arr = members.astype(np.int64, copy=False)
    else:
        arr = np.fromiter((int(x) for x in members), dtype=np.int64)
    arr = np.unique(arr)
    if arr.size and arr[0] < 1:
        raise DomainError("sets must consist of positive integers")
    return arr


def _bitvector(arr, limit):
    top = int(arr[-1]) if arr.size else 0
    if top > limit:
        raise BoundExceededError(f"set maximum {top} exceeds bit-vector limit {limit}")
    mask = np.zeros(top + 1, dtype=bool)
    mask[arr] = True
    return mask


def _scan_pairs(arr, mask, k):
    top = mask.size - 1
    for i in range(arr.size - 1):
        a = int(arr[i])
        d = arr[i + 1 :] - a
        d = d[d <= (top - a) // (k - 1)]
        if d.size == 0:
            continue
        hit = np.ones(d.size, dtype=bool)
        for j in range(2, k):
            hit &= mask[a + j * d]
        idx = np.flatnonzero(hit)
        if idx.size:
            return a, int(d[idx[0]])
    return None


def _scan_midpoints(arr, mask):
    for i in range(arr.size - 1):
        x = int(arr[i])
        z = arr[i + 1 :]
        z = z[(z - x) % 2 == 0]
        if z.size == 0:
            continue
        idx = np.flatnonzero(mask[(x + z) // 2])
        if idx.size:
            return x, (int(z[idx[0]]) - x) // 2
    return None


def find_3ap(members, strategy: str = "pairs", *, limit: int = config.AP_SET_LIMIT):
    """Lexicographically smallest 3-term progression in ``members``, or None.

    ``strategy="pairs"`` tests ``2b - a`` for each pair ``a < b``;
    ``"midpoint"`` tests ``(x + z) / 2`` for each same-parity pair ``x < z``.

    >>> find_3ap({1, 3, 5})
    APWitness(a=1, d=2, k=3)
    """
    arr = _as_array(members)
    mask = _bitvector(arr, limit)
    if strategy == "pairs":
        found = _scan_pairs(arr, mask, 3)
    elif strategy == "midpoint":
        found = _scan_midpoints(arr, mask)
    else:
        raise ValueError(f"unknown strategy {strategy!r}")
    return None if found is None else APWitness(found[0], found[1], 3)


def find_kap(members, k: int, *, limit: int = config.AP_SET_LIMIT):
    """Lexicographically smallest k-term progression in ``members``, or None."""
    if k < 3:
        raise DomainError("k must be >= 3")
    arr = _as_array(members)
    found = _scan_pairs(arr, _bitvector(arr, limit), k)
    return None if found is None else APWitness(found[0], found[1], k)


def all_3aps(members, *, limit: int = config.AP_SET_LIMIT) -> list[APWitness]:
    """Every 3-term progression in ``members``, sorted by ``(a, d)``."""
    arr = _as_array(members)
    mask = _bitvector(arr, limit)
    out = []
    for i in range(arr.size - 1):
        a = int(arr[i])
        d = arr[i + 1 :] - a
        d = d[d <= (mask.size - 1 - a) // 2]
        out.extend(APWitness(a, int(x)) for x in d[mask[a + 2 * d]].tolist())
    return out


# ---------------------------------------------------------------------------
# extremal progression-free sets


def _closes_ap(chosen: int, i: int, k: int) -> bool:
    # chosen is a bitmask over 1..i-1; does i end a k-AP inside chosen | {i}?
    for d in range(1, (i - 1) // (k - 1) + 1):
        if all(chosen >> (i - j * d) & 1 for j in range(1, k)):
            return True
    return False


def ap_free_max(N: int, k: int = 3, *, limit: int = config.AP_FREE_LIMIT):
    """Largest subset of ``[1, N]`` without a k-term progression.

    Returns ``(size, witness)``. Sizes are found for n = 1..N in turn; a set
    of size ``best(n-1) + 1`` in ``[1, n]`` must use both 1 and n, and the
    search prunes whenever the chosen count plus the best size for the
    untouched tail (a translate of ``[1, n - i + 1]``) cannot reach it.
    """
    if k < 3:
        raise DomainError("k must be >= 3")
    if N < 0:
        raise DomainError("N must be non-negative")
    if N > limit:
        raise BoundExceededError(f"exhaustive search limited to N <= {limit}")
    best = [0]
    witness = [0]  # bitmask
    for n in range(1, N + 1):
        target = best[-1] + 1
        found = None

        def dfs(i, chosen, size):
            nonlocal found
            if size == target:
                found = chosen
                return True
            if i > n:
                return False
            rest = n - i + 1
            if size + (best[rest] if rest < n else target) < target:
                return False
            if i == n or i == 1:
                options = (True,)
            else:
                options = (True, False)
            for take in options:
                if take:
                    if _closes_ap(chosen, i, k):
                        continue
                    if dfs(i + 1, chosen | 1 << i, size + 1):
                        return True
                elif dfs(i + 1, chosen, size):
                    return True
            return False

        if dfs(1, 0, 0):
            best.append(target)
            witness.append(found)
        else:
            best.append(best[-1])
            witness.append(witness[-1])
    members = [i for i in range(1, N + 1) if witness[N] >> i & 1]
    return best[N], members


# ---------------------------------------------------------------------------
# scanning exponent classes


def scan_partition(part, k: int = 3, *, threads: int = 1) -> list[tuple[ExponentClass, APWitness]]:
    """Smallest k-AP witness in each class of an existing partition."""
    items = list(part.classes.items())

    def scan(item):
        cls, members = item
        return cls, find_kap(members, k)

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(scan, items))
    else:
        results = [scan(item) for item in items]
    return [(cls, w) for cls, w in results if w is not None]


def class_ap_scan(r: int, N: int, m: int, k: int = 3, *, threads: int = 1,
                  budget: int = config.CLASS_BUDGET) -> list[tuple[ExponentClass, APWitness]]:
    """Smallest k-AP witness in each exponent class of ``P_r`` up to N.

    Classes without a progression are omitted, so an empty list means no
    class holds a k-term progression below N.
    """
    return scan_partition(partition_classes(r, N, m, budget=budget), k, threads=threads)


def ap_to_power_witness(w: APWitness, cls: ExponentClass) -> list[tuple[int, int]]:
    """Divide each term by the class representative and take m-th roots.

    Terms of one class share their exponents mod m, so each quotient is an
    exact m-th power and the quotients again form a progression.
    """
    R = class_representative(cls)
    out = []
    for term in w.terms():
        if exponent_class(term, cls.r, cls.m) != cls:
            raise ClassMismatchError(f"{term} does not lie in class {cls.label()}")
        q, rem = divmod(term, R)
        root, exact = iroot(q, cls.m)
        assert rem == 0 and exact, (term, R, cls)
        out.append((q, root))
    return out
