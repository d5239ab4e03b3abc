"""Exponent classes P_r^(v) modulo m and m-th-power-free decomposition."""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import config
from .arith import factorize, first_primes
from .errors import ClassBudgetExceededError, DomainError, NotSmoothError
from .smooth import smooth_exponents

__all__ = [
    "ExponentClass",
    "PowerDecomposition",
    "ClassPartition",
    "exponent_class",
    "class_representative",
    "decompose",
    "partition_classes",
]


@dataclass(frozen=True, order=True)
class ExponentClass:
    """Residues ``v`` of the exponents of ``p_1..p_r`` modulo ``m``."""

    m: int
    v: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "v", tuple(int(x) for x in self.v))
        if self.m < 1:
            raise DomainError("modulus must be >= 1")
        if any(not 0 <= x < self.m for x in self.v):
            raise DomainError(f"residues {self.v} out of range for m = {self.m}")

    @property
    def r(self) -> int:
        return len(self.v)

    def label(self) -> str:
        return "(" + ",".join(map(str, self.v)) + ")"


@dataclass(frozen=True)
class PowerDecomposition:
    """``n = R * t**m`` with ``R`` m-th-power-free."""

    n: int
    R: int
    t: int
    m: int


def exponent_class(n: int, r: int, m: int) -> ExponentClass:
    if m < 1:
        raise DomainError("modulus must be >= 1")
    fac = factorize(n)
    primes = first_primes(r)
    extra = [p for p in fac.primes() if p not in primes]
    if extra:
        raise NotSmoothError(f"{n} has prime factor {extra[0]} beyond p_{r}")
    return ExponentClass(m, tuple(fac.exponent(p) % m for p in primes))


def class_representative(cls: ExponentClass) -> int:
    """``prod p_i ** v_i``: the smallest member and the only m-th-power-free one."""
    return math.prod(p**e for p, e in zip(first_primes(cls.r), cls.v))


def decompose(n: int, m: int) -> PowerDecomposition:
    """Split ``n`` into its m-th-power-free part and an m-th power.

    >>> decompose(96, 3)
    PowerDecomposition(n=96, R=12, t=2, m=3)
    """
    if m < 2:
        raise DomainError("decompose needs m >= 2")
    if n < 1:
        raise DomainError("decompose needs n >= 1")
    R = t = 1
    for p, e in factorize(n):
        R *= p ** (e % m)
        t *= p ** (e // m)
    return PowerDecomposition(n, R, t, m)


@dataclass(frozen=True)
class ClassPartition:
    r: int
    N: int
    m: int
    classes: dict  # ExponentClass -> tuple of members, in ascending class order
    densest: tuple  # (ExponentClass, count)

    @property
    def total(self) -> int:
        return sum(len(ms) for ms in self.classes.values())

    def __len__(self):
        return len(self.classes)


def partition_classes(r: int, N: int, m: int, *,
                      budget: int = config.CLASS_BUDGET) -> ClassPartition:
    """Split ``P_r`` up to N by exponent vector mod m.

    Only non-empty classes are materialized. The densest class is the one
    with most members, ties going to the lexicographically smallest ``v``.
    """
    if m < 1:
        raise DomainError("modulus must be >= 1")
    if m**r > budget:
        raise ClassBudgetExceededError(f"{m}^{r} classes exceed the budget {budget}")
    members, exps = smooth_exponents(r, N)
    keys = exps % m
    groups: dict[tuple, list] = {}
    for n, key in zip(members.tolist(), map(tuple, keys.tolist())):
        groups.setdefault(key, []).append(n)
    classes = {ExponentClass(m, v): tuple(groups[v]) for v in sorted(groups)}
    densest = max(classes.items(), key=lambda kv: len(kv[1]), default=None)
    # max keeps the first maximal entry, and classes are in ascending v order
    best = (densest[0], len(densest[1])) if densest else None
    return ClassPartition(r, N, m, classes, best)

