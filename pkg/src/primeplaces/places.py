"""Valuations at every place of Q, the product formula, weak approximation.

A place is either a prime ``p`` (the p-adic absolute value normalized so
that ``|p|_p = 1/p``) or the archimedean place (the usual absolute value).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .arith import factorize, factorize_large, is_prime, nth_prime, parse_rational, primes_up_to
from .errors import DomainError, InvalidInputError, NotPrimeError

__all__ = [
    "Place",
    "INFINITY",
    "POSITIVE_INFINITY",
    "valuation",
    "absolute_value",
    "product_formula_check",
    "places_of",
    "EuclidWitness",
    "euclid_witness",
    "ApproxItem",
    "ApproxCertificate",
    "crt",
    "weak_approximate",
]

POSITIVE_INFINITY = math.inf


@dataclass(frozen=True, order=True)
class Place:
    """A prime ``p`` or, when ``p is None``, the archimedean place.

    Ordering puts finite places by increasing prime and the archimedean
    place last.
    """

    sort_key: tuple = field(init=False, repr=False, compare=True)
    p: int | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.p is not None:
            if not isinstance(self.p, int) or not is_prime(self.p):
                raise NotPrimeError(f"{self.p!r} is not a prime")
        object.__setattr__(self, "sort_key", (1, 0) if self.p is None else (0, self.p))

    @classmethod
    def finite(cls, p: int) -> Place:
        return cls(p=int(p))

    @property
    def is_archimedean(self) -> bool:
        return self.p is None

    @classmethod
    def parse(cls, text: str) -> Place:
        text = str(text).strip().lower()
        if text in ("inf", "infinity", "oo", "∞", "archimedean"):
            return INFINITY
        try:
            return cls.finite(int(text))
        except ValueError as exc:
            raise DomainError(f"not a place: {text!r}") from exc

    def __str__(self):
        return "inf" if self.p is None else str(self.p)


INFINITY = Place()


def _check_prime(p):
    if isinstance(p, Place):
        if p.is_archimedean:
            raise NotPrimeError("the archimedean place has no valuation exponent")
        return p.p
    p = int(p)
    if not is_prime(p):
        raise NotPrimeError(f"{p} is not a prime")
    return p


def _nu(n: int, p: int) -> int:
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e


def valuation(q, p):
    """Exponent of ``p`` in ``q``; ``math.inf`` for ``q == 0``.

    >>> valuation(Fraction(5, 9), 3)
    -2
    """
    p = _check_prime(p)
    q = parse_rational(q)
    if q == 0:
        return POSITIVE_INFINITY
    return _nu(abs(q.numerator), p) - _nu(q.denominator, p)


def absolute_value(q, place) -> Fraction:
    """``|q|_v`` as an exact rational."""
    q = parse_rational(q)
    if not isinstance(place, Place):
        place = Place.parse(place)
    if place.is_archimedean:
        return abs(q)
    if q == 0:
        return Fraction(0)
    return Fraction(place.p) ** -valuation(q, place.p)


def places_of(q) -> list[Place]:
    """Places where ``|q|_v != 1`` could hold: primes of q plus infinity."""
    q = parse_rational(q)
    primes = set(factorize(abs(q.numerator)).primes()) | set(factorize(q.denominator).primes())
    return [Place.finite(p) for p in sorted(primes)] + [INFINITY]


def product_formula_check(q) -> Fraction:
    """Product of ``|q|_v`` over all places; every omitted place contributes 1."""
    q = parse_rational(q)
    if q == 0:
        raise DomainError("the product formula concerns nonzero rationals")
    out = Fraction(1)
    for v in places_of(q):
        out *= absolute_value(q, v)
    return out


@dataclass(frozen=True)
class EuclidWitness:
    q: Fraction
    primes: tuple[int, ...]
    local_values: tuple[tuple[Place, Fraction], ...]
    partial_product: Fraction
    missing: tuple[tuple[Place, Fraction], ...]

    @property
    def global_product(self) -> Fraction:
        out = self.partial_product
        for _, a in self.missing:
            out *= a
        return out


def euclid_witness(primes) -> EuclidWitness:
    """Rational exceeding 1 at each listed prime and at infinity.

    Uses ``q = (P + 1) / P`` with ``P`` the product of the primes. The
    primes of ``P + 1`` are the places left out of the list; their
    contributions bring the global product back down to exactly 1.
    """
    ps = sorted({_check_prime(p) for p in primes})
    P = math.prod(ps)
    q = Fraction(P + 1, P)
    listed = [Place.finite(p) for p in ps] + [INFINITY]
    local = tuple((v, absolute_value(q, v)) for v in listed)
    partial = math.prod((a for _, a in local), start=Fraction(1))
    missing = tuple(
        (Place.finite(p), absolute_value(q, p)) for p in factorize_large(P + 1).primes()
    )
    return EuclidWitness(q, tuple(ps), local, partial, missing)


# ---------------------------------------------------------------------------
# weak approximation


@dataclass(frozen=True)
class ApproxItem:
    place: Place
    target: Fraction
    epsilon: Fraction
    achieved: Fraction

    @property
    def ok(self) -> bool:
        return self.achieved < self.epsilon


@dataclass(frozen=True)
class ApproxCertificate:
    q: Fraction
    items: tuple[ApproxItem, ...]

    @property
    def ok(self) -> bool:
        return all(item.ok for item in self.items)


def crt(residues, moduli) -> tuple[int, int]:
    """Solve ``x = r_i (mod m_i)`` for pairwise coprime moduli.

    Returns ``(x, M)`` with ``0 <= x < M = prod(m_i)``.
    """
    x, M = 0, 1
    for r, m in zip(residues, moduli):
        if math.gcd(M, m) != 1:
            raise InvalidInputError(f"moduli not coprime: {M} and {m}")
        # x + M t = r (mod m)
        t = ((r - x) * pow(M, -1, m)) % m if m > 1 else 0
        x += M * t
        M *= m
    return x % M, M


def _floor_half_up(x: Fraction) -> int:
    return math.floor(x + Fraction(1, 2))


def weak_approximate(targets, epsilon) -> ApproxCertificate:
    """Find one rational close to each target at its own place.

    ``targets`` is a sequence of ``(place, value)`` pairs with pairwise
    distinct places. Every inequality ``|q - a|_v < epsilon`` in the
    returned certificate has been checked exactly.

    Construction: with ``d`` a common denominator, look for ``q = y / d``.
    At a finite place ``|q - a|_p = |y - d a|_p / |d|_p``, so ``y`` must be
    congruent to ``d a`` modulo a power ``p^m`` with ``p^-m < epsilon |d|_p``;
    CRT gives such an ``x`` modulo ``M``. An archimedean target is then met
    by adding ``M c / q0^s`` where ``q0`` is the smallest prime not listed;
    this shifts ``y`` by at most ``M / (2 q0^s)`` without disturbing any
    listed p-adic condition.
    """
    epsilon = parse_rational(epsilon)
    if epsilon <= 0:
        raise InvalidInputError("epsilon must be positive")
    pairs = []
    for place, value in targets:
        if not isinstance(place, Place):
            place = Place.parse(place)
        pairs.append((place, parse_rational(value)))
    seen = [v for v, _ in pairs]
    if len(set(seen)) != len(seen):
        raise InvalidInputError("places must be pairwise distinct")

    d = math.lcm(1, *(a.denominator for _, a in pairs))
    residues, moduli = [], []
    finite = [(v, a) for v, a in pairs if not v.is_archimedean]
    for v, a in finite:
        p = v.p
        tol = epsilon * Fraction(p) ** -_nu(d, p)  # epsilon * |d|_p
        m = 0
        while Fraction(1, p**m) >= tol:
            m += 1
        residues.append(int(a * d) % p**m)
        moduli.append(p**m)
    x, M = crt(residues, moduli)
    y = Fraction(x)

    arch = [a for v, a in pairs if v.is_archimedean]
    if arch:
        listed = {v.p for v, _ in finite}
        q0 = next(p for p in primes_up_to(max(listed, default=2) + 1) + [None] if p not in listed)
        if q0 is None:
            q0 = nth_prime(len(listed) + 1)
        gap = arch[0] * d - x
        s = 0
        while Fraction(M, q0**s) >= epsilon * d:
            s += 1
        c = _floor_half_up(gap * q0**s / M)
        y = x + Fraction(M * c, q0**s)
    q = y / d

    items = tuple(
        ApproxItem(v, a, epsilon, absolute_value(q - a, v)) for v, a in pairs
    )
    cert = ApproxCertificate(q, items)
    if not cert.ok:  # pragma: no cover - would be a bug in the construction
        raise AssertionError(f"certificate failed: {cert}")
    return cert
