"""Exact slope arithmetic, degeneracy loci, negative continued fractions and
lens-space equivalence."""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Sequence

__all__ = [
    "Slope",
    "DegeneracyLocus",
    "LensSpace",
    "LensRelation",
    "neg_cf_expand",
    "neg_cf_eval",
    "delta_distance",
    "reduce_locus",
    "lens_equiv",
]

_SLOPE_RE = re.compile(r"^(-?\d+)(?:/(\d+))?$")


@dataclass(frozen=True)
class Slope:
    """A surgery slope p/q, stored reduced with q >= 1."""

    p: int
    q: int = 1

    def __post_init__(self):
        p, q = int(self.p), int(self.q)
        if q == 0:
            raise ValueError("slope denominator must be nonzero")
        if q < 0:
            p, q = -p, -q
        c = gcd(p, q)
        object.__setattr__(self, "p", p // c)
        object.__setattr__(self, "q", q // c)

    @classmethod
    def parse(cls, text: str) -> "Slope":
        """Parse ``"p"`` or ``"p/q"``; whitespace is not accepted."""
        m = _SLOPE_RE.match(text)
        if m is None:
            raise ValueError(f"malformed slope {text!r}")
        p = int(m.group(1))
        q = int(m.group(2)) if m.group(2) is not None else 1
        if q == 0:
            raise ValueError(f"malformed slope {text!r}: zero denominator")
        return cls(p, q)

    def as_fraction(self) -> Fraction:
        return Fraction(self.p, self.q)

    def __str__(self):
        return f"{self.p}/{self.q}"


@dataclass(frozen=True)
class DegeneracyLocus:
    """Boundary locus m/n of a very full lamination; m and n need not be coprime."""

    m: int
    n: int

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("locus denominator must be nonnegative")
        if self.m == 0 and self.n == 0:
            raise ValueError("locus (0, 0) is not allowed")

    def __str__(self):
        return f"{self.m}/{self.n}"


@dataclass(frozen=True)
class LensSpace:
    """L(p, q), oriented as p/q surgery on the unknot.

    The representative is canonicalized to ``1 <= q < p`` (``q = 0`` for the
    degenerate ``p = 1``, which is S^3).
    """

    p: int
    q: int

    def __post_init__(self):
        if self.p < 1:
            raise ValueError("lens space order must be positive")
        if gcd(self.p, self.q) != 1:
            raise ValueError(f"L({self.p},{self.q}): parameters not coprime")
        object.__setattr__(self, "q", self.q % self.p)

    def mirror(self) -> "LensSpace":
        return LensSpace(self.p, -self.q)

    def __str__(self):
        return f"L({self.p},{self.q})"


class LensRelation(str, enum.Enum):
    ORIENT_PRESERVING = "OrientPreserving"
    ORIENT_REVERSING = "OrientReversing"
    NOT_HOMEOMORPHIC = "NotHomeomorphic"


def neg_cf_expand(p: int, q: int) -> list[int]:
    """Expand p/q > 1 as a_1 - 1/(a_2 - 1/(... - 1/a_k)) with every a_i >= 2.

    >>> neg_cf_expand(13, 3)
    [5, 2, 2]
    """
    if not 0 < q < p:
        raise ValueError(f"need 0 < q < p, got p={p}, q={q}")
    if gcd(p, q) != 1:
        raise ValueError(f"p={p} and q={q} are not coprime")
    terms = []
    while q:
        a = -(-p // q)
        terms.append(a)
        p, q = q, a * q - p
    return terms


def neg_cf_eval(terms: Sequence[int]) -> tuple[int, int]:
    """Evaluate a negative continued fraction back to a reduced pair (p, q)."""
    if not terms:
        raise ValueError("empty continued fraction")
    if any(a < 2 for a in terms):
        raise ValueError("all continued fraction terms must be >= 2")
    # p/q = a - 1/(p'/q') = (a p' - q') / p'
    p, q = 1, 0
    for a in reversed(terms):
        p, q = a * p - q, p
    return p, q


def delta_distance(d: DegeneracyLocus, s: Slope) -> int:
    """Distance |p n - q m| between a slope and a (possibly unreduced) locus."""
    return abs(s.p * d.n - s.q * d.m)


def reduce_locus(d: DegeneracyLocus) -> DegeneracyLocus:
    """Divide out gcd(|m|, n); every m/0 becomes 1/0."""
    if d.n == 0:
        return DegeneracyLocus(1, 0)
    c = gcd(d.m, d.n)
    return DegeneracyLocus(d.m // c, d.n // c)


def lens_equiv(a: LensSpace, b: LensSpace) -> LensRelation:
    """Decide homeomorphism type between two lens spaces.

    Orientation-preserving is tested first: q' = q^{+-1} (mod p); then
    orientation-reversing: q' = -q^{+-1} (mod p).
    """
    if a.p != b.p:
        return LensRelation.NOT_HOMEOMORPHIC
    p = a.p
    if (b.q - a.q) % p == 0 or (a.q * b.q - 1) % p == 0:
        return LensRelation.ORIENT_PRESERVING
    if (b.q + a.q) % p == 0 or (a.q * b.q + 1) % p == 0:
        return LensRelation.ORIENT_REVERSING
    return LensRelation.NOT_HOMEOMORPHIC
