"""Alexander polynomials, torsion coefficients and genera.

Everything here is exact integer arithmetic. Torsion coefficients of an
L-space surgery are recovered from a changemaker vector by minimizing the
norm of characteristic vectors over residue classes mod 2p.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Mapping, Optional, Sequence

import numpy as np

from .lattices import is_changemaker_fast

__all__ = [
    "LaurentPoly",
    "TorsionCoeffs",
    "TorusKnot",
    "torus_alexander",
    "torus_genus",
    "cable_genus",
    "torsion_from_changemaker",
    "torsion_bruteforce",
    "alexander_from_torsion",
    "torsion_from_alexander",
    "genus_from_changemaker",
]


class LaurentPoly:
    """Finitely supported integer Laurent polynomial sum a_i t^i."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Mapping[int, int]):
        self._coeffs = {int(e): int(c) for e, c in coeffs.items() if c}

    @classmethod
    def from_symmetric(cls, a: Sequence[int]) -> "LaurentPoly":
        """Build from a_0, a_1, ..., a_d with a_{-i} = a_i."""
        coeffs = {}
        for i, c in enumerate(a):
            coeffs[i] = coeffs[-i] = c
        return cls(coeffs)

    @classmethod
    def from_terms(cls, terms) -> "LaurentPoly":
        return cls(dict(terms))

    def __getitem__(self, e: int) -> int:
        return self._coeffs.get(e, 0)

    def __eq__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(frozenset(self._coeffs.items()))

    @property
    def degree(self) -> int:
        return max(self._coeffs, default=0)

    def is_symmetric(self) -> bool:
        return all(self[-e] == c for e, c in self._coeffs.items())

    def evaluate(self, t) -> Fraction:
        return sum((c * Fraction(t) ** e for e, c in self._coeffs.items()), Fraction(0))

    def terms(self) -> list[tuple[int, int]]:
        """Sparse (exponent, coefficient) pairs, highest exponent first."""
        return sorted(self._coeffs.items(), reverse=True)

    def __repr__(self):
        return f"LaurentPoly({dict(self.terms())})"

    def __str__(self):
        if not self._coeffs:
            return "0"
        parts = []
        for e, c in self.terms():
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                var = "t" if e == 1 else f"t^{e}"
                body = var if mag == 1 else f"{mag}*{var}"
            parts.append(("-" if c < 0 else "+") + body)
        text = "".join(parts)
        return text[1:] if text[0] == "+" else text


class TorsionCoeffs:
    """Torsion coefficients t_0, ..., t_H; t_i = 0 beyond the horizon H.

    Equality ignores trailing zeros, so sequences computed with different
    horizons compare by content.
    """

    __slots__ = ("values",)

    def __init__(self, values: Sequence[int]):
        self.values = tuple(int(v) for v in values)

    @property
    def horizon(self) -> int:
        return len(self.values) - 1

    def __getitem__(self, i: int) -> int:
        if i < 0:
            raise IndexError("torsion coefficients are indexed from 0")
        return self.values[i] if i < len(self.values) else 0

    def _trimmed(self) -> tuple[int, ...]:
        v = list(self.values)
        while v and v[-1] == 0:
            v.pop()
        return tuple(v)

    def __eq__(self, other):
        if not isinstance(other, TorsionCoeffs):
            return NotImplemented
        return self._trimmed() == other._trimmed()

    def __hash__(self):
        return hash(self._trimmed())

    def __repr__(self):
        return f"TorsionCoeffs({list(self.values)})"


@dataclass(frozen=True)
class TorusKnot:
    """Positive torus knot T_{r,s}, stored with r > s >= 2."""

    r: int
    s: int

    def __post_init__(self):
        r, s = max(self.r, self.s), min(self.r, self.s)
        if s < 2:
            raise ValueError(f"T({self.r},{self.s}) is trivial; need both parameters >= 2")
        if gcd(r, s) != 1:
            raise ValueError(f"T({self.r},{self.s}): parameters must be coprime")
        object.__setattr__(self, "r", r)
        object.__setattr__(self, "s", s)

    def __str__(self):
        return f"T_{{{self.r},{self.s}}}"


# -- torus knots and cables -------------------------------------------------


def _polymul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _polydiv_exact(num: list[int], den: list[int]) -> list[int]:
    # den is monic in its leading coefficient
    num = num[:]
    dn = len(den) - 1
    assert den[-1] == 1
    q = [0] * (len(num) - dn)
    for i in range(len(q) - 1, -1, -1):
        c = num[i + dn]
        q[i] = c
        if c:
            for j, d in enumerate(den):
                num[i + j] -= c * d
    if any(num):
        raise ArithmeticError("polynomial division left a remainder")
    return q


def _cyclo_minus_one(k: int) -> list[int]:
    """Coefficients of t^k - 1, constant term first."""
    return [-1] + [0] * (k - 1) + [1]


def torus_alexander(knot: TorusKnot) -> LaurentPoly:
    """Symmetrized (t^{rs}-1)(t-1) / ((t^r-1)(t^s-1))."""
    r, s = knot.r, knot.s
    num = _polymul(_cyclo_minus_one(r * s), _cyclo_minus_one(1))
    den = _polymul(_cyclo_minus_one(r), _cyclo_minus_one(s))
    q = _polydiv_exact(num, den)
    shift = (len(q) - 1) // 2
    return LaurentPoly({i - shift: c for i, c in enumerate(q)})


def torus_genus(knot: TorusKnot) -> int:
    return (knot.r - 1) * (knot.s - 1) // 2


def cable_genus(m: int, k: int = 2, g_companion: int = 0) -> int:
    """Genus of the (m, 2)-cable of a knot of genus ``g_companion``.

    With m = 2h + 1 this is 2 g_companion + h. Only 2-cables are supported.
    """
    if k != 2:
        raise ValueError("only (m, 2)-cables are supported")
    if m < 1 or m % 2 == 0:
        raise ValueError(f"cable parameter m must be a positive odd integer, got {m}")
    if g_companion < 0:
        raise ValueError("companion genus must be nonnegative")
    return 2 * g_companion + (m - 1) // 2


# -- changemaker pipeline ---------------------------------------------------


def _validate_pair(sigma: Sequence[int], p: int) -> tuple[int, ...]:
    sigma = tuple(int(x) for x in sigma)
    if p < 1:
        raise ValueError("p must be positive")
    if sum(x * x for x in sigma) != p:
        raise ValueError(f"<sigma, sigma> = {sum(x * x for x in sigma)} does not equal p = {p}")
    if not is_changemaker_fast(sigma):
        raise ValueError(f"{sigma} is not a changemaker vector")
    return sigma


def torsion_from_changemaker(
    sigma: Sequence[int], p: int, bound: Optional[int] = None
) -> TorsionCoeffs:
    """Torsion coefficients t_0..t_{floor(p/2)} of a knot whose p-surgery
    bounds a sharp manifold with changemaker vector ``sigma``.

    t_i is the minimum of (|c|^2 - len(sigma)) / 8 over vectors c with all
    coordinates odd and <c, sigma> = 2i - p (mod 2p). The minimum is found
    by a shortest-path sweep over residues mod 2p, one coordinate at a time,
    with candidate coordinates |c_j| <= ``bound`` (default 2p + 1).
    """
    sigma = _validate_pair(sigma, p)
    if bound is None:
        bound = 2 * p + 1
    mod = 2 * p
    big = np.iinfo(np.int64).max // 4
    dp = np.full(mod, big, dtype=np.int64)
    dp[0] = 0
    odd = range(-bound if bound % 2 else -bound + 1, bound + 1, 2)
    for s in sigma:
        step: dict[int, int] = {}
        for c in odd:
            r = (c * s) % mod
            if c * c < step.get(r, big):
                step[r] = c * c
        new = np.full(mod, big, dtype=np.int64)
        for r, cost in step.items():
            np.minimum(new, np.roll(dp, r) + cost, out=new)
        dp = new
    dim = len(sigma)
    values = []
    for i in range(p // 2 + 1):
        best = int(dp[(2 * i - p) % mod])
        assert best < big, "unreachable residue class"
        assert (best - dim) % 8 == 0
        values.append((best - dim) // 8)
    return TorsionCoeffs(values)


def torsion_bruteforce(sigma: Sequence[int], p: int) -> TorsionCoeffs:
    """Reference computation of the same minimum by exhaustive search.

    Enumerates every odd vector with |c|^2 <= B and coordinates bounded by
    2p + 1, doubling B until each needed residue class has been hit.
    """
    sigma = _validate_pair(sigma, p)
    dim, mod = len(sigma), 2 * p
    box = 2 * p + 1
    need = {(2 * i - p) % mod for i in range(p // 2 + 1)}
    budget = dim + 8
    while True:
        best: dict[int, int] = {}
        c = [0] * dim

        def rec(j: int, left: int, dot: int, norm: int) -> None:
            if j == dim:
                r = dot % mod
                if norm < best.get(r, norm + 1):
                    best[r] = norm
                return
            v = 1
            while v <= box and v * v <= left:
                for cv in (v, -v):
                    rec(j + 1, left - v * v, dot + cv * sigma[j], norm + v * v)
                v += 2

        rec(0, budget, 0, 0)
        if need <= best.keys():
            return TorsionCoeffs(
                [(best[(2 * i - p) % mod] - dim) // 8 for i in range(p // 2 + 1)]
            )
        budget *= 2


def alexander_from_torsion(t: TorsionCoeffs) -> LaurentPoly:
    """a_i = t_{i-1} - 2 t_i + t_{i+1} for i > 0; a_0 fixed by Delta(1) = 1."""
    top = len(t.values) + 1
    a = [0] + [t[i - 1] - 2 * t[i] + t[i + 1] for i in range(1, top)]
    a[0] = 1 - 2 * sum(a[1:])
    return LaurentPoly.from_symmetric(a)


def torsion_from_alexander(delta: LaurentPoly) -> TorsionCoeffs:
    """Inverse of :func:`alexander_from_torsion`: t_i = sum_{j>=1} j a_{i+j}."""
    if not delta.is_symmetric():
        raise ValueError(f"Alexander polynomial {delta} is not symmetric")
    if delta.evaluate(1) != 1:
        raise ValueError(f"Alexander polynomial {delta} is not normalized (Delta(1) != 1)")
    d = delta.degree
    return TorsionCoeffs(
        [sum(j * delta[i + j] for j in range(1, d - i + 1)) for i in range(d + 1)]
    )


def genus_from_changemaker(sigma: Sequence[int], p: int) -> int:
    """(p - |sigma|_1) / 2."""
    sigma = tuple(int(x) for x in sigma)
    if sum(x * x for x in sigma) != p:
        raise ValueError(f"<sigma, sigma> does not equal p = {p}")
    diff = p - sum(abs(x) for x in sigma)
    if diff < 0 or diff % 2:
        raise ValueError(f"p - |sigma|_1 = {diff} is not a nonnegative even number")
    return diff // 2
