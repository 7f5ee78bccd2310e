"""Surgeries on torus knots, spherical-type recognition, and the slope gates
for exceptional surgeries on hyperbolic fibered knots."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from math import gcd
from typing import Union

from .invariants import TorusKnot
from .slopes import DegeneracyLocus, LensSpace, Slope, delta_distance, reduce_locus

__all__ = [
    "Reducible",
    "Lens",
    "SeifertFibered",
    "SurgeryClass",
    "SphericalType",
    "MonodromyClass",
    "Verdict",
    "ExceptionalVerdict",
    "classify_torus_surgery",
    "spherical_type",
    "allowed_degeneracy_loci",
    "exceptional_gate",
    "characterizing_bound",
    "characterizing_gate",
    "satellite_slope_transfer",
    "cable_inequality_infeasible",
]


class SphericalType(str, enum.Enum):
    CYCLIC = "Cyclic"
    PRISM = "Dihedral/prism"
    TETRAHEDRAL = "Tetrahedral"
    OCTAHEDRAL = "Octahedral"
    ICOSAHEDRAL = "Icosahedral"
    NOT_FINITE = "NotFinite"


class MonodromyClass(str, enum.Enum):
    RIGHT_VEERING = "RightVeering"
    LEFT_VEERING = "LeftVeering"
    NEITHER = "Neither"


class Verdict(str, enum.Enum):
    MUST_BE_HYPERBOLIC = "MustBeHyperbolic"
    POSSIBLY_EXCEPTIONAL = "PossiblyExceptional"


@dataclass(frozen=True)
class Reducible:
    pieces: tuple[LensSpace, LensSpace]
    kind = "reducible"

    def to_dict(self):
        return {"kind": self.kind, "pieces": [_lens_dict(L) for L in self.pieces]}

    def __str__(self):
        return "Reducible " + "#".join(map(str, self.pieces))


@dataclass(frozen=True)
class Lens:
    lens: LensSpace
    kind = "lens"

    def to_dict(self):
        return {"kind": self.kind, "lens": _lens_dict(self.lens)}

    def __str__(self):
        return f"Lens {self.lens}"


@dataclass(frozen=True)
class SeifertFibered:
    base: tuple[int, int, int]
    kind = "sfs"

    def __post_init__(self):
        if len(self.base) != 3 or min(self.base) < 1:
            raise ValueError("SFS base must be a triple of integers >= 1")

    @property
    def spherical_type(self) -> SphericalType:
        return spherical_type(self.base)

    def to_dict(self):
        return {
            "kind": self.kind,
            "base": list(self.base),
            "spherical_type": self.spherical_type.value,
        }

    def __str__(self):
        a, b, c = self.base
        return f"SFS({a},{b},{c})"


SurgeryClass = Union[Reducible, Lens, SeifertFibered]


def _lens_dict(L: LensSpace) -> dict:
    return {"p": L.p, "q": L.q}


def classify_torus_surgery(knot: TorusKnot, slope: Slope) -> SurgeryClass:
    """Moser's classification of p/q surgery on T_{r,s}.

    Reducible at p/q = rs, the lens space L(|p|, q s^2) when |p - qrs| = 1,
    and otherwise Seifert fibered over S^2(r, s, |p - qrs|).
    """
    r, s = knot.r, knot.s
    p, q = slope.p, slope.q
    if q == 1 and p == r * s:
        return Reducible((LensSpace(r, s), LensSpace(s, r)))
    c = abs(p - q * r * s)
    if c == 1:
        return Lens(LensSpace(abs(p), q * s * s))
    return SeifertFibered((r, s, c))


def spherical_type(triple) -> SphericalType:
    a, b, c = sorted(int(x) for x in triple)
    if a < 1:
        raise ValueError("orbifold multiplicities must be >= 1")
    if a == 1:
        return SphericalType.CYCLIC
    if (a, b) == (2, 2):
        return SphericalType.PRISM
    if (a, b) == (2, 3):
        if c == 3:
            return SphericalType.TETRAHEDRAL
        if c == 4:
            return SphericalType.OCTAHEDRAL
        if c == 5:
            return SphericalType.ICOSAHEDRAL
    return SphericalType.NOT_FINITE


def allowed_degeneracy_loci(genus: int, monodromy: MonodromyClass) -> list[DegeneracyLocus]:
    """Degeneracy loci of the stable lamination compatible with the genus bound
    |m| <= 4g - 2 and the sign forced by the veering class."""
    if genus < 1:
        raise ValueError("genus of a hyperbolic fibered knot must be >= 1")
    top = 4 * genus - 2
    monodromy = MonodromyClass(monodromy)
    if monodromy is MonodromyClass.RIGHT_VEERING:
        return [DegeneracyLocus(m, 1) for m in range(2, top + 1)]
    if monodromy is MonodromyClass.LEFT_VEERING:
        return [DegeneracyLocus(m, 1) for m in range(-top, -1)]
    return [DegeneracyLocus(m, 0) for m in range(1, top + 1)]


@dataclass(frozen=True)
class ExceptionalVerdict:
    verdict: Verdict
    witness: DegeneracyLocus
    min_delta: int
    lspace_refinement: bool = False

    def to_dict(self):
        return {
            "verdict": self.verdict.value,
            "witness": str(self.witness),
            "min_delta": self.min_delta,
            "lspace_refinement": self.lspace_refinement,
        }


def exceptional_gate(
    genus: int, monodromy: MonodromyClass, slope: Slope, small_sfs_lspace: bool = False
) -> ExceptionalVerdict:
    """Sufficient test for S^3_{p/q}(K) to be hyperbolic.

    Takes the minimum distance from the slope to every allowed degeneracy
    slope; above 2 the surgery must be hyperbolic. ``small_sfs_lspace``
    asserts the surgered manifold is a small Seifert fibered L-space, which
    additionally excludes p/q = 4g for right-veering monodromy.
    """
    monodromy = MonodromyClass(monodromy)
    best = None
    for locus in allowed_degeneracy_loci(genus, monodromy):
        d = delta_distance(reduce_locus(locus), slope)
        if best is None or d < best[0]:
            best = (d, locus)
    d, witness = best
    if (
        small_sfs_lspace
        and monodromy is MonodromyClass.RIGHT_VEERING
        and slope.q == 1
        and slope.p == 4 * genus
    ):
        return ExceptionalVerdict(Verdict.MUST_BE_HYPERBOLIC, witness, d, lspace_refinement=True)
    verdict = Verdict.MUST_BE_HYPERBOLIC if d > 2 else Verdict.POSSIBLY_EXCEPTIONAL
    return ExceptionalVerdict(verdict, witness, d)


def characterizing_bound(knot: TorusKnot) -> int:
    """4 g(T_{r,s}) + 4 = 2(r-1)(s-1) + 4."""
    return 2 * (knot.r - 1) * (knot.s - 1) + 4


def characterizing_gate(knot: TorusKnot, slope: Slope) -> bool:
    return slope.as_fraction() >= characterizing_bound(knot)


def satellite_slope_transfer(slope: Slope, winding: int) -> Slope:
    """Slope p/(q w^2) on the companion that yields the same surgered manifold."""
    if winding < 2:
        raise ValueError("winding number must be >= 2")
    if gcd(slope.p, winding) != 1:
        raise ValueError(f"gcd(p={slope.p}, w={winding}) must be 1")
    return Slope(slope.p, slope.q * winding * winding)


def cable_inequality_infeasible(h: int, nn: int, g_companion: int) -> bool:
    """Whether 4h + 2 + 1/nn >= 4(2 g_companion + h) + 4 holds.

    Despite the name this returns the truth value of the inequality; for
    g_companion >= 1 it never holds.
    """
    if nn == 0:
        raise ValueError("nn must be nonzero")
    # D + 1/nn >= 0 with D integer, scaled by nn^2 > 0
    d = 4 * h + 2 - (4 * (2 * g_companion + h) + 4)
    return d * nn * nn + nn >= 0
