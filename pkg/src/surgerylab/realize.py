"""Exhaustive changemaker search for lens space surgeries.

For L(p, q) bounding the linear plumbing given by the negative continued
fraction of p/q, every changemaker vector of norm p in Z^{len+1} is tested
for an orthogonal complement isometric to the plumbing lattice. Survivors
get a genus and an Alexander polynomial and are matched against torus knots.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from math import gcd
from typing import Optional, Sequence

from .invariants import (
    LaurentPoly,
    TorusKnot,
    alexander_from_torsion,
    genus_from_changemaker,
    torsion_from_changemaker,
    torus_alexander,
)
from .lattices import (
    GramLattice,
    complement_basis,
    enumerate_changemakers,
    lattice_isomorphic,
    linear_plumbing_gram,
    theta_counts,
)
from .slopes import neg_cf_expand

__all__ = [
    "Candidate",
    "RealizationReport",
    "lens_realization_candidates",
    "general_realization",
    "identify_alexander",
]


@dataclass(frozen=True)
class Candidate:
    sigma: tuple[int, ...]
    genus: int
    alexander: LaurentPoly
    label: str

    def to_dict(self):
        return {
            "sigma": list(self.sigma),
            "genus": self.genus,
            "alexander": [list(t) for t in self.alexander.terms()],
            "alexander_text": str(self.alexander),
            "label": self.label,
        }


@dataclass
class RealizationReport:
    p: int
    q: int
    weights: list[int]
    ambient_dim: int
    n: Optional[int] = None
    examined: int = 0
    candidates: list[Candidate] = field(default_factory=list)

    def to_dict(self):
        return {
            "n": self.n,
            "p": self.p,
            "q": self.q,
            "plumbing_weights": self.weights,
            "ambient_dim": self.ambient_dim,
            "changemakers_examined": self.examined,
            "candidates": [c.to_dict() for c in self.candidates],
        }

    def to_table(self) -> str:
        head = f"p={self.p} q={self.q} plumbing={self.weights} dim={self.ambient_dim}"
        if self.n is not None:
            head = f"n={self.n} " + head
        rows = [("sigma", "genus", "label", "alexander")]
        for c in self.candidates:
            rows.append((",".join(map(str, c.sigma)), str(c.genus), c.label, str(c.alexander)))
        widths = [max(len(r[i]) for r in rows) for i in range(3)]
        lines = [head]
        for r in rows:
            lines.append("  ".join(r[i].ljust(widths[i]) for i in range(3)) + "  " + r[3])
        lines.append(f"{len(self.candidates)} candidate(s) of {self.examined} changemaker vector(s)")
        return "\n".join(lines)


def identify_alexander(delta: LaurentPoly, genus: int) -> str:
    """Name the torus knot (or unknot) with this Alexander polynomial, else
    ``"unidentified"``."""
    if genus == 0:
        return "unknot" if delta == LaurentPoly({0: 1}) else "unidentified"
    # (r-1)(s-1) = 2g with r > s >= 2
    for s in range(2, 2 * genus + 2):
        if (2 * genus) % (s - 1):
            continue
        r = 2 * genus // (s - 1) + 1
        if r <= s or gcd(r, s) != 1:
            continue
        knot = TorusKnot(r, s)
        if torus_alexander(knot) == delta:
            return str(knot)
    return "unidentified"


def _low_norm_profile(sigma: Sequence[int]) -> dict[int, int]:
    """Counts of ± classes of norm 1 and 2 in sigma-perp, read off sigma.

    In Z^m the only vectors of norm <= 2 are ±e_i and ±e_i ± e_j, so the
    count only depends on repeated and zero entries.
    """
    zeros = sum(1 for x in sigma if x == 0)
    same = sum(c * (c - 1) // 2 for c in Counter(sigma).values())
    return {1: zeros, 2: same + zeros * (zeros - 1) // 2}


def _target_profile(target: GramLattice) -> dict[int, int]:
    counts = {1: 0, 2: 0}
    counts.update(theta_counts(target, 2))
    return counts


def _run(p: int, q: int, weights: list[int], ambient_dim: int, n: Optional[int]) -> RealizationReport:
    target = linear_plumbing_gram(weights)
    profile = _target_profile(target)
    report = RealizationReport(p=p, q=q, weights=weights, ambient_dim=ambient_dim, n=n)
    for sigma in enumerate_changemakers(p, ambient_dim):
        report.examined += 1
        # necessary condition for isometry; skips building most complements
        if _low_norm_profile(sigma) != profile:
            continue
        if not lattice_isomorphic(complement_basis(sigma), target):
            continue
        genus = genus_from_changemaker(sigma, p)
        delta = alexander_from_torsion(torsion_from_changemaker(sigma, p))
        if delta.degree != genus:
            raise AssertionError(f"genus {genus} disagrees with Alexander degree for {sigma}")
        report.candidates.append(Candidate(sigma, genus, delta, identify_alexander(delta, genus)))
    return report


def lens_realization_candidates(n: int) -> RealizationReport:
    """Changemaker vectors realizing L(4n+1, 4) as (4n+1)-surgery.

    The plumbing is [5, 2, ..., 2] with n - 1 twos and the ambient lattice
    is Z^{n+1}. The first entry of sigma is not assumed to be 1.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    p = 4 * n + 1
    return _run(p, n, neg_cf_expand(p, n), n + 1, n)


def general_realization(p: int, q: int, ambient_dim: Optional[int] = None) -> RealizationReport:
    """Same search against the linear plumbing of p/q."""
    weights = neg_cf_expand(p, q)
    expected = len(weights) + 1
    if ambient_dim is None:
        ambient_dim = expected
    if ambient_dim != expected:
        raise ValueError(
            f"ambient dimension {ambient_dim} does not match plumbing length + 1 = {expected}"
        )
    return _run(p, q, weights, ambient_dim, None)
