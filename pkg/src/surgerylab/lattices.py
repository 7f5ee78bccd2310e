"""Changemaker vectors, orthogonal complements in Z^{n+1}, linear plumbing
lattices and exact positive-definite lattice isomorphism."""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Sequence

import numpy as np

__all__ = [
    "GramLattice",
    "NotPositiveDefiniteError",
    "RankMismatchError",
    "is_changemaker_bruteforce",
    "is_changemaker_fast",
    "enumerate_changemakers",
    "complement_basis",
    "linear_plumbing_gram",
    "short_vectors",
    "theta_counts",
    "find_isometry",
    "lattice_isomorphic",
    "in_integer_span",
]

IntVec = tuple[int, ...]


class NotPositiveDefiniteError(ValueError):
    pass


class RankMismatchError(ValueError):
    """Raised when two lattices of different rank are compared."""


def _dot(u: Sequence[int], v: Sequence[int]) -> int:
    return sum(a * b for a, b in zip(u, v))


@dataclass(frozen=True)
class GramLattice:
    """Integral lattice given by its Gram matrix, optionally with an embedding
    basis in some ambient Z^m whose pairwise dot products give the Gram matrix."""

    gram: tuple[IntVec, ...]
    basis: Optional[tuple[IntVec, ...]] = None

    def __post_init__(self):
        gram = tuple(tuple(int(x) for x in row) for row in self.gram)
        k = len(gram)
        if k == 0:
            raise ValueError("lattice rank must be positive")
        if any(len(row) != k for row in gram):
            raise ValueError("Gram matrix must be square")
        for i in range(k):
            if gram[i][i] < 1:
                raise ValueError("Gram diagonal entries must be >= 1")
            for j in range(i):
                if gram[i][j] != gram[j][i]:
                    raise ValueError("Gram matrix must be symmetric")
        object.__setattr__(self, "gram", gram)
        if self.basis is not None:
            basis = tuple(tuple(int(x) for x in v) for v in self.basis)
            if len(basis) != k:
                raise ValueError("basis length does not match Gram rank")
            for i in range(k):
                for j in range(k):
                    if _dot(basis[i], basis[j]) != gram[i][j]:
                        raise ValueError("Gram matrix disagrees with basis")
            object.__setattr__(self, "basis", basis)

    @classmethod
    def from_basis(cls, basis: Sequence[Sequence[int]]) -> "GramLattice":
        basis = tuple(tuple(int(x) for x in v) for v in basis)
        gram = tuple(tuple(_dot(u, v) for v in basis) for u in basis)
        return cls(gram, basis)

    @property
    def rank(self) -> int:
        return len(self.gram)

    def determinant(self) -> int:
        return _bareiss_det(self.gram)

    def embed(self, coords: Sequence[int]) -> IntVec:
        """Map basis coordinates to the ambient vector."""
        if self.basis is None:
            raise ValueError("lattice has no embedding basis")
        m = len(self.basis[0])
        return tuple(
            sum(c * b[j] for c, b in zip(coords, self.basis)) for j in range(m)
        )


# -- changemaker vectors ----------------------------------------------------


def _check_sigma(sigma: Sequence[int]) -> tuple[int, ...]:
    sigma = tuple(int(x) for x in sigma)
    if any(x < 0 for x in sigma):
        raise ValueError(f"changemaker candidate has a negative entry: {sigma}")
    if any(a > b for a, b in zip(sigma, sigma[1:])):
        raise ValueError(f"changemaker candidate is not nondecreasing: {sigma}")
    return sigma


def is_changemaker_bruteforce(sigma: Sequence[int]) -> bool:
    """Check that every 0 <= k <= sum(sigma) is a subset sum, by a full bitset sweep."""
    sigma = _check_sigma(sigma)
    reachable = 1
    for x in sigma:
        reachable |= reachable << x
    full = (1 << (sum(sigma) + 1)) - 1
    return reachable & full == full


def is_changemaker_fast(sigma: Sequence[int]) -> bool:
    """Complete-sequence criterion: each entry is at most 1 + the sum of those before it."""
    sigma = _check_sigma(sigma)
    total = 0
    for x in sigma:
        if x > total + 1:
            return False
        total += x
    return True


def enumerate_changemakers(
    p: int, ambient_dim: int, prefix: Sequence[int] = ()
) -> list[IntVec]:
    """All changemaker vectors of length ``ambient_dim`` with squared norm ``p``.

    Output is in lexicographic order. ``prefix`` restricts the search to one
    subtree; concatenating the results over all admissible one-entry prefixes
    in increasing order reproduces the unrestricted list.
    """
    if p < 1 or ambient_dim < 1:
        raise ValueError("p and ambient_dim must be positive")
    prefix = _check_sigma(prefix)
    if len(prefix) > ambient_dim or not is_changemaker_fast(prefix):
        return []
    norm_left = p - sum(x * x for x in prefix)
    if norm_left < 0:
        return []
    out: list[IntVec] = []
    _extend(list(prefix), ambient_dim, sum(prefix), norm_left, out)
    return out


def _extend(cur: list[int], dim: int, total: int, norm_left: int, out: list) -> None:
    remaining = dim - len(cur)
    lo = cur[-1] if cur else 0
    if remaining == 0:
        if norm_left == 0:
            out.append(tuple(cur))
        return
    if remaining == 1:
        x = math.isqrt(norm_left)
        if x * x == norm_left and lo <= x <= total + 1:
            out.append(tuple(cur) + (x,))
        return
    # the remaining entries are all >= x
    hi = min(total + 1, math.isqrt(norm_left // remaining))
    for x in range(lo, hi + 1):
        cur.append(x)
        _extend(cur, dim, total + x, norm_left - x * x, out)
        cur.pop()


# -- orthogonal complements and plumbings -----------------------------------


def _size_reduce(basis: list[list[int]]) -> None:
    """Pairwise reduction b_i -> b_i - k b_j while it strictly shortens b_i."""
    changed = True
    while changed:
        changed = False
        for i in range(len(basis)):
            for j in range(len(basis)):
                if i == j:
                    continue
                bi, bj = basis[i], basis[j]
                nj = _dot(bj, bj)
                k = (2 * _dot(bi, bj) + nj) // (2 * nj)
                if k == 0:
                    continue
                cand = [a - k * b for a, b in zip(bi, bj)]
                if _dot(cand, cand) < _dot(bi, bi):
                    basis[i] = cand
                    changed = True


def complement_basis(sigma: Sequence[int]) -> GramLattice:
    """Integral basis of {v in Z^m : <v, sigma> = 0} with its Gram matrix.

    Unimodular column reduction of the row ``sigma`` gives a kernel basis;
    it is then shortened by pairwise reduction and sign-normalized.
    """
    sigma = [int(x) for x in sigma]
    m = len(sigma)
    if not any(sigma):
        raise ValueError("sigma must be nonzero")
    if m < 2:
        raise ValueError("complement of a nonzero vector in Z^1 is trivial")
    row = sigma[:]
    # columns of U; sigma . U == row is maintained
    cols = [[int(i == j) for i in range(m)] for j in range(m)]
    while sum(1 for x in row if x) > 1:
        piv = min((j for j in range(m) if row[j]), key=lambda j: (abs(row[j]), j))
        for j in range(m):
            if j != piv and row[j]:
                k = row[j] // row[piv]
                row[j] -= k * row[piv]
                cols[j] = [a - k * b for a, b in zip(cols[j], cols[piv])]
    piv = next(j for j in range(m) if row[j])
    basis = [cols[j] for j in range(m) if j != piv]
    _size_reduce(basis)
    for v in basis:
        lead = next(x for x in v if x)
        if lead < 0:
            v[:] = [-x for x in v]
    return GramLattice.from_basis(basis)


def linear_plumbing_gram(weights: Sequence[int]) -> GramLattice:
    """Positive-definite Gram matrix of a linear plumbing chain (the negative of
    the intersection form of the plumbing with vertex weights ``-w_i``)."""
    weights = [int(w) for w in weights]
    if not weights:
        raise ValueError("plumbing chain must be nonempty")
    if any(w < 2 for w in weights):
        raise ValueError(f"plumbing weights must be >= 2, got {weights}")
    k = len(weights)
    gram = [[0] * k for _ in range(k)]
    for i, w in enumerate(weights):
        gram[i][i] = w
        if i + 1 < k:
            gram[i][i + 1] = gram[i + 1][i] = -1
    return GramLattice(tuple(map(tuple, gram)))


# -- short vectors ----------------------------------------------------------


@lru_cache(maxsize=1024)
def _ldl(gram: tuple[IntVec, ...]) -> tuple[list[Fraction], list[list[Fraction]]]:
    """Exact G = U^T D U with U unit upper triangular; raises if G is not
    positive definite."""
    k = len(gram)
    D: list[Fraction] = []
    U = [[Fraction(int(i == j)) for j in range(k)] for i in range(k)]
    for i in range(k):
        d = Fraction(gram[i][i]) - sum(U[l][i] ** 2 * D[l] for l in range(i))
        if d <= 0:
            raise NotPositiveDefiniteError("Gram matrix is not positive definite")
        D.append(d)
        for j in range(i + 1, k):
            s = Fraction(gram[i][j]) - sum(U[l][i] * U[l][j] * D[l] for l in range(i))
            U[i][j] = s / d
    return D, U


def _bareiss_det(mat: Sequence[Sequence[int]]) -> int:
    a = [list(row) for row in mat]
    k = len(a)
    sign, prev = 1, 1
    for i in range(k - 1):
        if a[i][i] == 0:
            swap = next((r for r in range(i + 1, k) if a[r][i]), None)
            if swap is None:
                return 0
            a[i], a[swap] = a[swap], a[i]
            sign = -sign
        for r in range(i + 1, k):
            for c in range(i + 1, k):
                a[r][c] = (a[r][c] * a[i][i] - a[r][i] * a[i][c]) // prev
        prev = a[i][i]
    return sign * a[k - 1][k - 1]


@lru_cache(maxsize=256)
def _short_vectors_cached(gram: tuple[IntVec, ...], bound: int) -> tuple[tuple[int, IntVec], ...]:
    D, U = _ldl(gram)
    k = len(gram)
    Df = [float(d) for d in D]
    # sparse rows of U above the diagonal
    links = [[(j, float(U[i][j])) for j in range(i + 1, k) if U[i][j]] for i in range(k)]
    eps = 1e-7
    found: list[IntVec] = []
    x = [0] * k

    def rec(i: int, budget: float, nonzero_above: bool) -> None:
        center = -sum(u * x[j] for j, u in links[i])
        radius = math.sqrt(max(budget, 0.0) / Df[i]) + eps
        lo = math.ceil(center - radius)
        hi = math.floor(center + radius)
        if not nonzero_above:
            lo = max(lo, 0)
        if i == 0:
            # every point of the interval fits; norms are verified exactly below
            for xi in range(lo, hi + 1):
                if xi or nonzero_above:
                    x[0] = xi
                    found.append(tuple(x))
            x[0] = 0
            return
        for xi in range(lo, hi + 1):
            rest = budget - Df[i] * (xi - center) ** 2
            if rest < -eps:
                continue
            x[i] = xi
            rec(i - 1, rest, nonzero_above or xi != 0)
        x[i] = 0

    rec(k - 1, float(bound), False)
    if not found:
        return ()
    V = np.array(found, dtype=np.int64)
    norms = np.einsum("ij,jk,ik->i", V, np.array(gram, dtype=np.int64), V)
    out = []
    for norm, v in zip(norms.tolist(), found):
        if norm > bound:
            continue
        lead = next(c for c in v if c)
        out.append((norm, v if lead > 0 else tuple(-c for c in v)))
    out.sort()
    return tuple(out)


def short_vectors(lattice: GramLattice, bound: int) -> list[IntVec]:
    """Nonzero lattice vectors of norm <= ``bound``, one per ± pair.

    Vectors are in basis coordinates, sign-normalized so the first nonzero
    coordinate is positive, and sorted by (norm, coordinates).
    """
    if bound < 1:
        raise ValueError("norm bound must be positive")
    return [v for _, v in _short_vectors_cached(lattice.gram, int(bound))]


def theta_counts(lattice: GramLattice, bound: int) -> dict[int, int]:
    """Number of ± classes of each norm up to ``bound``."""
    return dict(sorted(Counter(n for n, _ in _short_vectors_cached(lattice.gram, int(bound))).items()))


# -- isomorphism ------------------------------------------------------------


def _search_order(target: tuple[IntVec, ...], domain_sizes: list[int]) -> list[int]:
    # connected order: each new position is linked to as many placed ones as possible
    k = len(target)
    order = [min(range(k), key=lambda i: (domain_sizes[i], i))]
    while len(order) < k:
        rest = [i for i in range(k) if i not in order]
        order.append(
            max(rest, key=lambda i: (sum(1 for j in order if target[i][j]), -domain_sizes[i], -i))
        )
    return order


def find_isometry(source: GramLattice, target: GramLattice) -> Optional[list[IntVec]]:
    """Find an integer matrix M with M G_source M^T = G_target and det M = ±1.

    Rows of M are the images of the target basis, written in source basis
    coordinates. Returns None if the lattices are not isometric.
    """
    if source.rank != target.rank:
        raise RankMismatchError(f"rank {source.rank} vs rank {target.rank}")
    G1, G2 = source.gram, target.gram
    k = source.rank
    # validates positive definiteness of both
    _ldl(G1)
    _ldl(G2)
    if _bareiss_det(G1) != _bareiss_det(G2):
        return None
    bound = max(G2[i][i] for i in range(k))
    # staged so cheap low-norm mismatches exit before the expensive enumeration
    for b in sorted({min(2, bound), bound}):
        if theta_counts(source, b) != theta_counts(target, b):
            return None

    wanted = {G2[i][i] for i in range(k)}
    reps = [v for n, v in _short_vectors_cached(G1, bound) if n in wanted]
    vecs = np.array(reps + [tuple(-c for c in v) for v in reps], dtype=np.int64)
    half = len(reps)
    G1a = np.array(G1, dtype=np.int64)
    inner = vecs @ G1a @ vecs.T
    norms = np.diagonal(inner)

    domains = [np.flatnonzero(norms == G2[i][i]) for i in range(k)]
    order = _search_order(G2, [len(d) for d in domains])
    # M -> -M is a symmetry, so the first image may be taken with canonical sign
    domains[order[0]] = domains[order[0]][domains[order[0]] < half]
    chosen = [-1] * k

    def rec(depth: int, doms: list[np.ndarray]) -> bool:
        if depth == k:
            return True
        pos = order[depth]
        for c in doms[pos]:
            new = list(doms)
            ok = True
            for later in order[depth + 1:]:
                d = new[later]
                d = d[inner[c, d] == G2[pos][later]]
                if d.size == 0:
                    ok = False
                    break
                new[later] = d
            if ok:
                chosen[pos] = int(c)
                if rec(depth + 1, new):
                    return True
        chosen[pos] = -1
        return False

    if not rec(0, domains):
        return None
    M = [tuple(int(x) for x in vecs[c]) for c in chosen]
    image = [[_dot(M[i], [_dot(G1[a], M[j]) for a in range(k)]) for j in range(k)] for i in range(k)]
    assert image == [list(r) for r in G2], "isometry search produced a wrong Gram matrix"
    assert abs(_bareiss_det(M)) == 1, "isometry search produced a non-unimodular map"
    return M


def lattice_isomorphic(a: GramLattice, b: GramLattice) -> bool:
    """True iff the Gram matrices are congruent over GL_k(Z)."""
    return find_isometry(a, b) is not None


def in_integer_span(lattice: GramLattice, v: Sequence[int]) -> bool:
    """Whether ambient vector ``v`` is an integer combination of the embedding basis."""
    if lattice.basis is None:
        raise ValueError("lattice has no embedding basis")
    B = [list(map(Fraction, b)) for b in lattice.basis]
    k, m = len(B), len(B[0])
    # solve sum_i c_i B_i = v exactly by elimination on the m x k system
    rows = [[B[i][j] for i in range(k)] + [Fraction(v[j])] for j in range(m)]
    r = 0
    pivots = []
    for c in range(k):
        piv = next((i for i in range(r, m) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        pv = rows[r][c]
        rows[r] = [x / pv for x in rows[r]]
        for i in range(m):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    if any(rows[i][k] != 0 for i in range(r, m)):
        return False
    return all(rows[i][k].denominator == 1 for i in range(r))
