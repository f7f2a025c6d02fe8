"""Multigraded Betti numbers of monomial ideals via upper Koszul complexes.

For a multidegree ``a`` the upper Koszul simplicial complex is

    K^a(I) = { sigma subset of the variables : x^(a - e_sigma) in I },

and beta_{i,a}(I) is the dimension of its reduced homology in degree i - 1.
Nonzero Betti numbers only occur at multidegrees in the lcm lattice, so the
engine walks the lattice, builds each K^a, and sums the results by total
degree.

K^a is generated by the facets ``V - T_g`` where ``g`` runs over generators
dividing x^a and ``T_g = {j : g_j = a_j}``; that description lets the whole
lattice be processed with a few array operations, after which each distinct
complex is reduced (cones, twin vertices, nerve) and its homology computed
once over GF(p).
"""

from __future__ import annotations

import json
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from .linalg import DEFAULT_CHAR, check_prime
from .monomials import MonomialIdeal, ideal_contains, ideal_intersect, polarize
from .simplicial import facet_homology, homology_of_faces

log = logging.getLogger(__name__)

MAX_LATTICE = 200_000
MAX_VARIABLES = 24
_CHUNK = 4096


class ResourceCapExceeded(RuntimeError):
    """The instance is larger than the configured caps allow."""


@dataclass(frozen=True)
class LcmLattice:
    n: int
    points: np.ndarray  # (N, n) int64, rows sorted lexicographically

    def __len__(self):
        return len(self.points)

    def __contains__(self, a):
        a = np.asarray(a, dtype=np.int64)
        return bool((self.points == a).all(axis=1).any())

    def as_set(self) -> set:
        return {tuple(int(x) for x in row) for row in self.points}


def _row_keys(A, base):
    w = base ** np.arange(A.shape[1], dtype=np.int64)
    return A @ w


def _unique_rows(A, base):
    n = A.shape[1]
    if n and float(base) ** n < 2**62:
        _, idx = np.unique(_row_keys(A, base), return_index=True)
        return A[idx]
    return np.unique(A, axis=0)


def lcm_lattice(I: MonomialIdeal, max_size: int = MAX_LATTICE) -> LcmLattice:
    """All lcms of nonempty subsets of the minimal generators."""
    if I.is_zero():
        raise ValueError("the zero ideal has no lcm lattice")
    G = np.array(I.gens, dtype=np.int64).reshape(len(I.gens), I.n)
    base = int(G.max(initial=0)) + 1
    S = np.empty((0, I.n), dtype=np.int64)
    for g in G:
        S = _unique_rows(np.vstack([S, np.maximum(S, g), g[None, :]]), base)
        if len(S) > max_size:
            raise ResourceCapExceeded(
                f"lcm lattice exceeds {max_size} elements ({len(I.gens)} generators in {I.n} variables)"
            )
    order = np.lexsort(S.T[::-1]) if len(S) else np.arange(0)
    return LcmLattice(I.n, S[order])


def upper_koszul_faces(I: MonomialIdeal, a) -> set:
    """Faces of K^a(I) as bitmasks over the variables (bit j is x_{j+1})."""
    a = tuple(int(x) for x in a)
    supp = [j for j, x in enumerate(a) if x > 0]
    faces = set()
    for k in range(len(supp) + 1):
        for sigma in combinations(supp, k):
            b = list(a)
            for j in sigma:
                b[j] -= 1
            if ideal_contains(I, b):
                faces.add(sum(1 << j for j in sigma))
    return faces


def koszul_betti(I: MonomialIdeal, a, p: int = DEFAULT_CHAR) -> list:
    """[beta_{0,a}, beta_{1,a}, ...] straight from the definition of K^a(I)."""
    p = check_prime(p)
    a = tuple(int(x) for x in a)
    if len(a) != I.n or any(x < 0 for x in a):
        raise ValueError(f"bad multidegree {a} for an ideal in {I.n} variables")
    return homology_of_faces(upper_koszul_faces(I, a), p)


@dataclass(frozen=True)
class BettiTable:
    """Graded Betti numbers beta_{i,j}, zeros omitted."""

    entries: dict = field(default_factory=dict)
    characteristic: int = DEFAULT_CHAR
    subject: str = "ideal"  # or "quotient"

    def __post_init__(self):
        if self.subject not in ("ideal", "quotient"):
            raise ValueError(f"unknown subject {self.subject!r}")
        clean = {(int(i), int(j)): int(m) for (i, j), m in self.entries.items() if m}
        if any(m < 0 for m in clean.values()):
            raise ValueError("Betti numbers are nonnegative")
        object.__setattr__(self, "entries", dict(sorted(clean.items())))

    def __getitem__(self, ij):
        return self.entries.get(tuple(ij), 0)

    def __eq__(self, other):
        if not isinstance(other, BettiTable):
            return NotImplemented
        return (self.entries, self.characteristic, self.subject) == (
            other.entries, other.characteristic, other.subject)

    def same_numbers(self, other) -> bool:
        return self.entries == other.entries and self.subject == other.subject

    def regularity(self) -> int:
        if not self.entries:
            raise ValueError("regularity of an empty Betti table is undefined")
        return max(j - i for i, j in self.entries)

    def projective_dimension(self) -> int:
        return max(i for i, _ in self.entries)

    def total(self, i: int) -> int:
        return sum(m for (k, _), m in self.entries.items() if k == i)

    def to_dict(self) -> dict:
        return {
            "characteristic": self.characteristic,
            "subject": self.subject,
            "entries": [[i, j, m] for (i, j), m in self.entries.items()],
        }

    @classmethod
    def from_dict(cls, d: dict) -> "BettiTable":
        return cls({(i, j): m for i, j, m in d["entries"]}, int(d["characteristic"]), d["subject"])

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    def __str__(self):
        """Macaulay2-style layout: columns i, rows j - i."""
        if not self.entries:
            return "(empty)"
        cols = range(self.projective_dimension() + 1)
        rows = sorted({j - i for i, j in self.entries})
        lines = ["      " + " ".join(f"{i:>5}" for i in cols)]
        for r in range(rows[0], rows[-1] + 1):
            cells = [self.entries.get((i, i + r), 0) for i in cols]
            lines.append(f"{r:>5}:" + " ".join(f"{c if c else '.':>5}" for c in cells))
        return "\n".join(lines)


def _multidegree_homology(G, pts, p):
    """Betti lists for each lattice point in ``pts`` (rows)."""
    n = G.shape[1]
    full = (1 << n) - 1
    pow2 = (1 << np.arange(n, dtype=np.int64)).astype(np.int64)
    out = np.zeros((len(pts), n + 2), dtype=np.int64)
    width = 0
    for start in range(0, len(pts), _CHUNK):
        A = pts[start:start + _CHUNK]
        divides = (G[None, :, :] <= A[:, None, :]).all(axis=2)
        tight = (G[None, :, :] == A[:, None, :]) @ pow2
        facets = np.where(divides, full ^ tight, -1)
        facets.sort(axis=1)
        keys, inverse = np.unique(facets, axis=0, return_inverse=True)
        inverse = inverse.reshape(-1)
        for k, row in enumerate(keys):
            h = facet_homology([int(f) for f in row if f >= 0], p)
            if h:
                width = max(width, len(h))
                out[start + np.flatnonzero(inverse == k), :len(h)] = h
    return out[:, :width]


def _table_from_points(G, pts, p, workers):
    if workers and workers > 1 and len(pts) > _CHUNK:
        parts = np.array_split(pts, workers)
        with ProcessPoolExecutor(max_workers=workers) as ex:
            results = list(ex.map(_multidegree_homology, [G] * len(parts), parts, [p] * len(parts)))
        width = max(r.shape[1] for r in results)
        H = np.vstack([np.pad(r, ((0, 0), (0, width - r.shape[1]))) for r in results])
    else:
        H = _multidegree_homology(G, pts, p)
    degrees = pts.sum(axis=1)
    entries = {}
    for i in range(H.shape[1]):
        nz = np.flatnonzero(H[:, i])
        if nz.size:
            js = degrees[nz]
            for j in np.unique(js):
                entries[(i, int(j))] = int(H[nz[js == j], i].sum())
    return entries


def _check_caps(I, max_vars):
    if I.is_zero():
        raise ValueError("Betti numbers of the zero ideal are not defined here")
    if I.n > min(max_vars, 62):
        raise ResourceCapExceeded(f"{I.n} variables exceeds the cap of {max_vars}")


def betti_table(I: MonomialIdeal, p: int = DEFAULT_CHAR, *, max_lattice: int = MAX_LATTICE,
                max_vars: int = MAX_VARIABLES, workers: int = 1) -> BettiTable:
    """Graded Betti table of the ideal I over GF(p)."""
    p = check_prime(p)
    _check_caps(I, max_vars)
    L = lcm_lattice(I, max_lattice)
    G = np.array(I.gens, dtype=np.int64)
    entries = _table_from_points(G, L.points, p, workers)
    log.debug("betti table: %d lattice points, %d entries", len(L), len(entries))
    return BettiTable(entries, p, "ideal")


def betti_table_quotient(I: MonomialIdeal, p: int = DEFAULT_CHAR, **caps) -> BettiTable:
    """Betti table of S/I: beta_{i,j}(S/I) = beta_{i-1,j}(I), plus beta_{0,0} = 1."""
    T = betti_table(I, p, **caps)
    entries = {(i + 1, j): m for (i, j), m in T.entries.items()}
    entries[(0, 0)] = 1
    return BettiTable(entries, T.characteristic, "quotient")


def multigraded_betti(I: MonomialIdeal, p: int = DEFAULT_CHAR, *, max_lattice: int = MAX_LATTICE,
                      max_vars: int = MAX_VARIABLES) -> dict:
    """{(i, a): beta_{i,a}} over the lcm lattice, zeros omitted."""
    p = check_prime(p)
    _check_caps(I, max_vars)
    L = lcm_lattice(I, max_lattice)
    H = _multidegree_homology(np.array(I.gens, dtype=np.int64), L.points, p)
    out = {}
    for r, c in zip(*np.nonzero(H)):
        out[(int(c), tuple(int(x) for x in L.points[r]))] = int(H[r, c])
    return out


def regularity(I: MonomialIdeal, p: int = DEFAULT_CHAR, **caps) -> int:
    """reg(I) = max{j - i : beta_{i,j}(I) != 0}."""
    return betti_table(I, p, **caps).regularity()


def regularity_quotient(I: MonomialIdeal, p: int = DEFAULT_CHAR, **caps) -> int:
    """reg(S/I) = reg(I) - 1."""
    return regularity(I, p, **caps) - 1


def verify_polarization_invariance(I: MonomialIdeal, p: int = DEFAULT_CHAR, **caps) -> bool:
    P, _ = polarize(I)
    return betti_table(I, p, **caps).same_numbers(betti_table(P, p, **caps))


def is_betti_splitting(I: MonomialIdeal, J: MonomialIdeal, K: MonomialIdeal,
                       p: int = DEFAULT_CHAR, **caps) -> bool:
    """Whether I = J + K is a Betti splitting.

    Requires the minimal generators of I to be the disjoint union of those
    of J and K, both nonempty.
    """
    if not (I.n == J.n == K.n):
        raise ValueError("ideals live in different rings")
    gI, gJ, gK = set(I.gens), set(J.gens), set(K.gens)
    if not gJ or not gK:
        raise ValueError("both parts of a splitting need at least one generator")
    if gJ & gK or gJ | gK != gI:
        raise ValueError("G(J) and G(K) must partition G(I)")
    bI = betti_table(I, p, **caps)
    bJ = betti_table(J, p, **caps)
    bK = betti_table(K, p, **caps)
    bJK = betti_table(ideal_intersect(J, K), p, **caps)
    keys = set(bI.entries) | set(bJ.entries) | set(bK.entries) | {(i + 1, j) for i, j in bJK.entries}
    return all(bI[i, j] == bJ[i, j] + bK[i, j] + (bJK[i - 1, j] if i > 0 else 0) for i, j in keys)


def split_by_variable(I: MonomialIdeal, i: int):
    """(J, K): generators divisible by x_i, and the rest."""
    J = [g for g in I.gens if g[i - 1] > 0]
    K = [g for g in I.gens if g[i - 1] == 0]
    return MonomialIdeal(I.n, J), MonomialIdeal(I.n, K)
