"""Reduced simplicial homology over GF(p) for small complexes.

Faces are integer bitmasks over the vertex set. Results are reported shifted
by one so that they line up with Betti numbers: ``h[i]`` is the dimension of
the reduced homology in degree ``i - 1``, i.e. carried by faces with ``i``
vertices. The void complex (no faces) has no homology at all; the complex
``{empty set}`` has ``h[0] == 1``.
"""

from __future__ import annotations

from functools import lru_cache

from .linalg import rank_mod_p


def _bits(mask):
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return out


def faces_from_facets(facets) -> set:
    faces = set()
    for F in facets:
        if F in faces:
            continue
        sub = F
        while True:
            faces.add(sub)
            if sub == 0:
                break
            sub = (sub - 1) & F
    return faces


def boundary_matrix(lower, upper):
    """Signed boundary from faces ``upper`` (k+1 vertices) to ``lower`` (k vertices)."""
    index = {f: r for r, f in enumerate(lower)}
    M = [[0] * len(upper) for _ in lower]
    for c, F in enumerate(upper):
        for k, v in enumerate(_bits(F)):
            M[index[F & ~(1 << v)]][c] = -1 if k % 2 else 1
    return M


def homology_of_faces(faces, p: int) -> list:
    """Reduced homology dimensions of an explicit, downward-closed face set."""
    if not faces:
        return []
    by_size = {}
    for f in faces:
        by_size.setdefault(f.bit_count(), []).append(f)
    top = max(by_size)
    for s in by_size:
        by_size[s].sort()
    ranks = {}
    for s in range(1, top + 1):
        lo, up = by_size.get(s - 1, []), by_size.get(s, [])
        ranks[s] = rank_mod_p(boundary_matrix(lo, up), p) if lo and up else 0
    h = []
    for s in range(top + 1):
        f = len(by_size.get(s, []))
        h.append(f - ranks.get(s, 0) - ranks.get(s + 1, 0))
    while h and h[-1] == 0:
        h.pop()
    return h


def _maximal(sets):
    sets = sorted(set(sets), key=lambda m: -m.bit_count())
    kept = []
    for s in sets:
        if not any(s & k == s for k in kept):
            kept.append(s)
    return kept


def _signatures(facets):
    """For each vertex, the bitmask of facets containing it (unused vertices omitted)."""
    sig = {}
    for j, F in enumerate(facets):
        for v in _bits(F):
            sig[v] = sig.get(v, 0) | (1 << j)
    return sig


def reduce_facets(facets):
    """Shrink a facet list without changing the homotopy type.

    Alternates three moves until nothing changes: detect cones (returns
    None, meaning acyclic), identify vertices lying in exactly the same
    facets, and pass to the nerve of the facet cover when that has fewer
    vertices.
    """
    facets = _maximal(facets)
    while True:
        if facets == [0]:
            return facets
        full = (1 << len(facets)) - 1
        sig = _signatures(facets)
        if any(s == full for s in sig.values()):
            return None
        # twin vertices: the link of one is a cone on the other
        reps = sorted(set(sig.values()))
        nverts = len(reps)
        if nverts < len(sig):
            # relabel vertices by their signature class
            new = [0] * len(facets)
            for v, s in enumerate(reps):
                for j in _bits(s):
                    new[j] |= 1 << v
            facets = _maximal(new)
            continue
        # nerve: vertices are facets, faces are sets of facets with a common vertex
        nerve = _maximal(reps)
        if len(facets) < nverts:
            facets = nerve
            continue
        return facets


@lru_cache(maxsize=200_000)
def _facet_homology_cached(facets: tuple, p: int) -> tuple:
    if not facets:
        return ()
    red = reduce_facets(list(facets))
    if red is None:
        return ()
    return tuple(homology_of_faces(faces_from_facets(red), p))


def facet_homology(facets, p: int) -> list:
    """Reduced homology (Betti-shifted) of the complex generated by ``facets``."""
    key = tuple(sorted(set(int(f) for f in facets)))
    return list(_facet_homology_cached(key, p))
