"""Integral closure of monomial ideals through the Newton polyhedron.

A monomial x^a lies in the integral closure of I exactly when ``a`` lies in
conv(exponents of G(I)) + R^n_{>=0}. Membership is decided by an exact
phase-one simplex over the rationals; no floating point is involved.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from .monomials import MonomialIdeal, ideal_contains, ideal_power, mono_pow

MAX_BOX = 2_000_000


def _phase_one(gens, a) -> bool:
    """Is there lambda >= 0, sum lambda = 1, with sum lambda_g g <= a?

    Columns: lambda_1..lambda_m, slack_1..slack_n, one artificial on the
    convexity row. Bland's rule keeps the degenerate pivots finite.
    """
    m, n = len(gens), len(a)
    ncol = m + n + 1
    rows = []
    for j in range(n):
        r = [Fraction(g[j]) for g in gens] + [Fraction(int(k == j)) for k in range(n)] + [Fraction(0)]
        rows.append(r + [Fraction(a[j])])
    rows.append([Fraction(1)] * m + [Fraction(0)] * n + [Fraction(1), Fraction(1)])
    basis = list(range(m, m + n)) + [m + n]
    art = m + n
    cost = [-rows[n][k] for k in range(ncol)]
    cost[art] = Fraction(0)
    while True:
        enter = next((k for k in range(ncol) if cost[k] < 0), None)
        if enter is None:
            break
        best = None
        for i, r in enumerate(rows):
            if r[enter] > 0:
                ratio = r[-1] / r[enter]
                if best is None or ratio < best[0] or (ratio == best[0] and basis[i] < basis[best[1]]):
                    best = (ratio, i)
        if best is None:
            break  # unbounded direction; cannot happen with an artificial cost bounded below
        piv = best[1]
        pr = rows[piv]
        f = pr[enter]
        pr = [x / f for x in pr]
        rows[piv] = pr
        for i, r in enumerate(rows):
            if i != piv and r[enter]:
                c = r[enter]
                rows[i] = [x - c * y for x, y in zip(r, pr)]
        c = cost[enter]
        cost = [x - c * y for x, y in zip(cost, pr[:-1])]
        basis[piv] = enter
    if art in basis:
        return rows[basis.index(art)][-1] == 0
    return True


def in_newton_polyhedron(I: MonomialIdeal, a) -> bool:
    """Exact test of whether exponent vector ``a`` lies in the Newton polyhedron of I."""
    if I.is_zero():
        raise ValueError("the zero ideal has an empty Newton polyhedron")
    a = tuple(int(x) for x in a)
    if len(a) != I.n:
        raise ValueError("exponent vector has the wrong length")
    if ideal_contains(I, a):
        return True
    return _phase_one(I.gens, a)


def _box_nonmembers(I):
    top = I.max_exponents()
    size = 1
    for b in top:
        size *= b + 1
    if size > MAX_BOX:
        raise ValueError(f"closure box has {size} points, above the {MAX_BOX} cap")
    grids = np.meshgrid(*[np.arange(b + 1) for b in top], indexing="ij")
    pts = np.stack([g.ravel() for g in grids], axis=1).astype(np.int64)
    G = np.array(I.gens, dtype=np.int64)
    member = np.zeros(len(pts), dtype=bool)
    for g in G:
        member |= (pts >= g).all(axis=1)
    out = pts[~member]
    return top, {tuple(int(x) for x in row) for row in out}


def _upper_neighbors(a, top):
    for j, (x, b) in enumerate(zip(a, top)):
        if x < b:
            yield a[:j] + (x + 1,) + a[j + 1:]


def closure_extra_points(I: MonomialIdeal, first_only: bool = False) -> list:
    """Exponent vectors in the box that lie in the Newton polyhedron but not in I.

    The non-members of I form a down-set, and the polyhedron points among
    them an up-set inside it, so a downward search from the maximal
    non-members visits every such point while only testing points adjacent
    to ones already accepted.
    """
    if I.is_zero():
        raise ValueError("integral closure of the zero ideal is not handled")
    top, D = _box_nonmembers(I)
    found = set()
    for a in sorted(D, key=lambda v: (-sum(v), v)):
        ups = [b for b in _upper_neighbors(a, top) if b in D]
        if ups and not any(b in found for b in ups):
            continue
        if _phase_one(I.gens, a):
            found.add(a)
            if first_only:
                break
    return sorted(found)


def ideal_integral_closure(I: MonomialIdeal) -> MonomialIdeal:
    return MonomialIdeal(I.n, list(I.gens) + closure_extra_points(I))


def is_integrally_closed_algebraic(I: MonomialIdeal) -> bool:
    return not closure_extra_points(I, first_only=True)


def power_membership_witness(I: MonomialIdeal, u, max_power: int = 4):
    """Smallest m <= max_power with u^m in I^m, or None."""
    for m in range(1, max_power + 1):
        if ideal_contains(ideal_power(I, m), mono_pow(tuple(u), m)):
            return m
    return None
