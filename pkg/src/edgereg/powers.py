"""Generators of powers of I(C^n_w) when exactly one edge is heavy.

Weights are rotated so the heavy edge is e_1 = x_1 x_2; every result is
expressed in that rotated labelling. With L_i = (x_i x_{i+1})^{w_i}, every
minimal generator M of I^t factors uniquely as L_1^{a_1} ... L_n^{a_n} with
sum a_i = t, and the generators are ordered by the exponent tuples,
lexicographically from the largest.

Indices of edges and variables are 1-based and cyclic (L_{n+1} = L_1,
x_{n+1} = x_1).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .graphs import build_cycle, delete_vertex, edge_ideal
from .monomials import (
    MonomialIdeal,
    add_variables,
    ideal_colon_mono,
    ideal_power,
    mono_colon,
    mono_divides,
    variable,
)


class TheoremViolation(AssertionError):
    """A structural statement that should always hold failed on this input."""


def normalize_single_heavy(weights) -> tuple:
    """Rotate so the unique heavy edge comes first."""
    ws = tuple(int(w) for w in weights)
    if len(ws) < 4:
        raise ValueError("the ordering machinery needs a cycle on at least 4 vertices")
    heavy = [i for i, w in enumerate(ws) if w >= 2]
    if len(heavy) != 1 or any(w < 1 for w in ws):
        raise ValueError(f"weights {ws} do not have exactly one non-trivial edge")
    r = heavy[0]
    return ws[r:] + ws[:r]


def edge_monomial(ws, i) -> tuple:
    """L_i = (x_i x_{i+1})^{w_i} as an exponent vector, i taken mod n."""
    n = len(ws)
    i = (i - 1) % n + 1
    e = [0] * n
    e[i - 1] += ws[i - 1]
    e[i % n] += ws[i - 1]
    return tuple(e)


def _compositions(t, n):
    """All tuples of n nonnegative integers summing to t, lex-descending."""
    if n == 1:
        yield (t,)
        return
    for a in range(t, -1, -1):
        for rest in _compositions(t - a, n - 1):
            yield (a,) + rest


def _product(ws, exps):
    n = len(ws)
    e = [0] * n
    for i, a in enumerate(exps, start=1):
        if a:
            L = edge_monomial(ws, i)
            for j in range(n):
                e[j] += a * L[j]
    return tuple(e)


@dataclass(frozen=True)
class EdgeFactorization:
    weights: tuple
    exponents: tuple
    t: int

    @property
    def monomial(self):
        return _product(self.weights, self.exponents)

    def support(self):
        """Edge indices i with a_i > 0."""
        return tuple(i for i, a in enumerate(self.exponents, start=1) if a)

    def uses(self, i) -> bool:
        n = len(self.exponents)
        return self.exponents[(i - 1) % n] > 0


@lru_cache(maxsize=256)
def _factor_table(ws, t):
    """{monomial: [exponent tuples]} over all products of t edge generators."""
    table = {}
    for exps in _compositions(t, len(ws)):
        table.setdefault(_product(ws, exps), []).append(exps)
    return table


def edge_factorizations(M, weights, t) -> list:
    ws = normalize_single_heavy(weights)
    return list(_factor_table(ws, t).get(tuple(M), []))


def edge_factorize(M, weights, t) -> EdgeFactorization:
    """The unique factorization of a minimal generator of I(C^n_w)^t."""
    ws = normalize_single_heavy(weights)
    M = tuple(M)
    gens = _power(ws, t)
    if M not in gens.gens:
        raise ValueError(f"{M} is not a minimal generator of I^{t}")
    found = _factor_table(ws, t).get(M, [])
    if len(found) != 1:
        raise TheoremViolation(f"{M} has {len(found)} edge factorizations: {found}")
    return EdgeFactorization(ws, found[0], t)


@lru_cache(maxsize=256)
def _power(ws, t):
    return ideal_power(edge_ideal(build_cycle(ws)), t)


@dataclass(frozen=True)
class OrderedGenerators:
    """G(I^t) sorted from the lexicographically largest factorization down."""

    weights: tuple
    t: int
    factorizations: tuple  # of EdgeFactorization, position k-1 holds L_k^{(t)}

    @property
    def r(self) -> int:
        return len(self.factorizations)

    @property
    def c(self) -> int:
        """Size of the prefix of generators that L_1 edge-divides."""
        return sum(1 for f in self.factorizations if f.exponents[0] >= 1)

    def __len__(self):
        return self.r

    def __getitem__(self, k):
        """L_k^{(t)} for 1-based k."""
        if not 1 <= k <= self.r:
            raise IndexError(f"generator index {k} outside 1..{self.r}")
        return self.factorizations[k - 1].monomial

    def factorization(self, k) -> EdgeFactorization:
        return self.factorizations[k - 1]

    def monomials(self) -> list:
        return [f.monomial for f in self.factorizations]

    def index_of(self, M) -> int:
        for k, f in enumerate(self.factorizations, start=1):
            if f.monomial == tuple(M):
                return k
        raise ValueError(f"{M} is not a minimal generator of I^{self.t}")


@lru_cache(maxsize=256)
def _ordered(ws, t):
    facs = [edge_factorize(M, ws, t) for M in _power(ws, t).gens]
    facs.sort(key=lambda f: f.exponents, reverse=True)
    for a, b in zip(facs, facs[1:]):
        if a.exponents == b.exponents:
            raise TheoremViolation("two generators share a factorization")
    return OrderedGenerators(ws, t, tuple(facs))


def ordered_generators(weights, t) -> OrderedGenerators:
    if t < 1:
        raise ValueError("power must be at least 1")
    return _ordered(normalize_single_heavy(weights), int(t))


def edge_divides(M1, k, M2, t, weights) -> bool:
    """M1 in G(I^k) divides M2 in G(I^t) as an edge: M2 = M1 * M3, M3 in G(I^{t-k})."""
    ws = normalize_single_heavy(weights)
    if not 1 <= k <= t:
        raise ValueError("need 1 <= k <= t")
    M1, M2 = tuple(M1), tuple(M2)
    if M1 not in _power(ws, k).gens or M2 not in _power(ws, t).gens:
        raise ValueError("arguments must be minimal generators of the stated powers")
    if k == t:
        return M1 == M2
    if not mono_divides(M1, M2):
        return False
    return mono_colon(M2, M1) in _power(ws, t - k).gens


def _check_index(O, i):
    if not 1 <= i <= O.c:
        raise ValueError(f"index {i} outside 1..{O.c}")


def colon_tail(weights, t, i) -> MonomialIdeal:
    """(J_i : L_i^{(t)}) with J_i = (L_{i+1}^{(t)}, ..., L_r^{(t)})."""
    O = ordered_generators(weights, t)
    _check_index(O, i)
    Li = O[i]
    n = len(O.weights)
    return MonomialIdeal(n, [mono_colon(O[j], Li) for j in range(i + 1, O.r + 1)])


def heavy_chain_length(f: EdgeFactorization) -> int:
    """Largest l with L_{n+1-2s} used by f for all 0 <= s <= l (l < floor(n/2))."""
    n = len(f.exponents)
    q = -1
    for s in range(n // 2):
        if not f.uses(n + 1 - 2 * s):
            break
        q = s
    return q


def predicted_colon_tail(weights, t, i) -> MonomialIdeal:
    """K_i + Q_i assembled from the factorization of L_i^{(t)}."""
    O = ordered_generators(weights, t)
    _check_index(O, i)
    ws = O.weights
    n = len(ws)
    f = O.factorization(i)
    idx = f.support()
    L1 = edge_monomial(ws, 1)
    gens = [mono_colon(edge_monomial(ws, b), L1) for b in range(2, n + 1)]
    p = len(idx) - 1 if idx[-1] == n else len(idx)
    for j in range(2, p + 1):
        a = idx[j - 1]
        gens.append(mono_colon(edge_monomial(ws, a + 1), edge_monomial(ws, a)))
    for j in range(heavy_chain_length(f) + 1):
        gens.append(variable((n - 2 * j - 1) % n + 1, n))
    return MonomialIdeal(n, gens)


def _form_one(ws, colon, fk, fi):
    n = len(ws)
    for l1 in range(1, n + 1):
        if not fi.uses(l1):
            continue
        for l2 in range(l1 + 1, n + 1):
            if fk.uses(l2) and mono_colon(edge_monomial(ws, l2), edge_monomial(ws, l1)) == colon:
                return (l1, l2)
    return None


def _form_two(ws, colon, fk, fi):
    n = len(ws)
    for d in range(n // 2):
        if not (fk.uses(n - 2 * d) and fi.uses(n + 1 - 2 * d)):
            return None
        if colon == variable((n - 2 * d - 1) % n + 1, n):
            return d
    return None


def find_li_witness(weights, t, i, j):
    """A generator index k > i whose colon by L_i^{(t)} contains (L_j^{(t)} : L_i^{(t)})
    and has one of the two admissible shapes.

    Returns ``(k, 1)`` for a colon of two single edges, ``(k, 2)`` for a
    single variable x_{n-2d}.
    """
    O = ordered_generators(weights, t)
    _check_index(O, i)
    if not i < j <= O.r:
        raise ValueError(f"need {i} < j <= {O.r}, got {j}")
    ws = O.weights
    Li = O[i]
    fi = O.factorization(i)
    target = mono_colon(O[j], Li)
    for k in range(i + 1, O.r + 1):
        colon = mono_colon(O[k], Li)
        if not mono_divides(colon, target):
            continue
        fk = O.factorization(k)
        if _form_one(ws, colon, fk, fi):
            return k, 1
        if _form_two(ws, colon, fk, fi) is not None:
            return k, 2
    raise TheoremViolation(f"no witness for i={i}, j={j} (weights {ws}, t={t})")


def trivial_edge_colon_sides(weights, t, i):
    """Both sides of ((I^t : x_i), x_{i+1}) = ((I(C minus x_{i+1})^t : x_i), x_{i+1})."""
    ws = tuple(int(w) for w in weights)
    n = len(ws)
    if ws[(i - 1) % n] != 1:
        raise ValueError(f"edge e_{i} is not trivial")
    nxt = i % n + 1
    G = build_cycle(ws)
    xi = variable((i - 1) % n + 1, n)
    lhs = add_variables(ideal_colon_mono(ideal_power(edge_ideal(G), t), xi), nxt)
    H = delete_vertex(G, nxt)
    rhs = add_variables(ideal_colon_mono(ideal_power(edge_ideal(H), t), xi), nxt)
    return lhs, rhs


def middle_edge_colon_sides(weights, t, i):
    """Both sides of I^t : x_{i+1} x_{i+2} = I^{t-1}."""
    ws = tuple(int(w) for w in weights)
    n = len(ws)
    if t < 2:
        raise ValueError("need t >= 2")
    w = lambda k: ws[(k - 1) % n]
    if not (w(i) >= 2 and w(i + 2) >= 2 and w(i + 1) == 1):
        raise ValueError(f"edges around e_{i + 1} do not have the required weights")
    I = edge_ideal(build_cycle(ws))
    m = [0] * n
    m[i % n] += 1
    m[(i + 1) % n] += 1
    return ideal_colon_mono(ideal_power(I, t), m), ideal_power(I, t - 1)
