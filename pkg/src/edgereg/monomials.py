"""Monomials and monomial ideals over a fixed, ordered set of variables.

A monomial is a tuple of nonnegative exponents; ``(2, 0, 1)`` is x1^2 x3.
A :class:`MonomialIdeal` stores its minimal generating set in graded
lexicographic order, so two equal ideals always have identical generator
tuples and ``==`` is ideal equality.
"""

from __future__ import annotations

import json
from itertools import product as _cartesian
from typing import Iterable, Sequence

Monomial = tuple  # tuple[int, ...]


def monomial(exponents: Iterable[int]) -> Monomial:
    """Validate and freeze an exponent vector."""
    e = tuple(int(a) for a in exponents)
    if any(a < 0 for a in e):
        raise ValueError(f"negative exponent in {e}")
    return e


def variable(i: int, n: int) -> Monomial:
    """The variable x_i (1-based) as a monomial in n variables."""
    if not 1 <= i <= n:
        raise ValueError(f"variable index {i} outside 1..{n}")
    return tuple(1 if j == i - 1 else 0 for j in range(n))


def one(n: int) -> Monomial:
    return (0,) * n


def degree(u: Monomial) -> int:
    return sum(u)


def support(u: Monomial) -> frozenset:
    """1-based indices of the variables dividing u."""
    return frozenset(j + 1 for j, a in enumerate(u) if a)


def _check_same(u, v):
    if len(u) != len(v):
        raise ValueError(f"variable count mismatch: {len(u)} vs {len(v)}")


def mono_divides(u: Monomial, v: Monomial) -> bool:
    _check_same(u, v)
    return all(a <= b for a, b in zip(u, v))


def mono_mul(u: Monomial, v: Monomial) -> Monomial:
    _check_same(u, v)
    return tuple(a + b for a, b in zip(u, v))


def mono_lcm(u: Monomial, v: Monomial) -> Monomial:
    _check_same(u, v)
    return tuple(max(a, b) for a, b in zip(u, v))


def mono_colon(u: Monomial, v: Monomial) -> Monomial:
    """Generator of the principal colon (u) : (v)."""
    _check_same(u, v)
    return tuple(max(a - b, 0) for a, b in zip(u, v))


def mono_pow(u: Monomial, k: int) -> Monomial:
    return tuple(a * k for a in u)


def grlex_key(u: Monomial):
    return (sum(u), tuple(-a for a in u))


def _minimal(gens):
    """Minimal elements under divisibility, canonically sorted."""
    cands = sorted(set(gens), key=grlex_key)
    kept = []
    for g in cands:
        # only lower-or-equal degree monomials can divide g
        if not any(all(a <= b for a, b in zip(h, g)) for h in kept):
            kept.append(g)
    return tuple(kept)


class MonomialIdeal:
    """A monomial ideal in ``n`` variables, kept in minimal canonical form.

    The zero ideal has no generators; the unit ideal is generated by
    the all-zero exponent vector.
    """

    __slots__ = ("n", "gens")

    def __init__(self, n: int, gens: Iterable[Sequence[int]] = ()):
        if n < 0:
            raise ValueError("variable count must be nonnegative")
        gs = []
        for g in gens:
            m = monomial(g)
            if len(m) != n:
                raise ValueError(f"generator {m} does not have {n} exponents")
            gs.append(m)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "gens", _minimal(gs))

    def __setattr__(self, name, value):
        raise AttributeError("MonomialIdeal is immutable")

    def __eq__(self, other):
        if not isinstance(other, MonomialIdeal):
            return NotImplemented
        return self.n == other.n and self.gens == other.gens

    def __hash__(self):
        return hash((self.n, self.gens))

    def __len__(self):
        return len(self.gens)

    def __iter__(self):
        return iter(self.gens)

    def __contains__(self, u):
        return ideal_contains(self, u)

    def __add__(self, other):
        return ideal_sum(self, other)

    def __mul__(self, other):
        return ideal_product(self, other)

    def __pow__(self, t):
        return ideal_power(self, t)

    def __repr__(self):
        return f"MonomialIdeal({self.n}, {list(self.gens)!r})"

    def __str__(self):
        if self.is_zero():
            return "(0)"
        return "(" + ", ".join(format_monomial(g) for g in self.gens) + ")"

    def is_zero(self) -> bool:
        return not self.gens

    def is_unit(self) -> bool:
        return self.gens == (one(self.n),)

    def max_exponents(self) -> Monomial:
        """Componentwise maximum over the minimal generators."""
        if not self.gens:
            return one(self.n)
        return tuple(max(col) for col in zip(*self.gens))

    def support(self) -> frozenset:
        s = frozenset()
        for g in self.gens:
            s |= support(g)
        return s

    def is_squarefree(self) -> bool:
        return all(a <= 1 for g in self.gens for a in g)


def format_monomial(u: Monomial) -> str:
    parts = []
    for j, a in enumerate(u, start=1):
        if a == 1:
            parts.append(f"x{j}")
        elif a > 1:
            parts.append(f"x{j}^{a}")
    return "*".join(parts) if parts else "1"


def zero_ideal(n: int) -> MonomialIdeal:
    return MonomialIdeal(n)


def unit_ideal(n: int) -> MonomialIdeal:
    return MonomialIdeal(n, [one(n)])


def ideal_minimalize(gens: Iterable[Sequence[int]], n: int | None = None) -> MonomialIdeal:
    gens = [monomial(g) for g in gens]
    if n is None:
        if not gens:
            raise ValueError("cannot infer the variable count of an empty generator list")
        n = len(gens[0])
    return MonomialIdeal(n, gens)


def _same_ring(I, J):
    if I.n != J.n:
        raise ValueError(f"ideals live in different rings ({I.n} vs {J.n} variables)")


def ideal_sum(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _same_ring(I, J)
    return MonomialIdeal(I.n, I.gens + J.gens)


def ideal_product(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _same_ring(I, J)
    return MonomialIdeal(
        I.n, [tuple(a + b for a, b in zip(g, h)) for g in I.gens for h in J.gens]
    )


def ideal_power(I: MonomialIdeal, t: int) -> MonomialIdeal:
    if t < 1:
        raise ValueError(f"power must be at least 1, got {t}")
    P = I
    for _ in range(t - 1):
        P = ideal_product(P, I)
    return P


def ideal_colon_mono(I: MonomialIdeal, m: Sequence[int]) -> MonomialIdeal:
    """I : (m), computed generator-wise."""
    m = monomial(m)
    if len(m) != I.n:
        raise ValueError("monomial and ideal have different variable counts")
    return MonomialIdeal(I.n, [mono_colon(g, m) for g in I.gens])


def ideal_intersect(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _same_ring(I, J)
    return MonomialIdeal(I.n, [mono_lcm(g, h) for g in I.gens for h in J.gens])


def ideal_colon_ideal(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _same_ring(I, J)
    if J.is_zero():
        raise ValueError("colon by the zero ideal is undefined here")
    result = None
    for g in J.gens:
        c = ideal_colon_mono(I, g)
        result = c if result is None else ideal_intersect(result, c)
    return result


def ideal_contains(I: MonomialIdeal, u: Sequence[int]) -> bool:
    u = tuple(u)
    if len(u) != I.n:
        raise ValueError("monomial and ideal have different variable counts")
    return any(all(a <= b for a, b in zip(g, u)) for g in I.gens)


def ideal_subset(I: MonomialIdeal, J: MonomialIdeal) -> bool:
    """True iff I is contained in J."""
    _same_ring(I, J)
    return all(ideal_contains(J, g) for g in I.gens)


def ideal_equals(I: MonomialIdeal, J: MonomialIdeal) -> bool:
    return I.n == J.n and I.gens == J.gens


def add_variables(I: MonomialIdeal, *indices: int) -> MonomialIdeal:
    """(I, x_i, ...) for the given 1-based variable indices."""
    return MonomialIdeal(I.n, I.gens + tuple(variable(i, I.n) for i in indices))


def embed(I: MonomialIdeal, n: int, offset: int = 0) -> MonomialIdeal:
    """Re-express I in n variables, shifting its variables by ``offset``."""
    if offset < 0 or offset + I.n > n:
        raise ValueError("embedding does not fit")
    pad = n - offset - I.n
    return MonomialIdeal(n, [(0,) * offset + g + (0,) * pad for g in I.gens])


def polarize(I: MonomialIdeal):
    """Squarefree polarization of I.

    Returns ``(P, varmap)`` where ``varmap[(j, k)]`` is the 0-based position of
    the new variable x_{j,k} (both j and k 1-based) in P's ring.
    """
    if I.is_zero():
        raise ValueError("cannot polarize the zero ideal")
    top = I.max_exponents()
    varmap = {}
    for j, a in enumerate(top, start=1):
        for k in range(1, a + 1):
            varmap[(j, k)] = len(varmap)
    N = len(varmap)
    gens = []
    for g in I.gens:
        e = [0] * N
        for j, a in enumerate(g, start=1):
            for k in range(1, a + 1):
                e[varmap[(j, k)]] = 1
        gens.append(e)
    return MonomialIdeal(N, gens), varmap


def monomials_in_box(bound: Sequence[int]):
    """All exponent vectors componentwise at most ``bound``."""
    return _cartesian(*(range(b + 1) for b in bound))


# JSON interchange: {"n": ..., "gens": [[e1, ..., en], ...]}

def ideal_to_dict(I: MonomialIdeal) -> dict:
    return {"n": I.n, "gens": [list(g) for g in I.gens]}


def ideal_from_dict(d: dict) -> MonomialIdeal:
    try:
        n = int(d["n"])
        gens = d["gens"]
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"malformed ideal JSON: {exc}") from None
    if not isinstance(gens, list):
        raise ValueError("malformed ideal JSON: 'gens' must be a list")
    return MonomialIdeal(n, gens)


def dumps_ideal(I: MonomialIdeal) -> str:
    return json.dumps(ideal_to_dict(I))


def loads_ideal(text: str) -> MonomialIdeal:
    try:
        d = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"malformed ideal JSON: {exc}") from None
    return ideal_from_dict(d)
