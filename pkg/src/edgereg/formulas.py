"""Closed-form regularity of powers of edge ideals of weighted paths and cycles.

All predictors return reg(S/I^t); add one for reg(I^t).
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import build_cycle, build_path, is_integrally_closed_combinatorial


class NotIntegrallyClosed(ValueError):
    pass


class AmbiguousFormula(ValueError):
    """Admissible choices of the maximal edge give different values."""


def _check_t(t):
    if int(t) < 1:
        raise ValueError(f"power must be at least 1, got {t}")
    return int(t)


def _path_single(ws, i):
    """reg(S/I(P^n_w)) with the maximal edge at 1-based position i."""
    n = len(ws) + 1
    om = ws[i - 1]
    if n <= 4:
        return 2 * om - 1
    first = 2 * om + (i - 1) // 3 + (n - (i + 1)) // 3
    if i + 2 <= n - 1:
        second = 2 * ws[i + 1] + (i - 2) // 3 + (n - i) // 3
        return max(first, second) - 1
    return first - 1


def path_candidates(weights) -> dict:
    """Formula value for each admissible (orientation, edge index) choice.

    Admissible: e_i has the maximal weight, which is at least 2, and no
    non-trivial edge sits two steps before it (the formula only accounts
    for a second heavy edge at i + 2).
    """
    ws = tuple(int(w) for w in weights)
    om = max(ws)
    out = {}
    for label, seq in (("forward", ws), ("reversed", ws[::-1])):
        for i, w in enumerate(seq, start=1):
            if w != om or om < 2:
                continue
            if i + 2 <= len(seq) and om < seq[i + 1]:
                continue
            if i >= 3 and seq[i - 3] >= 2:
                continue
            out[(label, i)] = _path_single(seq, i)
    return out


def predict_reg_path_power(weights, t: int = 1) -> int:
    """reg(S/I(P^n_w)^t) for an integrally closed weighted path."""
    t = _check_t(t)
    G = build_path(weights)
    if not is_integrally_closed_combinatorial(G):
        raise NotIntegrallyClosed(f"path with weights {tuple(weights)} is not integrally closed")
    ws = G.weights
    n = G.n
    if G.is_trivial():
        return (n + 1) // 3 + 2 * (t - 1)
    cands = path_candidates(ws)
    if not cands:
        raise AmbiguousFormula(f"no edge of {ws} satisfies the side condition")
    values = set(cands.values())
    if len(values) > 1:
        raise AmbiguousFormula(f"edge choices disagree for {ws}: {cands}")
    return values.pop() + 2 * (t - 1) * max(ws)


@dataclass(frozen=True)
class CyclePowerQuery:
    weights: tuple
    t: int = 1

    def __post_init__(self):
        object.__setattr__(self, "weights", tuple(int(w) for w in self.weights))
        if len(self.weights) < 3:
            raise ValueError("a cycle needs at least 3 vertices")
        _check_t(self.t)

    @property
    def n(self):
        return len(self.weights)

    @property
    def omega(self):
        return max(self.weights)


def predict_reg_cycle_power(q: CyclePowerQuery) -> int:
    """reg(S/I(C^n_w)^t) for an integrally closed weighted cycle."""
    G = build_cycle(q.weights)
    if not is_integrally_closed_combinatorial(G):
        raise NotIntegrallyClosed(f"cycle with weights {q.weights} is not integrally closed")
    if G.is_trivial():
        if q.t == 1:
            return (q.n + 1) // 3
        # differs from (n+1)//3 + 2(t-1) exactly when n = 2 mod 3
        return 2 * q.t + q.n // 3 - 2
    return 2 * q.omega * q.t + q.n // 3 - 2


def trivial_cycle_additive(n: int, t: int) -> int:
    """floor((n+1)/3) + 2(t-1), the stated value for unweighted cycles.

    Kept separately from :func:`predict_reg_cycle_power` because the Betti
    engine contradicts it for n = 2 mod 3 and t >= 2.
    """
    return (n + 1) // 3 + 2 * (_check_t(t) - 1)


def predict_reg_regular_sequence(d: int, m: int, t: int) -> int:
    """reg(I^t) for I generated by a regular sequence of m forms of degree d."""
    if d < 1 or m < 1 or t < 1:
        raise ValueError("degree, count and power must all be positive")
    return d * t + (d - 1) * (m - 1)


def predict(shape: str, weights, t: int = 1) -> int:
    if shape == "cycle":
        return predict_reg_cycle_power(CyclePowerQuery(tuple(weights), t))
    if shape == "path":
        return predict_reg_path_power(weights, t)
    raise ValueError(f"no closed form for shape {shape!r}")
