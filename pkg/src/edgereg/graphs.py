"""Edge-weighted simple graphs and their edge ideals.

Vertices are labelled 1..n, matching the variables x_1..x_n of the ambient
polynomial ring. Induced subgraphs keep the ambient labelling so their edge
ideals live in the same ring as the parent's.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations

from .monomials import MonomialIdeal

SHAPES = ("cycle", "path", "general")


@dataclass(frozen=True)
class WeightedGraph:
    n: int
    edges: tuple  # ((u, v, w), ...) with u < v, 1-based
    shape: str = "general"
    vertices: tuple = None

    def __post_init__(self):
        if self.shape not in SHAPES:
            raise ValueError(f"unknown shape {self.shape!r}")
        if self.n < 0:
            raise ValueError("vertex count must be nonnegative")
        verts = tuple(range(1, self.n + 1)) if self.vertices is None else tuple(sorted(set(self.vertices)))
        if any(not 1 <= v <= self.n for v in verts):
            raise ValueError(f"vertex labels must lie in 1..{self.n}")
        object.__setattr__(self, "vertices", verts)
        vset = set(verts)
        seen = set()
        norm = []
        for e in self.edges:
            u, v, w = (int(x) for x in e)
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if u not in vset or v not in vset:
                raise ValueError(f"edge {u}-{v} leaves the vertex set")
            if w < 1:
                raise ValueError(f"edge {u}-{v} has nonpositive weight {w}")
            u, v = min(u, v), max(u, v)
            if (u, v) in seen:
                raise ValueError(f"duplicate edge {u}-{v}")
            seen.add((u, v))
            norm.append((u, v, w))
        object.__setattr__(self, "edges", tuple(norm))

    def weight(self, u: int, v: int) -> int:
        """Weight of edge uv, or 0 if absent."""
        u, v = min(u, v), max(u, v)
        for a, b, w in self.edges:
            if (a, b) == (u, v):
                return w
        return 0

    def weight_map(self) -> dict:
        return {(u, v): w for u, v, w in self.edges}

    def is_trivial(self) -> bool:
        return all(w == 1 for _, _, w in self.edges)

    def max_weight(self) -> int:
        return max((w for _, _, w in self.edges), default=0)

    def neighbors(self, v: int) -> set:
        out = set()
        for a, b, _ in self.edges:
            if a == v:
                out.add(b)
            elif b == v:
                out.add(a)
        return out

    @property
    def weights(self) -> tuple:
        """Edge weights in edge order e_1, e_2, ... for cycles and paths."""
        if self.shape == "cycle":
            wm = self.weight_map()
            return tuple(wm[min(i, i % self.n + 1), max(i, i % self.n + 1)] for i in range(1, self.n + 1))
        if self.shape == "path":
            wm = self.weight_map()
            return tuple(wm[i, i + 1] for i in range(1, self.n))
        raise ValueError("weight vector is only defined for cycles and paths")


def build_cycle(weights) -> WeightedGraph:
    """C^n_w with e_i = x_i x_{i+1} (x_{n+1} = x_1) of weight weights[i-1]."""
    ws = [int(w) for w in weights]
    n = len(ws)
    if n < 3:
        raise ValueError(f"a cycle needs at least 3 vertices, got {n}")
    if any(w < 1 for w in ws):
        raise ValueError(f"weights must be positive: {ws}")
    edges = [(i, i % n + 1, ws[i - 1]) for i in range(1, n + 1)]
    return WeightedGraph(n, tuple(edges), "cycle")


def build_path(weights) -> WeightedGraph:
    """P^n_w on n = len(weights) + 1 vertices, e_i = x_i x_{i+1}."""
    ws = [int(w) for w in weights]
    n = len(ws) + 1
    if n < 2:
        raise ValueError("a path needs at least 2 vertices")
    if any(w < 1 for w in ws):
        raise ValueError(f"weights must be positive: {ws}")
    edges = [(i, i + 1, ws[i - 1]) for i in range(1, n)]
    return WeightedGraph(n, tuple(edges), "path")


def edge_ideal(G: WeightedGraph) -> MonomialIdeal:
    """I(G_w) = ((x_u x_v)^{w(uv)} : uv an edge)."""
    if not G.edges:
        raise ValueError("edge ideal of an edgeless graph is the zero ideal")
    gens = []
    for u, v, w in G.edges:
        e = [0] * G.n
        e[u - 1] = w
        e[v - 1] = w
        gens.append(e)
    return MonomialIdeal(G.n, gens)


def induced_subgraph(G: WeightedGraph, A) -> WeightedGraph:
    A = set(int(a) for a in A)
    bad = A - set(G.vertices)
    if bad:
        raise ValueError(f"vertices {sorted(bad)} are not in the graph")
    edges = tuple((u, v, w) for u, v, w in G.edges if u in A and v in A)
    return WeightedGraph(G.n, edges, "general", tuple(sorted(A)))


def delete_vertex(G: WeightedGraph, v: int) -> WeightedGraph:
    return induced_subgraph(G, set(G.vertices) - {v})


def forbidden_pattern(G: WeightedGraph):
    """First induced obstruction to integral closure, or None.

    Returns a tuple of vertices forming one of: a path on three vertices
    with both edges non-trivial, two non-trivial edges with no other edge
    among their four endpoints, or a triangle with all edges non-trivial.
    """
    wm = G.weight_map()

    def w(a, b):
        return wm.get((min(a, b), max(a, b)), 0)

    for trio in combinations(G.vertices, 3):
        a, b, c = trio
        ws = [w(a, b), w(b, c), w(a, c)]
        present = [x for x in ws if x]
        if len(present) >= 2 and all(x >= 2 for x in present):
            return trio
    for quad in combinations(G.vertices, 4):
        pairs = [(p, q) for p, q in combinations(quad, 2) if w(p, q)]
        if len(pairs) == 2 and not set(pairs[0]) & set(pairs[1]):
            if all(w(p, q) >= 2 for p, q in pairs):
                return quad
    return None


def is_integrally_closed_combinatorial(G: WeightedGraph) -> bool:
    if G.is_trivial():
        return True
    return forbidden_pattern(G) is None


def count_nontrivial(G: WeightedGraph) -> int:
    return sum(1 for _, _, w in G.edges if w >= 2)


def cycle_canonical(weights) -> tuple:
    """Lexicographically least weight vector among rotations and reflections."""
    ws = tuple(weights)
    n = len(ws)
    cands = []
    for seq in (ws, ws[::-1]):
        for r in range(n):
            cands.append(seq[r:] + seq[:r])
    return min(cands)


def path_canonical(weights) -> tuple:
    ws = tuple(weights)
    return min(ws, ws[::-1])


# Graph JSON: {"shape": ..., "n": ..., "edges": [[u, v, w], ...]}
# or the shorthand {"shape": "cycle"|"path", "weights": [...]}.

def graph_to_dict(G: WeightedGraph) -> dict:
    return {"shape": G.shape, "n": G.n, "edges": [list(e) for e in G.edges]}


def graph_from_dict(d: dict) -> WeightedGraph:
    if not isinstance(d, dict):
        raise ValueError("graph JSON must be an object")
    shape = d.get("shape", "general")
    if "weights" in d:
        if shape == "cycle":
            return build_cycle(d["weights"])
        if shape == "path":
            return build_path(d["weights"])
        raise ValueError("the weights shorthand needs shape 'cycle' or 'path'")
    try:
        n = int(d["n"])
        edges = [tuple(e) for e in d["edges"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"malformed graph JSON: {exc}") from None
    if shape == "cycle":
        return build_cycle(_shape_weights(n, edges, cyclic=True))
    if shape == "path":
        return build_path(_shape_weights(n, edges, cyclic=False))
    return WeightedGraph(n, tuple(edges), "general")


def _shape_weights(n, edges, cyclic):
    wm = {}
    for u, v, w in edges:
        wm[min(u, v), max(u, v)] = w
    want = [(i, i % n + 1) if cyclic else (i, i + 1) for i in range(1, n + (1 if cyclic else 0))]
    want = [(min(a, b), max(a, b)) for a, b in want]
    if set(wm) != set(want) or len(edges) != len(want):
        raise ValueError("edges do not match the declared shape")
    return [wm[e] for e in want]


def loads_graph(text: str) -> WeightedGraph:
    try:
        return graph_from_dict(json.loads(text))
    except json.JSONDecodeError as exc:
        raise ValueError(f"malformed graph JSON: {exc}") from None


def dumps_graph(G: WeightedGraph) -> str:
    return json.dumps(graph_to_dict(G))
