"""Edge-weighted graphs, their edge ideals and the integral-closure test.

Run with ``python3 demos/02_weighted_graphs.py``.
"""
# %%
import itertools

from edgereg.closure import ideal_integral_closure, is_integrally_closed_algebraic
from edgereg.graphs import build_cycle, build_path, edge_ideal, forbidden_pattern, is_integrally_closed_combinatorial

C = build_cycle([2, 1, 2, 1])
print("C4 with weights (2,1,2,1):", edge_ideal(C))

# %%
# The combinatorial test looks for small induced obstructions; the algebraic one
# checks the Newton polyhedron exactly. They should always agree.
for ws in [(2, 2, 2), (2, 2, 1), (2, 1, 2, 1, 2, 1), (2, 1, 1, 2, 1, 1, 1)]:
    G = build_cycle(ws)
    comb = is_integrally_closed_combinatorial(G)
    alg = is_integrally_closed_algebraic(edge_ideal(G))
    print(f"cycle {ws}: combinatorial={comb} algebraic={alg} obstruction={forbidden_pattern(G)}")

# %%
# When the ideal is not closed, the closure shows what is missing.
P = build_path([2, 2])
print("closure of", edge_ideal(P), "is", ideal_integral_closure(edge_ideal(P)))

# %%
# How many 5-cycles over weights {1,2,3} are integrally closed?
closed = sum(is_integrally_closed_combinatorial(build_cycle(ws)) for ws in itertools.product((1, 2, 3), repeat=5))
print(f"{closed} of {3 ** 5} weighted 5-cycles are integrally closed")
