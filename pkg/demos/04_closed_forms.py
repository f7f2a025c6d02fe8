"""Closed-form regularity of powers against the engine.

Run with ``python3 demos/04_closed_forms.py``.
"""
# %%
from edgereg.betti import regularity_quotient
from edgereg.formulas import predict, trivial_cycle_additive
from edgereg.graphs import build_cycle, build_path, edge_ideal
from edgereg.monomials import ideal_power


def engine(shape, ws, t):
    G = build_cycle(ws) if shape == "cycle" else build_path(ws)
    return regularity_quotient(ideal_power(edge_ideal(G), t))


for shape, ws in [("cycle", (3, 1, 1)), ("cycle", (2, 1, 2, 1, 1, 1, 1)), ("path", (2, 1, 1)), ("path", (1, 2, 1, 2))]:
    for t in (1, 2, 3):
        if shape == "cycle" and len(ws) == 7 and t == 3:
            continue
        print(f"{shape} {ws} t={t}: formula {predict(shape, ws, t)}, engine {engine(shape, ws, t)}")

# %%
# Unweighted cycles: the simple additive expression is off by one when n = 2 mod 3 and t >= 2.
print(" n  t  engine  predict  floor((n+1)/3)+2(t-1)")
for n in range(3, 9):
    for t in (1, 2):
        ws = (1,) * n
        print(f"{n:>2} {t:>2} {engine('cycle', ws, t):>7} {predict('cycle', ws, t):>8} {trivial_cycle_additive(n, t):>8}")
