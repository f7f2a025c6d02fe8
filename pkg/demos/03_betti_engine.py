"""Graded Betti numbers and regularity from the upper Koszul complexes.

Run with ``python3 demos/03_betti_engine.py``.
"""
# %%
import time

from edgereg.betti import betti_table, koszul_betti, lcm_lattice, multigraded_betti, regularity_quotient
from edgereg.graphs import build_cycle, edge_ideal
from edgereg.monomials import MonomialIdeal, ideal_power

# Two disjoint edges: two generators and one Koszul syzygy.
I = MonomialIdeal(4, [(1, 1, 0, 0), (0, 0, 1, 1)])
print(betti_table(I))

# %%
# Nonzero Betti numbers only sit on the lcm lattice.
J = edge_ideal(build_cycle([2, 1, 1]))
print("lcm lattice:", sorted(lcm_lattice(J).as_set()))
print("multigraded:", multigraded_betti(J))
print("beta at (2,2,1) straight from the definition:", koszul_betti(J, (2, 2, 1)))

# %%
# Regularity of powers of a weighted 7-cycle, at two characteristics.
ws = (3, 1, 2, 1, 1, 1, 1)
for t in (1, 2):
    start = time.perf_counter()
    It = ideal_power(edge_ideal(build_cycle(ws)), t)
    regs = [regularity_quotient(It, p) for p in (32003, 2)]
    print(f"t={t}: {len(It)} generators, {len(lcm_lattice(It))} lattice points, reg(S/I^t)={regs} "
          f"[{time.perf_counter() - start:.2f}s]")
