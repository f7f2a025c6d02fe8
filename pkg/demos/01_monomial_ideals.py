"""Monomial ideals: generators, arithmetic, colons and polarization.

Run with ``python3 demos/01_monomial_ideals.py``.
"""
# %%
from edgereg.monomials import (
    MonomialIdeal,
    dumps_ideal,
    ideal_colon_mono,
    ideal_intersect,
    ideal_power,
    polarize,
)

# An ideal is stored by its minimal generators; redundant input is dropped.
I = MonomialIdeal(3, [(2, 2, 0), (0, 1, 1), (1, 0, 1), (3, 3, 0)])
print("I =", I)

# %%
# Powers minimalize the products: 9 products, 6 of them minimal.
I2 = ideal_power(I, 2)
print("I^2 has", len(I2), "minimal generators:", I2)

# %%
# Colon by a monomial and intersection.
print("I : x3 =", ideal_colon_mono(I, (0, 0, 1)))
print("(x1x2) ∩ (x2x3) =", ideal_intersect(MonomialIdeal(3, [(1, 1, 0)]), MonomialIdeal(3, [(0, 1, 1)])))

# %%
# Polarization turns x_j^a into x_{j,1}...x_{j,a}; the variable map says where each went.
P, varmap = polarize(I)
print("polarization lives in", P.n, "variables, squarefree:", P.is_squarefree())
for (j, k), pos in sorted(varmap.items()):
    print(f"  x{j},{k} -> position {pos}")

# %%
# JSON interchange used by the command line.
print(dumps_ideal(I))
