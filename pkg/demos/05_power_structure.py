"""Generators of I^t for a cycle with one heavy edge: factorization, order, colons.

Run with ``python3 demos/05_power_structure.py``.
"""
# %%
from edgereg.powers import colon_tail, middle_edge_colon_sides, find_li_witness, ordered_generators, predicted_colon_tail

ws, t = (2, 1, 1, 1, 1), 2
O = ordered_generators(ws, t)
print(f"weights {ws}, t={t}: {O.r} generators, the first {O.c} involve L1")
for k in range(1, O.r + 1):
    print(f"  L_{k}^(t) = {O[k]}  exponents {O.factorization(k).exponents}")

# %%
# The colon of the tail ideal by each of the first c generators has a closed description.
for i in range(1, O.c + 1):
    print(f"i={i}: computed {colon_tail(ws, t, i)}, described {predicted_colon_tail(ws, t, i)}")

# %%
# Every later generator is dominated by one of two simple colon shapes.
i = 1
for j in range(2, O.r + 1):
    k, form = find_li_witness(ws, t, i, j)
    print(f"j={j}: witness k={k}, form {form}")

# %%
# Colon by the middle of a trivial edge between two heavy ones drops one power.
lhs, rhs = middle_edge_colon_sides((2, 1, 3, 1, 1), 3, 1)
print("I^3 : x2 x3 == I^2 ?", lhs == rhs)
