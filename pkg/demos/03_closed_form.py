"""
Three or more main piles: the closed form
=========================================

With n >= 3 main piles the value only depends on the smallest main pile m
and the total u. No search is needed, so huge positions are instant.
"""

from exconim import ExcoNim, construct_move_appendix, g_closed, sg_params
from exconim.suites import brute_table

pos = (1, 2, 3, 4)
p = sg_params(pos)
print(f"m={p.m} u={p.u} y={p.y} z={p.z} kind={p.kind.name} G={g_closed(pos)}")

# Compare against exhaustive search on a small cube.
table = brute_table(ExcoNim(3), (3, 4, 4, 4))
assert all(g_closed(q) == table[q] for q in table.positions())
print("closed form agrees on", table.values.size, "positions")

# A big position, and an explicit move to every smaller value.
big = (7, 10**6, 10**6 + 3, 10**6 + 11)
g = g_closed(big)
print("G =", g)
for v in (0, 1, g // 2, g - 1):
    dst = construct_move_appendix(big, v)
    print(f"  to value {v}: {dst} (G={g_closed(dst)})")
