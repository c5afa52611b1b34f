"""
Two main piles: bounded queries far from the origin
===================================================

For n = 2 there is no closed form. Still, the question "is G at most v,
and if so what is it?" can be answered by shifting the position into a
small box whose size depends only on v.
"""

from exconim import AtLeast, k_of, sg_bounded, sg_table_n2, shift

table = sg_table_n2(2, 40, 80)
print("G(1,2,3) =", table[(1, 2, 3)], "->", sg_bounded((1, 2, 3), 6))
print("G(1,5,6) =", table[(1, 5, 6)], "->", sg_bounded((1, 5, 6), 4))

# Adding 2^k to both main piles keeps every value up to v unchanged.
v = 5
k = k_of(v)
for coords in [(1, 3, 9), (0, 6, 7), (2, 1, 30)]:
    far = shift(coords, k, 1)
    print(coords, "->", far, sg_bounded(coords, v), sg_bounded(far, v))

# Queries a million tokens out still cost next to nothing.
for coords in [(1, 10**6, 10**6 + 1), (1, 10**6, 10**6 + 5)]:
    ans = sg_bounded(coords, 12)
    kind = "lower bound" if isinstance(ans, AtLeast) else "exact"
    print("far query", coords, "->", ans, f"({kind})")
