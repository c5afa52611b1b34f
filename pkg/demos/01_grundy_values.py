"""
Grundy values across four take-away games
=========================================

Every variant here is played on piles of tokens. Exco-Nim adds an extra
pile x0 that may be emptied at will, while at least one main pile must
stay untouched on each move.
"""

import numpy as np

from exconim import CoNim, ExcoNim, MooreNim, StandardNim, fill_box, SgTable, sg_bruteforce

# Plain Nim first: the value is the xor of the piles.
print("nim 3,5 ->", sg_bruteforce(StandardNim(2), (0, 3, 5)))

# A whole box of values is a numpy array indexed by coordinates.
nim = fill_box(SgTable.empty(StandardNim(2), (0, 7, 7)))
print(nim.values[0])

# Moore's variant lets you touch up to k piles at once.
moore = fill_box(SgTable.empty(MooreNim(3, 2), (0, 3, 3, 3)))
zeros = np.argwhere(moore.values[0] == 0)
print("moore k=2 zeros in 0..3:", [tuple(int(v) for v in z) for z in zeros])

# Co-Nim: one pile must be left alone.
conim = fill_box(SgTable.empty(CoNim(2), (0, 5, 5)))
print(conim.values[0])

# Exco-Nim with two main piles; rows are x1, columns x2, for x0 = 1.
exco = fill_box(SgTable.empty(ExcoNim(2), (2, 6, 6)))
print(exco.values[1])
print("G(1,2,3) =", exco[(1, 2, 3)])
