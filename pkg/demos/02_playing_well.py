"""
Finding winning moves
=====================

A P-position is one from which the player to move loses. From anywhere
else the engine can reply with a move to a P-position.
"""

from exconim import ExcoNim, MooreNim, best_move, is_p_position_exco, p_move
from exconim.play import engine_reply

# Exco-Nim P-positions are exactly those with x0 = 0 and xor of the main piles zero.
for coords in [(1, 2, 3), (0, 4, 4), (0, 3, 5, 6), (2, 1, 1, 1)]:
    print(coords, "P" if is_p_position_exco(coords) else "N", p_move(coords))

# The table-backed search finds the same kind of moves for any variant.
print(best_move(MooreNim(3, 2), (0, 3, 5, 6)))

# A short self-play game: the engine plays both sides.
rules = ExcoNim(2)
pos = (3, 4, 6)
while pos is not None:
    print(" ", pos)
    pos = engine_reply(rules, pos)
    if pos is not None and not any(pos.coords):
        print(" ", pos, "(no moves left)")
        break
