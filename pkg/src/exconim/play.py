"""Engine replies for interactive play."""
from __future__ import annotations

import random

from .closed_form import nim_sum
from .engine import SgTable, best_move
from .game import ExcoNim, GameRules, Position, StandardNim, as_position, is_terminal, p_move


def winning_reply(rules: GameRules, pos, memo: SgTable | None = None) -> Position | None:
    """Destination of the first winning move in lexicographic order, if any.

    Nim and Exco-Nim use their closed descriptions of the P-positions, which
    single out the same move the table search would pick.  The Moore
    variants fall back to the table.
    """
    pos = as_position(pos)
    rules.check(pos)
    if isinstance(rules, ExcoNim):
        mv = p_move(pos)
        return None if mv is None else mv.target
    if isinstance(rules, StandardNim):
        s = nim_sum(pos.piles)
        if s == 0:
            return None
        options = []
        for i, p in enumerate(pos.piles):
            if p ^ s < p:
                piles = list(pos.piles)
                piles[i] = p ^ s
                options.append(Position(0, tuple(piles)))
        return min(options)
    mv = best_move(rules, pos, memo)
    return None if mv is None else mv.target


def fallback_reply(rules: GameRules, pos, rng: random.Random | None = None) -> Position:
    """Take one token from the largest pile, lowest index on ties.

    With ``rng`` the pile is drawn uniformly among the nonempty ones instead.
    """
    pos = as_position(pos)
    if is_terminal(rules, pos):
        raise ValueError(f"{pos} is terminal")
    coords = list(pos.coords)
    nonempty = [i for i, c in enumerate(coords) if c > 0]
    if rng is not None:
        i = rng.choice(nonempty)
    else:
        i = max(nonempty, key=lambda j: (coords[j], -j))
    coords[i] -= 1
    return Position.of(*coords)


def engine_reply(rules: GameRules, pos, memo: SgTable | None = None,
                 rng: random.Random | None = None) -> Position:
    dst = winning_reply(rules, pos, memo)
    return fallback_reply(rules, pos, rng) if dst is None else dst
