"""Positions, move rules and P-positions for the Nim family.

A position always carries an extra pile ``x0``.  Only Exco-Nim uses it; the
other variants require ``x0 == 0`` so that one position type serves every
game and the SG engine has a single code path.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence, Union


@dataclass(frozen=True, order=True)
class Position:
    x0: int
    piles: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "piles", tuple(int(p) for p in self.piles))
        object.__setattr__(self, "x0", int(self.x0))
        if self.x0 < 0 or any(p < 0 for p in self.piles):
            raise ValueError(f"negative pile in {self.coords}")
        if not self.piles:
            raise ValueError("a position needs at least one main pile")

    @classmethod
    def of(cls, *coords: int) -> "Position":
        """Build from a flat ``(x0, x1, ..., xn)`` tuple."""
        return cls(coords[0], tuple(coords[1:]))

    @property
    def n(self) -> int:
        return len(self.piles)

    @property
    def coords(self) -> tuple[int, ...]:
        return (self.x0, *self.piles)

    @property
    def total(self) -> int:
        return self.x0 + sum(self.piles)

    def __iter__(self):
        return iter(self.coords)

    def __str__(self):
        return ",".join(map(str, self.coords))


PositionLike = Union[Position, Sequence[int]]


def as_position(pos: PositionLike) -> Position:
    if isinstance(pos, Position):
        return pos
    return Position.of(*pos)


def canonical(pos: PositionLike) -> Position:
    """Sort the main piles ascending.  The SG value is unchanged."""
    pos = as_position(pos)
    return Position(pos.x0, tuple(sorted(pos.piles)))


@dataclass(frozen=True)
class GameRules:
    n: int

    # max number of main piles a move may reduce
    @property
    def max_reduced(self) -> int:
        raise NotImplementedError

    has_extra_pile = False
    name = ""

    @property
    def token(self) -> str:
        return self.name

    def check(self, pos: Position) -> None:
        if pos.n != self.n:
            raise ValueError(f"{self.token} expects {self.n} main piles, got {pos.n}")
        if not self.has_extra_pile and pos.x0 != 0:
            raise ValueError(f"{self.token} positions must have x0 = 0")


@dataclass(frozen=True)
class StandardNim(GameRules):
    name = "nim"

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("StandardNim needs n >= 1")

    @property
    def max_reduced(self) -> int:
        return 1


@dataclass(frozen=True)
class MooreNim(GameRules):
    k: int = 1
    name = "moore"

    def __post_init__(self):
        if not 1 <= self.k < self.n:
            raise ValueError(f"MooreNim needs 1 <= k < n, got n={self.n}, k={self.k}")

    @property
    def max_reduced(self) -> int:
        return self.k

    @property
    def token(self) -> str:
        return f"moore:k={self.k}"


@dataclass(frozen=True)
class CoNim(GameRules):
    name = "conim"

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("CoNim needs n >= 2")

    @property
    def max_reduced(self) -> int:
        return self.n - 1


@dataclass(frozen=True)
class ExcoNim(GameRules):
    name = "exco"
    has_extra_pile = True

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("ExcoNim needs n >= 2")

    @property
    def max_reduced(self) -> int:
        return self.n - 1


def rules_from_token(token: str, n: int) -> GameRules:
    """Inverse of ``GameRules.token``."""
    if token == "nim":
        return StandardNim(n)
    if token == "conim":
        return CoNim(n)
    if token == "exco":
        return ExcoNim(n)
    if token.startswith("moore:k="):
        return MooreNim(n, int(token[len("moore:k="):]))
    raise ValueError(f"unknown game variant {token!r}")


@dataclass(frozen=True)
class Move:
    source: Position
    target: Position

    def __str__(self):
        return f"{self.source} -> {self.target}"


def move_violation(rules: GameRules, src: PositionLike, dst: PositionLike) -> str | None:
    """Name the rule a proposed move breaks, or None when it is legal."""
    src, dst = as_position(src), as_position(dst)
    rules.check(src)
    rules.check(dst)
    if any(b > a for a, b in zip(src.coords, dst.coords)):
        return "a pile was increased"
    if dst.total >= src.total:
        return "no token was removed"
    reduced = sum(b < a for a, b in zip(src.piles, dst.piles))
    if isinstance(rules, ExcoNim):
        if reduced == rules.n:
            return "every main pile was reduced; at least one must stay unchanged"
        return None
    if reduced > rules.max_reduced:
        return f"{reduced} piles were reduced; at most {rules.max_reduced} allowed"
    return None


def is_legal_move(rules: GameRules, src: PositionLike, dst: PositionLike) -> bool:
    return move_violation(rules, src, dst) is None


def legal_moves(rules: GameRules, src: PositionLike) -> Iterator[Position]:
    """Yield every legal destination once, in lexicographic order."""
    src = as_position(src)
    rules.check(src)
    for coords in itertools.product(*(range(c + 1) for c in src.coords)):
        if coords == src.coords:
            continue
        dst = Position(coords[0], coords[1:])
        if move_violation(rules, src, dst) is None:
            yield dst


def is_terminal(rules: GameRules, pos: PositionLike) -> bool:
    return next(legal_moves(rules, pos), None) is None


def is_p_position_exco(pos: PositionLike) -> bool:
    pos = as_position(pos)
    return pos.x0 == 0 and len(set(pos.piles)) == 1


def p_move(pos: PositionLike) -> Move | None:
    """The unique Exco-Nim move back into the P-positions, if any.

    Empty the extra pile and cut every main pile down to the smallest one.
    """
    pos = as_position(pos)
    if is_p_position_exco(pos):
        return None
    m = min(pos.piles)
    return Move(pos, Position(0, (m,) * pos.n))
