"""Exact Sprague-Grundy values by mex recursion over dense tables.

Two builders live here.  ``fill_box`` works for any game in the family and
evaluates one cell at a time with a vectorised legality mask over the box
below it.  ``sg_table_n2`` is specialised to two-pile Exco-Nim: for a fixed
pair of main piles it sweeps ``x0`` upwards while reusing one presence array,
which is what makes tables with ``x2`` in the hundreds cheap.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable

import numpy as np

from .game import (
    ExcoNim,
    GameRules,
    Move,
    Position,
    PositionLike,
    as_position,
    legal_moves,
)

DEFAULT_VISIT_LIMIT = 10**8
DEFAULT_CELL_LIMIT = 5 * 10**7

UNKNOWN = -1


class ResourceLimitError(RuntimeError):
    """A computation would exceed a configured size limit."""


class MemoryLimitError(ResourceLimitError):
    pass


def mex(values: Iterable[int]) -> int:
    """Smallest nonnegative integer not in ``values``."""
    values = list(values)
    # mex of d values is at most d
    seen = bytearray(len(values) + 1)
    for v in values:
        if 0 <= v <= len(values):
            seen[v] = 1
    return seen.index(0)


def _mex_array(vals: np.ndarray) -> int:
    seen = np.zeros(vals.size + 1, dtype=bool)
    seen[vals[(vals >= 0) & (vals <= vals.size)]] = True
    return int(np.argmin(seen))


@dataclass
class SgTable:
    """SG values for every position componentwise below ``box``.

    ``values`` is indexed by the flat coordinates ``(x0, x1, ..., xn)``;
    cells not yet evaluated hold -1.  For games without an extra pile the
    first axis has length one.
    """

    rules: GameRules
    box: tuple[int, ...]
    values: np.ndarray
    visit_limit: int = DEFAULT_VISIT_LIMIT
    visits: int = field(default=0, compare=False)

    @classmethod
    def empty(cls, rules: GameRules, box: Iterable[int] = None,
              visit_limit: int = DEFAULT_VISIT_LIMIT) -> "SgTable":
        if box is None:
            box = (0,) * (rules.n + 1)
        box = tuple(int(b) for b in box)
        if len(box) != rules.n + 1:
            raise ValueError(f"box {box} does not match n={rules.n}")
        if not rules.has_extra_pile and box[0] != 0:
            raise ValueError("box must have x0max = 0 for this game")
        values = np.full(tuple(b + 1 for b in box), UNKNOWN, dtype=np.int64)
        return cls(rules, box, values, visit_limit)

    def __contains__(self, pos) -> bool:
        coords = as_position(pos).coords
        return len(coords) == len(self.box) and all(c <= b for c, b in zip(coords, self.box))

    def __getitem__(self, pos) -> int:
        coords = as_position(pos).coords
        if coords not in self:
            raise KeyError(f"{coords} lies outside table box {self.box}")
        g = int(self.values[coords])
        if g < 0:
            raise KeyError(f"{coords} has not been evaluated")
        return g

    @property
    def complete(self) -> bool:
        return bool((self.values >= 0).all())

    def positions(self) -> Iterable[Position]:
        for coords in itertools.product(*(range(b + 1) for b in self.box)):
            yield Position(coords[0], coords[1:])

    def equals(self, other: "SgTable") -> bool:
        return (self.rules == other.rules and self.box == other.box
                and np.array_equal(self.values, other.values))


def _grow(table: SgTable, box: tuple[int, ...]) -> None:
    new_box = tuple(max(a, b) for a, b in zip(table.box, box))
    if new_box == table.box:
        return
    values = np.full(tuple(b + 1 for b in new_box), UNKNOWN, dtype=np.int64)
    values[tuple(slice(0, b + 1) for b in table.box)] = table.values
    table.box = new_box
    table.values = values


def _legal_mask(rules: GameRules, cell: tuple[int, ...]) -> np.ndarray:
    """Boolean mask over the box below ``cell`` selecting legal destinations."""
    ndim = len(cell)
    shape = tuple(c + 1 for c in cell)

    def axis(i, arr):
        s = [1] * ndim
        s[i] = arr.size
        return arr.reshape(s)

    if isinstance(rules, ExcoNim):
        mask = np.zeros(shape, dtype=bool)
        for i in range(1, ndim):
            mask |= axis(i, np.arange(cell[i] + 1) == cell[i])
    else:
        reduced = np.zeros(shape, dtype=np.int16)
        for i in range(1, ndim):
            reduced = reduced + axis(i, (np.arange(cell[i] + 1) < cell[i]).astype(np.int16))
        mask = reduced <= rules.max_reduced
    mask[cell] = False
    return mask


def _box_work(box: tuple[int, ...]) -> int:
    work = 1
    for b in box:
        work *= (b + 1) * (b + 2) // 2
    return work


def fill_box(table: SgTable, box: Iterable[int] | None = None, generic: bool = False) -> SgTable:
    """Evaluate every missing cell of ``table`` below ``box``.

    Cells are visited in lexicographic order, which refines the move order
    (every move lowers the flat coordinate tuple).  A cell whose sorted twin
    is already known is copied instead of recomputed.  Two-pile Exco-Nim
    tables go through the column sweep unless ``generic`` is set.
    """
    if box is not None:
        _grow(table, tuple(box))
    rules = table.rules
    if not generic and isinstance(rules, ExcoNim) and rules.n == 2:
        _fill_n2(table)
        return table
    missing = int((table.values < 0).sum())
    if missing == 0:
        return table
    work = _box_work(table.box)
    if table.visits + work > table.visit_limit:
        raise ResourceLimitError(
            f"box {table.box} needs ~{work} position visits, over the visit limit "
            f"of {table.visit_limit}")
    table.visits += work
    values = table.values
    box = table.box
    for cell in itertools.product(*(range(b + 1) for b in box)):
        if values[cell] >= 0:
            continue
        twin = (cell[0], *sorted(cell[1:]))
        if twin != cell and all(t <= b for t, b in zip(twin, box)) and values[twin] >= 0:
            values[cell] = values[twin]
            continue
        sub = values[tuple(slice(0, c + 1) for c in cell)]
        values[cell] = _mex_array(sub[_legal_mask(rules, cell)])
    return table


def _n2_sweep(values: np.ndarray, check: bool = False) -> list[tuple[int, int, int]]:
    """Fill (or, with ``check``, audit) a dense two-pile Exco-Nim array.

    For fixed main piles ``(a, b)`` the reachable set only grows with
    ``x0``, so one presence array and a monotone mex pointer serve the whole
    ``x0`` column.  Returns cells whose stored value disagrees with the mex
    of their stored successors (always empty when filling).
    """
    X0, X1, X2 = (s - 1 for s in values.shape)
    bad = []
    for a in range(X1 + 1):
        for b in range(X2 + 1):
            if not check and a > b and a <= X2 and b <= X1 and values[0, b, a] >= 0:
                values[:, a, b] = values[:, b, a]
                continue
            seen = np.zeros(X0 + a + b + 2, dtype=bool)
            g = 0
            for x0 in range(X0 + 1):
                if b:
                    seen[values[x0, a, :b]] = True
                if a:
                    seen[values[x0, :a, b]] = True
                if x0:
                    seen[values[x0 - 1, a, b]] = True
                while seen[g]:
                    g += 1
                if check:
                    if values[x0, a, b] != g:
                        bad.append((x0, a, b))
                else:
                    values[x0, a, b] = g
    return bad


def _fill_n2(table: SgTable) -> None:
    if bool((table.values >= 0).all()):
        return
    cells = table.values.size
    if cells > DEFAULT_CELL_LIMIT:
        raise MemoryLimitError(f"table box {table.box} has {cells} cells, over the cell "
                               f"limit of {DEFAULT_CELL_LIMIT}")
    table.values[...] = UNKNOWN
    _n2_sweep(table.values)


def sg_table_n2(x0max: int, x1max: int, x2max: int,
                cell_limit: int = DEFAULT_CELL_LIMIT) -> SgTable:
    """Complete two-pile Exco-Nim table over ``[0..x0max]x[0..x1max]x[0..x2max]``."""
    cells = (x0max + 1) * (x1max + 1) * (x2max + 1)
    if min(x0max, x1max, x2max) < 0:
        raise ValueError("box bounds must be nonnegative")
    if cells > cell_limit:
        raise MemoryLimitError(f"table box ({x0max}, {x1max}, {x2max}) has {cells} cells, "
                               f"over the cell limit of {cell_limit}")
    table = SgTable.empty(ExcoNim(2), (x0max, x1max, x2max))
    _n2_sweep(table.values)
    return table


def inconsistent_cells(table: SgTable) -> list[tuple[int, ...]]:
    """Cells whose value differs from the mex of their successors' stored values."""
    rules = table.rules
    if isinstance(rules, ExcoNim) and rules.n == 2:
        # values above u = x0 + x1 + x2 cannot be right and would overrun the sweep
        u = np.indices(table.values.shape).sum(axis=0)
        wild = (table.values < 0) | (table.values > u)
        if wild.any():
            return [tuple(int(c) for c in idx) for idx in zip(*wild.nonzero())]
        return _n2_sweep(table.values, check=True)
    bad = []
    values = table.values
    for cell in itertools.product(*(range(b + 1) for b in table.box)):
        sub = values[tuple(slice(0, c + 1) for c in cell)]
        if values[cell] != _mex_array(sub[_legal_mask(rules, cell)]):
            bad.append(cell)
    return bad


def _table_for(rules: GameRules, pos: Position, memo: SgTable | None,
               generic: bool = False) -> SgTable:
    rules.check(pos)
    if memo is None:
        memo = SgTable.empty(rules)
    elif memo.rules != rules:
        raise ValueError(f"memo table is for {memo.rules}, not {rules}")
    if pos not in memo or memo.values[pos.coords] < 0:
        fill_box(memo, pos.coords, generic=generic)
    return memo


def sg_bruteforce(rules: GameRules, pos: PositionLike, memo: SgTable | None = None) -> int:
    """G(pos) by mex recursion; ``memo`` is extended in place when given.

    Always uses the generic per-cell evaluation so that it can serve as the
    reference for the specialised two-pile builder.
    """
    pos = as_position(pos)
    memo = _table_for(rules, pos, memo, generic=True)
    return int(memo.values[pos.coords])


def best_move(rules: GameRules, pos: PositionLike, memo: SgTable | None = None) -> Move | None:
    """First legal move (lexicographic) into a P-position, or None if there is none."""
    pos = as_position(pos)
    memo = _table_for(rules, pos, memo)
    if memo.values[pos.coords] == 0:
        return None
    for dst in legal_moves(rules, pos):
        if memo.values[dst.coords] == 0:
            return Move(pos, dst)
    raise AssertionError(f"no zero successor from {pos} although G > 0")


def move_to_value(rules: GameRules, pos: PositionLike, v: int,
                  memo: SgTable | None = None) -> Move:
    """First legal move (lexicographic) to a position of SG value ``v``."""
    pos = as_position(pos)
    memo = _table_for(rules, pos, memo)
    g = int(memo.values[pos.coords])
    if not 0 <= v < g:
        raise ValueError(f"value not realizable: {v} is not below G{pos.coords} = {g}")
    for dst in legal_moves(rules, pos):
        if memo.values[dst.coords] == v:
            return Move(pos, dst)
    raise AssertionError(f"no successor of {pos} has value {v}")


@dataclass
class AxiomReport:
    rules: GameRules
    box: tuple[int, ...]
    checked: int = 0
    value_kept: list = field(default_factory=list)       # (x, x') with G(x) == G(x')
    not_realized: list = field(default_factory=list)     # (x, v) with v < G(x) unreachable
    zero_mismatch: list = field(default_factory=list)    # x where G(x)==0 disagrees with P

    @property
    def violations(self) -> int:
        return len(self.value_kept) + len(self.not_realized) + len(self.zero_mismatch)

    @property
    def ok(self) -> bool:
        return self.violations == 0


def p_positions(rules: GameRules, box: Iterable[int]) -> set[tuple[int, ...]]:
    """P-positions below ``box`` by the terminal/backward-deletion recursion.

    Works on explicit move lists only; no SG values are involved.
    """
    box = tuple(box)
    ppos: set[tuple[int, ...]] = set()
    for coords in itertools.product(*(range(b + 1) for b in box)):
        pos = Position(coords[0], coords[1:])
        if not any(dst.coords in ppos for dst in legal_moves(rules, pos)):
            ppos.add(coords)
    return ppos


def verify_sg_axioms(rules: GameRules, box: Iterable[int]) -> AxiomReport:
    """Check the basic SG properties over a box using explicit move lists.

    (a) no move keeps the value, (b) every smaller value is reachable,
    (c) the zeros are exactly the P-positions of the backward recursion.
    """
    box = tuple(box)
    table = fill_box(SgTable.empty(rules, box))
    report = AxiomReport(rules, box)
    ppos = p_positions(rules, box)
    for pos in table.positions():
        g = int(table.values[pos.coords])
        reached = set()
        for dst in legal_moves(rules, pos):
            h = int(table.values[dst.coords])
            reached.add(h)
            if h == g:
                report.value_kept.append((pos.coords, dst.coords))
        report.not_realized.extend((pos.coords, v) for v in range(g) if v not in reached)
        if (g == 0) != (pos.coords in ppos):
            report.zero_mismatch.append(pos.coords)
        report.checked += 1
    return report
