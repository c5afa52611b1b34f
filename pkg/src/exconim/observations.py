"""Published two-pile observations kept as data, and a recheck against the engine.

Nothing here is trusted.  :func:`recheck` recomputes every listed value,
threshold and periodic pattern from fresh tables and returns the entries
that disagree.  Several printed entries carry obvious index slips; they are
stored exactly as printed so the disagreement stays visible.
"""
from __future__ import annotations

from dataclasses import dataclass

from .engine import SgTable, sg_table_n2
from .n2lab import periodicity_detect, smallest_period, window_exponent


def _chain(first: tuple[int, int, int], step: int, count: int) -> list[tuple[int, int, int]]:
    x0, x1, x2 = first
    return [(x0, x1 + i * step, x2 + i * step) for i in range(count)]


# (position, printed value)
VALUES: list[tuple[tuple[int, int, int], int]] = [
    ((1, 0, 0), 1), ((2, 0, 0), 2), ((3, 0, 0), 3), ((4, 0, 0), 4),
    ((0, 1, 2), 3), ((1, 0, 1), 2), ((1, 1, 1), 3), ((1, 1, 2), 4),
    ((2, 1, 3), 6), ((3, 1, 1), 5), ((1, 2, 6), 5), ((1, 5, 6), 11),
    ((2, 5, 5), 11), ((1, 2, 3), 6), ((1, 4, 5), 2),
    # shifted families, first few members as printed
    ((1, 2, 2), 1), ((1, 4, 4), 1), ((2, 4, 4), 2), ((2, 8, 8), 2),
    ((3, 4, 4), 3), ((3, 8, 8), 3), ((4, 8, 8), 4), ((4, 16, 16), 4),
    ((1, 8, 9), 2), ((0, 5, 6), 3), ((0, 9, 10), 3), ((1, 5, 5), 3), ((1, 9, 9), 3),
    ((1, 9, 10), 4), ((1, 17, 18), 4), ((2, 9, 11), 6), ((2, 17, 19), 6),
    ((3, 9, 9), 5), ((3, 17, 17), 5), ((1, 10, 14), 5), ((1, 18, 22), 5),
    ((1, 21, 22), 11), ((2, 47, 48), 11), ((2, 21, 21), 11), ((1, 37, 37), 11),
    # smaller pile a power of two
    ((0, 0, 13), 13), ((0, 2, 15), 13), ((0, 16, 29), 13), ((0, 32, 45), 13),
    ((0, 64, 79), 13), ((0, 4, 17), 21), ((0, 8, 21), 29),
    ((1, 0, 16), 17), ((1, 2, 18), 17), ((1, 4, 20), 17), ((1, 8, 24), 17),
    ((1, 32, 48), 17), ((1, 64, 80), 17), ((1, 1, 17), 19), ((1, 16, 32), 49),
    ((2, 0, 17), 19), ((2, 4, 21), 19), ((2, 8, 25), 19), ((1, 32, 49), 19),
    ((1, 64, 81), 19), ((2, 1, 18), 21), ((2, 2, 19), 23), ((2, 16, 33), 51),
    ((6, 19, 122), 147), ((5, 16, 122), 111),
]

# general terms of the shifted families: (first member, shift step, value)
FAMILIES: list[tuple[tuple[int, int, int], int, int]] = [
    ((1, 0, 0), 2, 1), ((2, 0, 0), 4, 2), ((3, 0, 0), 4, 3), ((4, 0, 0), 8, 4),
    ((1, 0, 1), 4, 2), ((0, 1, 2), 4, 3), ((1, 1, 1), 4, 3), ((1, 1, 2), 8, 4),
    ((2, 1, 3), 8, 6), ((3, 1, 1), 8, 5), ((1, 2, 6), 8, 5), ((1, 5, 6), 16, 11),
    ((2, 5, 5), 16, 11),
]

# (x0, x1, printed threshold, printed position at the threshold, printed value there)
THRESHOLDS: list[tuple[int, int, int, tuple[int, ...], int]] = [
    (1, 5, 14, (1, 5, 14), 19), (1, 9, 94, (1, 9, 94), 103),
    (1, 11, 30, (1, 11, 30), 41), (1, 13, 30, (1, 13, 30), 43),
    (1, 17, 446, (1, 17, 446), 463), (1, 19, 158, (1, 19, 158), 177),
    (1, 21, 94, (1, 21, 94), 113), (1, 23, 62, (1, 23, 62), 85),
    (1, 25, 126, (1, 25, 126), 151), (1, 27, 62, (1, 27, 62), 87),
    (1, 29, 30, (1, 29, 30), 50),
    (2, 5, 5, (2, 5, 5), 11), (2, 9, 45, (2, 9, 45), 55), (2, 10, 44, (2, 10, 44), 55),
    (2, 11, 13, (2, 11, 13), 25), (2, 12, 13, (2, 12, 13), 3), (2, 13, 13, (2, 13, 13), 26),
    (2, 17, 125, (2, 17, 125), 143), (2, 18, 125, (2, 18, 125), 144),
    (2, 19, 61, (2, 19, 61), 81), (2, 20, 93, (2, 20, 93), 113),
    (2, 21, 61, (2, 21, 61), 83), (2, 22, 61, (2, 22, 6), 84),
    (2, 23, 29, (2, 23, 29), 52), (2, 24, 92, (224, 92), 114),
    (2, 25, 61, (2, 25, 61), 87), (2, 26, 61, (2, 26, 61), 88),
    (2, 27, 29, (2, 27, 29), 55), (2, 28, 29, (2, 28, 29), 3), (2, 29, 29, (2, 29, 29), 56),
    (3, 9, 28, (3, 9, 28), 39), (3, 10, 20, (3, 10, 28), 40),
    (3, 11, 12, (3, 11, 12), 25), (3, 12, 12, (3, 12, 12), 3),
    (3, 17, 92, (3, 17, 92), 111), (3, 18, 92, (3, 18, 92), 112),
    (3, 19, 60, (3, 19, 60), 81), (3, 20, 60, (3, 20, 60), 82), (3, 21, 60, (3, 21, 60), 83),
    (3, 22, 28, (3, 22, 28), 51), (3, 23, 28, (3, 23, 28), 52),
    (3, 24, 56, (3, 24, 56), 36), (3, 25, 28, (3, 25, 28), 53),
    (3, 26, 28, (3, 26, 28), 54), (3, 27, 28, (3, 27, 28), 55), (3, 28, 28, (3, 28, 28), 3),
]

_Z3 = [0, 0, 0]
# x0 = 1, even x1: (x1, printed threshold, printed pattern, printed position, printed value)
PATTERNS: list[tuple[int, int, list[int], tuple[int, ...], int]] = [
    (6, 14, _Z3 + [4] + [0, 2] * 2, (1, 6, 14), 9),
    (10, 109, (_Z3 + [4]) * 2 + [12] + [0, 4] * 3, (1, 10, 109), 118),
    (12, 109, [0] * 5 + [6, 8, 2] + [0, 2, 4, 2] * 2, (1, 12, 109), 120),
    (14, 30, _Z3 + [4] + [0, 2] * 6, (1, 14, 30), 17),
    (18, 446, (_Z3 + [4]) * 4 + [0, 2] * 8, (1, 18, 446), 464),
    (20, 400, ([0] * 5 + [6, 0, 2]) * 2 + [0, 22] + [0, 2, 0, 6] * 3 + [0, 2], (1, 20, 400), 418),
    (22, 94, (_Z3 + [4, 0, 2, 0, 2]) * 2 + [0, 2] * 8, (1, 22, 94), 149),
    (24, 456, [0] * 9 + [16, 0, 2, 0, 2, 0, 16] + ([0, 2] * 3 + [0, 10]) * 2, (1, 24, 456), 471),
    (26, 126, (_Z3 + [4]) * 2 + [0, 2] * 12, (26, 126, 1), 152),
    (28, 104, [0] * 5 + [6, 0, 2, 0, 14] + [0, 2, 0, 6] * 5 + [0, 2], (28, 104, 1), 130),
    (30, 30, _Z3 + [4] + [0, 2] * 14, (30, 30, 1), 1),
]


@dataclass(frozen=True)
class Discrepancy:
    kind: str  # "value" | "family" | "threshold" | "pattern"
    item: tuple
    printed: object
    computed: object

    def __str__(self):
        return f"{self.kind} {self.item}: printed {self.printed}, computed {self.computed}"


@dataclass
class RecheckResult:
    confirmed: int
    discrepancies: list[Discrepancy]


def _lookup(table: SgTable, pos: tuple[int, ...]):
    # returns None for printed positions that are malformed or out of range
    if len(pos) != 3 or pos not in table:
        return None
    return table[pos]


def recheck(x2_max: int = 640, family_members: int = 6) -> RecheckResult:
    """Recompute every stored observation; return the ones that disagree.

    ``x2_max`` is the table depth used for thresholds and patterns; 640 is
    enough for every row except the few that have not settled there, which
    then show up as discrepancies.
    """
    table = sg_table_n2(6, 64, max(x2_max, 200))
    out: list[Discrepancy] = []
    ok = 0

    for pos, printed in VALUES:
        got = _lookup(table, pos)
        if got == printed:
            ok += 1
        else:
            out.append(Discrepancy("value", pos, printed, got))

    for first, step, printed in FAMILIES:
        got = [table[p] for p in _chain(first, step, family_members) if p in table]
        if all(g == printed for g in got):
            ok += 1
        else:
            out.append(Discrepancy("family", (first, step), printed, got))

    for x0, x1, thr, pos, val in THRESHOLDS:
        below = [c for c in range(x1, table.box[2] + 1)
                 if table[(x0, x1, c)] < x0 + x1 + c]
        got_thr = below[-1] if below else None
        if got_thr != thr:
            out.append(Discrepancy("threshold", (x0, x1), thr, got_thr))
        else:
            ok += 1
        got_val = _lookup(table, pos)
        if got_val != val:
            out.append(Discrepancy("value", pos, val, got_val))
        else:
            ok += 1

    for x1, thr, pattern, pos, val in PATTERNS:
        k = window_exponent(1, x1)
        rep = periodicity_detect(1, x1, k, table)
        if rep.status != "periodic":
            deep = sg_table_n2(1, x1, 4 * table.box[2])
            found = smallest_period(1, x1, deep, 1 << (k + 3))
            computed = "no period %d; smallest period and start %s" % (1 << k, found)
            out.append(Discrepancy("pattern", (1, x1), (thr, pattern), computed))
        elif (rep.threshold, rep.pattern) != (thr, pattern):
            out.append(Discrepancy("pattern", (1, x1), (thr, pattern), (rep.threshold, rep.pattern)))
        else:
            ok += 1
        got_val = _lookup(table, pos)
        if got_val != val:
            out.append(Discrepancy("value", pos, val, got_val))
        else:
            ok += 1
    return RecheckResult(ok, out)
