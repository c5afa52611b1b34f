"""Acceptance criteria, one check per criterion.

Run directly (``python tests/test_acceptance.py``) for one PASS/FAIL line per
criterion; under pytest the same lines appear in the terminal summary.
"""
from __future__ import annotations

import itertools
import os
import tempfile
import time

import numpy as np
import pytest

from exconim import (
    ExcoNim, MooreNim, Position, StandardNim, CoNim, SgTable, construct_move_appendix,
    fill_box, g_closed, is_legal_move, is_p_position_exco, moore_sum, nim_sum, sg_table_n2,
)
from exconim.cache import dumps, load_cache, loads, save_cache
from exconim.n2lab import AtLeast, Exact, check_conjecture, periodicity_detect, sg_bounded
from exconim.suites import brute_table, cube, verify_axioms, verify_prop4, verify_shift

RESULTS: dict[int, tuple[bool, str]] = {}


def _cells(box):
    return itertools.product(*(range(b + 1) for b in box))


def criterion_1():
    start = time.perf_counter()
    bad = 0
    checked = 0
    for n, side in ((3, 6), (4, 4)):
        table = brute_table(ExcoNim(n), (side,) * (n + 1))
        for coords in _cells(table.box):
            checked += 1
            bad += g_closed(Position.of(*coords)) != table.values[coords]
    secs = time.perf_counter() - start
    return bad == 0 and secs < 60, f"{checked} positions, {bad} mismatches, {secs:.1f}s"


def criterion_2():
    bad = 0
    checked = 0
    for n in (2, 3):
        table = brute_table(ExcoNim(n), (8,) * (n + 1))
        for coords in _cells(table.box):
            checked += 1
            bad += (table.values[coords] == 0) != is_p_position_exco(Position.of(*coords))
    return bad == 0, f"{checked} positions, {bad} mismatches"


def criterion_3():
    moore = brute_table(MooreNim(4, 2), cube(MooreNim(4, 2), 6))
    bad_m = sum((moore.values[c] == 0) != moore_sum(Position.of(*c), 2).is_zero
                for c in _cells(moore.box))
    nim = brute_table(StandardNim(3), cube(StandardNim(3), 8))
    bad_n = sum(nim.values[c] != nim_sum(c[1:]) for c in _cells(nim.box))
    return bad_m == 0 and bad_n == 0, f"Moore(4,2) mismatches {bad_m}, Nim xor mismatches {bad_n}"


PRINTED_42 = {(1, 2, 3): 6, (1, 4, 5): 2, (1, 5, 6): 11, (2, 5, 5): 11, (1, 2, 6): 5,
              (2, 1, 3): 6, (3, 1, 1): 5, (1, 1, 2): 4, (0, 1, 2): 3, (1, 0, 1): 2}


def criterion_4():
    table = sg_table_n2(3, 6, 6)
    wrong = {p: table[p] for p, v in PRINTED_42.items() if table[p] != v}
    return not wrong, f"{len(PRINTED_42)} values, wrong: {wrong or 'none'}"


def criterion_5():
    table = sg_table_n2(3, 16 + 8, 16 + 8)
    report = verify_shift((3, 16, 16), [1, 2, 3], table)
    return not report.counterexamples, f"{report.checked} checks, {len(report.counterexamples)} violations"


def criterion_6():
    table = sg_table_n2(3, 64, 64)
    bad = 0
    checked = 0
    for x0, x1, x2 in _cells((3, 16, 64)):
        if x1 > x2:
            continue
        g = int(table.values[x0, x1, x2])
        for v in range(16):
            ans = sg_bounded((x0, x1, x2), v)
            checked += 1
            if isinstance(ans, Exact):
                bad += ans.w != g
            else:
                bad += not (g >= ans.b > v)
    start = time.perf_counter()
    far = sg_bounded((3, 999_999, 1_000_000), 32)
    secs = time.perf_counter() - start
    ok = bad == 0 and secs < 5 and isinstance(far, (Exact, AtLeast))
    return ok, f"{checked} queries, {bad} unsound; v=32 at x2=10^6 gave {far} in {secs:.2f}s"


def criterion_7():
    bad = 0
    checked = 0
    for coords in _cells((4, 4, 4, 4)):
        pos = Position.of(*coords)
        for v in range(g_closed(pos)):
            checked += 1
            try:
                dst = construct_move_appendix(pos, v)
            except Exception:
                bad += 1
                continue
            bad += not (is_legal_move(ExcoNim(3), pos, dst) and g_closed(dst) == v)
    return bad == 0, f"{checked} (position, v) pairs, {bad} failures"


C8_THRESHOLDS = {(1, 5): 14, (1, 11): 30, (1, 13): 30, (1, 23): 62, (1, 29): 30, (1, 9): 94,
                 (2, 5): 5, (2, 11): 13, (2, 13): 13, (2, 23): 29, (1, 17): 446, (2, 18): 125}
C8_PATTERNS = {6: (14, [0, 0, 0, 4] + [0, 2] * 2), 14: (30, [0, 0, 0, 4] + [0, 2] * 6),
               30: (30, [0, 0, 0, 4] + [0, 2] * 14)}


def criterion_8():
    table = sg_table_n2(3, 32, 512)
    got = {}
    for (x0, x1) in C8_THRESHOLDS:
        rep = check_conjecture("C4", table, [x0], [x1], 512)
        got[(x0, x1)] = rep.thresholds[0]["threshold"]
    wrong = {key: got[key] for key, want in C8_THRESHOLDS.items() if got[key] != want}
    for x1, (thr, pattern) in C8_PATTERNS.items():
        k = x1.bit_length()
        rep = periodicity_detect(1, x1, k, table)
        if (rep.threshold, rep.pattern) != (thr, pattern):
            wrong[("pattern", x1)] = (rep.threshold, rep.pattern)
    # the (1,18) row needs three full periods above 446
    deep = sg_table_n2(1, 18, 640)
    rep = periodicity_detect(1, 18, 5, deep)
    if (rep.threshold, rep.pattern) != (446, [0, 0, 0, 4] * 4 + [0, 2] * 8):
        wrong[("pattern", 18)] = (rep.threshold, rep.pattern)
    return not wrong, f"{len(C8_THRESHOLDS)} thresholds, 4 patterns; wrong: {wrong or 'none'}"


C9_IDENTITIES = {(0, 2, 15): 13, (0, 4, 17): 21, (1, 16, 32): 49, (2, 16, 33): 51,
                 (0, 16, 29): 13, (0, 8, 21): 29, (1, 1, 17): 19, (2, 1, 18): 21, (2, 2, 19): 23}


def criterion_9():
    table = sg_table_n2(3, 16, 64)
    rep = check_conjecture("C1", table, range(4), [1, 2, 4, 8, 16], 64)
    wrong = {p: table[p] for p, v in C9_IDENTITIES.items() if table[p] != v}
    ok = not rep.counterexamples and not wrong
    return ok, f"{rep.checked} positions, {len(rep.counterexamples)} counterexamples, identities wrong: {wrong or 'none'}"


def criterion_10():
    table = sg_table_n2(32, 32, 512)
    rep = verify_prop4(table)
    corollary = 0
    for x0, x1 in itertools.product(range(33), range(33)):
        if x0 >= x1:
            row = table.values[x0, x1, x1:]
            corollary += int((row != x0 + x1 + np.arange(x1, 513)).sum())
    ok = not rep.counterexamples and corollary == 0
    return ok, f"{rep.checked} positions, {len(rep.counterexamples)} violations, corollary violations {corollary}"


def criterion_11():
    games = [ExcoNim(2), ExcoNim(3), StandardNim(3), MooreNim(3, 2), MooreNim(4, 2), CoNim(3)]
    sides = {ExcoNim(2): 6, ExcoNim(3): 3, StandardNim(3): 5, MooreNim(3, 2): 4,
             MooreNim(4, 2): 3, CoNim(3): 4}
    violations = {g.token + f"/n={g.n}": len(verify_axioms(g, sides[g]).counterexamples) for g in games}
    identical = True
    for rules, box in ((ExcoNim(2), (2, 5, 7)), (MooreNim(3, 2), (0, 3, 3, 3)), (ExcoNim(3), (2, 3, 3, 3))):
        table = fill_box(SgTable.empty(rules, box))
        text = dumps(table)
        again = loads(text)
        identical &= again.equals(table) and dumps(again) == text
        with tempfile.TemporaryDirectory() as tmp:
            first, second = os.path.join(tmp, "a.cache"), os.path.join(tmp, "b.cache")
            save_cache(table, first)
            save_cache(load_cache(first), second)
            with open(first, "rb") as fa, open(second, "rb") as fb:
                identical &= fa.read() == fb.read() == text.encode()
    ok = not any(violations.values()) and identical
    return ok, f"axiom violations {violations}; cache byte-identical: {identical}"


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6,
            criterion_7, criterion_8, criterion_9, criterion_10, criterion_11]


@pytest.mark.parametrize("number", range(1, 12))
def test_criterion(number):
    ok, detail = CRITERIA[number - 1]()
    RESULTS[number] = (ok, detail)
    assert ok, detail


def report_lines() -> list[str]:
    return [f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {detail}"
            for n, (ok, detail) in sorted(RESULTS.items())]


if __name__ == "__main__":
    for i, fn in enumerate(CRITERIA, start=1):
        RESULTS[i] = fn()
        print(report_lines()[-1], flush=True)
