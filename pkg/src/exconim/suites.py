"""Exhaustive verification sweeps over small boxes.

Each function returns a :class:`~exconim.n2lab.ConjectureReport` so that
proven statements and conjectures share one report format.  An empty
counterexample list means the statement held on every position checked.
"""
from __future__ import annotations

import itertools
from typing import Iterable

from .closed_form import ConstructionError, construct_move_appendix, g_closed, moore_sum, nim_sum
from .engine import DEFAULT_VISIT_LIMIT, SgTable, fill_box, verify_sg_axioms
from .game import CoNim, ExcoNim, GameRules, MooreNim, Position, StandardNim, is_p_position_exco
from .n2lab import ConjectureReport, Counterexample, check_conjecture, verify_shift_lemma


def cube(rules: GameRules, side: int) -> tuple[int, ...]:
    """Box with every pile up to ``side``; x0 pinned to 0 when the game has no extra pile."""
    return ((side if rules.has_extra_pile else 0),) + (side,) * rules.n


def brute_table(rules: GameRules, box: Iterable[int], visit_limit: int = DEFAULT_VISIT_LIMIT) -> SgTable:
    """Complete table by the generic mex recursion (never the two-pile sweep)."""
    return fill_box(SgTable.empty(rules, box, visit_limit), generic=True)


def is_zero_predicted(rules: GameRules, pos: Position) -> bool:
    """P-position test from the known characterisation of each variant."""
    if isinstance(rules, ExcoNim):
        return is_p_position_exco(pos)
    if isinstance(rules, StandardNim):
        return nim_sum(pos.piles) == 0
    if isinstance(rules, CoNim):
        return moore_sum(pos, rules.n - 1).is_zero
    if isinstance(rules, MooreNim):
        return moore_sum(pos, rules.k).is_zero
    raise TypeError(f"no P-position rule for {rules}")


def verify_theorem1(n: int, side: int, visit_limit: int = DEFAULT_VISIT_LIMIT) -> ConjectureReport:
    """Closed form against brute force on the cube of the given side."""
    rules = ExcoNim(n)
    if n < 3:
        raise ValueError("closed form requires n >= 3")
    box = cube(rules, side)
    table = brute_table(rules, box, visit_limit)
    report = ConjectureReport("THEOREM1", {"n": n}, {"box": list(box)})
    for pos in table.positions():
        report.checked += 1
        want, got = g_closed(pos), int(table.values[pos.coords])
        if want != got:
            report.counterexamples.append(Counterexample(pos.coords, want, got))
    return report


def verify_zeros(rules: GameRules, side: int, visit_limit: int = DEFAULT_VISIT_LIMIT,
                 label: str = "PPOS") -> ConjectureReport:
    """Zeros of the brute-force SG function against the variant's P-position rule."""
    box = cube(rules, side)
    table = brute_table(rules, box, visit_limit)
    report = ConjectureReport(label, {"game": rules.token, "n": rules.n}, {"box": list(box)})
    for pos in table.positions():
        report.checked += 1
        predicted = is_zero_predicted(rules, pos)
        if predicted != (table.values[pos.coords] == 0):
            report.counterexamples.append(
                Counterexample(pos.coords, "P" if predicted else "N", int(table.values[pos.coords])))
    return report


def verify_axioms(rules: GameRules, side: int) -> ConjectureReport:
    box = cube(rules, side)
    axioms = verify_sg_axioms(rules, box)
    report = ConjectureReport("AXIOMS", {"game": rules.token, "n": rules.n}, {"box": list(box)},
                              checked=axioms.checked)
    for src, dst in axioms.value_kept:
        report.counterexamples.append(Counterexample(src, "value changes", list(dst)))
    for src, v in axioms.not_realized:
        report.counterexamples.append(Counterexample(src, f"some move reaches {v}", "none"))
    for pos in axioms.zero_mismatch:
        report.counterexamples.append(Counterexample(pos, "zero iff P-position", "mismatch"))
    return report


def verify_appendix(n: int, side: int) -> ConjectureReport:
    """The search-free move builder on every position of the cube and every target."""
    rules = ExcoNim(n)
    box = cube(rules, side)
    report = ConjectureReport("APPENDIX", {"n": n}, {"box": list(box)})
    for coords in itertools.product(*(range(b + 1) for b in box)):
        pos = Position.of(*coords)
        for v in range(g_closed(pos)):
            report.checked += 1
            try:
                construct_move_appendix(pos, v)
            except ConstructionError as exc:
                report.counterexamples.append(Counterexample(coords, v, str(exc)))
    return report


def verify_shift(box: Iterable[int], ks: Iterable[int], table: SgTable) -> ConjectureReport:
    """Shift lemma for several exponents, merged into one report."""
    box = tuple(box)
    ks = list(ks)
    merged = ConjectureReport("SHIFT", {"k": ks}, {"box": list(box)})
    for k in ks:
        part = verify_shift_lemma(box, k, table)
        merged.checked += part.checked
        merged.counterexamples.extend(part.counterexamples)
    return merged


def verify_prop4(table: SgTable) -> ConjectureReport:
    """Upper bound attained wherever the proposition applies, over the whole table."""
    x0max, x1max, x2max = table.box
    return check_conjecture("P4", table, range(x0max + 1), range(x1max + 1), x2max)
