"""Two-pile Exco-Nim: shift invariance, bounded queries and conjecture sweeps.

All analyses read an immutable :class:`~exconim.engine.SgTable` built by
:func:`~exconim.engine.sg_table_n2` and assume canonical positions
``x1 <= x2``.  Checkers for unproven statements report counterexamples;
only proven statements (the shift lemma, the core reduction and the
``x0 >= 2^(k-1)`` proposition) are expected to come back clean.
"""
from __future__ import annotations

from dataclasses import asdict, dataclass, field
from typing import Iterable, Sequence

from .engine import SgTable, sg_table_n2
from .game import ExcoNim, Position, PositionLike, as_position, canonical, is_p_position_exco


@dataclass(frozen=True)
class Exact:
    w: int

    def __str__(self):
        return str(self.w)


@dataclass(frozen=True)
class AtLeast:
    b: int

    def __str__(self):
        return f">= {self.b}"


SgAnswer = Exact | AtLeast


def k_of(v: int) -> int:
    """The k with ``2^(k-1) <= v < 2^k``."""
    if v <= 0:
        raise ValueError("k(0) undefined; caller must special-case v=0")
    return v.bit_length()


def _n2(pos: PositionLike) -> Position:
    pos = as_position(pos)
    if pos.n != 2:
        raise ValueError(f"two-pile analysis needs n = 2, got n = {pos.n}")
    return pos


def shift(pos: PositionLike, k: int, lam: int) -> Position:
    """Add ``lam * 2^k`` to both main piles."""
    pos = _n2(pos)
    step = lam << k
    x1, x2 = pos.piles[0] + step, pos.piles[1] + step
    if x1 < 0 or x2 < 0:
        raise ValueError(f"shifting {pos} by {lam}*2^{k} leaves a negative pile")
    return Position(pos.x0, (x1, x2))


def u_of(pos: PositionLike) -> int:
    return as_position(pos).total


def lower_bound(pos: PositionLike) -> int:
    pos = _n2(pos)
    return pos.x0 + (pos.piles[0] ^ pos.piles[1])


_core_tables: dict[int, SgTable] = {}


def _core_table(k: int, x0max: int) -> SgTable:
    table = _core_tables.get(k)
    if table is None or table.box[0] < x0max:
        table = sg_table_n2(x0max, (1 << k) - 1, (1 << k) - 1)
        _core_tables[k] = table
    return table


def sg_bounded(pos: PositionLike, v: int) -> SgAnswer:
    """Exact G(pos) if it is at most ``v``, otherwise a certified bound above ``v``.

    Shifts the main piles down by multiples of ``2^k(v)`` into a box of side
    ``2^k`` and evaluates there.  ``Exact`` answers are always the true value;
    ``AtLeast(b)`` always has ``b > v``.
    """
    pos = canonical(_n2(pos))
    if v < 0:
        raise ValueError("v must be nonnegative")
    if v == 0:
        return Exact(0) if is_p_position_exco(pos) else AtLeast(1)
    k = k_of(v)
    if pos.x0 > v:
        return AtLeast(pos.x0)
    lam = pos.piles[0] >> k
    hat = shift(pos, k, -lam)
    if hat.piles[1] >= 1 << k:
        # x1 < 2^k forces x1 ^ x2 >= 2^k, and the shift keeps G >= 2^k
        return AtLeast(1 << k)
    g = _core_table(k, v)[hat]
    if g >= 1 << k:
        return AtLeast(1 << k)
    return Exact(g)


@dataclass
class CoreSet:
    v: int
    k: int
    members: list[tuple[int, int, int]]


def core_enumerate(v: int, oracle: SgTable) -> CoreSet:
    """All positions of value ``v`` with ``x0 <= v``, ``x1 < 2^(k-1)``, ``x2 < 2^k``."""
    k = k_of(v)
    box = (v, (1 << (k - 1)) - 1, (1 << k) - 1)
    if oracle.rules != ExcoNim(2) or any(b > o for b, o in zip(box, oracle.box)):
        raise ValueError(f"oracle table must cover {box}, has {oracle.box}")
    vals = oracle.values[: box[0] + 1, : box[1] + 1, : box[2] + 1]
    members = [tuple(int(c) for c in idx) for idx in zip(*(vals == v).nonzero())]
    return CoreSet(v, k, members)


def delta_u(pos: PositionLike, table: SgTable) -> int:
    """Gap ``u(x) - G(x)`` between the trivial upper bound and the value."""
    pos = _n2(pos)
    if pos not in table:
        raise KeyError(f"{pos.coords} lies outside table box {table.box}")
    return pos.total - table[pos]


def f_indicator(a: int, b: int, c: int) -> int:
    if a <= 0:
        raise ValueError("f(a, b, c) needs a >= 1")
    return int(c % a >= b)


def conj1_predict(pos: PositionLike) -> int:
    """Predicted G when the smaller main pile is a power of two."""
    pos = canonical(_n2(pos))
    x0, (x1, x2) = pos.x0, pos.piles
    if x1 <= 0 or x1 & (x1 - 1):
        raise ValueError(f"x1 = {x1} is not a power of two")
    return pos.total - 2 * x1 * f_indicator(2 * x1, x0 + x1, x0 + x2)


def _power_of_two_between(lo: int, hi: int) -> bool:
    """Some 2^k with lo < 2^k <= hi."""
    return hi > lo and (hi.bit_length() > lo.bit_length() or lo == 0)


def window_exponent(x0: int, x1: int) -> int | None:
    """The k with ``2^(k-1) < x1 < x0 + x1 < 2^k``, if there is one."""
    k = x1.bit_length()
    if k and x1 > (1 << (k - 1)) and x0 + x1 < (1 << k) and x0 > 0:
        return k
    return None


def prop4_applies(pos: PositionLike) -> bool:
    pos = canonical(_n2(pos))
    x0, x1 = pos.x0, pos.piles[0]
    if x0 >= x1:
        return True
    # x0 >= 2^(k-1) and x1 < 2^k for some k >= 0; the best k is bit_length(x0)
    return x0 > 0 and x1 < (1 << x0.bit_length())


@dataclass
class Counterexample:
    pos: tuple[int, ...]
    expected: object
    actual: object


@dataclass
class ConjectureReport:
    conjecture: str
    params: dict
    range: dict
    checked: int = 0
    counterexamples: list[Counterexample] = field(default_factory=list)
    thresholds: list[dict] = field(default_factory=list)

    @property
    def status(self) -> str:
        return "refuted" if self.counterexamples else "supported"

    def to_json_dict(self) -> dict:
        return {
            "conjecture": self.conjecture,
            "params": self.params,
            "range": self.range,
            "checked": self.checked,
            "counterexamples": [
                {"pos": list(c.pos), "expected": c.expected, "actual": c.actual}
                for c in self.counterexamples
            ],
            "status": self.status,
            "thresholds": self.thresholds,
        }


@dataclass
class PeriodicityReport:
    x0: int
    x1: int
    k: int
    threshold: int | None
    pattern: list[int]
    verified_to: int
    status: str  # "periodic" | "not_periodic"

    def to_json_dict(self) -> dict:
        return asdict(self)


def periodicity_detect(x0: int, x1: int, k: int, table: SgTable,
                       min_periods: int = 3) -> PeriodicityReport:
    """Smallest T with ``Delta(x0, x1, .)`` periodic of period ``2^k`` on ``(T, x2max]``.

    The pattern is listed starting from the residue ``x2 = -1 (mod 2^k)``.  At
    least ``min_periods`` full periods must lie above T for a verdict of
    ``"periodic"``.
    """
    period = 1 << k
    top = table.box[2]
    if x0 > table.box[0] or x1 > table.box[1]:
        raise ValueError(f"table box {table.box} does not contain x0={x0}, x1={x1}")
    if top - (x1 - 1) < min_periods * period:
        raise ValueError(f"table depth x2 <= {top} is too shallow for {min_periods} periods "
                         f"of {period} starting at x2 = {x1}")
    total = x0 + x1
    delta = {x2: total + x2 - int(table.values[x0, x1, x2]) for x2 in range(x1, top + 1)}
    last_break = None
    for x2 in range(top, x1 + period - 1, -1):
        if delta[x2] != delta[x2 - period]:
            last_break = x2
            break
    threshold = x1 - 1 if last_break is None else last_break - period
    if top - threshold < min_periods * period:
        return PeriodicityReport(x0, x1, k, None, [], top, "not_periodic")
    pattern = [0] * period
    for x2 in range(top - period + 1, top + 1):
        pattern[(x2 + 1) % period] = delta[x2]
    return PeriodicityReport(x0, x1, k, threshold, pattern, top, "periodic")


def _require(table: SgTable, x0s: Sequence[int], x1s: Sequence[int], x2_max: int) -> None:
    if table.rules != ExcoNim(2):
        raise ValueError("conjecture checks need a two-pile Exco-Nim table")
    need = (max(x0s, default=0), max(x1s, default=0), x2_max)
    if any(n > b for n, b in zip(need, table.box)):
        raise ValueError(f"range needs table box {need}, table has {table.box}")


def _positions(x0s, x1s, x2_max):
    for x0 in x0s:
        for x1 in x1s:
            for x2 in range(x1, x2_max + 1):
                yield x0, x1, x2


def check_conjecture(cid: str, table: SgTable, x0: Iterable[int], x1: Iterable[int],
                     x2_max: int) -> ConjectureReport:
    """Compare a conjectured value rule with the table over a sweep.

    ``cid`` is one of C1..C5 or P4.  ``x0`` and ``x1`` list the fixed
    coordinates; ``x2`` runs from ``x1`` to ``x2_max``.  Positions outside a
    conjecture's hypothesis are skipped.
    """
    cid = cid.upper()
    x0s, x1s = sorted(set(x0)), sorted(set(x1))
    _require(table, x0s, x1s, x2_max)
    report = ConjectureReport(cid, {}, {"x0": x0s, "x1": x1s, "x2_max": x2_max})
    G = table.values

    def compare(pos, expected):
        report.checked += 1
        actual = int(G[pos])
        if actual != expected:
            report.counterexamples.append(Counterexample(pos, expected, actual))

    if cid == "C1":
        for pos in _positions(x0s, [a for a in x1s if a > 0 and not a & (a - 1)], x2_max):
            compare(pos, conj1_predict(pos))
    elif cid == "C2":
        for pos in _positions(x0s, x1s, x2_max):
            if _power_of_two_between(pos[1], pos[1] + pos[0]):
                compare(pos, sum(pos))
    elif cid == "C3":
        for pos in _positions(x0s, x1s, x2_max):
            k = window_exponent(pos[0], pos[1])
            if k is None:
                continue
            r = pos[2] % (1 << k)
            if min(r, (1 << k) - r) <= pos[0]:
                compare(pos, sum(pos))
    elif cid == "C4":
        for a in x0s:
            for b in x1s:
                if window_exponent(a, b) is None or not (a > 1 or b % 2 == 1):
                    continue
                below = [c for c in range(b, x2_max + 1) if G[a, b, c] < a + b + c]
                report.checked += x2_max - b + 1
                report.thresholds.append({"x0": a, "x1": b, "threshold": below[-1] if below else None,
                                          "x2_max": x2_max})
    elif cid == "C5":
        view = table
        if table.box[2] > x2_max:
            # verdicts must depend on the requested range only, not on how deep the table is
            view = SgTable(table.rules, (*table.box[:2], x2_max), table.values[:, :, : x2_max + 1])
        for a in x0s:
            for b in x1s:
                k = window_exponent(1, b)
                if a != 1 or b % 2 or k is None:
                    continue
                rep = periodicity_detect(a, b, k, view)
                report.checked += x2_max - b + 1
                entry = rep.to_json_dict()
                report.thresholds.append(entry)
                if rep.status != "periodic":
                    report.counterexamples.append(
                        Counterexample((a, b), "periodic with period %d" % (1 << k), "not periodic"))
                elif any(d % 2 for d in rep.pattern):
                    report.counterexamples.append(
                        Counterexample((a, b), "even pattern", rep.pattern))
    elif cid == "P4":
        for pos in _positions(x0s, x1s, x2_max):
            if prop4_applies(pos):
                compare(pos, sum(pos))
    else:
        raise ValueError(f"unknown conjecture id {cid!r}")
    return report


def xor_rule_violations(k: int) -> list[tuple[int, int]]:
    """Pairs ``(a, b)`` breaking the xor comparison rule for ``2^(k-1) <= a < 2^k``."""
    bad = []
    half, full = 1 << (k - 1), 1 << k
    for a in range(half, full):
        for b in range(full):
            if (b < half) != ((a ^ b) > b):
                bad.append((a, b))
    return bad


def verify_shift_lemma(box: Sequence[int], k: int, table: SgTable) -> ConjectureReport:
    """Check ``G(x + Delta^k)`` against ``G(x)`` for every x in ``box``."""
    box = tuple(box)
    step = 1 << k
    need = (box[0], box[1] + step, box[2] + step)
    if any(n > b for n, b in zip(need, table.box)):
        raise ValueError(f"shift check needs table box {need}, table has {table.box}")
    report = ConjectureReport("SHIFT", {"k": k}, {"box": list(box)})
    G = table.values
    for x0 in range(box[0] + 1):
        for x1 in range(box[1] + 1):
            for x2 in range(box[2] + 1):
                g, h = int(G[x0, x1, x2]), int(G[x0, x1 + step, x2 + step])
                report.checked += 1
                if g < step and h != g:
                    report.counterexamples.append(Counterexample((x0, x1, x2), g, h))
                elif g >= step and h < step:
                    report.counterexamples.append(Counterexample((x0, x1, x2), f">= {step}", h))
    for a, b in xor_rule_violations(k):
        report.counterexamples.append(Counterexample((a, b), "xor rule", a ^ b))
    return report


def verify_core_reduction(table: SgTable) -> ConjectureReport:
    """Every value-v position shifts down into Core(v) with its value intact."""
    report = ConjectureReport("T3", {}, {"box": list(table.box)})
    G = table.values
    X0, X1, X2 = table.box
    for x0 in range(X0 + 1):
        for x1 in range(X1 + 1):
            for x2 in range(x1, X2 + 1):
                v = int(G[x0, x1, x2])
                if v == 0:
                    continue
                k = k_of(v)
                lam = x1 >> k
                h0, h1, h2 = x0, x1 - (lam << k), x2 - (lam << k)
                report.checked += 1
                inside = h0 <= v and h1 < 1 << (k - 1) and h2 < 1 << k
                if not inside or int(G[h0, h1, h2]) != v:
                    actual = int(G[h0, h1, h2]) if inside else (h0, h1, h2)
                    report.counterexamples.append(Counterexample((x0, x1, x2), v, actual))
    return report


def delta_row(x0: int, x1: int, x2s: Iterable[int], table: SgTable) -> list[tuple[int, int, int, int]]:
    """Rows ``(x2, g, u, delta)`` for a fixed ``(x0, x1)``."""
    rows = []
    for x2 in x2s:
        g = table[(x0, x1, x2)]
        u = x0 + x1 + x2
        rows.append((x2, g, u, u - g))
    return rows


def table_for_sweep(x0_max: int, x1_max: int, x2_max: int) -> SgTable:
    return sg_table_n2(x0_max, x1_max, max(x1_max, x2_max))


def smallest_period(x0: int, x1: int, table: SgTable, max_period: int,
                    min_periods: int = 3) -> tuple[int, int] | None:
    """``(p, T)`` for the least p <= max_period making ``Delta(x0, x1, .)`` p-periodic on ``(T, top]``.

    Used when a row refuses to settle on period ``2^k``.  Every candidate must
    hold over at least ``min_periods * max_period`` cells, so that long runs of
    zeros near the top cannot pass for a short period.
    """
    top = table.box[2]
    total = x0 + x1
    delta = [total + x2 - int(table.values[x0, x1, x2]) if x2 >= x1 else 0 for x2 in range(top + 1)]
    for p in range(1, max_period + 1):
        x2 = top
        while x2 - p >= x1 and delta[x2] == delta[x2 - p]:
            x2 -= 1
        threshold = x2 - p if x2 - p >= x1 else x1 - 1
        if top - threshold >= min_periods * max_period:
            return p, threshold
    return None
