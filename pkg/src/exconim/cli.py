"""Command-line front end.

Exit codes: 0 success, 1 refuted / P-position / violation, 2 usage error,
3 resource limit.
"""
from __future__ import annotations

import argparse
import json
import os
import random
import sys
from typing import Callable, TextIO

from .cache import CacheError, load_cache, save_cache
from .closed_form import g_closed, nim_sum
from .engine import (
    DEFAULT_VISIT_LIMIT, ResourceLimitError, SgTable, fill_box, sg_bruteforce, sg_table_n2,
)
from .game import (
    CoNim, ExcoNim, GameRules, MooreNim, Position, StandardNim, is_terminal, move_violation,
)
from .n2lab import AtLeast, ConjectureReport, check_conjecture, delta_row, sg_bounded, table_for_sweep
from .play import engine_reply, winning_reply
from . import suites

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_LIMIT = 0, 1, 2, 3


class UsageError(Exception):
    pass


def parse_range(text: str) -> range:
    """``a..b`` (inclusive) or a single ``a``."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            return range(int(lo), int(hi) + 1)
        v = int(text)
        return range(v, v + 1)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad range {text!r}; expected a..b") from None


def _nonneg_int(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"must be nonnegative: {text!r}")
    return v


def _positive_int(text: str) -> int:
    v = _nonneg_int(text)
    if v == 0:
        raise argparse.ArgumentTypeError("must be positive")
    return v


# dest -> (converter, default); every option below is filled from the config
# file when absent on the command line, then from these defaults
OPTIONS: dict[str, tuple[Callable[[str], object], object]] = {
    "game": (str, "exco"),
    "n": (_positive_int, None),
    "k": (_positive_int, None),
    "pos": (str, None),
    "max": (_nonneg_int, None),
    "x0": (parse_range, None),
    "x1": (parse_range, None),
    "x2": (parse_range, None),
    "x1_pow2": (parse_range, None),
    "x2_max": (_nonneg_int, None),
    "box": (str, None),
    "format": (str, None),
    "cache": (str, None),
    "limit": (_positive_int, DEFAULT_VISIT_LIMIT),
    "seed": (int, None),
    "first": (str, "human"),
}


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False, argument_default=argparse.SUPPRESS)
    p.add_argument("--config", metavar="FILE", help="key=value file; command-line flags win")
    p.add_argument("--game", choices=["nim", "moore", "conim", "exco"])
    p.add_argument("--n", type=_positive_int, help="number of main piles")
    p.add_argument("--k", type=_positive_int, help="Moore parameter")
    p.add_argument("--pos", help="x0,x1,...,xn for exco; x1,...,xn otherwise")
    p.add_argument("--max", type=_nonneg_int, help="value bound or box side")
    p.add_argument("--x0", type=parse_range, metavar="A..B")
    p.add_argument("--x1", type=parse_range, metavar="A..B")
    p.add_argument("--x2", type=parse_range, metavar="A..B")
    p.add_argument("--x1-pow2", dest="x1_pow2", type=parse_range, metavar="A..B",
                   help="x1 runs over 2^A .. 2^B")
    p.add_argument("--x2-max", dest="x2_max", type=_nonneg_int)
    p.add_argument("--box", help="comma-separated upper corner")
    p.add_argument("--format", choices=["human", "json", "csv"])
    p.add_argument("--cache", metavar="PATH")
    p.add_argument("--limit", type=_positive_int, metavar="VISITS")
    p.add_argument("--seed", type=int)
    p.add_argument("--first", choices=["engine", "human"])
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(
        prog="exconim", description="Sprague-Grundy values and strategy for the Nim family.")
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("sg", parents=[common], help="SG value of a position")
    sub.add_parser("move", parents=[common], help="a winning move")
    v = sub.add_parser("verify", parents=[common], help="exhaustive checks of proven statements")
    v.add_argument("suite", choices=["theorem1", "ppos", "moore", "axioms", "shift", "appendix", "prop4"])
    c = sub.add_parser("conjecture", parents=[common], help="two-pile conjecture sweeps")
    c.add_argument("cid", choices=["c1", "c2", "c3", "c4", "c5", "p4"])
    sub.add_parser("table", parents=[common], help="x2,g,u,delta rows for fixed x0, x1")
    sub.add_parser("play", parents=[common], help="play against the engine")
    cache = sub.add_parser("cache", help="build or check a table cache")
    actions = cache.add_subparsers(dest="action", required=True)
    for name, text in (("build", "write a complete table for --box"), ("check", "validate a cache file")):
        a = actions.add_parser(name, parents=[common], help=text)
        a.add_argument("path", nargs="?", help="cache file (defaults to --cache)")
    return parser


def read_config(path: str) -> dict[str, str]:
    out = {}
    try:
        with open(path, encoding="utf-8") as fh:
            lines = fh.read().splitlines()
    except OSError as exc:
        raise UsageError(f"cannot read config {path}: {exc.strerror}") from None
    for lineno, line in enumerate(lines, start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise UsageError(f"{path}:{lineno}: expected key=value")
        key, value = (s.strip() for s in line.split("=", 1))
        key = key.lstrip("-").replace("-", "_")
        if key not in OPTIONS:
            raise UsageError(f"{path}:{lineno}: unknown key {key!r}")
        out[key] = value
    return out


def resolve(ns: argparse.Namespace) -> argparse.Namespace:
    """Fill options missing from the command line: config file first, then defaults."""
    config = read_config(ns.config) if getattr(ns, "config", None) else {}
    for key, (convert, default) in OPTIONS.items():
        if hasattr(ns, key):
            continue
        if key in config:
            try:
                setattr(ns, key, convert(config[key]))
            except (argparse.ArgumentTypeError, ValueError) as exc:
                raise UsageError(f"config {key}: {exc}") from None
        else:
            setattr(ns, key, default)
    if ns.game not in ("nim", "moore", "conim", "exco"):
        raise UsageError(f"unknown game {ns.game!r}")
    if ns.format not in (None, "human", "json", "csv"):
        raise UsageError(f"unknown format {ns.format!r}")
    if ns.first not in ("engine", "human"):
        raise UsageError(f"--first must be engine or human, not {ns.first!r}")
    return ns


# ---- shared helpers

def make_rules(game: str, n: int, k: int | None) -> GameRules:
    if game == "moore":
        if k is None:
            raise UsageError("--game moore needs --k")
        return MooreNim(n, k)
    if k is not None and game != "moore":
        raise UsageError("--k only applies to --game moore")
    return {"nim": StandardNim, "conim": CoNim, "exco": ExcoNim}[game](n)


def parse_position(text: str, game: str) -> Position:
    try:
        nums = [int(t) for t in text.split(",")]
    except ValueError:
        raise UsageError(f"bad position {text!r}; expected comma-separated integers") from None
    if game != "exco":
        nums = [0, *nums]
    if len(nums) < 2:
        raise UsageError(f"position {text!r} has no main piles")
    try:
        return Position.of(*nums)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def show_position(pos: Position, game: str) -> str:
    return str(pos) if game == "exco" else ",".join(map(str, pos.piles))


def rules_and_position(ns) -> tuple[GameRules, Position]:
    if ns.pos is None:
        raise UsageError("--pos is required")
    pos = parse_position(ns.pos, ns.game)
    n = pos.n if ns.n is None else ns.n
    if n != pos.n:
        raise UsageError(f"--n {n} does not match a position with {pos.n} main piles")
    return make_rules(ns.game, n, ns.k), pos


def load_memo(ns, rules: GameRules) -> SgTable | None:
    """Table from --cache when the file exists; None otherwise."""
    if not ns.cache or not os.path.exists(ns.cache):
        return None
    try:
        table = load_cache(ns.cache, rules)
    except CacheError as exc:
        raise UsageError(f"cache {ns.cache}: {exc}") from None
    table.visit_limit = ns.limit
    return table


def store_memo(ns, table: SgTable) -> None:
    if ns.cache and table.complete:
        save_cache(table, ns.cache)


def table_value(ns, rules: GameRules, pos: Position) -> int:
    """G(pos) by table, reusing and refreshing --cache."""
    memo = load_memo(ns, rules)
    if memo is not None and pos in memo:
        return memo[pos]
    if isinstance(rules, ExcoNim) and rules.n == 2:
        side = max(pos.piles)
        table = sg_table_n2(pos.x0, side, side)
    else:
        table = memo or SgTable.empty(rules, visit_limit=ns.limit)
        sg_bruteforce(rules, pos, table)
    store_memo(ns, table)
    return table[pos]


def emit_json(obj, out: TextIO) -> None:
    out.write(json.dumps(obj, sort_keys=False, separators=(", ", ": ")) + "\n")


# ---- commands

def cmd_sg(ns, out: TextIO) -> int:
    rules, pos = rules_and_position(ns)
    bounded = None
    if isinstance(rules, ExcoNim) and rules.n >= 3:
        g = g_closed(pos)
    elif isinstance(rules, ExcoNim) and ns.max is not None:
        bounded = sg_bounded(pos, ns.max)
        g = None if isinstance(bounded, AtLeast) else bounded.w
    elif isinstance(rules, StandardNim):
        g = nim_sum(pos.piles)
    else:
        g = table_value(ns, rules, pos)
    text = f"> {ns.max}" if g is None else str(g)
    if ns.format == "json":
        rec = {"game": rules.token, "n": rules.n, "pos": list(pos.coords)}
        if g is None:
            rec.update(exact=False, bound=bounded.b)
        else:
            rec.update(exact=True, sg=g)
        emit_json(rec, out)
    else:
        out.write(text + "\n")
    return EXIT_OK


def cmd_move(ns, out: TextIO) -> int:
    rules, pos = rules_and_position(ns)
    rules.check(pos)
    memo = None
    if not isinstance(rules, (ExcoNim, StandardNim)):
        memo = load_memo(ns, rules) or SgTable.empty(rules, visit_limit=ns.limit)
    dst = winning_reply(rules, pos, memo)
    if memo is not None:
        store_memo(ns, memo)
    if ns.format == "json":
        emit_json({"game": rules.token, "n": rules.n, "pos": list(pos.coords),
                   "p_position": dst is None,
                   "move": None if dst is None else list(dst.coords)}, out)
    elif dst is None:
        out.write("position is a P-position (no winning move)\n")
    else:
        out.write(f"{show_position(pos, ns.game)} -> {show_position(dst, ns.game)}\n")
    return EXIT_FAIL if dst is None else EXIT_OK


def _print_report(report: ConjectureReport, ns, out: TextIO, verdicts=("pass", "fail")) -> int:
    ok = not report.counterexamples
    if ns.format == "json":
        emit_json(report.to_json_dict(), out)
    else:
        verdict = verdicts[0] if ok else verdicts[1]
        out.write(f"{report.conjecture}: {verdict} ({report.checked} checked, "
                  f"{len(report.counterexamples)} counterexamples)\n")
        for t in report.thresholds:
            out.write("  " + " ".join(f"{k}={v}" for k, v in t.items()) + "\n")
        for c in report.counterexamples[:20]:
            out.write(f"  {tuple(c.pos)}: expected {c.expected}, got {c.actual}\n")
        if len(report.counterexamples) > 20:
            out.write(f"  ... {len(report.counterexamples) - 20} more\n")
    return EXIT_OK if ok else EXIT_FAIL


def _parse_box(text: str, size: int | None = None) -> tuple[int, ...]:
    try:
        box = tuple(int(t) for t in text.split(","))
    except ValueError:
        raise UsageError(f"bad box {text!r}") from None
    if any(b < 0 for b in box) or (size is not None and len(box) != size):
        raise UsageError(f"bad box {text!r}" + (f"; need {size} components" if size else ""))
    return box


def _n2_table(ns, box: tuple[int, int, int]) -> SgTable:
    memo = load_memo(ns, ExcoNim(2))
    if memo is not None and all(b <= m for b, m in zip(box, memo.box)):
        return memo
    table = table_for_sweep(*box)
    store_memo(ns, table)
    return table


DEFAULT_SIDE = {"theorem1": 6, "ppos": 8, "moore": 6, "axioms": 4, "appendix": 4,
                "shift": None, "prop4": None}


def cmd_verify(ns, out: TextIO) -> int:
    suite = ns.suite
    side = DEFAULT_SIDE[suite] if ns.max is None else ns.max
    if suite == "theorem1":
        report = suites.verify_theorem1(ns.n or 3, side, ns.limit)
    elif suite == "moore":
        rules = make_rules("moore", ns.n or 4, 2 if ns.k is None else ns.k)
        report = suites.verify_zeros(rules, side, ns.limit, label="MOORE")
    elif suite in ("ppos", "axioms"):
        rules = make_rules(ns.game, ns.n or 2, ns.k)
        if suite == "axioms":
            report = suites.verify_axioms(rules, side)
        else:
            report = suites.verify_zeros(rules, side, ns.limit)
    elif suite == "shift":
        box = _parse_box(ns.box or "3,16,16", 3)
        ks = [ns.k] if ns.k is not None else [1, 2, 3]
        step = 1 << max(ks)
        table = _n2_table(ns, (box[0], box[1] + step, box[2] + step))
        report = suites.verify_shift(box, ks, table)
    elif suite == "appendix":
        report = suites.verify_appendix(ns.n or 3, side)
    else:  # prop4
        box = _parse_box(ns.box or "32,32,64", 3)
        report = suites.verify_prop4(_n2_table(ns, box))
    return _print_report(report, ns, out)


def cmd_conjecture(ns, out: TextIO) -> int:
    cid = ns.cid.upper()
    x2_max = 128 if ns.x2_max is None else ns.x2_max
    if cid == "C5":
        x0s = list(ns.x0) if ns.x0 is not None else [1]
    else:
        x0s = list(ns.x0) if ns.x0 is not None else list(range(4))
    if ns.x1_pow2 is not None:
        x1s = [1 << e for e in ns.x1_pow2]
    elif ns.x1 is not None:
        x1s = list(ns.x1)
    else:
        x1s = [1 << e for e in range(5)] if cid == "C1" else list(range(1, 32))
    if not x0s or not x1s:
        raise UsageError("empty --x0 or --x1 range")
    table = _n2_table(ns, (max(x0s), max(x1s), max(x2_max, max(x1s))))
    try:
        report = check_conjecture(cid, table, x0s, x1s, x2_max)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if ns.format is None:
        ns.format = "json"
    return _print_report(report, ns, out, verdicts=("supported", "refuted"))


def cmd_table(ns, out: TextIO) -> int:
    if ns.x0 is None or ns.x1 is None or ns.x2 is None:
        raise UsageError("table needs --x0, --x1 and --x2")
    if len(ns.x0) != 1 or len(ns.x1) != 1:
        raise UsageError("--x0 and --x1 must be single values")
    x0, x1 = ns.x0[0], ns.x1[0]
    x2s = ns.x2
    rows = []
    if len(x2s):
        table = _n2_table(ns, (x0, max(x1, x2s[-1]), max(x1, x2s[-1])))
        rows = delta_row(x0, x1, x2s, table)
    fmt = ns.format or "csv"
    if fmt == "json":
        emit_json([{"x2": a, "g": b, "u": c, "delta": d} for a, b, c, d in rows], out)
    elif fmt == "csv":
        out.write("x2,g,u,delta\n")
        for r in rows:
            out.write(",".join(map(str, r)) + "\n")
    else:
        out.write(f"{'x2':>8} {'g':>8} {'u':>8} {'delta':>8}\n")
        for r in rows:
            out.write("".join(f"{v:>8} " for v in r).rstrip() + "\n")
    return EXIT_OK


def cmd_play(ns, out: TextIO, inp: TextIO) -> int:
    rules, pos = rules_and_position(ns)
    rules.check(pos)
    rng = random.Random(ns.seed) if ns.seed is not None else None
    memo = None
    if not isinstance(rules, (ExcoNim, StandardNim)):
        memo = SgTable.empty(rules, visit_limit=ns.limit)
    show = lambda p: show_position(p, ns.game)  # noqa: E731
    engine_turn = ns.first == "engine"
    out.write(f"start: {show(pos)}\n")
    while True:
        if is_terminal(rules, pos):
            winner = "you win" if engine_turn else "engine wins"
            out.write(f"no moves left; {winner}\n")
            return EXIT_OK
        if engine_turn:
            dst = engine_reply(rules, pos, memo, rng)
            out.write(f"engine: {show(pos)} -> {show(dst)}\n")
            pos = dst
            engine_turn = False
            continue
        out.write(f"your move from {show(pos)}> ")
        out.flush()
        line = inp.readline()
        if not line:
            out.write("\ninput ended; game abandoned\n")
            return EXIT_FAIL
        line = line.strip()
        try:
            dst = parse_position(line, ns.game)
            if dst.n != pos.n:
                raise UsageError(f"expected {pos.n} main piles")
        except UsageError as exc:
            out.write(f"could not read {line!r}: {exc}; try again\n")
            continue
        problem = move_violation(rules, pos, dst)
        if problem is not None:
            out.write(f"illegal move: {problem}; try again\n")
            continue
        pos = dst
        engine_turn = True


def cmd_cache(ns, out: TextIO) -> int:
    path = ns.path or ns.cache
    if not path:
        raise UsageError("cache needs a PATH argument or --cache")
    if ns.action == "check":
        if not os.path.exists(path):
            raise UsageError(f"no such file: {path}")
        try:
            table = load_cache(path)
        except CacheError as exc:
            out.write(f"invalid cache: {exc}\n")
            return EXIT_FAIL
        out.write(f"ok: {table.rules.token} n={table.rules.n} box={','.join(map(str, table.box))}\n")
        return EXIT_OK
    if ns.box is None:
        raise UsageError("cache build needs --box")
    box = _parse_box(ns.box)
    n = len(box) - 1
    if ns.n is not None and ns.n != n:
        raise UsageError(f"--n {ns.n} does not match a box with {len(box)} components")
    rules = make_rules(ns.game, n, ns.k)
    if isinstance(rules, ExcoNim) and n == 2:
        table = sg_table_n2(*box)
    else:
        table = fill_box(SgTable.empty(rules, box, ns.limit))
    save_cache(table, path)
    out.write(f"wrote {table.values.size} cells to {path}\n")
    return EXIT_OK


def main(argv: list[str] | None = None, out: TextIO | None = None, inp: TextIO | None = None) -> int:
    out = sys.stdout if out is None else out
    inp = sys.stdin if inp is None else inp
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        ns = resolve(ns)
        handlers = {"sg": cmd_sg, "move": cmd_move, "verify": cmd_verify,
                    "conjecture": cmd_conjecture, "table": cmd_table, "cache": cmd_cache}
        if ns.command == "play":
            return cmd_play(ns, out, inp)
        return handlers[ns.command](ns, out)
    except UsageError as exc:
        print(f"exconim: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceLimitError as exc:
        print(f"exconim: resource limit: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except (ValueError, KeyError) as exc:
        print(f"exconim: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
