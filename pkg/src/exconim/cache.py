"""Plain-text persistence for complete SG tables.

Layout::

    grundy-cache v1 <variant> n=<n> box=<x0max>,<x1max>,...
    x0 x1 ... xn g
    ...

One row per cell in lexicographic order, LF line endings, no trailing blank
line.
"""
from __future__ import annotations

import itertools
import os
from typing import IO, Union

from .engine import SgTable, inconsistent_cells
from .game import GameRules, rules_from_token

MAGIC = "grundy-cache"
VERSION = "v1"

PathOrFile = Union[str, os.PathLike, IO[str]]


class CacheError(ValueError):
    pass


class CacheHeaderError(CacheError):
    pass


class CacheVersionError(CacheError):
    pass


class CacheParseError(CacheError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


class CacheTruncatedError(CacheError):
    pass


class CacheVariantError(CacheError):
    pass


class CacheConsistencyError(CacheError):
    pass


def dumps(table: SgTable) -> str:
    if not table.complete:
        raise ValueError("only complete tables can be cached")
    header = (f"{MAGIC} {VERSION} {table.rules.token} n={table.rules.n} "
              f"box={','.join(map(str, table.box))}")
    lines = [header]
    for coords in itertools.product(*(range(b + 1) for b in table.box)):
        lines.append(" ".join(map(str, coords)) + f" {int(table.values[coords])}")
    return "\n".join(lines) + "\n"


def save_cache(table: SgTable, destination: PathOrFile) -> None:
    text = dumps(table)
    if hasattr(destination, "write"):
        destination.write(text)
    else:
        with open(destination, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def _parse_header(line: str) -> tuple[GameRules, tuple[int, ...]]:
    parts = line.split(" ")
    if len(parts) != 5 or parts[0] != MAGIC:
        raise CacheHeaderError(f"not a grundy cache header: {line!r}")
    if parts[1] != VERSION:
        raise CacheVersionError(f"unsupported cache version {parts[1]!r}, expected {VERSION}")
    if not parts[3].startswith("n=") or not parts[4].startswith("box="):
        raise CacheHeaderError(f"malformed header fields: {line!r}")
    try:
        n = int(parts[3][2:])
        box = tuple(int(b) for b in parts[4][4:].split(","))
        rules = rules_from_token(parts[2], n)
    except ValueError as exc:
        raise CacheHeaderError(f"malformed header: {exc}") from exc
    if len(box) != n + 1 or min(box) < 0:
        raise CacheHeaderError(f"box {box} does not fit n={n}")
    return rules, box


def loads(text: str, rules: GameRules | None = None, check: bool = True) -> SgTable:
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise CacheHeaderError("empty cache file")
    found_rules, box = _parse_header(lines[0])
    if rules is not None and found_rules != rules:
        raise CacheVariantError(f"cache holds {found_rules.token} n={found_rules.n}, "
                                f"expected {rules.token} n={rules.n}")
    table = SgTable.empty(found_rules, box)
    cells = itertools.product(*(range(b + 1) for b in box))
    width = len(box) + 1
    for lineno, (line, coords) in enumerate(zip(lines[1:], cells), start=2):
        fields = line.split(" ")
        if len(fields) != width:
            raise CacheParseError(lineno, f"expected {width} fields, got {len(fields)}")
        try:
            nums = [int(f) for f in fields]
        except ValueError:
            raise CacheParseError(lineno, f"non-numeric field in {line!r}") from None
        if tuple(nums[:-1]) != coords:
            raise CacheParseError(lineno, f"expected cell {coords}, got {tuple(nums[:-1])}")
        if nums[-1] < 0:
            raise CacheParseError(lineno, "negative SG value")
        table.values[coords] = nums[-1]
    expected = table.values.size
    got = len(lines) - 1
    if got < expected:
        raise CacheTruncatedError(f"cache has {got} rows, box {box} needs {expected}")
    if got > expected:
        raise CacheParseError(expected + 2, "rows beyond the declared box")
    if check:
        bad = inconsistent_cells(table)
        if bad:
            raise CacheConsistencyError(f"{len(bad)} cells fail the mex check, first {bad[0]}")
    return table


def load_cache(source: PathOrFile, rules: GameRules | None = None, check: bool = True) -> SgTable:
    if hasattr(source, "read"):
        text = source.read()
    else:
        with open(source, encoding="utf-8", newline="") as fh:
            text = fh.read()
    return loads(text, rules, check)
