"""Closed formulas for the Nim family and a search-free Exco-Nim move builder.

Everything here is integer arithmetic.  The n >= 3 Exco-Nim value is a
function of two numbers, the smallest main pile ``m`` and the token total
``u``; :func:`construct_move_appendix` inverts it, producing for any target
value a concrete successor position without looking at the move graph.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import reduce
from math import isqrt
from operator import xor
from typing import Iterable

from .game import ExcoNim, Position, PositionLike, as_position, is_legal_move


def nim_sum(values: Iterable[int]) -> int:
    return reduce(xor, values, 0)


@dataclass(frozen=True)
class MooreSum:
    """Per-bit pile sums reduced mod k+1, least significant bit first."""

    k: int
    digits: tuple[int, ...]

    @property
    def is_zero(self) -> bool:
        return not any(self.digits)

    def __int__(self):
        # digits read in base 2 as in the original definition
        return sum(d << j for j, d in enumerate(self.digits))


def moore_sum(pos: PositionLike, k: int) -> MooreSum:
    pos = as_position(pos)
    if not 1 <= k < pos.n:
        raise ValueError(f"Moore sum needs 1 <= k < n, got k={k}, n={pos.n}")
    width = max(pos.piles).bit_length()
    digits = tuple(sum((p >> j) & 1 for p in pos.piles) % (k + 1) for j in range(width))
    return MooreSum(k, digits)


def z_of(y: int) -> int:
    return y * (y + 1) // 2 + 1


class Kind(enum.Enum):
    TYPE_I = "I"
    TYPE_II = "II"


@dataclass(frozen=True)
class SgParams:
    m: int
    u: int
    y: int
    z: int
    kind: Kind


def sg_params(pos: PositionLike) -> SgParams:
    pos = as_position(pos)
    m = min(pos.piles)
    u = pos.total
    y = u - pos.n * m
    z = z_of(y)
    return SgParams(m, u, y, z, Kind.TYPE_I if m < z else Kind.TYPE_II)


def _g_from(m: int, y: int, n: int) -> int:
    z = z_of(y)
    if m < z:
        return y + n * m
    return (z - 1) + (m - z) % (y + 1)


def g_closed(pos: PositionLike) -> int:
    """SG value of Exco-Nim for n >= 3 without any search."""
    pos = as_position(pos)
    if pos.n < 3:
        raise ValueError("closed form requires n >= 3")
    p = sg_params(pos)
    return _g_from(p.m, p.y, pos.n)


def bounds(pos: PositionLike, sg0: int) -> tuple[int, int]:
    """``(x0 + sg0, u)`` where ``sg0`` is the value with the extra pile emptied."""
    pos = as_position(pos)
    return pos.x0 + sg0, pos.total


def reachable_mu(pos: PositionLike, m: int, u: int) -> bool:
    """Whether some move from ``pos`` lands on min pile ``m`` and total ``u``."""
    pos = as_position(pos)
    if pos.n < 3:
        raise ValueError("reachable (m, u) characterisation needs n >= 3")
    p = sg_params(pos)
    if m > p.m or (m == p.m and p.y == 0) or m < 0:
        return False
    return p.m + (pos.n - 1) * m <= u <= p.u - max(1, p.m - m)


@dataclass(frozen=True)
class EtaRho:
    v: int
    eta: int
    rho: int


def eta_rho(v: int) -> EtaRho:
    """Split ``v = z(eta) - 1 + rho`` with ``0 <= rho <= eta``."""
    if v < 0:
        raise ValueError("v must be nonnegative")
    eta = (isqrt(8 * v + 1) - 1) // 2
    rho = v - eta * (eta + 1) // 2
    return EtaRho(v, eta, rho)


def interval_v(y: int) -> range:
    """The block of values whose eta equals ``y``."""
    return range(z_of(y) - 1, z_of(y) + y)


class ConstructionError(RuntimeError):
    """The move builder produced an illegal or wrongly valued position."""


def _fill(base: list[int], caps: list[int], order: Iterable[int], amount: int) -> None:
    # raise entries from their minimum in the given order until `amount` is spent
    for i in order:
        step = min(amount, caps[i] - base[i])
        base[i] += step
        amount -= step
    if amount:
        raise ConstructionError("slack too small for the requested sum")


def _type_one(c: int, x: list[int], v: int) -> list[int]:
    n = len(x) - 1
    m = x[1]
    p = [0] + [xi - m for xi in x[1:]]  # p[1] == 0
    k = c + sum(x[1:])
    d = [c] + x[1:]
    if k - m <= v:
        d[1] = m - (k - v)
    elif m + p[2] <= v:
        d = [0, 0, x[2]] + [0] * (n - 2)
        _fill(d, [c] + x[1:], [0, *range(3, n + 1)], v - m - p[2])
    elif m <= v:
        d = [0, m, v - m] + [0] * (n - 2)
    else:
        er = eta_rho(v)
        if v == m - 1:
            d = [0] + [m] * n
            _fill(d, [c] + x[1:], [0, *range(2, n + 1)], er.eta)
        else:
            a = (m - v - 1) % (er.eta + 1)
            d = [0] + [m - a] * n
            if er.eta >= p[2] + a:
                d[2] = x[2]
                _fill(d, [c] + x[1:], [0, *range(3, n + 1)], er.eta - a - p[2])
            else:
                d[1] = m
                _fill(d, [c] + x[1:], [0, *range(3, n + 1)], er.eta - a)
    return d


def _type_two(c: int, x: list[int], v: int) -> list[int]:
    n = len(x) - 1
    m = x[1]
    p = [0] + [xi - m for xi in x[1:]]
    # P[i] = p_1 + ... + p_i for i = 0..n, P[n+1] adds the extra pile
    P = [0] * (n + 2)
    for i in range(1, n + 1):
        P[i] = P[i - 1] + p[i]
    P[n + 1] = P[n] + c

    er = eta_rho(v)
    mu = er.eta
    a = (m - z_of(mu) - er.rho) % (mu + 1)
    if mu == 0:
        return [0] + [m] * n
    i = next(i for i in range(1, n + 1) if P[i] < mu <= P[i + 1])
    if a == 0:
        if i < n:
            d = [0] + [m + p[b] for b in range(1, i + 1)] + [m + mu - P[i]] + [m] * (n - i - 1)
        else:
            d = [mu - P[n]] + x[1:]
        return d
    if i < n:
        j = next(j for j in range(1, i + 1) if mu - P[j + 1] < a <= mu - P[j])
        d = [0]
        d += [m + p[b] - a for b in range(1, j)]
        d += [m + p[j], m + mu - P[j] - 2 * a]
        d += [m - a] * (n - j - 1)
        return d
    ell = next((l for l in range(1, n) if P[n] - P[l + 1] < a <= P[n] - P[l]), None)
    if ell is None:  # a > P[n]
        return [mu - a, m] + [m - a] * (n - 1)
    d = [mu - P[n]]
    d += [m + p[b] - a for b in range(1, ell)]
    d += [m + p[ell], m + P[n] - P[ell] - 2 * a]
    d += [m - a] * (n - ell - 1)
    return d


def construct_move_appendix(pos: PositionLike, v: int) -> Position:
    """A successor of ``pos`` whose closed-form value is exactly ``v``.

    The main piles are processed in ascending order; the result is mapped back
    to the caller's pile order, so the unchanged pile of the move is the same
    physical pile.  Free components are raised greedily in ascending index
    order.  The result is checked for legality and value before returning.
    """
    pos = as_position(pos)
    if pos.n < 3:
        raise ValueError("closed form requires n >= 3")
    g = g_closed(pos)
    if not 0 <= v < g:
        raise ValueError(f"value not realizable: {v} is not below g = {g}")
    order = sorted(range(pos.n), key=lambda i: (pos.piles[i], i))
    x = [pos.x0] + [pos.piles[i] for i in order]
    params = sg_params(pos)
    if params.kind is Kind.TYPE_I:
        d = _type_one(pos.x0, x, v)
    else:
        d = _type_two(pos.x0, x, v)
    piles = [0] * pos.n
    for sorted_idx, orig in enumerate(order):
        piles[orig] = d[sorted_idx + 1]
    try:
        dst = Position(d[0], tuple(piles))
    except ValueError as exc:
        raise ConstructionError(f"negative component building v={v} from {pos}: {d}") from exc
    if not is_legal_move(ExcoNim(pos.n), pos, dst):
        raise ConstructionError(f"illegal move {pos} -> {dst} for v={v}")
    if g_closed(dst) != v:
        raise ConstructionError(f"{pos} -> {dst} has g={g_closed(dst)}, wanted {v}")
    return dst
