"""Independent brute-force oracles used as ground truth for the solvers.

Each oracle enumerates every profile (or subset) at desk scale, with
lexicographic tie-breaks, and re-verifies its winning witness through the
public evaluation path before returning.  Enumeration runs on exact
integers: all payoffs are rescaled by the LCM of their denominators.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import NamedTuple

from .errors import InstanceTooLargeError, NoPureNEError
from .game import (
    PolymatrixGame,
    is_nash,
    potential_matrix,
    total_potential,
    welfare,
    welfare_matrix,
)
from .mwop import profile_from_index


@dataclass(frozen=True)
class OracleCap:
    """Vertex caps for the enumerating oracles; exceeding one is an error,
    never a silent truncation."""

    profile_cap: int = 22
    cut_cap: int = 20


DEFAULT_CAP = OracleCap()


class ProfileValue(NamedTuple):
    profile: str
    value: Fraction


class CutValue(NamedTuple):
    partition: str
    cut_size: int


class TransversalResult(NamedTuple):
    vertices: tuple[int, ...]
    size: int


def _check_cap(n: int, cap: int | None, default: int) -> None:
    limit = default if cap is None else cap
    if n > limit:
        raise InstanceTooLargeError(f"n={n} exceeds enumeration cap {limit}")


def _scaled_tables(game: PolymatrixGame, matrix_of) -> tuple[int, list]:
    """Per-edge 4-entry integer tables for Sum(matrix entry at joint state)."""
    matrices = {key: matrix_of(bm) for key, bm in game.payoffs.items()}
    entries = [v for m in matrices.values() for row in m for v in row]
    scale = math.lcm(*(v.denominator for v in entries)) if entries else 1
    n = game.n
    tables = [
        (
            n - 1 - row,
            n - 1 - col,
            tuple(int(m[r][c] * scale) for r in (0, 1) for c in (0, 1)),
        )
        for (row, col), m in sorted(matrices.items())
    ]
    return scale, tables


def _gain_tables(game: PolymatrixGame) -> list:
    """Per-edge flip-gain tables: entry (s_row, s_col) of ``row_gain`` is
    the row player's utility change from flipping, scaled to integers."""
    entries = [
        v
        for bm in game.payoffs.values()
        for m in (bm.u_row, bm.u_col)
        for row in m
        for v in row
    ]
    scale = math.lcm(*(v.denominator for v in entries)) if entries else 1
    n = game.n
    tables = []
    for (row, col), bm in sorted(game.payoffs.items()):
        row_gain = tuple(
            int((bm.u_row[1 - r][c] - bm.u_row[r][c]) * scale)
            for r in (0, 1)
            for c in (0, 1)
        )
        col_gain = tuple(
            int((bm.u_col[1 - c][r] - bm.u_col[c][r]) * scale)
            for r in (0, 1)
            for c in (0, 1)
        )
        tables.append((n - 1 - row, n - 1 - col, row_gain, col_gain))
    return tables


def _is_ne_index(index: int, n: int, gain_tables, gains_buffer) -> bool:
    for i in range(n):
        gains_buffer[i] = 0
    for row_shift, col_shift, row_gain, col_gain in gain_tables:
        state = (((index >> row_shift) & 1) << 1) | ((index >> col_shift) & 1)
        gains_buffer[n - 1 - row_shift] += row_gain[state]
        gains_buffer[n - 1 - col_shift] += col_gain[state]
    return all(g <= 0 for g in gains_buffer)


def _max_scan(n: int, tables, indices) -> tuple[int, int] | None:
    best = None
    best_index = None
    for index in indices:
        total = 0
        for row_shift, col_shift, table in tables:
            total += table[(((index >> row_shift) & 1) << 1) | ((index >> col_shift) & 1)]
        if best is None or total > best:
            best = total
            best_index = index
    return None if best_index is None else (best_index, best)


def brute_welfare_max(game: PolymatrixGame, cap: int | None = None) -> ProfileValue:
    """Exact welfare maximum over all 2^n profiles."""
    _check_cap(game.n, cap, DEFAULT_CAP.profile_cap)
    scale, tables = _scaled_tables(game, welfare_matrix)
    best_index, best = _max_scan(game.n, tables, range(1 << game.n))
    profile = profile_from_index(best_index, game.n)
    value = welfare(game, profile)
    assert value == Fraction(best, scale)
    return ProfileValue(profile, value)


def brute_potential_max(game: PolymatrixGame, cap: int | None = None) -> ProfileValue:
    """Exact potential maximum over all 2^n profiles; the maximiser is a
    pure Nash equilibrium."""
    _check_cap(game.n, cap, DEFAULT_CAP.profile_cap)
    scale, tables = _scaled_tables(game, potential_matrix)
    best_index, best = _max_scan(game.n, tables, range(1 << game.n))
    profile = profile_from_index(best_index, game.n)
    value = total_potential(game, profile)
    assert value == Fraction(best, scale)
    return ProfileValue(profile, value)


def enumerate_pure_ne(game: PolymatrixGame, cap: int | None = None) -> list[str]:
    """All pure Nash equilibria, in lexicographic order."""
    _check_cap(game.n, cap, DEFAULT_CAP.profile_cap)
    n = game.n
    gain_tables = _gain_tables(game)
    gains = [0] * n
    out = []
    for index in range(1 << n):
        if _is_ne_index(index, n, gain_tables, gains):
            out.append(profile_from_index(index, n))
    return out


def best_pure_ne(game: PolymatrixGame, cap: int | None = None) -> ProfileValue:
    """Maximum-welfare pure Nash equilibrium, lexicographic tie-break;
    raises :class:`NoPureNEError` when no pure equilibrium exists."""
    _check_cap(game.n, cap, DEFAULT_CAP.profile_cap)
    n = game.n
    gain_tables = _gain_tables(game)
    scale, value_tables = _scaled_tables(game, welfare_matrix)
    gains = [0] * n
    best = None
    best_index = None
    for index in range(1 << n):
        if not _is_ne_index(index, n, gain_tables, gains):
            continue
        total = 0
        for row_shift, col_shift, table in value_tables:
            total += table[(((index >> row_shift) & 1) << 1) | ((index >> col_shift) & 1)]
        if best is None or total > best:
            best = total
            best_index = index
    if best_index is None:
        raise NoPureNEError("the game has no pure Nash equilibrium")
    profile = profile_from_index(best_index, n)
    report = is_nash(game, profile)
    value = welfare(game, profile)
    assert report.equilibrium and value == Fraction(best, scale)
    return ProfileValue(profile, value)


def brute_max_cut(n: int, edges, cap: int | None = None) -> CutValue:
    """Maximum number of crossing edges over all bipartitions."""
    _check_cap(n, cap, DEFAULT_CAP.cut_cap)
    shifts = [(n - 1 - i, n - 1 - j) for i, j in edges]
    best = -1
    best_index = 0
    for index in range(1 << n):
        crossing = 0
        for si, sj in shifts:
            crossing += ((index >> si) ^ (index >> sj)) & 1
        if crossing > best:
            best = crossing
            best_index = index
    if n == 0:
        return CutValue("", 0)
    return CutValue(profile_from_index(best_index, n), best)


def brute_min_transversal(n: int, hyperedges, cap: int | None = None) -> TransversalResult:
    """Minimum-cardinality hitting set of a hypergraph; among minimum ones
    the lexicographically smallest vertex tuple wins."""
    _check_cap(n, cap, DEFAULT_CAP.profile_cap)
    edge_sets = [frozenset(e) for e in hyperedges]
    for size in range(n + 1):
        for subset in combinations(range(n), size):
            chosen = set(subset)
            if all(chosen & e for e in edge_sets):
                return TransversalResult(subset, size)
    raise AssertionError("unreachable: the full vertex set hits every edge")
