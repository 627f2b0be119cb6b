"""Maximum Weighted Orgraph Partition (MWOP) instances.

An instance assigns a 2x2 rational matrix to every arc of an oriented graph
(no two-cycles).  A partition of the vertices into an "a"-side and a
"b"-side selects one entry per arc: the tail's action picks the row, the
head's action picks the column.  The objective is to maximise the selected
sum.  Tractability of the maximisation depends only on which of three
matrix properties hold uniformly across the arcs; see
:mod:`coordgames.solvers` for the polynomial-time dispatch.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from types import MappingProxyType
from typing import NamedTuple

from .errors import InputFormatError, InstanceTooLargeError
from .game import action_index, validate_profile
from .rationals import Matrix2, matrix_json, parse_matrix

DEFAULT_BRUTE_CAP = 22


@dataclass(frozen=True)
class PropertySet:
    """Which of the three tractability properties a matrix satisfies.

    ``prop_i``: the (a,a) entry is a maximum entry; ``prop_ii``: the (b,b)
    entry is; ``prop_iii``: the main diagonal sum weakly dominates the
    anti-diagonal sum.  All comparisons are non-strict, so ties count.
    """

    prop_i: bool
    prop_ii: bool
    prop_iii: bool


class MwopClass(Enum):
    ALL_PROP_I = "AllPropI"
    ALL_PROP_II = "AllPropII"
    ALL_PROP_III = "AllPropIII"
    HARD = "Hard"


class MwopInstance:
    """Oriented graph with a 2x2 rational matrix per arc."""

    def __init__(self, n: int, arcs=None):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        self.n = n
        self._arcs: dict[tuple[int, int], Matrix2] = {}
        if arcs:
            for (tail, head), m in arcs.items():
                self.add_arc(tail, head, m)

    def add_arc(self, tail: int, head: int, matrix: Matrix2) -> None:
        if not (0 <= tail < self.n and 0 <= head < self.n):
            raise ValueError(f"arc ({tail}, {head}) out of range for n={self.n}")
        if tail == head:
            raise ValueError("self-loops are not allowed")
        if (tail, head) in self._arcs:
            raise ValueError(f"duplicate arc ({tail}, {head})")
        if (head, tail) in self._arcs:
            raise ValueError(
                f"both ({tail}, {head}) and ({head}, {tail}) present: not an oriented graph"
            )
        self._arcs[(tail, head)] = matrix

    @property
    def arcs(self):
        return MappingProxyType(self._arcs)

    def sorted_arcs(self):
        return sorted(self._arcs.items())


def arc_weight(matrix: Matrix2, tail_action: str, head_action: str) -> Fraction:
    """Matrix entry selected by an assignment: tail indexes the row."""
    return matrix[action_index(tail_action)][action_index(head_action)]


def instance_value(inst: MwopInstance, profile: str) -> Fraction:
    """Sum of the selected entries over all arcs."""
    validate_profile(inst.n, profile)
    total = Fraction(0)
    for (tail, head), m in inst.arcs.items():
        total += m[action_index(profile[tail])][action_index(profile[head])]
    return total


def classify_matrix(matrix: Matrix2) -> PropertySet:
    (aa, ab), (ba, bb) = matrix
    top = max(aa, ab, ba, bb)
    return PropertySet(aa == top, bb == top, aa + bb >= ab + ba)


def classify_instance(inst: MwopInstance) -> MwopClass:
    """First label, in the order I, II, III, whose property holds for every
    arc matrix; Hard when none does."""
    props = [classify_matrix(m) for m in inst.arcs.values()]
    if all(p.prop_i for p in props):
        return MwopClass.ALL_PROP_I
    if all(p.prop_ii for p in props):
        return MwopClass.ALL_PROP_II
    if all(p.prop_iii for p in props):
        return MwopClass.ALL_PROP_III
    return MwopClass.HARD


class BruteForceResult(NamedTuple):
    partition: str
    value: Fraction


def profile_from_index(index: int, n: int) -> str:
    """Profile whose enumeration rank equals the string's lexicographic
    rank: vertex 0 is the most significant bit, 0 means "a"."""
    if n == 0:
        return ""
    return format(index, f"0{n}b").replace("0", "a").replace("1", "b")


def brute_force_mwop(inst: MwopInstance, cap: int = DEFAULT_BRUTE_CAP) -> BruteForceResult:
    """Exact maximum over all 2^n partitions, lexicographic tie-break.

    The scan runs on integers (all entries rescaled by the LCM of their
    denominators); the winning partition is then re-evaluated through
    :func:`instance_value` so the returned value is independently checked.
    """
    if inst.n > cap:
        raise InstanceTooLargeError(f"n={inst.n} exceeds brute-force cap {cap}")
    n = inst.n
    entries = [v for m in inst.arcs.values() for row in m for v in row]
    scale = math.lcm(*(v.denominator for v in entries)) if entries else 1
    tables = [
        (
            n - 1 - tail,
            n - 1 - head,
            tuple(int(m[r][c] * scale) for r in (0, 1) for c in (0, 1)),
        )
        for (tail, head), m in inst.sorted_arcs()
    ]
    best_value = None
    best_index = 0
    for index in range(1 << n):
        total = 0
        for tail_shift, head_shift, table in tables:
            total += table[(((index >> tail_shift) & 1) << 1) | ((index >> head_shift) & 1)]
        if best_value is None or total > best_value:
            best_value = total
            best_index = index
    partition = profile_from_index(best_index, n)
    value = instance_value(inst, partition)
    assert value == Fraction(best_value if best_value is not None else 0, scale)
    return BruteForceResult(partition, value)


# --- JSON ------------------------------------------------------------------

def mwop_to_dict(inst: MwopInstance) -> dict:
    return {
        "n": inst.n,
        "arcs": [
            {"tail": tail, "head": head, "m": matrix_json(m)}
            for (tail, head), m in inst.sorted_arcs()
        ],
    }


def mwop_from_dict(doc) -> MwopInstance:
    try:
        n = doc["n"]
        if not isinstance(n, int) or isinstance(n, bool) or n < 0:
            raise ValueError(f"bad vertex count: {n!r}")
        inst = MwopInstance(n)
        for entry in doc["arcs"]:
            inst.add_arc(entry["tail"], entry["head"], parse_matrix(entry["m"]))
        return inst
    except (KeyError, TypeError, ValueError) as exc:
        raise InputFormatError(f"bad MWOP document: {exc}") from exc
