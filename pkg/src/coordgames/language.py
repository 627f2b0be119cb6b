"""Threshold games and two-group (language) games.

A threshold game puts the matching edge game on every edge: player ``i``
earns ``t_i`` per a-playing neighbour when playing ``"a"`` and ``1 - t_i``
per b-playing neighbour when playing ``"b"``.  A language game is the
two-group special case where everyone in group A shares a threshold
``gamma_A`` and everyone in group B shares ``gamma_B <= gamma_A``.

Finding the welfare-optimal pure equilibrium splits into cases:

* ``gamma_A <= 1/2``: all-b is simultaneously an equilibrium and a global
  welfare maximiser, so it is the optimal equilibrium; symmetrically
  ``gamma_B >= 1/2`` gives all-a.
* ``gamma_B = 0, gamma_A = 1``: equilibria make every same-group component
  monochromatic, so the optimum is a minimum x-y cut in a small digraph
  with one node per component.
* anything else is intractable in general; :func:`solve_language` falls
  back to the brute-force oracle at desk scale.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .errors import (
    InfiniteCutError,
    InputFormatError,
    PreconditionViolatedError,
)
from .game import PolymatrixGame, coordination_bimatrix, validate_profile, welfare
from .mincut import CutGraph, min_st_cut
from .oracle import ProfileValue, best_pure_ne
from .rationals import parse_rational, rational_str

HALF = Fraction(1, 2)


def _validate_graph(n: int, edges) -> tuple[tuple[int, int], ...]:
    seen = set()
    out = []
    for edge in edges:
        i, j = edge
        if not (0 <= i < n and 0 <= j < n) or i == j:
            raise ValueError(f"bad edge ({i}, {j}) for n={n}")
        pair = (min(i, j), max(i, j))
        if pair in seen:
            raise ValueError(f"duplicate edge between {i} and {j}")
        seen.add(pair)
        out.append(pair)
    return tuple(out)


@dataclass(frozen=True)
class ThresholdGame:
    """Matching game on a graph with one threshold in [0, 1] per vertex."""

    n: int
    edges: tuple[tuple[int, int], ...]
    thresholds: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "edges", _validate_graph(self.n, self.edges))
        thresholds = tuple(Fraction(t) for t in self.thresholds)
        if len(thresholds) != self.n:
            raise ValueError("one threshold per vertex required")
        if any(not 0 <= t <= 1 for t in thresholds):
            raise ValueError("thresholds must lie in [0, 1]")
        object.__setattr__(self, "thresholds", thresholds)


@dataclass(frozen=True)
class LanguageGame:
    """Two-group threshold game; ``groups`` is a string over 'A'/'B'."""

    n: int
    edges: tuple[tuple[int, int], ...]
    groups: str
    threshold_a: Fraction
    threshold_b: Fraction

    def __post_init__(self):
        object.__setattr__(self, "edges", _validate_graph(self.n, self.edges))
        if len(self.groups) != self.n or self.groups.strip("AB"):
            raise ValueError(f"groups must be a length-{self.n} string over 'A'/'B'")
        ta, tb = Fraction(self.threshold_a), Fraction(self.threshold_b)
        if not 0 <= tb <= ta <= 1:
            raise ValueError("thresholds must satisfy 0 <= gamma_B <= gamma_A <= 1")
        object.__setattr__(self, "threshold_a", ta)
        object.__setattr__(self, "threshold_b", tb)

    def threshold_of(self, vertex: int) -> Fraction:
        return self.threshold_a if self.groups[vertex] == "A" else self.threshold_b

    def as_threshold_game(self) -> ThresholdGame:
        return ThresholdGame(
            self.n, self.edges, tuple(self.threshold_of(i) for i in range(self.n))
        )


class LanguageCase(Enum):
    MONOTONE_ALL_B = "MonotoneAllB"
    MONOTONE_ALL_A = "MonotoneAllA"
    EXTREMAL = "Extremal"
    HARD_BRUTE_FORCED = "HardBruteForced"


@dataclass(frozen=True)
class LanguageSolveReport:
    case: LanguageCase
    profile: str
    welfare: Fraction
    cut_value: Fraction | None = None

    def to_dict(self) -> dict:
        return {
            "case": self.case.value,
            "profile": self.profile,
            "welfare": rational_str(self.welfare),
        }


def _as_threshold(game) -> ThresholdGame:
    if isinstance(game, LanguageGame):
        return game.as_threshold_game()
    if isinstance(game, ThresholdGame):
        return game
    raise TypeError(f"expected a threshold or language game, got {type(game)!r}")


def to_polymatrix(game) -> PolymatrixGame:
    """Induced polymatrix game: the matching bimatrix with the endpoints'
    thresholds on every edge, lower id as row player."""
    tg = _as_threshold(game)
    out = PolymatrixGame(tg.n)
    for i, j in tg.edges:
        out.add_edge(i, j, coordination_bimatrix(tg.thresholds[i], tg.thresholds[j]))
    return out


def _neighbour_counts(tg: ThresholdGame, profile: str) -> tuple[list[int], list[int]]:
    in_a = [0] * tg.n
    in_b = [0] * tg.n
    for i, j in tg.edges:
        if profile[j] == "a":
            in_a[i] += 1
        else:
            in_b[i] += 1
        if profile[i] == "a":
            in_a[j] += 1
        else:
            in_b[j] += 1
    return in_a, in_b


def stays_put(threshold: Fraction, action: str, n_a: int, n_b: int) -> bool:
    """True when a player with the given threshold and neighbour split has
    no strict incentive to switch (cross-multiplied, so no division)."""
    p, q = threshold.numerator, threshold.denominator
    if action == "a":
        return n_b * (q - p) <= n_a * p
    return n_a * p <= n_b * (q - p)


def ratio_nash_check(game, profile: str) -> bool:
    """Equilibrium test via per-vertex neighbour ratios.

    Equivalent to :func:`coordgames.game.is_nash` on the induced polymatrix
    game, but works straight off neighbour counts; vertices with an empty
    opposite-side neighbourhood pass their condition vacuously.
    """
    tg = _as_threshold(game)
    validate_profile(tg.n, profile)
    in_a, in_b = _neighbour_counts(tg, profile)
    return all(
        stays_put(tg.thresholds[i], profile[i], in_a[i], in_b[i])
        for i in range(tg.n)
    )


def solve_monotone(lg: LanguageGame) -> LanguageSolveReport:
    """One-sided thresholds: the dominant uniform profile is both an
    equilibrium and a global welfare maximiser, hence the optimal
    equilibrium.  At gamma_A = gamma_B = 1/2 both cases apply and all-a is
    returned."""
    if lg.threshold_b >= HALF:
        case, profile = LanguageCase.MONOTONE_ALL_A, "a" * lg.n
    elif lg.threshold_a <= HALF:
        case, profile = LanguageCase.MONOTONE_ALL_B, "b" * lg.n
    else:
        raise PreconditionViolatedError(
            "monotone case needs gamma_A <= 1/2 or gamma_B >= 1/2"
        )
    return LanguageSolveReport(case, profile, welfare(to_polymatrix(lg), profile))


def _group_components(lg: LanguageGame, letter: str) -> list[list[int]]:
    members = [i for i in range(lg.n) if lg.groups[i] == letter]
    member_set = set(members)
    adjacency = {i: [] for i in members}
    for i, j in lg.edges:
        if i in member_set and j in member_set:
            adjacency[i].append(j)
            adjacency[j].append(i)
    components = []
    seen = set()
    for seed in members:
        if seed in seen:
            continue
        queue = deque([seed])
        seen.add(seed)
        comp = []
        while queue:
            u = queue.popleft()
            comp.append(u)
            for v in adjacency[u]:
                if v not in seen:
                    seen.add(v)
                    queue.append(v)
        components.append(sorted(comp))
    return components


def solve_extremal(lg: LanguageGame) -> LanguageSolveReport:
    """The gamma_B = 0, gamma_A = 1 case.

    Every equilibrium keeps each component of the A-side (and of the
    B-side) monochromatic and never pairs an a-playing B-component with a
    b-playing A-component across an edge.  Encoding components as nodes of
    a digraph with those exclusions as uncuttable arcs turns the search
    into a minimum x-y cut; the optimal welfare is

        2 * |E| - |cross edges| - cut_value.
    """
    if not (lg.threshold_b == 0 and lg.threshold_a == 1):
        raise PreconditionViolatedError("extremal case needs gamma_B = 0 and gamma_A = 1")
    comps_a = _group_components(lg, "A")
    comps_b = _group_components(lg, "B")
    comp_of: dict[int, tuple[str, int]] = {}
    for k, comp in enumerate(comps_a):
        for v in comp:
            comp_of[v] = ("a", k)
    for k, comp in enumerate(comps_b):
        for v in comp:
            comp_of[v] = ("b", k)

    internal_a = [0] * len(comps_a)
    internal_b = [0] * len(comps_b)
    cross: dict[tuple[int, int], int] = {}
    for i, j in lg.edges:
        side_i, ki = comp_of[i]
        side_j, kj = comp_of[j]
        if side_i == side_j == "a":
            internal_a[ki] += 1
        elif side_i == side_j == "b":
            internal_b[ki] += 1
        else:
            key = (ki, kj) if side_i == "a" else (kj, ki)
            cross[key] = cross.get(key, 0) + 1
    cross_total = sum(cross.values())

    # Strictly exceeds any finite cut, so it never ends up in one.
    uncuttable = Fraction(1 + 2 * sum(internal_a) + 2 * sum(internal_b) + cross_total)
    graph = CutGraph("x", "y")
    for k, count in enumerate(internal_a):
        graph.add_edge("x", ("a", k), 2 * count, directed=True)
    for k, count in enumerate(internal_b):
        graph.add_edge(("b", k), "y", 2 * count, directed=True)
    for (ka, kb), count in sorted(cross.items()):
        graph.add_edge(("a", ka), ("b", kb), count, directed=True)
        graph.add_edge(("b", kb), ("a", ka), uncuttable, directed=True)
    cut = min_st_cut(graph)
    if cut.value >= uncuttable:
        raise InfiniteCutError("every x-y cut crosses an uncuttable arc")

    actions = [""] * lg.n
    for k, comp in enumerate(comps_a):
        action = "a" if ("a", k) in cut.s_side else "b"
        for v in comp:
            actions[v] = action
    for k, comp in enumerate(comps_b):
        action = "a" if ("b", k) in cut.s_side else "b"
        for v in comp:
            actions[v] = action
    profile = "".join(actions)
    value = Fraction(2 * len(lg.edges) - cross_total) - cut.value
    return LanguageSolveReport(LanguageCase.EXTREMAL, profile, value, cut_value=cut.value)


def brute_force_best_ne(game: PolymatrixGame, cap: int | None = None) -> ProfileValue:
    """Welfare-optimal pure equilibrium by full enumeration (oracle).

    Raises :class:`coordgames.errors.NoPureNEError` when the equilibrium
    set is empty and :class:`coordgames.errors.InstanceTooLargeError` over
    the cap.
    """
    return best_pure_ne(game, cap)


def solve_language(lg: LanguageGame, cap: int | None = None) -> LanguageSolveReport:
    """Dispatch: monotone cases, then the extremal case, else brute force
    over the induced polymatrix game (desk scale only)."""
    if lg.threshold_b >= HALF or lg.threshold_a <= HALF:
        return solve_monotone(lg)
    if lg.threshold_b == 0 and lg.threshold_a == 1:
        return solve_extremal(lg)
    profile, value = brute_force_best_ne(to_polymatrix(lg), cap)
    return LanguageSolveReport(LanguageCase.HARD_BRUTE_FORCED, profile, value)


# --- JSON ------------------------------------------------------------------

def language_to_dict(lg: LanguageGame) -> dict:
    return {
        "n": lg.n,
        "edges": [list(e) for e in lg.edges],
        "group": lg.groups,
        "gamma_A": rational_str(lg.threshold_a),
        "gamma_B": rational_str(lg.threshold_b),
    }


def language_from_dict(doc) -> LanguageGame:
    try:
        return LanguageGame(
            doc["n"],
            tuple(tuple(e) for e in doc["edges"]),
            doc["group"],
            parse_rational(doc["gamma_A"]),
            parse_rational(doc["gamma_B"]),
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise InputFormatError(f"bad language-game document: {exc}") from exc
