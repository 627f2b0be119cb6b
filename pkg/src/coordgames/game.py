"""Binary-action polymatrix games over undirected graphs.

A polymatrix game places a two-player 2x2 game on every edge of an
undirected simple graph.  Each player picks one action, ``"a"`` or ``"b"``,
uses it against every neighbour, and collects the sum of the edge payoffs.
Every edge records an orientation (row player, column player) so the two
payoff matrices are unambiguous; convenience builders default to
lower-id-as-row.

Strategy profiles are plain strings over ``"a"``/``"b"`` indexed by vertex,
which makes the lexicographic tie-breaks used throughout the package the
natural string order.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from types import MappingProxyType

from .errors import InputFormatError, NotAPotentialGameError
from .rationals import Matrix2, mat2, matrix_json, parse_matrix, rational_str

ACTIONS = "ab"


def action_index(action: str) -> int:
    if action == "a":
        return 0
    if action == "b":
        return 1
    raise ValueError(f"unknown action {action!r}")


def flip(profile: str, player: int) -> str:
    """Return the profile with one player's action switched."""
    other = "b" if profile[player] == "a" else "a"
    return profile[:player] + other + profile[player + 1 :]


def validate_profile(n: int, profile: str) -> None:
    if not isinstance(profile, str) or len(profile) != n:
        raise ValueError(f"profile must be a length-{n} string over 'a'/'b'")
    if profile.strip(ACTIONS):
        raise ValueError(f"profile contains actions outside 'a'/'b': {profile!r}")


class EdgeClass(Enum):
    PURE_COORDINATION = "PureCoordination"
    ANTI_COORDINATION = "AntiCoordination"
    OTHER = "Other"


@dataclass(frozen=True)
class PayoffBimatrix:
    """The two-player game attached to one edge.

    ``u_row[s_i][s_j]`` pays the row player and ``u_col[s_j][s_i]`` pays the
    column player: each matrix is indexed by its own owner's action first.
    """

    u_row: Matrix2
    u_col: Matrix2


def coordination_bimatrix(row_threshold, col_threshold) -> PayoffBimatrix:
    """Matching edge game: each side earns its threshold when both play
    ``"a"``, the complement when both play ``"b"``, zero on mismatches."""
    ti, tj = Fraction(row_threshold), Fraction(col_threshold)
    return PayoffBimatrix(mat2(ti, 0, 0, 1 - ti), mat2(tj, 0, 0, 1 - tj))


def anti_coordination_bimatrix(row_threshold, col_threshold) -> PayoffBimatrix:
    """Mismatching edge game: each side earns its threshold playing ``"a"``
    against ``"b"``, the complement playing ``"b"`` against ``"a"``."""
    ti, tj = Fraction(row_threshold), Fraction(col_threshold)
    return PayoffBimatrix(mat2(0, ti, 1 - ti, 0), mat2(0, tj, 1 - tj, 0))


class PolymatrixGame:
    """``n`` players on an undirected simple graph, one bimatrix per edge.

    ``payoffs`` maps the stored orientation ``(row, col)`` of each edge to
    its :class:`PayoffBimatrix`.  No self-loops, no parallel edges.
    """

    def __init__(self, n: int, payoffs=None):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        self.n = n
        self._payoffs: dict[tuple[int, int], PayoffBimatrix] = {}
        self._pairs: set[frozenset[int]] = set()
        if payoffs:
            for (row, col), bimatrix in payoffs.items():
                self.add_edge(row, col, bimatrix)

    def add_edge(self, row: int, col: int, bimatrix: PayoffBimatrix) -> None:
        if not (0 <= row < self.n and 0 <= col < self.n):
            raise ValueError(f"edge ({row}, {col}) out of range for n={self.n}")
        if row == col:
            raise ValueError("self-loops are not allowed")
        pair = frozenset((row, col))
        if pair in self._pairs:
            raise ValueError(f"duplicate edge between {row} and {col}")
        self._pairs.add(pair)
        self._payoffs[(row, col)] = bimatrix

    @property
    def payoffs(self):
        return MappingProxyType(self._payoffs)

    @property
    def edge_count(self) -> int:
        return len(self._payoffs)

    def oriented_edges(self):
        """Edges in sorted (row, col) order, for deterministic iteration."""
        return sorted(self._payoffs.items())


@dataclass(frozen=True)
class NashReport:
    """Outcome of a pure-equilibrium check.

    ``deviators`` holds every player who strictly gains by a unilateral
    flip; ``strict`` is set when every flip strictly loses.
    """

    equilibrium: bool
    strict: bool
    deviators: frozenset[int]

    def to_dict(self) -> dict:
        return {
            "equilibrium": self.equilibrium,
            "strict": self.strict,
            "deviators": sorted(self.deviators),
        }


def utility(game: PolymatrixGame, profile: str, player: int) -> Fraction:
    """Total payoff to one player: sum of incident edge payoffs at the
    induced action pairs."""
    if not 0 <= player < game.n:
        raise ValueError(f"player id {player} out of range")
    validate_profile(game.n, profile)
    total = Fraction(0)
    for (row, col), bm in game.payoffs.items():
        if row == player:
            total += bm.u_row[action_index(profile[row])][action_index(profile[col])]
        elif col == player:
            total += bm.u_col[action_index(profile[col])][action_index(profile[row])]
    return total


def welfare(game: PolymatrixGame, profile: str) -> Fraction:
    """Utilitarian welfare: the sum of both payoffs over every edge."""
    validate_profile(game.n, profile)
    total = Fraction(0)
    for (row, col), bm in game.payoffs.items():
        si, sj = action_index(profile[row]), action_index(profile[col])
        total += bm.u_row[si][sj] + bm.u_col[sj][si]
    return total


def is_nash(game: PolymatrixGame, profile: str) -> NashReport:
    """Check the profile for unilateral deviations, one edge sweep."""
    validate_profile(game.n, profile)
    gains = [Fraction(0)] * game.n  # utility after own flip minus utility now
    for (row, col), bm in game.payoffs.items():
        si, sj = action_index(profile[row]), action_index(profile[col])
        gains[row] += bm.u_row[1 - si][sj] - bm.u_row[si][sj]
        gains[col] += bm.u_col[1 - sj][si] - bm.u_col[sj][si]
    deviators = frozenset(i for i, g in enumerate(gains) if g > 0)
    strict = all(g < 0 for g in gains)
    return NashReport(not deviators, strict, deviators)


def _strict_equilibrium(bm: PayoffBimatrix, si: int, sj: int) -> bool:
    # (si, sj) is a strict equilibrium of the 2x2 game iff both unilateral
    # flips strictly lose.
    return (
        bm.u_row[si][sj] > bm.u_row[1 - si][sj]
        and bm.u_col[sj][si] > bm.u_col[1 - sj][si]
    )


def classify_edge(bimatrix: PayoffBimatrix) -> EdgeClass:
    """Pure coordination iff (a,a) and (b,b) are strict equilibria of the
    edge game; anti-coordination iff (a,b) and (b,a) are; Other otherwise."""
    if _strict_equilibrium(bimatrix, 0, 0) and _strict_equilibrium(bimatrix, 1, 1):
        return EdgeClass.PURE_COORDINATION
    if _strict_equilibrium(bimatrix, 0, 1) and _strict_equilibrium(bimatrix, 1, 0):
        return EdgeClass.ANTI_COORDINATION
    return EdgeClass.OTHER


def welfare_matrix(bimatrix: PayoffBimatrix) -> Matrix2:
    """Entry (s_i, s_j) is the edge's total contribution to welfare."""
    u_row, u_col = bimatrix.u_row, bimatrix.u_col
    return tuple(
        tuple(u_row[si][sj] + u_col[sj][si] for sj in (0, 1)) for si in (0, 1)
    )


def potential_matrix(bimatrix: PayoffBimatrix) -> Matrix2:
    """Exact potential of the edge game, normalised so the (b,b) entry is 0.

    Raises :class:`NotAPotentialGameError` when the two path sums from
    (b,b) to (a,a) disagree, i.e. no exact potential exists.
    """
    u_row, u_col = bimatrix.u_row, bimatrix.u_col
    p_ab = u_row[0][1] - u_row[1][1]
    p_ba = u_col[0][1] - u_col[1][1]
    p_aa = p_ba + u_row[0][0] - u_row[1][0]
    if p_aa - p_ab != u_col[0][0] - u_col[1][0]:
        raise NotAPotentialGameError(
            "edge game has no exact potential: the two path sums to (a,a) disagree"
        )
    return ((p_aa, p_ab), (p_ba, Fraction(0)))


def total_potential(game: PolymatrixGame, profile: str) -> Fraction:
    """Sum of the per-edge potentials at the induced action pairs."""
    validate_profile(game.n, profile)
    total = Fraction(0)
    for (row, col), bm in game.payoffs.items():
        phi = potential_matrix(bm)
        total += phi[action_index(profile[row])][action_index(profile[col])]
    return total


# --- JSON ------------------------------------------------------------------

def game_to_dict(game: PolymatrixGame) -> dict:
    return {
        "n": game.n,
        "edges": [
            {
                "row": row,
                "col": col,
                "u_row": matrix_json(bm.u_row),
                "u_col": matrix_json(bm.u_col),
            }
            for (row, col), bm in game.oriented_edges()
        ],
    }


def game_from_dict(doc) -> PolymatrixGame:
    try:
        n = doc["n"]
        if not isinstance(n, int) or isinstance(n, bool) or n < 0:
            raise ValueError(f"bad vertex count: {n!r}")
        game = PolymatrixGame(n)
        for entry in doc["edges"]:
            game.add_edge(
                entry["row"],
                entry["col"],
                PayoffBimatrix(parse_matrix(entry["u_row"]), parse_matrix(entry["u_col"])),
            )
        return game
    except InputFormatError:
        raise
    except (KeyError, TypeError, ValueError) as exc:
        raise InputFormatError(f"bad game document: {exc}") from exc


def profile_to_dict(profile: str) -> dict:
    return {"actions": profile}


def profile_from_dict(doc, n: int | None = None) -> str:
    try:
        actions = doc["actions"]
        validate_profile(len(actions) if n is None else n, actions)
        return actions
    except (KeyError, TypeError, ValueError) as exc:
        raise InputFormatError(f"bad profile document: {exc}") from exc
