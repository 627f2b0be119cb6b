"""Polynomial-time MWOP solving and the welfare / potential wrappers.

Dispatch follows the tractability trichotomy: if every arc matrix has its
maximum in the top-left (resp. bottom-right) cell, the all-"a" (resp.
all-"b") partition is optimal; if every matrix's main diagonal weakly
dominates its anti-diagonal, the optimum is recovered from a minimum x-y
cut in an auxiliary weighted graph whose shifted cut weights track
partition values exactly:

    cut_weight = -(partition value) - n * theta

for every partition, where theta is the shift applied to the x/y edges.
Anything else is reported Hard; callers may fall back to the brute-force
oracle explicitly.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .errors import PropertyViolatedError
from .game import PolymatrixGame, potential_matrix, welfare_matrix
from .mincut import CutGraph, CutResult, min_st_cut
from .mwop import MwopClass, MwopInstance, classify_instance, classify_matrix, instance_value
from .rationals import rational_str

AUX_SOURCE = "x"
AUX_SINK = "y"


class SolveStatus(Enum):
    SOLVED_TRIVIAL_A = "SolvedTrivialA"
    SOLVED_TRIVIAL_B = "SolvedTrivialB"
    SOLVED_MIN_CUT = "SolvedMinCut"
    HARD = "Hard"


@dataclass(frozen=True)
class SolveReport:
    status: SolveStatus
    profile: str | None = None
    value: Fraction | None = None

    def to_dict(self) -> dict:
        doc = {"status": self.status.value}
        if self.profile is not None:
            doc["profile"] = self.profile
        if self.value is not None:
            doc["value"] = rational_str(self.value)
        return doc


@dataclass(frozen=True)
class AuxGraph:
    """Auxiliary cut graph for diagonal-dominant instances.

    ``raw_weights``/``shifted_weights`` are keyed by ``(i, j)`` for the
    edges inherited from arcs and by ``("x", i)`` / ``("y", i)`` for the
    source/sink attachments every vertex receives.  ``graph`` carries the
    shifted (non-negative) weights.
    """

    graph: CutGraph
    theta: Fraction
    raw_weights: dict
    shifted_weights: dict


def build_aux_graph(inst: MwopInstance) -> AuxGraph:
    """Build the weighted graph whose minimum x-y cut maximises the
    instance value; requires the diagonal-dominance property on every arc."""
    half = Fraction(1, 2)
    weights: dict = {}
    for i in range(inst.n):
        weights[(AUX_SOURCE, i)] = Fraction(0)
        weights[(AUX_SINK, i)] = Fraction(0)
    for (tail, head), m in inst.sorted_arcs():
        if not classify_matrix(m).prop_iii:
            raise PropertyViolatedError(
                f"arc ({tail}, {head}) violates diagonal dominance"
            )
        (aa, ab), (ba, bb) = m
        weights[(tail, head)] = (aa + bb - ab - ba) * half
        weights[(AUX_SOURCE, tail)] += -bb * half
        weights[(AUX_SOURCE, head)] += -bb * half
        weights[(AUX_SINK, tail)] += (ba - aa - ab) * half
        weights[(AUX_SINK, head)] += (ab - aa - ba) * half
    theta = min(weights.values(), default=Fraction(0))
    shifted = {
        key: (w - theta if isinstance(key[0], str) else w)
        for key, w in weights.items()
    }
    graph = CutGraph(AUX_SOURCE, AUX_SINK)
    for (tail, head), m in inst.sorted_arcs():
        graph.add_edge(tail, head, shifted[(tail, head)])
    for i in range(inst.n):
        graph.add_edge(AUX_SOURCE, i, shifted[(AUX_SOURCE, i)])
        graph.add_edge(AUX_SINK, i, shifted[(AUX_SINK, i)])
    return AuxGraph(graph, theta, weights, shifted)


def solve_mwop(inst: MwopInstance) -> SolveReport:
    """Solve tractable instances exactly; report Hard otherwise."""
    label = classify_instance(inst)
    if label is MwopClass.HARD:
        return SolveReport(SolveStatus.HARD)
    if label is MwopClass.ALL_PROP_I:
        profile = "a" * inst.n
        return SolveReport(SolveStatus.SOLVED_TRIVIAL_A, profile, instance_value(inst, profile))
    if label is MwopClass.ALL_PROP_II:
        profile = "b" * inst.n
        return SolveReport(SolveStatus.SOLVED_TRIVIAL_B, profile, instance_value(inst, profile))
    aux = build_aux_graph(inst)
    cut = min_st_cut(aux.graph)
    profile = "".join("a" if i in cut.s_side else "b" for i in range(inst.n))
    value = instance_value(inst, profile)
    assert cut.value == -value - inst.n * aux.theta, "cut accounting identity violated"
    return SolveReport(SolveStatus.SOLVED_MIN_CUT, profile, value)


def welfare_instance(game: PolymatrixGame) -> MwopInstance:
    """MWOP instance whose arc matrices are the per-edge welfare matrices,
    oriented as stored; its value at any partition equals the welfare."""
    return MwopInstance(
        game.n, {key: welfare_matrix(bm) for key, bm in game.payoffs.items()}
    )


def potential_instance(game: PolymatrixGame) -> MwopInstance:
    """MWOP instance built from the per-edge potential matrices; its value
    at any partition equals the total potential."""
    return MwopInstance(
        game.n, {key: potential_matrix(bm) for key, bm in game.payoffs.items()}
    )


def maximize_welfare(game: PolymatrixGame) -> SolveReport:
    """Welfare-maximising profile via MWOP dispatch (Hard when the welfare
    matrices fit none of the tractable families)."""
    return solve_mwop(welfare_instance(game))


def maximize_potential(game: PolymatrixGame) -> SolveReport:
    """Potential-maximising profile via MWOP dispatch.  Every edge must
    admit an exact potential; a returned maximiser is always a pure Nash
    equilibrium of the game."""
    return solve_mwop(potential_instance(game))
