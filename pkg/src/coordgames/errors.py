"""Exception types shared by the solver modules."""


class CoordGamesError(Exception):
    """Base class for all package-specific errors."""


class InputFormatError(CoordGamesError, ValueError):
    """A JSON document does not match the expected schema."""


class NotAPotentialGameError(CoordGamesError):
    """A 2x2 edge game admits no exact potential (cycle sums disagree)."""


class InstanceTooLargeError(CoordGamesError):
    """A brute-force routine was asked to exceed its vertex cap."""


class PropertyViolatedError(CoordGamesError):
    """An arc matrix lacks the structural property the solver requires."""


class PreconditionViolatedError(CoordGamesError):
    """Arguments fall outside the range a routine is defined for."""


class NotATransversalError(CoordGamesError):
    """The given vertex set misses at least one hyperedge."""


class NoPureNEError(CoordGamesError):
    """The game has no pure-strategy Nash equilibrium."""


class NegativeWeightError(CoordGamesError):
    """Cut/flow routines require non-negative edge weights."""


class InfiniteCutError(CoordGamesError):
    """Every s-t cut crosses an arc meant to be uncuttable."""
