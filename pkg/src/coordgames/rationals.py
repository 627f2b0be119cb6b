"""Exact rational scalars and 2x2 matrices, plus their JSON string forms.

Every quantity a solver touches is a ``fractions.Fraction``; values travel
through JSON as strings like ``"3/5"`` (or ``"4"`` for integers) so nothing
is ever rounded.
"""

from __future__ import annotations

from fractions import Fraction

Rational = Fraction

# Row-major 2x2 matrix: ((aa, ab), (ba, bb)).
Matrix2 = tuple[tuple[Fraction, Fraction], tuple[Fraction, Fraction]]


def parse_rational(value) -> Fraction:
    """Parse a ``"p/q"`` or ``"p"`` string (plain ints also accepted)."""
    if isinstance(value, bool):
        raise ValueError(f"not a rational: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"not a rational: {value!r}") from exc
    raise ValueError(f"not a rational: {value!r}")


def rational_str(value) -> str:
    """Lowest-terms string form: ``"p/q"``, or ``"p"`` when q == 1."""
    return str(Fraction(value))


def mat2(aa, ab, ba, bb) -> Matrix2:
    """Build a 2x2 rational matrix from row-major entries."""
    return ((Fraction(aa), Fraction(ab)), (Fraction(ba), Fraction(bb)))


def parse_matrix(rows) -> Matrix2:
    """Parse ``[["p/q", ...], [...]]`` into a 2x2 Fraction matrix."""
    if (
        not isinstance(rows, (list, tuple))
        or len(rows) != 2
        or any(not isinstance(r, (list, tuple)) or len(r) != 2 for r in rows)
    ):
        raise ValueError(f"not a 2x2 matrix: {rows!r}")
    return tuple(tuple(parse_rational(v) for v in row) for row in rows)


def matrix_json(m: Matrix2) -> list[list[str]]:
    return [[rational_str(v) for v in row] for row in m]
