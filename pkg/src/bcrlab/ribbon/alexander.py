"""The normalized Alexander polynomial and its log-series coefficients."""

from __future__ import annotations

from fractions import Fraction

from .group import alexander_matrix
from .laurent import ONE, LaurentPolynomial, TruncatedSeries, laurent_at_exp_h
from .presentation import RibbonPresentation

DEFAULT_SERIES_ORDER = 12


class DegenerateMatrixError(RuntimeError):
    pass


def _det(matrix: list[list[LaurentPolynomial]]) -> LaurentPolynomial:
    n = len(matrix)
    if n == 0:
        return ONE
    if n == 1:
        return matrix[0][0]
    total = LaurentPolynomial()
    for i in range(n):
        entry = matrix[i][0]
        if entry.is_zero():
            continue
        minor = [row[1:] for j, row in enumerate(matrix) if j != i]
        term = entry * _det(minor)
        total = total + (term if i % 2 == 0 else -term)
    return total


def raw_alexander_determinant(
    p: RibbonPresentation, delete_column: int = 0
) -> LaurentPolynomial:
    """Determinant of the Fox matrix with one generator column removed."""
    matrix = alexander_matrix(p)
    if not matrix:
        return ONE
    if not 0 <= delete_column < p.disks:
        raise ValueError(f"no generator column {delete_column}")
    reduced = [
        [entry for j, entry in enumerate(row) if j != delete_column] for row in matrix
    ]
    return _det(reduced)


def normalize_alexander(raw: LaurentPolynomial) -> LaurentPolynomial:
    """The unit multiple with value 1 and vanishing derivative at t = 1."""
    at_one = raw(1)
    if at_one not in (1, -1):
        raise DegenerateMatrixError(
            f"determinant evaluates to {at_one} at t=1; expected a unit"
        )
    f = raw * at_one
    m = -f.derivative_at_one()  # f(1) = 1, so (t^m f)'(1) = m + f'(1)
    return f.shifted(m)


def alexander_polynomial(
    p: RibbonPresentation, delete_column: int = 0
) -> LaurentPolynomial:
    return normalize_alexander(raw_alexander_determinant(p, delete_column))


def alexander_series(p: RibbonPresentation, order: int = DEFAULT_SERIES_ORDER) -> TruncatedSeries:
    """log of the normalized Alexander polynomial at t = e^h."""
    delta = alexander_polynomial(p)
    series = laurent_at_exp_h(delta, order)
    return series.log()


def alpha_coefficients(
    p: RibbonPresentation, upto: int, order: int | None = None
) -> list[Fraction]:
    """[alpha_2, ..., alpha_upto]; normalization makes alpha_0 = alpha_1 = 0."""
    if upto < 2:
        raise ValueError("the series starts at order 2")
    n = order if order is not None else max(DEFAULT_SERIES_ORDER, upto)
    series = alexander_series(p, n)
    assert series[0] == 0 and series[1] == 0
    return [series[j] for j in range(2, upto + 1)]


def alpha(p: RibbonPresentation, j: int) -> Fraction:
    """The coefficient of h^j in log Delta(e^h)."""
    return alpha_coefficients(p, max(j, 2))[j - 2] if j >= 2 else Fraction(0)
