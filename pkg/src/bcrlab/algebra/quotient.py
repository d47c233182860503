"""Exact rank computation over the rationals for diagram-vector spans."""

from __future__ import annotations

from fractions import Fraction

from ..diagrams.canonical import canonical_form
from ..diagrams.enumerate import oriented_representatives
from .relations import RelationSet, relation_vectors
from .vectors import DiagramVector


class RowSpace:
    """Incremental row-echelon basis of sparse rational vectors."""

    def __init__(self):
        self.rows: dict[str, dict[str, Fraction]] = {}  # pivot key -> row

    def _reduce(self, vec: dict[str, Fraction]) -> dict[str, Fraction]:
        vec = dict(vec)
        while vec:
            pivot = min(vec)
            row = self.rows.get(pivot)
            if row is None:
                return vec
            factor = vec[pivot]
            for k, c in row.items():
                nv = vec.get(k, Fraction(0)) - factor * c
                if nv == 0:
                    vec.pop(k, None)
                else:
                    vec[k] = nv
        return vec

    def add(self, vector: DiagramVector) -> bool:
        """Insert; returns True when the rank grew."""
        residual = self._reduce(vector.coeffs)
        if not residual:
            return False
        pivot = min(residual)
        lead = residual[pivot]
        row = {k: c / lead for k, c in residual.items()}
        # back-substitute into existing rows to keep reduction cheap
        for p, r in self.rows.items():
            if pivot in r:
                factor = r[pivot]
                for k, c in row.items():
                    nv = r.get(k, Fraction(0)) - factor * c
                    if nv == 0:
                        r.pop(k, None)
                    else:
                        r[k] = nv
        self.rows[pivot] = row
        return True

    def contains(self, vector: DiagramVector) -> bool:
        return not self._reduce(vector.coeffs)

    @property
    def rank(self) -> int:
        return len(self.rows)


def relation_span(k: int, bound: int | None = None) -> RowSpace:
    space = RowSpace()
    for vec in relation_vectors(k, bound=bound).vectors():
        space.add(vec)
    return space


def quotient_dimension(k: int, bound: int | None = None) -> int:
    """dim( span of degree-k diagrams / span of relations )."""
    reps = oriented_representatives(k, bound)
    n = len(reps)
    return n - relation_span(k, bound).rank


def in_relation_span(vec: DiagramVector, span: RowSpace) -> bool:
    return span.contains(vec)
