"""Sparse exact-rational vectors over canonical diagram classes.

Basis elements are oriented canonical keys: a diagram and its
orientation-reversed conjugate are distinct basis elements, and the relation
set is what identifies them up to sign in the quotient.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from ..diagrams.canonical import canonical_form, diagram_from_key
from ..diagrams.model import JacobiDiagram


@dataclass
class DiagramVector:
    degree: int
    coeffs: dict[str, Fraction] = field(default_factory=dict)

    def copy(self) -> "DiagramVector":
        return DiagramVector(self.degree, dict(self.coeffs))

    def add_diagram(self, d: JacobiDiagram, coeff) -> "DiagramVector":
        if d.degree != self.degree:
            raise ValueError(f"degree mismatch: {d.degree} != {self.degree}")
        key = canonical_form(d).oriented_key
        self.add_key(key, coeff)
        return self

    def add_key(self, key: str, coeff) -> "DiagramVector":
        c = self.coeffs.get(key, Fraction(0)) + Fraction(coeff)
        if c == 0:
            self.coeffs.pop(key, None)
        else:
            self.coeffs[key] = c
        return self

    def __add__(self, other: "DiagramVector") -> "DiagramVector":
        out = self.copy()
        for k, c in other.coeffs.items():
            out.add_key(k, c)
        return out

    def __sub__(self, other: "DiagramVector") -> "DiagramVector":
        out = self.copy()
        for k, c in other.coeffs.items():
            out.add_key(k, -c)
        return out

    def scaled(self, factor) -> "DiagramVector":
        f = Fraction(factor)
        return DiagramVector(
            self.degree, {k: c * f for k, c in self.coeffs.items() if c * f != 0}
        )

    def is_zero(self) -> bool:
        return not self.coeffs

    def items(self):
        return sorted(self.coeffs.items())

    def normalized(self) -> tuple:
        """Scale-invariant fingerprint: leading coefficient made +1."""
        if not self.coeffs:
            return ()
        items = self.items()
        lead = items[0][1]
        return tuple((k, c / lead) for k, c in items)

    def terms_diagrams(self):
        return [(diagram_from_key(k), c) for k, c in self.items()]

    def to_json_list(self) -> list[dict]:
        return [
            {
                "diagram": diagram_from_key(k).to_json_dict(),
                "coeff_num": c.numerator,
                "coeff_den": c.denominator,
            }
            for k, c in self.items()
        ]
