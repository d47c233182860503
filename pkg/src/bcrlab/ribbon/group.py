"""Knot group presentation and abelianized Fox calculus.

The group of the knot associated to a ribbon presentation has one meridian
generator per disk; each band from disk a to disk b, passing through disks
d_1, ..., d_r with signs s_1, ..., s_r in order, contributes the relator

    x_b * (w x_a w^{-1})^{-1},    w = c_1 ... c_r,

where the pass conjugator is taken relative to the base sheet:

    c_i = (x_0 x_{d_i}^{-1})^{s_i}.

The whisker convention (which meridian word conjugates per pass) is not
written out in the sources; this one is pinned by requiring the normalized
Alexander polynomial of the wheel presentations to be exactly 1 + (t-1)^k.
Fox derivatives are taken directly in the abelianization x_i -> t, which is
all the Alexander matrix needs.
"""

from __future__ import annotations

from dataclasses import dataclass

from .laurent import ONE, ZERO, LaurentPolynomial
from .presentation import RibbonPresentation

Letter = tuple[int, int]  # (generator index, exponent +1/-1)


@dataclass(frozen=True)
class GroupPresentation:
    generators: int
    relators: tuple[tuple[Letter, ...], ...]

    def describe(self) -> dict:
        def word(letters):
            return "".join(
                f"x{g}" + ("" if e == 1 else "^-1") for g, e in letters
            )

        return {
            "generators": [f"x{i}" for i in range(self.generators)],
            "relators": [word(r) for r in self.relators],
        }


def _inverse(word):
    return tuple((g, -e) for g, e in reversed(word))


def knot_group(p: RibbonPresentation) -> GroupPresentation:
    errors = p.validate()
    if errors:
        raise ValueError("invalid presentation: " + "; ".join(errors))
    relators = []
    for band in p.bands:
        w: tuple[Letter, ...] = ()
        for pc in band.piercings:
            if pc.sign == 1:
                w = w + ((0, 1), (pc.disk, -1))
            else:
                w = w + ((pc.disk, 1), (0, -1))
        conj = w + ((band.from_disk, 1),) + _inverse(w)
        relator = ((band.to_disk, 1),) + _inverse(conj)
        relators.append(relator)
    return GroupPresentation(p.disks, tuple(relators))


def fox_derivative(word, generator: int, n_generators: int | None = None) -> LaurentPolynomial:
    """Abelianized free derivative of a word with respect to one generator.

    Uses d(uv) = du + abel(u) dv, d(x) = 1, d(x^{-1}) = -t^{-1}, with every
    generator abelianizing to t.
    """
    result = ZERO
    prefix_exp = 0  # exponent of t for the abelianization of the prefix
    for g, e in word:
        if n_generators is not None and not 0 <= g < n_generators:
            raise ValueError(f"unknown generator x{g}")
        if e not in (1, -1):
            raise ValueError("words must use exponents +1/-1")
        if g == generator:
            if e == 1:
                result = result + LaurentPolynomial.t(prefix_exp)
            else:
                result = result - LaurentPolynomial.t(prefix_exp - 1)
        prefix_exp += e
    return result


def alexander_matrix(p: RibbonPresentation) -> list[list[LaurentPolynomial]]:
    g = knot_group(p)
    return [
        [fox_derivative(rel, j, g.generators) for j in range(g.generators)]
        for rel in g.relators
    ]
