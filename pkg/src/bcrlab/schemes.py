"""Schemes: alternating sums over unclaspings, and finite-type testing.

A k-marked presentation is a presentation with k distinct crossings singled
out; its scheme is the alternating sum over unclasping subsets.  Invariants
of presentations extend to schemes by linearity; an invariant has type k
when it kills every (k+1)-scheme.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from .ribbon.presentation import (
    Band,
    Piercing,
    RibbonPresentation,
    unclasp_all,
)

Crossing = tuple[int, int]  # (band index, piercing index)


@dataclass(frozen=True)
class MarkedPresentation:
    presentation: RibbonPresentation
    marks: tuple[Crossing, ...]

    def validate(self) -> list[str]:
        errors = self.presentation.validate()
        seen = set()
        crossings = set(self.presentation.crossings())
        for mark in self.marks:
            if mark in seen:
                errors.append(f"duplicate mark {mark}")
            seen.add(mark)
            if mark not in crossings:
                errors.append(f"mark {mark} is not a crossing of the presentation")
        return errors

    def is_valid(self) -> bool:
        return not self.validate()

    def to_json_dict(self) -> dict:
        data = self.presentation.to_json_dict()
        data["marks"] = [list(m) for m in self.marks]
        return data

    @classmethod
    def from_json_dict(cls, data: dict) -> "MarkedPresentation":
        p = RibbonPresentation.from_json_dict(data)
        marks = tuple((int(a), int(b)) for a, b in data.get("marks", ()))
        return cls(p, marks)


@dataclass
class Scheme:
    terms: list[tuple[int, RibbonPresentation]]  # (sign, presentation)

    def to_json_list(self) -> list[dict]:
        return [
            dict(sign=s, **p.to_json_dict()) for s, p in self.terms
        ]


def expand(mp: MarkedPresentation) -> Scheme:
    """All 2^m unclasped variants with subset-parity signs."""
    errors = mp.validate()
    if errors:
        raise ValueError("invalid marked presentation: " + "; ".join(errors))
    m = len(mp.marks)
    terms = []
    for mask in range(1 << m):
        subset = [mp.marks[i] for i in range(m) if mask >> i & 1]
        sign = -1 if len(subset) % 2 else 1
        terms.append((sign, unclasp_all(mp.presentation, subset)))
    return Scheme(terms)


def evaluate(invariant, scheme: Scheme) -> Fraction:
    total = Fraction(0)
    for sign, presentation in scheme.terms:
        total += sign * Fraction(invariant(presentation))
    return total


def evaluate_marked(invariant, mp: MarkedPresentation) -> Fraction:
    return evaluate(invariant, expand(mp))


def is_star_like(mp: MarkedPresentation) -> bool:
    """Each marked crossing's pierced disk hangs off the base by its own band.

    The disk fully contained in a marked crossing is the pierced one; the
    presentation is star-like when that disk is joined to disk 0 by a single
    band and no other band is attached to it (piercings through it are not
    attachments).
    """
    p = mp.presentation
    for band_idx, pier_idx in mp.marks:
        disk = p.bands[band_idx].piercings[pier_idx].disk
        if disk == 0:
            return False
        attached = [
            b for b in p.bands if disk in (b.from_disk, b.to_disk)
        ]
        if len(attached) != 1:
            return False
        b = attached[0]
        if 0 not in (b.from_disk, b.to_disk):
            return False
    return True


# -- random corpus -----------------------------------------------------------


def random_presentation(
    rng: random.Random,
    max_disks: int = 6,
    max_piercings_per_band: int = 3,
    min_piercings: int = 0,
) -> RibbonPresentation:
    """Seed-reproducible presentation with a random attachment tree."""
    disks = rng.randint(2, max_disks)
    bands = []
    for j in range(1, disks):
        attach = rng.randrange(0, j)  # tree: attach below
        if rng.random() < 0.5:
            frm, to = attach, j
        else:
            frm, to = j, attach
        n_pierce = rng.randint(0, max_piercings_per_band)
        piercings = tuple(
            Piercing(rng.randrange(0, disks), rng.choice((1, -1)))
            for _ in range(n_pierce)
        )
        bands.append(Band(frm, to, piercings))
    p = RibbonPresentation(disks, tuple(bands))
    total = len(p.crossings())
    if total < min_piercings:
        # top up the last band with extra piercings
        extra = tuple(
            Piercing(rng.randrange(0, disks), rng.choice((1, -1)))
            for _ in range(min_piercings - total)
        )
        last = p.bands[-1]
        bands[-1] = Band(last.from_disk, last.to_disk, last.piercings + extra)
        p = RibbonPresentation(disks, tuple(bands))
    return p


def random_marked_presentation(
    rng: random.Random, n_marks: int, max_disks: int = 6
) -> MarkedPresentation:
    p = random_presentation(rng, max_disks=max_disks, min_piercings=n_marks)
    crossings = p.crossings()
    marks = tuple(rng.sample(crossings, n_marks))
    return MarkedPresentation(p, marks)


@dataclass
class FiniteTypeReport:
    invariant: str
    type_bound: int
    samples: int
    nonzero: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.nonzero


def finite_type_report(
    invariant,
    k: int,
    sample_count: int = 50,
    rng_seed: int = 0,
    invariant_name: str = "invariant",
) -> FiniteTypeReport:
    """Evaluate the invariant on random (k+1)-marked presentations.

    A type-k invariant must return exactly zero on every sample; any nonzero
    evaluation is reported with its seed index and presentation.
    """
    rng = random.Random(rng_seed)
    report = FiniteTypeReport(invariant_name, k, sample_count)
    for i in range(sample_count):
        mp = random_marked_presentation(rng, k + 1)
        value = evaluate_marked(invariant, mp)
        if value != 0:
            report.nonzero.append(
                {"sample": i, "value": value, "marked": mp.to_json_dict()}
            )
    return report
