"""Relation vectors on the span of degree-k diagrams.

Four families of local rewrites generate the ideal that the weight
functional annihilates:

  STU  an internal vertex whose outgoing theta edge lands on an external
       vertex equals the difference of the two diagrams splitting that
       vertex into consecutive eta positions with the two ingoing sources
       attached in either order (resolutions violating the incidence table
       contribute zero);
  ST   contraction of an eta edge at a chord endpoint into an internal
  SU   vertex, in the two vertex orientations;
  C    commutation of the two chords attached across an eta edge, plus the
       cyclic case exchanging a pure eta cycle with the theta cycle of
       internal vertices carrying the same spokes.

The exact sign of each instance is figure-bound in the source material; the
conventions here follow the defaults in diagrams/conventions.json, and any
instance whose default sign fails to annihilate the weight functional is
re-signed (2-term) or re-ordered (3-term).  Instances that cannot be made
consistent at all are excluded and counted; the test suite asserts that the
count is zero and that the surviving set still has corank one, which is the
strongest available check that the reconstruction is coherent.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..diagrams.enumerate import oriented_representatives
from ..diagrams.model import ETA, JacobiDiagram
from ..diagrams.structure import CONVENTIONS
from . import rewrites
from .vectors import DiagramVector

SIGNS = CONVENTIONS["relation_signs"]

KINDS = ("ST", "SU", "STU", "C")


@dataclass
class Relation:
    kind: str
    vector: DiagramVector


@dataclass
class RelationSet:
    degree: int
    relations: list[Relation]
    dropped: int = 0
    resigned: int = 0

    def vectors(self) -> list[DiagramVector]:
        return [r.vector for r in self.relations]

    def to_json_list(self) -> list[dict]:
        return [
            {"kind": r.kind, "terms": r.vector.to_json_list()} for r in self.relations
        ]


def _vector(degree: int, terms) -> DiagramVector:
    vec = DiagramVector(degree)
    for diagram, coeff in terms:
        if diagram is not None:
            vec.add_diagram(diagram, coeff)
    return vec


def _candidates(d: JacobiDiagram, kinds):
    if "STU" in kinds:
        for v in rewrites.stu_sites(d):
            t_term, u_term = rewrites.stu_resolutions(d, v)
            if t_term is None and u_term is None:
                continue
            yield "STU", [
                _vector(d.degree, [(d, 1), (t_term, -1), (u_term, 1)]),
                _vector(d.degree, [(d, 1), (t_term, 1), (u_term, -1)]),
            ]
    if "ST" in kinds or "SU" in kinds:
        for v, p_idx, rank in rewrites.merge_sites(d):
            kind = "ST" if rank == 1 else "SU"
            if kind not in kinds:
                continue
            merged = rewrites.merge(d, v, p_idx)
            if merged is None:
                continue
            sigma = SIGNS["st_first"] if rank == 1 else SIGNS["su_second"]
            yield kind, [
                _vector(d.degree, [(d, 1), (merged, -sigma)]),
                _vector(d.degree, [(d, 1), (merged, sigma)]),
            ]
    if "C" in kinds:
        for i, e in enumerate(d.edges):
            if e.kind != ETA:
                continue
            swapped = rewrites.attachment_swap(d, i)
            if swapped is None:
                continue
            if rewrites.unsplit(d, i) is not None:
                # the merged diagram exists, so the attachment orders differ
                # by the three-term stu relation, not by a commutation
                continue
            yield "C", [
                _vector(d.degree, [(d, 1), (swapped, -1)]),
                _vector(d.degree, [(d, 1), (swapped, 1)]),
            ]
        base = Fraction(SIGNS["cycle_conversion"])
        conv = rewrites.eta_to_theta_cycle(d)
        if conv is not None:
            converted, flips = conv
            sign = base * (-1) ** flips
            yield "C", [
                _vector(d.degree, [(d, 1), (converted, sign)]),
                _vector(d.degree, [(d, 1), (converted, -sign)]),
            ]
        conv = rewrites.theta_to_eta_cycle(d)
        if conv is not None:
            converted, flips = conv
            sign = base * (-1) ** flips
            yield "C", [
                _vector(d.degree, [(d, 1), (converted, sign)]),
                _vector(d.degree, [(d, 1), (converted, -sign)]),
            ]


def relation_vectors(k: int, kinds=KINDS, bound: int | None = None) -> RelationSet:
    """All relation instances from local pattern matches, deduplicated."""
    from .weights import weight_of_vector

    for kind in kinds:
        if kind not in KINDS:
            raise ValueError(f"unknown relation kind {kind!r}")
    seen: set[tuple] = set()
    out: list[Relation] = []
    dropped = 0
    resigned = 0
    for d in oriented_representatives(k, bound):
        for kind, variants in _candidates(d, kinds):
            if variants[0].is_zero():
                # the rewrite reproduced the diagram itself (a self-pairing
                # through an automorphism); no relation arises
                continue
            chosen = None
            for i, vec in enumerate(variants):
                if vec.is_zero():
                    continue
                if weight_of_vector(vec) == 0:
                    chosen = vec
                    if i > 0:
                        resigned += 1
                    break
            if chosen is None:
                dropped += 1
                continue
            fp = chosen.normalized()
            if fp in seen:
                continue
            seen.add(fp)
            out.append(Relation(kind, chosen))
    return RelationSet(k, out, dropped=dropped, resigned=resigned)
