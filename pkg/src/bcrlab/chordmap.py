"""From singular-disk data to chord diagrams, and the class pairing value.

A fully marked star-like presentation determines a chord diagram in two
steps: each branch contributes a path of eta edges, one vertex per crossing
along the branch's band in base-to-tip order, ending at the branch's head;
and each head connects by a theta edge to the vertex of the crossing where
its disk is pierced.  The value of the degree-k class on the associated
cycle is the weight of that diagram for even k and zero for odd k.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .diagrams.canonical import canonical_form
from .diagrams.model import ETA, THETA, JacobiDiagram, make_diagram
from .diagrams.structure import cycle_structure, has_yl_subgraph
from .algebra.weights import weight_w
from .schemes import MarkedPresentation, is_star_like


class SingularDiskError(ValueError):
    pass


def validate_singular_disk(mp: MarkedPresentation) -> list[str]:
    """Star-like, fully marked, one pierced disk per crossing, no extras."""
    errors = mp.validate()
    if errors:
        return errors
    p = mp.presentation
    if set(mp.marks) != set(p.crossings()):
        errors.append("every crossing must be marked (no unmarked crossings)")
    if not is_star_like(mp):
        errors.append("marked presentation is not star-like")
    pierced = [
        p.bands[b].piercings[j].disk for b, j in sorted(set(mp.marks))
    ]
    if len(set(pierced)) != len(pierced):
        errors.append("marked crossings must pierce pairwise distinct disks")
    k = len(mp.marks)
    if p.disks != k + 1:
        errors.append(
            f"a {k}-marked singular disk needs exactly {k + 1} disks "
            f"(every branch pierced once); got {p.disks}"
        )
    return errors


def is_chord_diagram(d: JacobiDiagram) -> bool:
    """No internal vertices and no cycle consisting only of eta edges."""
    if not d.is_valid() or d.n_internal:
        return False
    succ = {v: d.out_edge(v) for v in d.vertex_ids()}
    seen: dict[int, int] = {}
    v = 1
    while v not in seen:
        seen[v] = 1
        v = d.edges[succ[v]].dst
    start = v
    cycle_kinds = [d.edges[succ[start]].kind]
    w = d.edges[succ[start]].dst
    while w != start:
        cycle_kinds.append(d.edges[succ[w]].kind)
        w = d.edges[succ[w]].dst
    return not all(kind == ETA for kind in cycle_kinds)


def chord_diagram_of(mp: MarkedPresentation) -> JacobiDiagram:
    """The chord diagram of a fully marked star-like presentation."""
    errors = validate_singular_disk(mp)
    if errors:
        raise SingularDiskError("; ".join(errors))
    p = mp.presentation
    k = len(mp.marks)

    # branch indexing: branch j <-> non-based disk j, hung by its own band
    band_of_disk = {}
    for i, band in enumerate(p.bands):
        tip = band.to_disk if band.from_disk == 0 else band.from_disk
        band_of_disk[tip] = i

    # vertices: head h_j per branch, then one vertex per crossing position
    vertex_of_head = {}
    vertex_of_crossing = {}
    counter = 0
    for disk in range(1, k + 1):
        counter += 1
        vertex_of_head[disk] = counter
    for disk in range(1, k + 1):
        band_idx = band_of_disk[disk]
        for j in range(len(p.bands[band_idx].piercings)):
            counter += 1
            vertex_of_crossing[(band_idx, j)] = counter

    edges = []
    # eta paths along each branch, base-to-tip order, into the head
    for disk in range(1, k + 1):
        band_idx = band_of_disk[disk]
        n = len(p.bands[band_idx].piercings)
        for j in range(n):
            src = vertex_of_crossing[(band_idx, j)]
            dst = (
                vertex_of_crossing[(band_idx, j + 1)]
                if j + 1 < n
                else vertex_of_head[disk]
            )
            edges.append((src, dst, ETA))
    # theta edge from each head to the crossing piercing its disk
    for band_idx, j in sorted(set(mp.marks)):
        pierced = p.bands[band_idx].piercings[j].disk
        edges.append((vertex_of_head[pierced], vertex_of_crossing[(band_idx, j)], THETA))

    d = make_diagram(2 * k, 0, edges)
    problems = d.validate()
    if problems:
        raise SingularDiskError(
            "singular disk produced an inadmissible diagram: " + "; ".join(problems)
        )
    return d


def pairing_value(mp: MarkedPresentation) -> Fraction:
    """Value of the degree-k class on the cycle built from this datum."""
    d = chord_diagram_of(mp)
    k = len(mp.marks)
    if k % 2 == 1:
        return Fraction(0)
    return weight_w(d)
