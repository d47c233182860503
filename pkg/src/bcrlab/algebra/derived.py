"""Derived relations: IHX, Y and L instances must lie in the relation span."""

from __future__ import annotations

from dataclasses import dataclass

from ..diagrams.enumerate import oriented_representatives
from ..diagrams.model import THETA, JacobiDiagram
from ..diagrams.structure import has_yl_subgraph
from . import rewrites
from .quotient import RowSpace, relation_span
from .vectors import DiagramVector

DERIVED_KINDS = ("IHX", "Y", "L")


@dataclass
class DerivedReport:
    kind: str
    degree: int
    instances: int
    in_span: int

    @property
    def ok(self) -> bool:
        return self.instances == self.in_span


def _ihx_triples(d: JacobiDiagram):
    """Rewire an internal-internal theta edge in its three leg distributions."""
    omap = dict(d.orientation)
    for idx, e in enumerate(d.edges):
        if e.kind != THETA:
            continue
        u, v = e.src, e.dst
        if not (d.is_internal(u) and d.is_internal(v)):
            continue
        a_idx, b_idx = omap[u]
        c_candidates = [i for i in omap[v] if i != idx]
        if len(c_candidates) != 1:
            continue
        c_idx = c_candidates[0]
        ext, internal, edges, orientation = rewrites.labeled(d)
        a, b, c = (d.edges[i] for i in (a_idx, b_idx, c_idx))

        def rewired(u_first, u_second, v_leg):
            new_edges = []
            moved = {
                (a.src, a.dst, a.kind),
                (b.src, b.dst, b.kind),
                (c.src, c.dst, c.kind),
            }
            for ee in edges:
                if ee in moved:
                    continue
                new_edges.append(ee)
            eu1 = (u_first.src, u, THETA)
            eu2 = (u_second.src, u, THETA)
            ev = (v_leg.src, v, THETA)
            new_edges += [eu1, eu2, ev]
            new_orient = dict(orientation)
            new_orient[u] = (eu1, eu2)
            new_orient[v] = ((u, v, THETA), ev)
            return rewrites.rebuild(ext, internal, new_edges, new_orient)

        i_term = rewired(a, b, c)
        h_term = rewired(a, c, b)
        x_term = rewired(b, c, a)
        if i_term is None:
            continue
        vec = DiagramVector(d.degree)
        vec.add_diagram(i_term, 1)
        if h_term is not None:
            vec.add_diagram(h_term, -1)
        if x_term is not None:
            vec.add_diagram(x_term, 1)
        if not vec.is_zero():
            yield vec


def derived_relation_check(
    k: int, kind: str, span: RowSpace | None = None, bound: int | None = None
) -> DerivedReport:
    """Check that every derived-relation instance lies in the relation span."""
    if kind not in DERIVED_KINDS:
        raise ValueError(f"unknown derived relation kind {kind!r}")
    if span is None:
        span = relation_span(k, bound)
    instances = 0
    in_span = 0
    if kind == "IHX":
        for d in oriented_representatives(k, bound):
            for vec in _ihx_triples(d):
                instances += 1
                if span.contains(vec):
                    in_span += 1
    else:
        for d in oriented_representatives(k, bound):
            flag, witness = has_yl_subgraph(d)
            if not flag or witness["pattern"] != kind:
                continue
            vec = DiagramVector(d.degree).add_diagram(d, 1)
            instances += 1
            if span.contains(vec):
                in_span += 1
    return DerivedReport(kind, k, instances, in_span)
