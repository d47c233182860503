"""Cycle structure, forbidden-pattern detection, and symmetry bookkeeping."""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources

from .canonical import canonical_form, oriented_key
from .model import ETA, THETA, Edge, JacobiDiagram, flip_orientation


def _load_conventions() -> dict:
    with resources.files("bcrlab.diagrams").joinpath("conventions.json").open() as fh:
        return json.load(fh)


CONVENTIONS = _load_conventions()


class StructureError(ValueError):
    pass


@dataclass(frozen=True)
class CycleStructure:
    cycle_edges: tuple[int, ...]      # edge indices around the unique cycle
    cycle_vertices: tuple[int, ...]   # in traversal order
    on_cycle_chords: tuple[int, ...]  # type (i) chords, count k1
    off_cycle_chords: tuple[int, ...]  # type (ii) chords, count k2

    @property
    def k1(self) -> int:
        return len(self.on_cycle_chords)

    @property
    def k2(self) -> int:
        return len(self.off_cycle_chords)


# -- forbidden patterns ------------------------------------------------------


def _match_pattern(d: JacobiDiagram, pattern: dict):
    """First assignment of pattern vertices, or None."""
    names = list(pattern["vertices"])
    classes = pattern["vertices"]
    edges = [(a, b, k) for a, b, k in pattern["edges"]]
    no_other = set(pattern.get("no_other_in", []))

    def extend(assign: dict[str, int]) -> dict[str, int] | None:
        if len(assign) == len(names):
            # all pattern edges must exist
            used = set(assign.values())
            if len(used) != len(assign):
                return None
            for a, b, kind in edges:
                if Edge(assign[a], assign[b], kind) not in d.edges:
                    return None
            for name in no_other:
                v = assign[name]
                pattern_in = sum(1 for a, b, _ in edges if b == name)
                actual_in = sum(1 for e in d.edges if e.dst == v)
                if actual_in != pattern_in:
                    return None
            return assign
        name = names[len(assign)]
        want = classes[name]
        for v in d.vertex_ids():
            if v in assign.values():
                continue
            if want == "external" and not d.is_external(v):
                continue
            if want == "internal" and not d.is_internal(v):
                continue
            assign[name] = v
            result = extend(assign)
            if result is not None:
                return dict(result)
            del assign[name]
        return None

    return extend({})


def has_yl_subgraph(d: JacobiDiagram) -> tuple[bool, dict | None]:
    """Detect the two weight-killing patterns; returns (flag, witness)."""
    for pattern in CONVENTIONS["yl_patterns"]:
        hit = _match_pattern(d, pattern)
        if hit is not None:
            return True, {"pattern": pattern["name"], "vertices": hit}
    return False, None


# -- the unique cycle --------------------------------------------------------


def cycle_structure(d: JacobiDiagram) -> CycleStructure:
    """The unique directed cycle and the chord split it induces.

    Valid diagrams have out-degree one at every vertex, so following the
    out-edges from any start reaches a unique directed cycle; connectivity
    makes it the only one.
    """
    flag, witness = has_yl_subgraph(d)
    if flag:
        raise StructureError(f"diagram contains a {witness['pattern']} pattern")
    succ = {}
    for v in d.vertex_ids():
        out = d.out_edge(v)
        if out is None:
            raise StructureError(f"vertex {v} has no outgoing edge")
        succ[v] = out
    # walk until a repeat
    seen: dict[int, int] = {}
    v = 1
    order = 0
    while v not in seen:
        seen[v] = order
        order += 1
        v = d.edges[succ[v]].dst
    start = v
    cycle_vertices = [start]
    cycle_edges = [succ[start]]
    w = d.edges[succ[start]].dst
    while w != start:
        cycle_vertices.append(w)
        cycle_edges.append(succ[w])
        w = d.edges[succ[w]].dst
    cyc = set(cycle_edges)
    on, off = [], []
    for i in d.chords():
        (on if i in cyc else off).append(i)
    return CycleStructure(tuple(cycle_edges), tuple(cycle_vertices), tuple(on), tuple(off))


def reverse_cycle(d: JacobiDiagram) -> JacobiDiagram:
    """Reverse the orientation of every edge on the unique cycle."""
    cyc = set(cycle_structure(d).cycle_edges)
    new_edges = tuple(e.reversed() if i in cyc else e for i, e in enumerate(d.edges))
    # orientation pairs index edges positionally, and positions are unchanged
    return JacobiDiagram(d.n_external, d.n_internal, new_edges, d.orientation)


def reverse_vertex_orientation(d: JacobiDiagram, vertex: int | None = None):
    """Flip o_v at one internal vertex; no-op with notice when impossible."""
    internals = [v for v in d.vertex_ids() if d.is_internal(v) and len(d.theta_in(v)) == 2]
    if not internals:
        return d, "no internal vertex with two ingoing theta edges; diagram unchanged"
    v = vertex if vertex is not None else internals[0]
    if v not in internals:
        raise StructureError(f"vertex {v} is not an orientable internal vertex")
    return flip_orientation(d, v), None


# -- axial symmetry vanishing ------------------------------------------------


def symmetry_sign(d: JacobiDiagram, n_parity: str = "odd") -> str:
    """Decide whether the axial-symmetry argument forces a zero integral.

    For odd ambient-source dimension and odd degree, a diagram equal to its
    cycle-reversal (up to vertex orientation) admits a configuration-space
    involution; the involution's permutation sign on the orientation times
    its sign on the integrand is -1, which kills the integral.  Returns
    "forces_zero" or "no_conclusion".
    """
    if n_parity not in ("odd", "even"):
        raise ValueError("n_parity must be 'odd' or 'even'")
    if n_parity == "even":
        return "no_conclusion"
    if d.degree % 2 == 0:
        return "no_conclusion"
    flag, _ = has_yl_subgraph(d)
    if flag:
        return "no_conclusion"
    star = reverse_cycle(d)
    if star.validate():
        return "no_conclusion"
    if canonical_form(star).key != canonical_form(d).key:
        return "no_conclusion"
    # The two sign contributions for n odd: the involution reverses
    # 2*k1 + k2 edges (one sphere-factor sign flip each), and permutes the
    # cycle vertices by the reflection realizing the isomorphism.  The case
    # analysis (odd cycle: even transpositions, integrand flips; even cycle:
    # odd transpositions, integrand fixed) always yields a product of -1, so
    # existence of the symmetry is decisive.
    cs = cycle_structure(d)
    cycle_len = len(cs.cycle_edges)
    integrand_sign = -1 if cycle_len % 2 == 1 else 1
    orientation_sign = 1 if cycle_len % 2 == 1 else -1
    assert integrand_sign * orientation_sign == -1
    return "forces_zero"
