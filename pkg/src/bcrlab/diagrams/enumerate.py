"""Exhaustive enumeration of connected degree-k diagrams up to isomorphism.

Generation is organized by the number s of internal vertices.  Counting
theta endpoints against the incidence table fixes everything else: with
q = 2k - s external vertices there are exactly k external theta tails and
k - s external theta heads, and every eta edge leaves a theta-head vertex.
Enumeration therefore walks: (1) assignments of theta tails to capacity-
limited heads, deduplicated by canonical form; (2) eta targets for each
theta-head vertex; then validates, filters to connected diagrams, and
deduplicates canonically.
"""

from __future__ import annotations

import os

from .canonical import canonical_form, skeleton_key
from .model import ETA, THETA, Edge, JacobiDiagram, conjugate, make_diagram


class ResourceBoundError(RuntimeError):
    pass


DEFAULT_MAX_K = 4


def max_degree() -> int:
    return int(os.environ.get("BCRLAB_MAX_K", DEFAULT_MAX_K))


def _theta_structures(k: int, s: int):
    """Yield theta edge tuples for q = 2k - s externals and s internals.

    Externals 1..(k-s) are theta heads, (k-s+1)..q are theta tails; internals
    q+1..q+s each have one outgoing and two ingoing theta edges.
    """
    q = 2 * k - s
    n_in = k - s
    if n_in < 0:
        return
    heads = {v: 1 for v in range(1, n_in + 1)}
    heads.update({v: 2 for v in range(q + 1, q + s + 1)})
    tails = list(range(n_in + 1, q + 1)) + list(range(q + 1, q + s + 1))

    def fill(i: int, chosen: list[tuple[int, int]], capacity: dict[int, int]):
        if i == len(tails):
            yield tuple(chosen)
            return
        t = tails[i]
        for h, cap in capacity.items():
            if cap == 0 or h == t:
                continue
            capacity[h] -= 1
            chosen.append((t, h))
            yield from fill(i + 1, chosen, capacity)
            chosen.pop()
            capacity[h] += 1

    seen = set()
    for assignment in fill(0, [], dict(heads)):
        edges = tuple(Edge(t, h, THETA) for t, h in assignment)
        skeleton = JacobiDiagram(q, s, edges)
        key = skeleton_key(skeleton)
        if key in seen:
            continue
        seen.add(key)
        yield edges


def _eta_extensions(k: int, s: int, theta_edges: tuple[Edge, ...]):
    """Attach one outgoing eta edge to every external theta head."""
    q = 2 * k - s
    n_in = k - s
    theta_pairs = {frozenset((e.src, e.dst)) for e in theta_edges}
    sources = list(range(1, n_in + 1))

    def fill(i: int, chosen: list[Edge], eta_in_used: set[int]):
        if i == len(sources):
            yield tuple(chosen)
            return
        src = sources[i]
        for dst in range(1, q + 1):
            if dst == src or dst in eta_in_used:
                continue
            if frozenset((src, dst)) in theta_pairs:
                continue  # mixed parallel pair
            chosen.append(Edge(src, dst, ETA))
            eta_in_used.add(dst)
            yield from fill(i + 1, chosen, eta_in_used)
            eta_in_used.remove(dst)
            chosen.pop()

    yield from fill(0, [], set())


def enumerate_connected(k: int, bound: int | None = None) -> list[JacobiDiagram]:
    """One representative per isomorphism class (up to vertex orientation)."""
    if k < 2:
        raise ValueError("degree must be at least 2")
    limit = bound if bound is not None else max_degree()
    if k > limit:
        raise ResourceBoundError(
            f"degree {k} exceeds the configured bound {limit} "
            "(set BCRLAB_MAX_K to raise it)"
        )
    found: dict[str, JacobiDiagram] = {}
    for s in range(0, k + 1):
        q = 2 * k - s
        for theta_edges in _theta_structures(k, s):
            for eta_edges in _eta_extensions(k, s, theta_edges):
                d = make_diagram(q, s, theta_edges + eta_edges)
                if not d.is_valid():
                    continue
                key = canonical_form(d).key
                if key not in found:
                    found[key] = d
    return [found[key] for key in sorted(found)]


def oriented_representatives(k: int, bound: int | None = None) -> list[JacobiDiagram]:
    """One representative per isomorphism class with orientation distinguished."""
    reps = []
    for d in enumerate_connected(k, bound):
        reps.append(d)
        if d.n_internal and canonical_form(d).sign != 0:
            dbar = conjugate(d)
            if canonical_form(dbar).oriented_key != canonical_form(d).oriented_key:
                reps.append(dbar)
    return reps


def class_counts(k: int, bound: int | None = None) -> dict[str, int]:
    classes = enumerate_connected(k, bound)
    oriented = 0
    for d in classes:
        cf = canonical_form(d)
        oriented += 1 if (d.n_internal == 0 or cf.sign == 0) else 2
    return {"up_to_orientation": len(classes), "oriented": oriented}
