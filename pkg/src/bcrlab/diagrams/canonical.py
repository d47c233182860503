"""Canonical labeling, isomorphism testing and automorphism counting.

Diagrams are small (at most 12 vertices at the supported degrees), so the
canonical form is computed by refinement into invariant cells followed by an
exhaustive search over cell-respecting relabelings, taking the
lexicographically smallest encoding.  Two keys are exposed:

  oriented_key  distinguishes the two global vertex-orientation states of a
                diagram with internal vertices;
  key           identifies diagrams up to vertex orientation (the unit used
                when listing "all degree-k diagrams").

`canonical_form` additionally reports the sign relating the input's
orientation to the canonical oriented representative, which is what the
linear algebra uses to identify a diagram with +/- a basis element.
Vertex orientations at individual vertices are defined modulo an even
number of swaps, so per-relabel minimization runs over flip parities, not
over individual flips.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .model import ETA, THETA, Edge, JacobiDiagram


@dataclass(frozen=True)
class CanonicalForm:
    key: str           # canonical up to vertex orientation
    oriented_key: str  # canonical among relabelings, orientation kept
    sign: int          # +1/-1: flip parity reaching the canonical oriented
    # representative; 0 when both parities reach it (self-conjugate diagram)

    def __str__(self) -> str:
        return self.key


def _invariant(d: JacobiDiagram, v: int) -> tuple:
    return (
        0 if d.is_external(v) else 1,
        len(d.theta_in(v)),
        len(d.theta_out(v)),
        len(d.eta_in(v)),
        len(d.eta_out(v)),
    )


def _refine_cells(d: JacobiDiagram) -> list[list[int]]:
    """Partition vertices into cells of an iterated neighborhood invariant.

    Cell order is intrinsic (derived from sorted invariant values only), so
    isomorphic diagrams refine into matching cell sequences.
    """
    color = {v: (_invariant(d, v),) for v in d.vertex_ids()}
    ncolors = len(set(color.values()))
    for _ in range(d.n_vertices):
        new_color = {}
        for v in d.vertex_ids():
            around = sorted(
                (e.kind, e.src == v, color[e.dst if e.src == v else e.src])
                for e in d.edges
                if v in (e.src, e.dst)
            )
            new_color[v] = (color[v], tuple(around))
        ranks = {c: (i,) for i, c in enumerate(sorted(set(new_color.values())))}
        color = {v: ranks[new_color[v]] for v in d.vertex_ids()}
        if len(set(color.values())) == ncolors:
            break
        ncolors = len(set(color.values()))
    cells: dict[tuple, list[int]] = {}
    for v in d.vertex_ids():
        cells.setdefault(color[v], []).append(v)
    return [sorted(cells[c]) for c in sorted(cells)]


def _cell_relabelings(d: JacobiDiagram, cells: list[list[int]]):
    """All relabelings assigning consecutive labels cell by cell.

    External cells draw labels 1..n_external in cell order, internal cells
    the remaining labels.  Yields dicts old-id -> new-id.
    """
    ext_next = 1
    int_next = d.n_external + 1
    blocks = []
    for cell in cells:
        size = len(cell)
        if d.is_external(cell[0]):
            labels = list(range(ext_next, ext_next + size))
            ext_next += size
        else:
            labels = list(range(int_next, int_next + size))
            int_next += size
        blocks.append((cell, labels))

    def rec(i: int, acc: dict[int, int]):
        if i == len(blocks):
            yield acc
            return
        cell, labels = blocks[i]
        for perm in itertools.permutations(cell):
            for v, lab in zip(perm, labels):
                acc[v] = lab
            yield from rec(i + 1, acc)
    yield from rec(0, {})


def _encoded(d: JacobiDiagram, relabel: dict[int, int], skip_orientation=False):
    """Encoding under a relabeling; returns (edge_part, even_obits, odd_obits).

    The orientation part is minimized over flip assignments of each parity
    class: per vertex the two ingoing theta edges give an aligned (sorted)
    and a swapped pair; the lexicographically best correction for the other
    parity deviates at the last orientable vertex only.
    """
    edges = sorted((e.kind, relabel[e.src], relabel[e.dst]) for e in d.edges)
    if skip_orientation or not d.orientation:
        return tuple(edges), (), ()
    index_of = {t: i for i, t in enumerate(edges)}

    per_vertex = []  # (new_id, aligned_pair, swapped_pair, flip_from_original)
    for v, (i1, i2) in d.orientation:
        e1, e2 = d.edges[i1], d.edges[i2]
        t1 = index_of[(e1.kind, relabel[e1.src], relabel[e1.dst])]
        t2 = index_of[(e2.kind, relabel[e2.src], relabel[e2.dst])]
        aligned = (min(t1, t2), max(t1, t2))
        swapped = (aligned[1], aligned[0])
        per_vertex.append((relabel[v], aligned, swapped, 1 if t1 > t2 else 0))
    per_vertex.sort()
    p0 = sum(f for _, _, _, f in per_vertex) % 2

    aligned_bits = tuple((vid, pair) for vid, pair, _, _ in per_vertex)
    deviated = list(aligned_bits)
    vid, _, swapped, _ = per_vertex[-1]
    deviated[-1] = (vid, swapped)
    deviated_bits = tuple(deviated)

    if p0 == 0:
        return tuple(edges), aligned_bits, deviated_bits
    return tuple(edges), deviated_bits, aligned_bits


def _search(d: JacobiDiagram):
    """(best up to orientation, best even-parity, best odd-parity)."""
    cells = _refine_cells(d)
    best_even = None
    best_odd = None
    for relabel in _cell_relabelings(d, cells):
        edge_part, even_bits, odd_bits = _encoded(d, relabel)
        cand_even = (edge_part, even_bits)
        if best_even is None or cand_even < best_even:
            best_even = cand_even
        if d.orientation:
            cand_odd = (edge_part, odd_bits)
            if best_odd is None or cand_odd < best_odd:
                best_odd = cand_odd
    return best_even, best_odd


def _render(d: JacobiDiagram, enc) -> str:
    edge_part, obits = enc
    parts = [f"{d.n_external}.{d.n_internal}"]
    parts.append(";".join(f"{k[0]}{s}>{t}" for k, s, t in edge_part))
    parts.append("|".join(f"{vid}:{a},{b}" for vid, (a, b) in obits))
    return "#".join(parts)


def canonical_form(d: JacobiDiagram) -> CanonicalForm:
    best_even, best_odd = _search(d)
    even_key = _render(d, best_even)
    if best_odd is None:
        return CanonicalForm(even_key, even_key, 1)
    odd_key = _render(d, best_odd)
    key = min(even_key, odd_key)
    if even_key == odd_key:
        sign = 0
    elif key == even_key:
        sign = 1
    else:
        sign = -1
    return CanonicalForm(key, even_key, sign)


def oriented_key(d: JacobiDiagram) -> str:
    return canonical_form(d).oriented_key


def skeleton_key(d: JacobiDiagram) -> str:
    """Cheap canonical key ignoring vertex orientation data entirely."""
    cells = _refine_cells(d)
    best = None
    for relabel in _cell_relabelings(d, cells):
        edge_part, _, _ = _encoded(d, relabel, skip_orientation=True)
        if best is None or edge_part < best:
            best = edge_part
    return _render(d, (best, ()))


def isomorphic(a: JacobiDiagram, b: JacobiDiagram, up_to_orientation: bool = True) -> bool:
    if up_to_orientation:
        return canonical_form(a).key == canonical_form(b).key
    return canonical_form(a).oriented_key == canonical_form(b).oriented_key


def automorphism_count(d: JacobiDiagram, oriented_edges: bool = True) -> int:
    """|Aut| with edge directions preserved, or |Aut'| ignoring them.

    Automorphisms preserve vertex class and edge kind; vertex orientation
    data is not required to be preserved (the convention matching the
    degree-2 coefficient table).
    """
    if oriented_edges:
        ref = sorted((e.kind, e.src, e.dst) for e in d.edges)

        def image(relabel):
            return sorted((e.kind, relabel[e.src], relabel[e.dst]) for e in d.edges)

        def inv_fn(v):
            return _invariant(d, v)

    else:
        ref = sorted((e.kind, min(e.src, e.dst), max(e.src, e.dst)) for e in d.edges)

        def image(relabel):
            return sorted(
                (e.kind, min(relabel[e.src], relabel[e.dst]), max(relabel[e.src], relabel[e.dst]))
                for e in d.edges
            )

        def inv_fn(v):
            return (
                0 if d.is_external(v) else 1,
                len(d.theta_in(v)) + len(d.theta_out(v)),
                len(d.eta_in(v)) + len(d.eta_out(v)),
            )

    merged: dict[tuple, list[int]] = {}
    for v in d.vertex_ids():
        merged.setdefault(inv_fn(v), []).append(v)
    groups = [sorted(vs) for _, vs in sorted(merged.items())]

    def group_perms(i: int, acc: dict[int, int]):
        if i == len(groups):
            yield acc
            return
        for perm in itertools.permutations(groups[i]):
            for v, w in zip(groups[i], perm):
                acc[v] = w
            yield from group_perms(i + 1, acc)

    count = 0
    for relabel in group_perms(0, {}):
        if image(relabel) == ref:
            count += 1
    assert count >= 1
    return count


def diagram_from_key(key: str) -> JacobiDiagram:
    """Rebuild the canonical representative encoded in a key."""
    head, edge_part, obits = key.split("#")
    n_ext, n_int = (int(x) for x in head.split("."))
    edges = []
    if edge_part:
        for tok in edge_part.split(";"):
            kind = THETA if tok[0] == "t" else ETA
            s, t = tok[1:].split(">")
            edges.append(Edge(int(s), int(t), kind))
    orientation = []
    if obits:
        for tok in obits.split("|"):
            v, pair = tok.split(":")
            i1, i2 = pair.split(",")
            orientation.append((int(v), (int(i1), int(i2))))
    return JacobiDiagram(n_ext, n_int, tuple(edges), tuple(orientation))
