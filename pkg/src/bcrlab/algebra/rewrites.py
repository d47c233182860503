"""Local rewrite steps shared by the weight reduction and relation generation.

Each builder returns rewritten diagrams (or None where the incidence table
rejects the result).  Three rewrites exist:

  stu_resolutions(d, v)   resolve internal vertex v, whose outgoing theta
                          edge lands on an external vertex c, into the two
                          diagrams splitting c into consecutive eta
                          positions; returns (T, U) with T attaching the
                          orientation-first source upstream.
  merge(d, v, p_edge)     contract the theta edge from external source p
                          into internal v, replacing the pair by an eta edge
                          (the inverse of eta-edge contraction at a chord
                          endpoint); the sign convention pairs the
                          orientation rank of the collapsed edge.
  cycle_conversions(d)    exchange a pure eta cycle with spokes for the
                          theta cycle of internal vertices carrying the same
                          spokes (and back), tracking the orientation flips
                          against the spoke-first convention.
"""

from __future__ import annotations

from ..diagrams.model import ETA, THETA, Edge, JacobiDiagram
from ..diagrams.structure import cycle_structure, has_yl_subgraph


def rebuild(ext_labels, int_labels, edges, orientation_by_edges):
    """Normalize a labeled edge set into a JacobiDiagram, or None if invalid.

    `edges` is a list of (src_label, dst_label, kind); `orientation_by_edges`
    maps internal labels to a pair of such triples.
    """
    ext_sorted = sorted(ext_labels, key=repr)
    int_sorted = sorted(int_labels, key=repr)
    relabel = {lab: i + 1 for i, lab in enumerate(ext_sorted)}
    relabel.update({lab: len(ext_sorted) + i + 1 for i, lab in enumerate(int_sorted)})
    new_edges = tuple(Edge(relabel[s], relabel[t], k) for s, t, k in edges)
    index_of = {e: i for i, e in enumerate(edges)}
    orientation = []
    for lab, (e1, e2) in orientation_by_edges.items():
        if e1 not in index_of or e2 not in index_of:
            return None
        orientation.append((relabel[lab], (index_of[e1], index_of[e2])))
    d = JacobiDiagram(
        len(ext_sorted), len(int_sorted), new_edges, tuple(sorted(orientation))
    )
    return d if d.is_valid() else None


def labeled(d: JacobiDiagram):
    edges = [(e.src, e.dst, e.kind) for e in d.edges]
    orientation = {v: (edges[i1], edges[i2]) for v, (i1, i2) in d.orientation}
    ext = [v for v in d.vertex_ids() if d.is_external(v)]
    internal = [v for v in d.vertex_ids() if d.is_internal(v)]
    return ext, internal, edges, orientation


def stu_sites(d: JacobiDiagram):
    """Internal vertices whose outgoing theta edge targets an external vertex."""
    for v in d.vertex_ids():
        if d.is_internal(v) and d.is_external(d.edges[d.theta_out(v)[0]].dst):
            yield v


def stu_resolutions(d: JacobiDiagram, v: int):
    """(T, U) resolutions at an stu site; entries are None when invalid."""
    out_idx = d.theta_out(v)[0]
    c = d.edges[out_idx].dst
    o1_idx, o2_idx = dict(d.orientation)[v]
    src1 = d.edges[o1_idx].src
    src2 = d.edges[o2_idx].src
    succ = d.edges[d.eta_out(c)[0]]
    eta_in = d.eta_in(c)
    pred = d.edges[eta_in[0]] if eta_in else None
    ext, internal, edges, orientation = labeled(d)

    removed = {
        (v, c, THETA),
        (src1, v, THETA),
        (src2, v, THETA),
        (succ.src, succ.dst, succ.kind),
    }
    if pred is not None:
        removed.add((pred.src, pred.dst, pred.kind))

    def resolved(first_src, second_src):
        c1, c2 = ("split", 1), ("split", 2)
        new_edges = [e for e in edges if e not in removed]
        new_edges += [
            (first_src, c1, THETA),
            (second_src, c2, THETA),
            (c1, c2, ETA),
            (c2, succ.dst, ETA),
        ]
        if pred is not None:
            new_edges.append((pred.src, c1, ETA))
        new_orient = {w: pair for w, pair in orientation.items() if w != v}
        new_ext = [u for u in ext if u != c] + [c1, c2]
        new_int = [u for u in internal if u != v]
        return rebuild(new_ext, new_int, new_edges, new_orient)

    return resolved(src1, src2), resolved(src2, src1)


def merge_sites(d: JacobiDiagram):
    """(v, p_edge_index, rank) for every external theta edge into an internal."""
    omap = dict(d.orientation)
    for v in d.vertex_ids():
        if not d.is_internal(v):
            continue
        o1_idx, o2_idx = omap[v]
        for rank, idx in ((1, o1_idx), (2, o2_idx)):
            if d.is_external(d.edges[idx].src):
                yield v, idx, rank


def merge(d: JacobiDiagram, v: int, p_idx: int):
    """Contract the external-source theta edge (p, v); None when invalid."""
    o1_idx, o2_idx = dict(d.orientation)[v]
    other_idx = o2_idx if p_idx == o1_idx else o1_idx
    p = d.edges[p_idx].src
    b = d.edges[other_idx].src
    z = d.edges[d.theta_out(v)[0]].dst
    f_in = d.eta_in(p)
    f_edge = d.edges[f_in[0]] if f_in else None
    ext, internal, edges, orientation = labeled(d)

    removed = {(p, v, THETA), (b, v, THETA), (v, z, THETA)}
    if f_edge is not None:
        removed.add((f_edge.src, f_edge.dst, f_edge.kind))
    x, y = ("merge", 1), ("merge", 2)
    new_edges = [e for e in edges if e not in removed]
    new_edges += [(b, x, THETA), (x, y, ETA), (y, z, THETA)]
    if f_edge is not None:
        new_edges.append((f_edge.src, x, ETA))

    def remap(t):
        return (y, z, THETA) if t == (v, z, THETA) else t

    new_orient = {
        w: (remap(e1), remap(e2))
        for w, (e1, e2) in orientation.items()
        if w != v
    }
    new_ext = [u for u in ext if u != p] + [x, y]
    new_int = [u for u in internal if u != v]
    return rebuild(new_ext, new_int, new_edges, new_orient)


def unsplit(d: JacobiDiagram, eta_idx: int):
    """Merge the two chord-target ends of an eta edge into an internal vertex.

    Inverse of an stu resolution: the relation between the two attachment
    orders is only a two-term relation when this merged diagram is not
    admissible; otherwise the three-term stu relation holds instead.
    """
    e = d.edges[eta_idx]
    if e.kind != ETA:
        return None
    x, y = e.src, e.dst
    tx, ty = d.theta_in(x), d.theta_in(y)
    if not (tx and ty):
        return None
    a = d.edges[tx[0]].src
    b = d.edges[ty[0]].src
    r_in = [i for i in d.eta_in(x)]
    r_edge = d.edges[r_in[0]] if r_in else None
    s_edge = d.edges[d.eta_out(y)[0]]
    if s_edge.dst in (x, y) or (r_edge is not None and r_edge.src in (x, y)):
        return None  # merging would create a self-loop
    ext, internal, edges, orientation = labeled(d)
    removed = {
        (x, y, ETA),
        (a, x, THETA),
        (b, y, THETA),
        (s_edge.src, s_edge.dst, s_edge.kind),
    }
    if r_edge is not None:
        removed.add((r_edge.src, r_edge.dst, r_edge.kind))
    v, c = ("unsplit", 1), ("unsplit", 2)
    new_edges = [ee for ee in edges if ee not in removed]
    ea, eb, ec = (a, v, THETA), (b, v, THETA), (v, c, THETA)
    new_edges += [ea, eb, ec, (c, s_edge.dst, ETA)]
    if r_edge is not None:
        new_edges.append((r_edge.src, c, ETA))
    new_orient = dict(orientation)
    new_orient[v] = (ea, eb)
    new_ext = [u for u in ext if u not in (x, y)] + [c]
    new_int = list(internal) + [v]
    return rebuild(new_ext, new_int, new_edges, new_orient)


def attachment_swap(d: JacobiDiagram, eta_idx: int):
    """Swap the two chords attached at the ends of an eta edge; None if invalid."""
    e = d.edges[eta_idx]
    if e.kind != ETA:
        return None
    x, y = e.src, e.dst
    tx, ty = d.theta_in(x), d.theta_in(y)
    if not (tx and ty):
        return None
    a = d.edges[tx[0]].src
    b = d.edges[ty[0]].src
    ext, internal, edges, orientation = labeled(d)
    new_edges = [ee for ee in edges if ee not in ((a, x, THETA), (b, y, THETA))]
    new_edges += [(b, x, THETA), (a, y, THETA)]

    def remap(t):
        if t == (a, x, THETA):
            return (b, x, THETA)
        if t == (b, y, THETA):
            return (a, y, THETA)
        return t

    new_orient = {w: (remap(e1), remap(e2)) for w, (e1, e2) in orientation.items()}
    return rebuild(ext, internal, new_edges, new_orient)


def _pure_cycle(d: JacobiDiagram, kind: str):
    flag, _ = has_yl_subgraph(d)
    if flag:
        return None
    try:
        cs = cycle_structure(d)
    except Exception:
        return None
    if not cs.cycle_edges:
        return None
    if all(d.edges[i].kind == kind for i in cs.cycle_edges):
        return cs
    return None


def eta_to_theta_cycle(d: JacobiDiagram):
    """Convert a pure eta cycle into the internal theta cycle; (result, flips)."""
    cs = _pure_cycle(d, ETA)
    if cs is None:
        return None
    ext, internal, edges, orientation = labeled(d)
    verts = cs.cycle_vertices
    m = len(verts)
    spokes = []
    for x in verts:
        tin = d.theta_in(x)
        if not tin:
            return None
        spokes.append(d.edges[tin[0]].src)
    new_edges = [
        e
        for e in edges
        if not (e[2] == ETA and e[0] in verts)
        and not (e[2] == THETA and e[1] in verts)
    ]
    vlabels = [("conv", i) for i in range(m)]
    new_orient = dict(orientation)
    for i in range(m):
        spoke = (spokes[i], vlabels[i], THETA)
        cyc_in = (vlabels[(i - 1) % m], vlabels[i], THETA)
        new_edges += [spoke, (vlabels[i], vlabels[(i + 1) % m], THETA)]
        new_orient[vlabels[i]] = (spoke, cyc_in)
    new_ext = [u for u in ext if u not in verts]
    new_int = list(internal) + vlabels
    converted = rebuild(new_ext, new_int, new_edges, new_orient)
    if converted is None:
        return None
    return converted, 0


def theta_to_eta_cycle(d: JacobiDiagram):
    """Convert an internal theta cycle into the pure eta cycle; (result, flips)."""
    cs = _pure_cycle(d, THETA)
    if cs is None:
        return None
    verts = cs.cycle_vertices
    if not all(d.is_internal(v) for v in verts):
        return None
    m = len(verts)
    omap = dict(d.orientation)
    ext, internal, edges, orientation = labeled(d)
    spokes = []
    flips = 0
    for i, v in enumerate(verts):
        tin = d.theta_in(v)
        prev = verts[(i - 1) % m]
        spoke_idx = [j for j in tin if d.edges[j].src != prev]
        if len(spoke_idx) != 1:
            return None
        spokes.append(d.edges[spoke_idx[0]].src)
        if omap[v][0] != spoke_idx[0]:
            flips += 1
    xlabels = [("conv", i) for i in range(m)]
    new_edges = [e for e in edges if not (e[0] in verts or e[1] in verts)]
    for i in range(m):
        new_edges += [
            (spokes[i], xlabels[i], THETA),
            (xlabels[i], xlabels[(i + 1) % m], ETA),
        ]
    new_orient = {w: pair for w, pair in orientation.items() if w not in verts}
    new_ext = list(ext) + xlabels
    new_int = [u for u in internal if u not in verts]
    converted = rebuild(new_ext, new_int, new_edges, new_orient)
    if converted is None:
        return None
    return converted, flips
