"""Directed two-colored diagrams used as integrand labels.

A diagram has two vertex classes (external vertices parameterize points on
the knot, internal ones ambient points) and two edge kinds: theta edges,
which carry the codimension-two Gauss factor, and eta edges, which carry the
knot-domain Gauss factor.  The incidence rules are:

  internal vertex   exactly three theta endpoints: two ingoing, one outgoing,
                    and no eta edges;
  external vertex   exactly one theta endpoint, at most one ingoing eta edge,
                    and an outgoing eta edge exactly when its theta endpoint
                    is ingoing (the outgoing eta names the direction factor
                    attached to the theta edge ending there).

Parallel edge pairs between the same two vertices are allowed only when both
edges are theta (the double strut between internal vertices) or both are eta
(the short eta cycle); mixed theta/eta pairs are rejected.  These rules are
exactly the ones that make every degree-2 enumeration produce the five
classes used by the degree-2 invariant, and they force every vertex to have
out-degree one, so a connected diagram carries a unique directed cycle.
"""

from __future__ import annotations

from dataclasses import dataclass, field

THETA = "theta"
ETA = "eta"
EXTERNAL = "external"
INTERNAL = "internal"


@dataclass(frozen=True, order=True)
class Edge:
    src: int
    dst: int
    kind: str

    def reversed(self) -> "Edge":
        return Edge(self.dst, self.src, self.kind)


@dataclass(frozen=True)
class JacobiDiagram:
    """Immutable diagram; vertices are 1..n with externals numbered first."""

    n_external: int
    n_internal: int
    edges: tuple[Edge, ...]
    # vertex orientation: internal vertex id -> (index of first ingoing theta
    # edge, index of second ingoing theta edge) into `edges`
    orientation: tuple[tuple[int, tuple[int, int]], ...] = field(default=())

    # -- basic accessors ---------------------------------------------------

    @property
    def n_vertices(self) -> int:
        return self.n_external + self.n_internal

    @property
    def degree(self) -> int:
        return self.n_vertices // 2

    def vertex_ids(self):
        return range(1, self.n_vertices + 1)

    def is_external(self, v: int) -> bool:
        return 1 <= v <= self.n_external

    def is_internal(self, v: int) -> bool:
        return self.n_external < v <= self.n_vertices

    def vertex_class(self, v: int) -> str:
        return EXTERNAL if self.is_external(v) else INTERNAL

    def orientation_map(self) -> dict[int, tuple[int, int]]:
        return dict(self.orientation)

    def edges_at(self, v: int, kind: str | None = None, out: bool | None = None):
        found = []
        for i, e in enumerate(self.edges):
            if kind is not None and e.kind != kind:
                continue
            if e.src == v and out in (None, True):
                found.append(i)
            elif e.dst == v and out in (None, False):
                found.append(i)
        return found

    def theta_in(self, v: int) -> list[int]:
        return [i for i, e in enumerate(self.edges) if e.dst == v and e.kind == THETA]

    def theta_out(self, v: int) -> list[int]:
        return [i for i, e in enumerate(self.edges) if e.src == v and e.kind == THETA]

    def eta_in(self, v: int) -> list[int]:
        return [i for i, e in enumerate(self.edges) if e.dst == v and e.kind == ETA]

    def eta_out(self, v: int) -> list[int]:
        return [i for i, e in enumerate(self.edges) if e.src == v and e.kind == ETA]

    def eta_successor(self, v: int) -> int | None:
        """Target of the unique outgoing eta edge at v, if any."""
        out = self.eta_out(v)
        return self.edges[out[0]].dst if out else None

    def out_edge(self, v: int) -> int | None:
        """Index of the unique outgoing edge at v, in a valid diagram.

        Internals flow along their outgoing theta edge; an external vertex
        flows along its outgoing eta edge if it has one, else along its
        outgoing theta edge.  This makes a valid connected diagram a
        functional digraph with a single directed cycle.
        """
        if self.is_internal(v):
            out = self.theta_out(v)
            return out[0] if out else None
        eout = self.eta_out(v)
        if eout:
            return eout[0]
        tout = self.theta_out(v)
        return tout[0] if tout else None

    def chords(self) -> list[int]:
        """Theta edges joining two external vertices."""
        return [
            i
            for i, e in enumerate(self.edges)
            if e.kind == THETA and self.is_external(e.src) and self.is_external(e.dst)
        ]

    # -- validation --------------------------------------------------------

    def validate(self) -> list[str]:
        """Check the incidence table; returns a list of violations."""
        errors: list[str] = []
        if self.n_external < 0 or self.n_internal < 0:
            return ["negative vertex counts"]
        if self.n_vertices == 0:
            return ["empty diagram"]
        if self.n_vertices % 2 != 0:
            errors.append("odd vertex count (degree must be |V|/2)")
        for e in self.edges:
            for v in (e.src, e.dst):
                if not 1 <= v <= self.n_vertices:
                    errors.append(f"edge {e} references missing vertex {v}")
            if e.src == e.dst:
                errors.append(f"self-loop at vertex {e.src}")
            if e.kind not in (THETA, ETA):
                errors.append(f"unknown edge kind {e.kind!r}")
        if errors:
            return errors

        for v in self.vertex_ids():
            tin, tout = self.theta_in(v), self.theta_out(v)
            ein, eout = self.eta_in(v), self.eta_out(v)
            if self.is_internal(v):
                if ein or eout:
                    errors.append(f"internal vertex {v} carries an eta edge")
                if len(tin) != 2 or len(tout) != 1:
                    errors.append(
                        f"internal vertex {v} must have 2 ingoing and 1 outgoing "
                        f"theta edge (has {len(tin)} in, {len(tout)} out)"
                    )
            else:
                if len(tin) + len(tout) != 1:
                    errors.append(
                        f"external vertex {v} must have exactly one theta "
                        f"endpoint (has {len(tin) + len(tout)})"
                    )
                if len(ein) > 1:
                    errors.append(f"external vertex {v} has {len(ein)} ingoing eta edges")
                if len(eout) > 1:
                    errors.append(f"external vertex {v} has {len(eout)} outgoing eta edges")
                if len(tin) == 1 and len(eout) != 1:
                    errors.append(
                        f"external vertex {v} is a theta target but has no "
                        "outgoing eta edge (direction factor undefined)"
                    )
                if len(eout) == 1 and len(tin) != 1:
                    errors.append(
                        f"external vertex {v} has an outgoing eta edge but no "
                        "ingoing theta edge"
                    )

        # mixed parallel pairs
        by_pair: dict[frozenset[int], set[str]] = {}
        for e in self.edges:
            by_pair.setdefault(frozenset((e.src, e.dst)), set()).add(e.kind)
        for pair, kinds in by_pair.items():
            if len(kinds) == 2:
                a, b = sorted(pair)
                errors.append(f"mixed theta/eta pair between vertices {a} and {b}")

        # orientation data must name exactly the ingoing theta edges of each
        # internal vertex
        omap = self.orientation_map()
        for v in self.vertex_ids():
            if not self.is_internal(v):
                continue
            tin = self.theta_in(v)
            if v not in omap:
                errors.append(f"internal vertex {v} has no orientation data")
                continue
            pair = omap[v]
            if sorted(pair) != sorted(tin):
                errors.append(f"orientation of vertex {v} does not match its ingoing edges")
        for v, _ in self.orientation:
            if not self.is_internal(v):
                errors.append(f"orientation data given for non-internal vertex {v}")

        if not errors and not self.is_connected():
            errors.append("diagram is not connected")
        return errors

    def is_valid(self) -> bool:
        return not self.validate()

    def is_connected(self) -> bool:
        if self.n_vertices == 0:
            return False
        adj: dict[int, set[int]] = {v: set() for v in self.vertex_ids()}
        for e in self.edges:
            adj[e.src].add(e.dst)
            adj[e.dst].add(e.src)
        seen = {1}
        stack = [1]
        while stack:
            for w in adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.n_vertices

    # -- serialization -----------------------------------------------------

    def to_json_dict(self) -> dict:
        return {
            "vertices": [
                {"id": v, "class": self.vertex_class(v)} for v in self.vertex_ids()
            ],
            "edges": [{"src": e.src, "dst": e.dst, "kind": e.kind} for e in self.edges],
            "orientation": {str(v): list(pair) for v, pair in sorted(self.orientation)},
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "JacobiDiagram":
        vertices = data["vertices"]
        ids = [v["id"] for v in vertices]
        if sorted(ids) != list(range(1, len(ids) + 1)):
            raise ValueError("vertex ids must be 1..n")
        classes = {v["id"]: v["class"] for v in vertices}
        n_ext = sum(1 for c in classes.values() if c == EXTERNAL)
        for i in range(1, len(ids) + 1):
            expect = EXTERNAL if i <= n_ext else INTERNAL
            if classes[i] != expect:
                raise ValueError("external vertices must be numbered before internal ones")
        edges = tuple(Edge(e["src"], e["dst"], e["kind"]) for e in data["edges"])
        orientation = tuple(
            sorted((int(v), (int(p[0]), int(p[1]))) for v, p in data.get("orientation", {}).items())
        )
        return cls(n_ext, len(ids) - n_ext, edges, orientation)


def make_diagram(
    n_external: int,
    n_internal: int,
    edges,
    orientation: dict[int, tuple[int, int]] | None = None,
) -> JacobiDiagram:
    """Build a diagram from edge tuples, auto-orienting internals by edge order."""
    edge_objs = tuple(Edge(*e) if not isinstance(e, Edge) else e for e in edges)
    d = JacobiDiagram(n_external, n_internal, edge_objs)
    omap = dict(orientation or {})
    for v in range(n_external + 1, n_external + n_internal + 1):
        if v not in omap:
            tin = d.theta_in(v)
            if len(tin) == 2:
                omap[v] = (tin[0], tin[1])
    return JacobiDiagram(n_external, n_internal, edge_objs, tuple(sorted(omap.items())))


def flip_orientation(d: JacobiDiagram, v: int) -> JacobiDiagram:
    """Swap the two ingoing theta edges of internal vertex v in o_v."""
    omap = d.orientation_map()
    if v not in omap:
        raise ValueError(f"vertex {v} carries no orientation data")
    a, b = omap[v]
    omap[v] = (b, a)
    return JacobiDiagram(d.n_external, d.n_internal, d.edges, tuple(sorted(omap.items())))


def conjugate(d: JacobiDiagram) -> JacobiDiagram:
    """Reverse the global vertex orientation (flip at one internal vertex)."""
    if d.n_internal == 0:
        return d
    first_internal = d.n_external + 1
    return flip_orientation(d, first_internal)
