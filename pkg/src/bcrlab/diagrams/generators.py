"""Named diagram builders: wheels and the five degree-2 diagrams.

The degree-2 names follow the classical table for the degree-2 invariant:

  gamma1  one internal vertex fed by two bare sources, its outgoing theta
          edge landing on the eta edge's tail; weight +1, |Aut| = 1
  gamma2  triangle (theta, eta, eta) with a pendant chord into the trivalent
          vertex; weight -1, |Aut| = 1
  gamma3  the alternating wheel with two chords; weight +1, |Aut| = 2
  gamma4  the theta wheel: two internal vertices joined by a double strut,
          each with one external hair; weight +1, |Aut| = 2, integral 0
  gamma5  the short eta cycle with two chords hanging in; weight +1,
          |Aut| = 2, integral 0

gamma1's vertex orientation is pinned so that its weight is +1; flipping it
gives the conjugate with weight -1.
"""

from __future__ import annotations

from .model import ETA, THETA, JacobiDiagram, make_diagram


def wheel_diagram(k: int) -> JacobiDiagram:
    """Alternating wheel with k chords: d_i -> a_i chords, a_i -> d_{i+1} etas.

    Vertices are numbered d_1, a_1, d_2, a_2, ... = 1, 2, 3, 4, ...
    """
    if k < 2:
        raise ValueError("wheel degree must be at least 2")
    edges = []
    for i in range(k):
        d_i = 2 * i + 1
        a_i = 2 * i + 2
        d_next = (2 * i + 2) % (2 * k) + 1
        edges.append((d_i, a_i, THETA))
        edges.append((a_i, d_next, ETA))
    return make_diagram(2 * k, 0, edges)


def theta_wheel(k: int) -> JacobiDiagram:
    """Directed cycle of k internal vertices, each with one external hair.

    Orientations put the hair edge first at every internal vertex, the
    convention under which the cycle-conversion relation identifies this
    diagram with the eta cycle carrying the same spokes.
    """
    if k < 2:
        raise ValueError("theta wheel degree must be at least 2")
    edges = []
    orientation = {}
    for i in range(k):
        hair = i + 1                   # external
        v = k + i + 1                  # internal
        w = k + (i + 1) % k + 1        # next internal
        edges.append((hair, v, THETA))  # index 2*i
        edges.append((v, w, THETA))     # index 2*i + 1
    for i in range(k):
        v = k + i + 1
        hair_idx = 2 * i
        cycle_in_idx = 2 * ((i - 1) % k) + 1
        orientation[v] = (hair_idx, cycle_in_idx)
    return make_diagram(k, k, edges, orientation=orientation)


def eta_cycle_diagram(m: int) -> JacobiDiagram:
    """Pure eta m-cycle, each cycle vertex receiving one chord from a bare source."""
    if m < 2:
        raise ValueError("eta cycle length must be at least 2")
    edges = []
    for i in range(m):
        src = i + 1          # bare external source
        cyc = m + i + 1      # cycle vertex
        nxt = m + (i + 1) % m + 1
        edges.append((src, cyc, THETA))
        edges.append((cyc, nxt, ETA))
    return make_diagram(2 * m, 0, edges)


def gamma1() -> JacobiDiagram:
    # externals 1 (theta target), 2, 3 (bare-ish sources); internal 4
    edges = [
        (2, 4, THETA),
        (3, 4, THETA),
        (4, 1, THETA),
        (1, 2, ETA),
    ]
    # orientation pinned: the edge from the bare source (3 -> 4) is first
    return make_diagram(3, 1, edges, orientation={4: (1, 0)})


def gamma2() -> JacobiDiagram:
    # directed triangle 1 -theta-> 2 -eta-> 3 -eta-> 1, pendant chord 4 -> 3
    edges = [
        (1, 2, THETA),
        (2, 3, ETA),
        (3, 1, ETA),
        (4, 3, THETA),
    ]
    return make_diagram(4, 0, edges)


def gamma3() -> JacobiDiagram:
    return wheel_diagram(2)


def gamma4() -> JacobiDiagram:
    return theta_wheel(2)


def gamma5() -> JacobiDiagram:
    return eta_cycle_diagram(2)


def degree2_table() -> dict[str, JacobiDiagram]:
    return {
        "gamma1": gamma1(),
        "gamma2": gamma2(),
        "gamma3": gamma3(),
        "gamma4": gamma4(),
        "gamma5": gamma5(),
    }


def y_pattern_demo() -> JacobiDiagram:
    """Degree-3 diagram containing the Y pattern (weight must vanish)."""
    # externals: 1, 2 bare sources; 3 target of the internal's out-edge;
    # 4 -> 5 chord/eta tail continuing the cycle; internal 6
    edges = [
        (1, 6, THETA),
        (2, 6, THETA),
        (6, 3, THETA),
        (3, 4, ETA),
        (4, 5, THETA),
        (5, 3, ETA),
    ]
    return make_diagram(5, 1, edges)


def l_pattern_demo() -> JacobiDiagram:
    """Degree-3 diagram containing the L pattern: a bare source chords into a
    clean vertex that feeds an eta edge (weight must vanish)."""
    edges = [
        (1, 2, THETA),
        (2, 3, ETA),
        (3, 4, THETA),
        (4, 5, ETA),
        (5, 6, THETA),
        (6, 4, ETA),
    ]
    return make_diagram(6, 0, edges)
