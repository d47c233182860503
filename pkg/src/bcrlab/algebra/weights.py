"""The weight functional on degree-k diagrams.

Values: 0 on diagrams containing a forbidden Y/L pattern; (-1)^{k2} on
diagrams without internal vertices, where k2 counts the chords off the
unique cycle; on diagrams with internal vertices, the value obtained by a
deterministic rewrite to internal-free diagrams: resolve an stu site when
one exists (invalid resolutions contribute zero), otherwise contract an
external-source theta edge at the orientation-determined sign.  The degree-2
table, annihilation of every relation vector, and the one-dimensional
quotient are the checks that pin this extension; they are exercised by the
test suite rather than assumed.
"""

from __future__ import annotations

from fractions import Fraction

from ..diagrams.canonical import canonical_form, diagram_from_key
from ..diagrams.model import JacobiDiagram, conjugate
from ..diagrams.structure import cycle_structure, has_yl_subgraph
from . import rewrites
from .vectors import DiagramVector

_MAX_REDUCTION_STEPS = 200_000


class ReductionError(RuntimeError):
    pass


_cache: dict[str, Fraction] = {}


def weight_w(d: JacobiDiagram) -> Fraction:
    errors = d.validate()
    if errors:
        raise ValueError("invalid diagram: " + "; ".join(errors))
    return _weight(d, [_MAX_REDUCTION_STEPS])


def _weight(d: JacobiDiagram, budget: list[int]) -> Fraction:
    if budget[0] <= 0:
        raise ReductionError("weight reduction did not terminate within bound")
    budget[0] -= 1

    key = canonical_form(d).oriented_key
    if key in _cache:
        return _cache[key]

    flag, _ = has_yl_subgraph(d)
    if flag:
        value = Fraction(0)
    elif d.n_internal == 0:
        value = Fraction((-1) ** cycle_structure(d).k2)
    else:
        value = _reduce_internal(d, budget)
    _cache[key] = value
    return value


def _reduce_internal(d: JacobiDiagram, budget: list[int]) -> Fraction:
    for v in rewrites.stu_sites(d):
        t_term, u_term = rewrites.stu_resolutions(d, v)
        total = Fraction(0)
        if t_term is not None:
            total += _weight(t_term, budget)
        if u_term is not None:
            total -= _weight(u_term, budget)
        return total
    for v, p_idx, rank in rewrites.merge_sites(d):
        merged = rewrites.merge(d, v, p_idx)
        if merged is None:
            continue
        sigma = 1 if rank == 1 else -1
        return sigma * _weight(merged, budget)
    raise ReductionError(
        "no reduction step applies; the rewrite conventions are inconsistent"
    )


def weight_antisymmetry_check(d: JacobiDiagram) -> bool:
    """Confirm w(conjugate) = -w for diagrams with internal vertices."""
    if d.n_internal == 0:
        return True
    return weight_w(conjugate(d)) == -weight_w(d)


def weight_of_key(key: str) -> Fraction:
    if key in _cache:
        return _cache[key]
    return weight_w(diagram_from_key(key))


def weight_of_vector(vec: DiagramVector) -> Fraction:
    return sum((c * weight_of_key(k) for k, c in vec.items()), Fraction(0))
