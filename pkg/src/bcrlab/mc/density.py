"""Integrand densities as determinants of stacked Gauss-map rows.

A factor is one pulled-back unit volume form: it supplies the un-normalized
direction vectors and their derivatives with respect to all domain
coordinates.  The density of the wedge of all factors against the domain's
coordinate volume is the determinant of the stacked tangent rows divided by
the product of unit-sphere volumes; row order follows the factor list.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..diagrams.model import JacobiDiagram
from .gauss import sphere_volume, tangent_rows


@dataclass
class Factor:
    """One Gauss factor: direction map into R^{m}, normalized onto S^{m-1}."""

    name: str
    target_dim: int  # m: directions live in R^m, the sphere is S^{m-1}

    def direction(self, coords: np.ndarray) -> np.ndarray:  # (B, m)
        raise NotImplementedError

    def jacobian(self, coords: np.ndarray) -> np.ndarray:  # (B, m, D)
        raise NotImplementedError


@dataclass
class ChordFactor(Factor):
    """u(psi(x_j) - psi(x_i)) for knot points packed n coordinates apart."""

    embedding: object = None
    src: int = 0
    dst: int = 0

    def _points(self, coords, idx):
        n = self.embedding.n
        return coords[:, idx * n : (idx + 1) * n]

    def direction(self, coords):
        return self.embedding.psi(self._points(coords, self.dst)) - self.embedding.psi(
            self._points(coords, self.src)
        )

    def jacobian(self, coords):
        B, D = coords.shape
        n, m = self.embedding.n, self.embedding.m
        out = np.zeros((B, m, D))
        dj = self.embedding.dpsi(self._points(coords, self.dst))
        di = self.embedding.dpsi(self._points(coords, self.src))
        out[:, :, self.dst * n : (self.dst + 1) * n] += dj
        out[:, :, self.src * n : (self.src + 1) * n] -= di
        return out


@dataclass
class AmbientChordFactor(Factor):
    """u(y - psi(x_i)): ambient point y occupies the last m coordinates."""

    embedding: object = None
    src: int = 0
    n_knot_points: int = 0

    def direction(self, coords):
        n, m = self.embedding.n, self.embedding.m
        y = coords[:, self.n_knot_points * n : self.n_knot_points * n + m]
        x = coords[:, self.src * n : (self.src + 1) * n]
        return y - self.embedding.psi(x)

    def jacobian(self, coords):
        B, D = coords.shape
        n, m = self.embedding.n, self.embedding.m
        out = np.zeros((B, m, D))
        base = self.n_knot_points * n
        out[:, np.arange(m), base + np.arange(m)] = 1.0
        out[:, :, self.src * n : (self.src + 1) * n] -= self.embedding.dpsi(
            coords[:, self.src * n : (self.src + 1) * n]
        )
        return out


@dataclass
class DomainEtaFactor(Factor):
    """u'(x_j - x_i) between knot parameters in R^n."""

    n: int = 3
    src: int = 0
    dst: int = 0

    def direction(self, coords):
        n = self.n
        return (
            coords[:, self.dst * n : (self.dst + 1) * n]
            - coords[:, self.src * n : (self.src + 1) * n]
        )

    def jacobian(self, coords):
        B, D = coords.shape
        n = self.n
        out = np.zeros((B, n, D))
        idx = np.arange(n)
        out[:, idx, self.dst * n + idx] = 1.0
        out[:, idx, self.src * n + idx] -= 1.0
        return out


@dataclass
class AnchorEtaFactor(Factor):
    """u'(anchor - x_i) toward a fixed point of R^n."""

    anchor: np.ndarray = None
    src: int = 0

    def direction(self, coords):
        n = len(self.anchor)
        return self.anchor[None, :] - coords[:, self.src * n : (self.src + 1) * n]

    def jacobian(self, coords):
        B, D = coords.shape
        n = len(self.anchor)
        out = np.zeros((B, n, D))
        idx = np.arange(n)
        out[:, idx, self.src * n + idx] = -1.0
        return out


def density(factors, coords: np.ndarray, cutoff: float = 0.0):
    """Density values and the mask of samples surviving the cutoff."""
    B, D = coords.shape
    rows = []
    total = 0
    keep = np.ones(B, dtype=bool)
    for f in factors:
        v = f.direction(coords)
        norms = np.linalg.norm(v, axis=1)
        keep &= norms > cutoff
        total += f.target_dim - 1
    if total != D:
        raise ValueError(
            f"form degree {total} does not match configuration dimension {D}"
        )
    safe = np.where(keep)[0]
    values = np.zeros(B)
    if len(safe) == 0:
        return values, keep
    sub = coords[safe]
    rows = []
    volume = 1.0
    for f in factors:
        v = f.direction(sub)
        j = f.jacobian(sub)
        rows.append(tangent_rows(v, j))
        volume *= sphere_volume(f.target_dim - 1)
    stacked = np.concatenate(rows, axis=1)
    values[safe] = np.linalg.det(stacked) / volume
    return values, keep


def diagram_factors(d: JacobiDiagram, embedding) -> list[Factor]:
    """Gauss factors of a chord diagram: one theta and one eta per chord.

    The eta factor attached to a chord is the direction from the chord's
    target to that vertex's eta successor.  Degenerate pairs (two chords
    whose eta factors are mutual reversals) are detected by the caller.
    """
    errors = d.validate()
    if errors:
        raise ValueError("invalid diagram: " + "; ".join(errors))
    if d.n_internal:
        raise ValueError("only diagrams without internal vertices are integrable here")
    n, m = embedding.n, embedding.m
    theta = []
    eta = []
    for i in d.chords():
        e = d.edges[i]
        succ = d.eta_successor(e.dst)
        theta.append(
            ChordFactor(
                f"theta({e.src}->{e.dst})", m, embedding, e.src - 1, e.dst - 1
            )
        )
        eta.append(
            DomainEtaFactor(f"eta({e.dst}->{succ})", n, n, e.dst - 1, succ - 1)
        )
    return theta + eta


def has_degenerate_gauss_pair(d: JacobiDiagram) -> bool:
    """Two eta factors that are mutual reversals force a zero integrand."""
    pairs = set()
    for i in d.chords():
        e = d.edges[i]
        succ = d.eta_successor(e.dst)
        if (succ, e.dst) in pairs:
            return True
        pairs.add((e.dst, succ))
    return False


def form_density(d: JacobiDiagram, embedding, coords, cutoff: float = 0.0):
    """Pointwise integrand density of a chord diagram over an embedding.

    coords: (B, q*n) knot parameters in vertex order.  Returns (values, mask)
    where mask flags samples surviving the pairwise cutoff.  Diagrams with a
    structurally degenerate Gauss pair return exact zeros.
    """
    coords = np.atleast_2d(np.asarray(coords, dtype=float))
    if has_degenerate_gauss_pair(d):
        B = coords.shape[0]
        return np.zeros(B), np.ones(B, dtype=bool)
    factors = diagram_factors(d, embedding)
    return density(factors, coords, cutoff)
