"""Gauss linking integrals between closed parameterized pieces."""

from __future__ import annotations

import numpy as np

from .config import Estimate, MCConfig, combine_batches
from .density import Factor, density
from .embeddings import SpherePiece
from .gauss import sphere_volume
from .samplers import batch_generators


class PieceDirectionFactor(Factor):
    """Direction from a point of piece A to a point of piece B, in R^m."""

    def __init__(self, piece_a: SpherePiece, piece_b: SpherePiece):
        if piece_a.m != piece_b.m:
            raise ValueError("pieces live in different ambient spaces")
        super().__init__("u(B-A)", piece_a.m)
        self.a = piece_a
        self.b = piece_b

    def _split(self, t):
        return t[:, : self.a.p], t[:, self.a.p :]

    def direction(self, t):
        ta, tb = self._split(t)
        return self.b.map_param(tb) - self.a.map_param(ta)

    def jacobian(self, t):
        ta, tb = self._split(t)
        B = t.shape[0]
        out = np.zeros((B, self.a.m, self.a.p + self.b.p))
        out[:, :, : self.a.p] = -self.a.map_jacobian_ambient(ta)
        out[:, :, self.a.p :] = self.b.map_jacobian_ambient(tb)
        return out


def linking_estimate(
    piece_a: SpherePiece, piece_b: SpherePiece, cfg: MCConfig
) -> Estimate:
    """Monte Carlo Gauss linking integral of two disjoint closed pieces."""
    m = piece_a.m
    if piece_a.p + piece_b.p != m - 1:
        raise ValueError(
            f"dimension mismatch: S^{piece_a.p} x S^{piece_b.p} cannot pair "
            f"with the S^{m-1} form"
        )
    factor = PieceDirectionFactor(piece_a, piece_b)
    orientation = piece_a.orientation * piece_b.orientation

    # overlap guard: probe the minimum gap on a deterministic coarse grid
    probe = np.random.Generator(np.random.PCG64(0)).random((4096, piece_a.p + piece_b.p))
    gap = np.min(np.linalg.norm(factor.direction(probe), axis=1))
    if gap < 10 * cfg.cutoff:
        raise ValueError(f"pieces overlap or nearly touch (gap {gap:.3e})")

    gens = batch_generators(cfg.seed, cfg.batches)
    per_batch = cfg.samples // cfg.batches
    batch_means = []
    n_eff = 0
    for rng in gens:
        t = rng.random((per_batch, piece_a.p + piece_b.p))
        values, keep = density([factor], t, cfg.cutoff)
        n_eff += int(keep.sum())
        batch_means.append(float(np.mean(values) * orientation))
    return combine_batches(
        batch_means,
        n_eff,
        per_batch * cfg.batches,
        {
            "mode": "linking",
            "piece_a": f"S^{piece_a.p}",
            "piece_b": f"S^{piece_b.p}",
            "ambient": m,
            **cfg.to_json_dict(),
        },
    )


def hopf_pair(m: int = 5, separation: float = 1.0, radius: float = 1.0):
    """A unit-linked pair: a circle through a sphere's spanning ball.

    In R^5 this is S^1 x S^3; the circle crosses the sphere's hyperplane
    once inside and once outside the ball.
    """
    from .embeddings import circle_piece, sphere_piece

    if m < 3:
        raise ValueError("ambient dimension must be at least 3")
    p_b = m - 2
    # the circle's orientation is chosen so the pair links positively
    circle = circle_piece(m, np.zeros(m), separation, 0, 1, orientation=-1)
    center = np.zeros(m)
    center[1] = separation
    ball_axes = list(range(1, m))
    sphere = sphere_piece(p_b, m, center, radius, ball_axes)
    return circle, sphere


def separated_pair(m: int = 5, distance: float = 10.0):
    circle, sphere = hopf_pair(m)
    sphere.center[1] += distance
    return circle, sphere
