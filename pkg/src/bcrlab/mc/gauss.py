"""Gauss direction maps, unit sphere volumes, and oriented tangent frames."""

from __future__ import annotations

import math

import numpy as np


def gauss_direction(a, b):
    """Unit vector from a to b; rejects coincident points."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    diff = b - a
    norm = np.linalg.norm(diff, axis=-1, keepdims=True)
    if np.any(norm == 0):
        raise ValueError("coincident points have no direction")
    return diff / norm


def sphere_volume(p: int) -> float:
    """Riemannian volume of the unit p-sphere."""
    return 2 * math.pi ** ((p + 1) / 2) / math.gamma((p + 1) / 2)


def oriented_frames(u: np.ndarray) -> np.ndarray:
    """Tangent frames F(u) with det[u | F(u)] = +1 for unit vectors u.

    Input (B, m), output (B, m, m-1).  Frames are antipodally coherent:
    F(-u) = F(u) @ K with K flipping the sign of the last column, which makes
    edge-reversal identities exact at matrix level.
    """
    u = np.asarray(u, dtype=float)
    B, m = u.shape
    # lexicographic hemisphere sign: sign of the first significantly nonzero
    # component (exactly antisymmetric under u -> -u)
    significant = np.abs(u) > 1e-8
    first = np.argmax(significant, axis=1)
    lead = u[np.arange(B), first]
    s = np.where(lead >= 0, 1.0, -1.0)
    w = u * s[:, None]  # representative in the upper hemisphere

    # Householder mapping e1 -> w: H = I - 2 vv^T / (v^T v), v = w - e1;
    # columns 2..m of H are an orthonormal basis of w-perp
    v = w.copy()
    v[:, 0] -= 1.0
    vnorm2 = np.einsum("bi,bi->b", v, v)
    frames = np.broadcast_to(np.eye(m)[:, 1:], (B, m, m - 1)).copy()
    ok = vnorm2 > 1e-24
    coef = np.zeros_like(vnorm2)
    coef[ok] = 2.0 / vnorm2[ok]
    # H[:, 1:] = I[:, 1:] - coef * v (v^T I[:, 1:])
    frames -= coef[:, None, None] * v[:, :, None] * v[:, None, 1:]
    # H is a reflection, so det [w | cols] = -1; flip the last column
    # (w = e1 keeps the identity frame, already positively oriented)
    frames[ok, :, -1] *= -1.0
    # transport to the lower hemisphere: F(u) = F(-u) @ K for s = -1
    frames[s < 0, :, -1] *= -1.0
    return frames


def tangent_rows(u_raw: np.ndarray, jac: np.ndarray) -> np.ndarray:
    """Rows of the pulled-back unit-sphere form for one Gauss factor.

    u_raw: (B, m) un-normalized directions; jac: (B, m, D) their derivatives.
    Returns (B, m-1, D): the derivative of the normalized direction expressed
    in the oriented tangent frame at each sample.
    """
    norms = np.linalg.norm(u_raw, axis=1)
    u = u_raw / norms[:, None]
    # d(u) = (I - uu^T) jac / |raw|
    proj = jac - u[:, :, None] * np.einsum("bi,bid->bd", u, jac)[:, None, :]
    proj /= norms[:, None, None]
    frames = oriented_frames(u)
    return np.einsum("bif,bid->bfd", frames, proj)
