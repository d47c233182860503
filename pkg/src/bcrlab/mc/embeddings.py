"""Built-in embeddings: the standard plane, closed sphere pieces, and the
clasp-tentacle family realizing the wheel presentation's crossings.

The tentacle map takes an annular region of the knot plane and sweeps it as
a thin sphere-tube out of the plane, over to a distant plate region, through
the plate's gap (clasped) or above it (unclasped), and back.  All scales are
driven by the crossing parameter eps: annulus radii eps/2..2eps/3, plate
radius eps^2, tube radius eps^2/4, dip and height eps^2/8.  Only the linking
pattern matters to the target integrals, so the profiles are free smooth
choices; the lateral bulge keeps the two tentacles of the degree-2 wheel
disjoint.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np


class Embedding:
    n: int
    m: int

    def psi(self, x: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    def dpsi(self, x: np.ndarray) -> np.ndarray:
        raise NotImplementedError


@dataclass
class StandardPlane(Embedding):
    n: int = 3
    m: int = 5

    def psi(self, x):
        x = np.atleast_2d(x)
        out = np.zeros((x.shape[0], self.m))
        out[:, : self.n] = x
        return out

    def dpsi(self, x):
        x = np.atleast_2d(x)
        out = np.zeros((x.shape[0], self.m, self.n))
        out[:, : self.n, :] = np.eye(self.n)
        return out


def _smoothstep(t):
    t = np.clip(t, 0.0, 1.0)
    return t * t * t * (t * (6 * t - 15) + 10)


def _smoothstep_d(t):
    inside = (t > 0) & (t < 1)
    t = np.clip(t, 0.0, 1.0)
    return np.where(inside, 30 * t * t * (t - 1) * (t - 1), 0.0)


def _bump(s):
    """Smooth bump: 1 at 0, support |s| < 1/2."""
    out = np.zeros_like(s)
    inside = np.abs(s) < 0.5
    si = s[inside]
    out[inside] = np.exp(1.0 - 1.0 / (1.0 - 4.0 * si * si))
    return out


def _bump_d(s):
    out = np.zeros_like(s)
    inside = np.abs(s) < 0.5
    si = s[inside]
    q = 1.0 - 4.0 * si * si
    out[inside] = np.exp(1.0 - 1.0 / q) * (-8.0 * si / (q * q))
    return out


@dataclass
class Tentacle:
    """One crossing's tube: an annulus of the plane swept through a plate."""

    center: np.ndarray      # annulus center c in R^n (on the plane)
    plate: np.ndarray       # plate center p in R^n
    r1: float
    r2: float
    tube_radius: float      # delta
    dip: float              # amplitude of the x4 channel
    height: float           # amplitude of the x5 channel (sign = handedness)
    bulge: float            # lateral separation along e2, signed
    dodge: float = 0.0      # mid-flight lift along e3, keeps tubes off the
    # other crossings' plates during the traverse
    clasped: bool = True

    def region(self, x):
        rho = np.linalg.norm(x - self.center[None, :], axis=1)
        return (rho > self.r1) & (rho < self.r2)

    def _profiles(self, s):
        """Envelopes for the flight plan of the tube.

        The tube climbs to full altitude within a thin zone at each rim
        (alpha), travels spatially only at full altitude (beta's support is
        inside alpha's plateau), and, when clasped, the (x4, x5) channel
        sweeps one full turn around the origin (winding the tube once around
        the plate sheet); unclasped it stays on the positive x4 ray.
        Keeping the spatial traverse at full altitude bounds every
        distant-sheet approach by the channel amplitude.
        """
        s2 = s * s
        # altitude envelope: 1 for |s| <= 0.95, drops to 0 at the rims
        ta = np.clip((1.0 - s2) / 0.0975, 0.0, 1.0)
        alpha = _smoothstep(ta)
        dalpha = _smoothstep_d(ta) * (-2.0 * s / 0.0975) * ((1.0 - s2) < 0.0975)
        # spatial envelope: 0 for |s| >= 0.95, 1 for |s| <= 0.15
        tb = np.clip((0.9025 - s2) / 0.88, 0.0, 1.0)
        beta = _smoothstep(tb)
        dbeta = (
            _smoothstep_d(tb)
            * (-2.0 * s / 0.88)
            * ((s2 > 0.0225) & (s2 < 0.9025))
        )
        if self.clasped:
            tt = np.clip((s + 0.9) / 1.8, 0.0, 1.0)
            turn = _smoothstep(tt)
            dturn = _smoothstep_d(tt) / 1.8 * ((s > -0.9) & (s < 0.9))
            theta = 2.0 * np.pi * turn
            c4 = np.cos(theta)
            c5 = -np.sin(theta)
            dc4 = -np.sin(theta) * 2.0 * np.pi * dturn
            dc5 = -np.cos(theta) * 2.0 * np.pi * dturn
        else:
            c4 = np.ones_like(s)
            c5 = np.zeros_like(s)
            dc4 = np.zeros_like(s)
            dc5 = np.zeros_like(s)
        lat = np.sin(np.pi * s) ** 2
        dlat = 2.0 * np.pi * np.sin(np.pi * s) * np.cos(np.pi * s)
        return alpha, dalpha, beta, dbeta, c4, dc4, c5, dc5, lat, dlat

    def map_points(self, x):
        """(B, n+2) images of annulus points; caller must mask by region."""
        n = len(self.center)
        diff = x - self.center[None, :]
        rho = np.linalg.norm(diff, axis=1)
        v = diff / rho[:, None]
        s = (2.0 * rho - self.r1 - self.r2) / (self.r2 - self.r1)
        alpha, _, beta, _, c4, _, c5, _, lat, _ = self._profiles(s)
        flat = self.center[None, :] + rho[:, None] * v
        core = self.plate[None, :] + self.tube_radius * v
        spatial = (1 - beta)[:, None] * flat + beta[:, None] * core
        spatial[:, 1] += self.bulge * beta * lat
        out = np.zeros((x.shape[0], n + 2))
        out[:, :n] = spatial
        out[:, n] = self.dip * alpha * c4
        out[:, n + 1] = self.height * alpha * c5
        return out

    def map_jacobian(self, x):
        n = len(self.center)
        B = x.shape[0]
        diff = x - self.center[None, :]
        rho = np.linalg.norm(diff, axis=1)
        v = diff / rho[:, None]
        drho = v                                         # (B, n)
        dv = (np.eye(n)[None] - v[:, :, None] * v[:, None, :]) / rho[:, None, None]
        s = (2.0 * rho - self.r1 - self.r2) / (self.r2 - self.r1)
        ds = (2.0 / (self.r2 - self.r1)) * drho           # (B, n)
        alpha, dalpha_ds, beta, dbeta_ds, c4, dc4_ds, c5, dc5_ds, lat, dlat_ds = self._profiles(s)
        dbeta = dbeta_ds[:, None] * ds                    # (B, n)
        dalpha = dalpha_ds[:, None] * ds
        flat = self.center[None, :] + rho[:, None] * v
        core = self.plate[None, :] + self.tube_radius * v
        dflat = v[:, :, None] * drho[:, None, :] + rho[:, None, None] * dv
        dcore = self.tube_radius * dv
        dspatial = (
            (1 - beta)[:, None, None] * dflat
            + beta[:, None, None] * dcore
            + (core - flat)[:, :, None] * dbeta[:, None, :]
        )
        dlat_full = self.bulge * (dbeta * lat[:, None] + beta[:, None] * dlat_ds[:, None] * ds)
        dspatial[:, 1, :] += dlat_full
        out = np.zeros((B, n + 2, n))
        out[:, :n, :] = dspatial
        out[:, n, :] = self.dip * (dalpha * c4[:, None] + alpha[:, None] * dc4_ds[:, None] * ds)
        out[:, n + 1, :] = self.height * (dalpha * c5[:, None] + alpha[:, None] * dc5_ds[:, None] * ds)
        return out


@dataclass
class PlateBump:
    """Radial bump lifting a plate region out of the plane (x4 channel)."""

    center: np.ndarray
    radius: float
    height: float

    def region(self, x):
        return np.linalg.norm(x - self.center[None, :], axis=1) < self.radius

    def profile(self, x):
        rho = np.linalg.norm(x - self.center[None, :], axis=1)
        u = np.clip(rho / self.radius, 0.0, 1.0)
        return self.height * _smoothstep(1.0 - u * u)

    def profile_grad(self, x):
        diff = x - self.center[None, :]
        rho = np.linalg.norm(diff, axis=1)
        u = rho / self.radius
        inside = u < 1.0
        grad = np.zeros_like(diff)
        safe = inside & (rho > 0)
        du = _smoothstep_d(1.0 - u[safe] ** 2) * (-2.0 * u[safe] / self.radius)
        grad[safe] = self.height * du[:, None] * diff[safe] / rho[safe, None]
        return grad


@dataclass
class TentacleEmbedding(Embedding):
    """Flat plane outside the tentacle annuli, tube maps inside them.

    Optional plate bumps lift plate regions into the x4 channel, which is
    how the closed-up comparison terms of the clasp integral are realized.
    """

    n: int = 3
    tentacles: tuple = ()
    plates: tuple = ()

    def __post_init__(self):
        self.m = self.n + 2

    def psi(self, x):
        x = np.atleast_2d(np.asarray(x, dtype=float))
        out = np.zeros((x.shape[0], self.m))
        out[:, : self.n] = x
        for plate in self.plates:
            mask = plate.region(x)
            if np.any(mask):
                out[mask, self.n] = plate.profile(x[mask])
        for tent in self.tentacles:
            mask = tent.region(x)
            if np.any(mask):
                out[mask] = tent.map_points(x[mask])
        return out

    def dpsi(self, x):
        x = np.atleast_2d(np.asarray(x, dtype=float))
        out = np.zeros((x.shape[0], self.m, self.n))
        out[:, : self.n, :] = np.eye(self.n)
        for plate in self.plates:
            mask = plate.region(x)
            if np.any(mask):
                out[mask, self.n, :] = plate.profile_grad(x[mask])
        for tent in self.tentacles:
            mask = tent.region(x)
            if np.any(mask):
                out[mask] = tent.map_jacobian(x[mask])
        return out


def crossing_tentacle(
    j: int, k: int, eps: float, clasped: bool, bulge_sign: float = 0.0
) -> Tentacle:
    """The tentacle of crossing j in the degree-k wheel geometry.

    The annulus sits at position j+1 (cyclically: position 1 for j = k) and
    the pierced plate at position j.
    """
    anchor = 1.0 if j == k else float(j + 1)
    c = np.array([anchor, 0.0, 0.0])
    p = np.array([float(j), 0.0, 0.0])
    return Tentacle(
        center=c,
        plate=p,
        r1=eps / 2,
        r2=2 * eps / 3,
        tube_radius=eps**2 / 2,
        dip=eps**2 / 4,
        height=-(eps**2) / 4,
        bulge=bulge_sign * eps / 4,
        clasped=clasped,
    )


def wheel_embedding(k: int, eps: float, unclasped: frozenset = frozenset()) -> TentacleEmbedding:
    """The embedding family of the degree-k wheel scheme on R^3.

    `unclasped` lists the crossings (1..k) whose tentacle is pulled off its
    plate; the empty set is the wheel knot itself.
    """
    tentacles = []
    for j in range(1, k + 1):
        sign = 1.0 if j % 2 else -1.0
        tentacles.append(
            crossing_tentacle(j, k, eps, clasped=(j not in unclasped), bulge_sign=sign)
        )
    return TentacleEmbedding(3, tuple(tentacles))


def plate_ball(j: int, eps: float):
    """Domain region of the plate pierced at crossing j."""
    return np.array([float(j), 0.0, 0.0]), eps**2


def annulus_region(j: int, k: int, eps: float):
    """Domain annulus of crossing j's tube, and its anchor point."""
    anchor = 1.0 if j == k else float(j + 1)
    return np.array([anchor, 0.0, 0.0]), eps / 2, 2 * eps / 3


# -- closed sphere pieces for linking integrals --------------------------------


@dataclass
class SpherePiece:
    """Round p-sphere in R^m, parameterized from the unit box [0,1]^p."""

    p: int
    m: int
    center: np.ndarray
    radius: float
    axes: np.ndarray  # (p+1, m) orthonormal rows
    orientation: int = 1

    def map_param(self, t):
        ang = self._angles(t)
        return self.center[None, :] + self.radius * ang @ self.axes

    def _angles(self, t):
        """(B, p+1) points of the unit p-sphere."""
        B = t.shape[0]
        out = np.ones((B, self.p + 1))
        for i in range(self.p):
            theta = (np.pi if i < self.p - 1 else 2 * np.pi) * t[:, i]
            out[:, i] *= np.cos(theta)
            out[:, i + 1 :] *= np.sin(theta)[:, None]
        return out

    def _angles_jacobian(self, t):
        B = t.shape[0]
        jac = np.zeros((B, self.p + 1, self.p))
        for i in range(self.p):
            scale = np.pi if i < self.p - 1 else 2 * np.pi
            col = np.ones((B, self.p + 1))
            for jj in range(self.p):
                th = (np.pi if jj < self.p - 1 else 2 * np.pi) * t[:, jj]
                if jj == i:
                    col[:, jj] *= -np.sin(th) * scale
                    col[:, jj + 1 :] *= (np.cos(th) * scale)[:, None]
                else:
                    col[:, jj] *= np.cos(th)
                    col[:, jj + 1 :] *= np.sin(th)[:, None]
            col[:, :i] = 0.0  # earlier coordinates do not involve t_i
            jac[:, :, i] = col
        return jac

    def map_jacobian_ambient(self, t):
        return self.radius * np.einsum("bki,km->bmi", self._angles_jacobian(t), self.axes)


def circle_piece(m, center, radius, axis_a, axis_b, orientation=1) -> SpherePiece:
    axes = np.zeros((2, m))
    axes[0, axis_a] = 1.0
    axes[1, axis_b] = 1.0
    return SpherePiece(1, m, np.asarray(center, float), radius, axes, orientation)


def sphere_piece(p, m, center, radius, axis_list, orientation=1) -> SpherePiece:
    axes = np.zeros((p + 1, m))
    for row, ax in enumerate(axis_list):
        axes[row, ax] = 1.0
    return SpherePiece(p, m, np.asarray(center, float), radius, axes, orientation)
