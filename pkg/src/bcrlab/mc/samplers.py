"""Seeded samplers and mixture proposals with exactly computable densities."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np


@dataclass
class CauchyVec:
    """Product of independent Cauchy marginals: heavy tails over R^dim."""

    center: np.ndarray
    scale: float
    dim: int

    def sample(self, rng, size):
        u = rng.random((size, self.dim))
        return self.center[None, :] + self.scale * np.tan(np.pi * (u - 0.5))

    def pdf(self, x):
        z = (x - self.center[None, :]) / self.scale
        return np.prod(1.0 / (np.pi * self.scale * (1.0 + z * z)), axis=1)


@dataclass
class GaussVec:
    center: np.ndarray
    sigma: float
    dim: int

    def sample(self, rng, size):
        return self.center[None, :] + self.sigma * rng.standard_normal((size, self.dim))

    def pdf(self, x):
        z = (x - self.center[None, :]) / self.sigma
        norm = (2 * math.pi) ** (self.dim / 2) * self.sigma**self.dim
        return np.exp(-0.5 * np.sum(z * z, axis=1)) / norm


@dataclass
class UniformBall:
    center: np.ndarray
    radius: float
    dim: int

    @property
    def volume(self):
        d = self.dim
        return math.pi ** (d / 2) / math.gamma(d / 2 + 1) * self.radius**d

    def sample(self, rng, size):
        g = rng.standard_normal((size, self.dim))
        g /= np.linalg.norm(g, axis=1, keepdims=True)
        r = self.radius * rng.random(size) ** (1.0 / self.dim)
        return self.center[None, :] + g * r[:, None]

    def pdf(self, x):
        inside = np.linalg.norm(x - self.center[None, :], axis=1) <= self.radius
        return inside / self.volume


@dataclass
class UniformAnnulus:
    center: np.ndarray
    r1: float
    r2: float
    dim: int

    @property
    def volume(self):
        d = self.dim
        ball = math.pi ** (d / 2) / math.gamma(d / 2 + 1)
        return ball * (self.r2**d - self.r1**d)

    def sample(self, rng, size):
        g = rng.standard_normal((size, self.dim))
        g /= np.linalg.norm(g, axis=1, keepdims=True)
        u = rng.random(size)
        r = (self.r1**self.dim + u * (self.r2**self.dim - self.r1**self.dim)) ** (
            1.0 / self.dim
        )
        return self.center[None, :] + g * r[:, None]

    def pdf(self, x):
        rho = np.linalg.norm(x - self.center[None, :], axis=1)
        inside = (rho >= self.r1) & (rho <= self.r2)
        return inside / self.volume


@dataclass
class Mixture:
    components: list
    weights: list

    def sample(self, rng, size):
        w = np.asarray(self.weights, dtype=float)
        w /= w.sum()
        choice = rng.choice(len(self.components), size=size, p=w)
        dim = self.components[0].dim
        out = np.empty((size, dim))
        for i, comp in enumerate(self.components):
            mask = choice == i
            if np.any(mask):
                out[mask] = comp.sample(rng, int(mask.sum()))
        return out

    def pdf(self, x):
        w = np.asarray(self.weights, dtype=float)
        w /= w.sum()
        total = np.zeros(x.shape[0])
        for wi, comp in zip(w, self.components):
            total += wi * comp.pdf(x)
        return total


def batch_generators(seed: int, batches: int):
    """Independent deterministic generators, one per batch."""
    seqs = np.random.SeedSequence(seed).spawn(batches)
    return [np.random.Generator(np.random.PCG64(s)) for s in seqs]
