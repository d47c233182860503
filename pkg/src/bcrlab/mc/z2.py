"""The degree-2 configuration-space combination over a long-knot embedding.

Three terms: the internal-vertex term over three knot points and one
ambient point, and the two chord-diagram terms over four knot points, with
the coefficients of the degree-2 weight table:

    z2 = 1/2 I_internal - 1/2 I_pendant + 1/4 I_wheel.

Sampling uses mixtures of heavy-tailed proposals over the planar region and
localized components at the crossing regions of the wheel family, so the
estimator remains usable when the embedding's structure is concentrated in
small balls.  The standard plane's theta factors are rank-deficient
pointwise, so its estimate is identically zero.
"""

from __future__ import annotations

import numpy as np

from .config import Estimate, MCConfig, combine_batches
from .density import (
    AmbientChordFactor,
    AnchorEtaFactor,
    ChordFactor,
    DomainEtaFactor,
    density,
)
from .embeddings import StandardPlane, TentacleEmbedding, wheel_embedding
from .samplers import CauchyVec, GaussVec, Mixture, UniformAnnulus, UniformBall, batch_generators

TERMS = ("internal", "pendant", "wheel")
COEFFS = {"internal": 0.5, "pendant": -0.5, "wheel": 0.25}


def _term_factors(term: str, embedding) -> list:
    n, m = embedding.n, embedding.m
    if term == "wheel":
        # cycle d1 -> a1 -> d2 -> a2 -> d1 with points (d1, a1, d2, a2)
        return [
            ChordFactor("theta(1->2)", m, embedding, 0, 1),
            ChordFactor("theta(3->4)", m, embedding, 2, 3),
            DomainEtaFactor("eta(2->3)", n, n, 1, 2),
            DomainEtaFactor("eta(4->1)", n, n, 3, 0),
        ]
    if term == "pendant":
        # triangle theta(1->2), eta(2->3), eta(3->1) with pendant theta(4->3)
        return [
            ChordFactor("theta(1->2)", m, embedding, 0, 1),
            DomainEtaFactor("eta(2->3)", n, n, 1, 2),
            ChordFactor("theta(4->3)", m, embedding, 3, 2),
            DomainEtaFactor("eta(3->1)", n, n, 2, 0),
        ]
    if term == "internal":
        # ambient point y with theta(i->y) for i = 1..3 and eta(1->2)
        return [
            AmbientChordFactor("theta(1->y)", m, embedding, 0, 3),
            AmbientChordFactor("theta(2->y)", m, embedding, 1, 3),
            AmbientChordFactor("theta(3->y)", m, embedding, 2, 3),
            DomainEtaFactor("eta(1->2)", n, n, 0, 1),
        ]
    raise ValueError(f"unknown term {term!r}")


def _knot_point_mixture(embedding, cfg: MCConfig):
    comps = [CauchyVec(np.zeros(3), cfg.tail_scale, 3)]
    weights = [0.2]
    tentacles = getattr(embedding, "tentacles", ())
    if tentacles:
        share = 0.8 / (3 * len(tentacles))
        for tent in tentacles:
            comps.append(UniformAnnulus(tent.center, tent.r1, tent.r2, 3))
            weights.append(share)
            comps.append(GaussVec(tent.plate, 2.0 * tent.dip, 3))
            weights.append(share)
            comps.append(GaussVec(tent.plate, 2.0 * tent.tube_radius, 3))
            weights.append(share)
    else:
        comps.append(GaussVec(np.zeros(3), 1.0, 3))
        weights.append(0.8)
    return Mixture(comps, weights)


def _mvt_sample(rng, size, dim):
    """Multivariate-t draws with one degree of freedom (isotropic tails)."""
    g = rng.standard_normal((size, dim))
    chi = np.abs(rng.standard_normal(size))
    return g / chi[:, None]


_MVT_NORM = {
    3: 1.0 / np.pi**2,                       # Gamma(2) / (Gamma(1/2) pi^1.5)
    5: 2.0 / np.pi**3,                       # Gamma(3) / (Gamma(1/2) pi^2.5)
}


def _mvt_pdf(delta, sigma, dim):
    z2 = np.sum((delta / sigma) ** 2, axis=1)
    return _MVT_NORM[dim] / (sigma**dim * (1.0 + z2) ** ((1 + dim) / 2))


class _PatternProposal:
    """Joint proposal: independent specs plus dip-matched conditionals.

    Each point spec is ("indep", sampler), ("dip", ref_index, tentacle,
    sigma) placing the point near the tube point over the plate matched to
    the referenced annulus point, or ("ambient", ref_index, sigma) placing
    the 5-dim ambient point near the image of the referenced knot point.
    """

    def __init__(self, specs, embedding):
        self.specs = specs
        self.embedding = embedding

    def _dip_center(self, tent, ref):
        v = ref - tent.center[None, :]
        v /= np.linalg.norm(v, axis=1, keepdims=True)
        return tent.plate[None, :] + tent.tube_radius * v

    def sample(self, rng, size):
        points: list = [None] * len(self.specs)
        for i, spec in enumerate(self.specs):
            if spec[0] == "indep":
                points[i] = spec[1].sample(rng, size)
        for i, spec in enumerate(self.specs):
            if spec[0] == "dip":
                _, ref_idx, tent, sigma = spec
                centers = self._dip_center(tent, points[ref_idx])
                points[i] = centers + sigma * _mvt_sample(rng, size, 3)
            elif spec[0] == "ambient":
                _, ref_idx, sigma = spec
                centers = self.embedding.psi(points[ref_idx])
                points[i] = centers + sigma * _mvt_sample(rng, size, 5)
        return points

    def pdf(self, points):
        total = np.ones(points[0].shape[0])
        for i, spec in enumerate(self.specs):
            if spec[0] == "indep":
                total *= spec[1].pdf(points[i])
            elif spec[0] == "dip":
                _, ref_idx, tent, sigma = spec
                centers = self._dip_center(tent, points[ref_idx])
                total *= _mvt_pdf(points[i] - centers, sigma, 3)
            else:
                _, ref_idx, sigma = spec
                centers = self.embedding.psi(points[ref_idx])
                total *= _mvt_pdf(points[i] - centers, sigma, 5)
        return total


class _JointMixture:
    def __init__(self, patterns, weights):
        self.patterns = patterns
        self.weights = np.asarray(weights, dtype=float)
        self.weights /= self.weights.sum()

    def sample(self, rng, size):
        choice = rng.choice(len(self.patterns), size=size, p=self.weights)
        outs = None
        for i, pattern in enumerate(self.patterns):
            mask = choice == i
            if not np.any(mask):
                continue
            pts = pattern.sample(rng, int(mask.sum()))
            if outs is None:
                outs = [np.empty((size, p.shape[1])) for p in pts]
            for slot, p in zip(outs, pts):
                slot[mask] = p
        return outs

    def pdf(self, points):
        total = np.zeros(points[0].shape[0])
        for w, pattern in zip(self.weights, self.patterns):
            total += w * pattern.pdf(points)
        return total


def _chord_patterns(embedding, chords, n_points, knot_mix, ambient_sigma=None, cfg=None):
    """Patterns matching every chord to a tentacle dip, in both roles.

    `chords` lists (src, dst) knot-point index pairs; an entry of the form
    (i, "ambient") ties the 5-dim ambient point to knot point i instead.
    """
    tentacles = list(getattr(embedding, "tentacles", ()))
    background = _PatternProposal(
        [("indep", knot_mix)] * n_points
        + ([("indep", _ambient_point_mixture(embedding, cfg))] if ambient_sigma else []),
        embedding,
    )
    patterns = [background]
    weights = [0.25]
    knot_chords = [c for c in chords if c[1] != "ambient"]
    ambient_ties = [c[0] for c in chords if c[1] == "ambient"]
    if tentacles and knot_chords:
        import itertools

        options = []
        for src, dst in knot_chords:
            per_chord = []
            for tent in tentacles:
                ann = UniformAnnulus(tent.center, tent.r1, tent.r2, 3)
                sigma = tent.dip
                per_chord.append({dst: ("indep", ann), src: ("dip", dst, tent, sigma)})
                per_chord.append({src: ("indep", ann), dst: ("dip", src, tent, sigma)})
            options.append(per_chord)
        combos = list(itertools.product(*options))
        share = 0.75 / len(combos)
        for combo in combos:
            specs: list = [("indep", knot_mix)] * n_points
            for assignment in combo:
                for idx, spec in assignment.items():
                    specs[idx] = spec
            if ambient_sigma:
                specs = specs + [("indep", _ambient_point_mixture(embedding, cfg))]
            patterns.append(_PatternProposal(specs, embedding))
            weights.append(share)
    if ambient_ties and tentacles:
        extra = []
        for i in ambient_ties:
            specs = [("indep", knot_mix)] * n_points + [("ambient", i, ambient_sigma)]
            extra.append(_PatternProposal(specs, embedding))
        w = 0.5 / len(extra)
        # rebalance: background 0.2, chord combos keep their share, ties 0.3
        patterns.extend(extra)
        weights.extend([0.3 / len(extra)] * len(extra))
    return _JointMixture(patterns, weights)


def _ambient_point_mixture(embedding, cfg: MCConfig):
    comps = [CauchyVec(np.zeros(5), cfg.tail_scale, 5)]
    weights = [0.4]
    tentacles = getattr(embedding, "tentacles", ())
    if tentacles:
        share = 0.6 / len(tentacles)
        for tent in tentacles:
            center = np.zeros(5)
            center[:3] = tent.plate
            comps.append(GaussVec(center, 8.0 * tent.tube_radius, 5))
            weights.append(share)
    else:
        comps.append(GaussVec(np.zeros(5), 1.0, 5))
        weights.append(0.6)
    return Mixture(comps, weights)


def _mirror(coords, layout):
    """Antithetic partner: flip the last domain coordinate of every point."""
    out = coords.copy()
    offset = 0
    for size in layout:
        out[:, offset + size - 1] *= -1.0
        offset += size
    return out


TERM_CHORDS = {
    "wheel": [(0, 1), (2, 3)],
    "pendant": [(0, 1), (3, 2)],
    "internal": [(0, "ambient"), (1, "ambient"), (2, "ambient")],
}


def z2_term_estimate(term: str, embedding, cfg: MCConfig) -> Estimate:
    factors = _term_factors(term, embedding)
    n_knot = 4 if term != "internal" else 3
    knot_mix = _knot_point_mixture(embedding, cfg)
    ambient_sigma = None
    if term == "internal":
        tentacles = getattr(embedding, "tentacles", ())
        scale = min((t.dip for t in tentacles), default=0.5)
        ambient_sigma = 2.0 * scale
    proposal = _chord_patterns(
        embedding, TERM_CHORDS[term], n_knot, knot_mix, ambient_sigma, cfg
    )
    layout = [3] * n_knot + ([5] if term == "internal" else [])

    gens = batch_generators(cfg.seed, cfg.batches)
    per_batch = cfg.samples // cfg.batches
    batch_means = []
    n_eff = 0
    for rng in gens:
        parts = proposal.sample(rng, per_batch)
        pdf = proposal.pdf(parts)
        coords = np.concatenate(parts, axis=1)
        values, keep = density(factors, coords, cfg.cutoff)
        if cfg.antithetic:
            mirrored = _mirror(coords, layout)
            v2, k2 = density(factors, mirrored, cfg.cutoff)
            values = 0.5 * (values + v2)
            keep &= k2
        keep &= pdf > 0
        n_eff += int(keep.sum())
        contrib = np.where(keep, values / np.where(pdf > 0, pdf, 1.0), 0.0)
        batch_means.append(float(np.mean(contrib)))
    return combine_batches(
        batch_means,
        n_eff,
        per_batch * cfg.batches,
        {"mode": f"z2-{term}", **cfg.to_json_dict()},
    )


def z2_estimate(embedding, cfg: MCConfig) -> Estimate:
    """The three-term degree-2 estimate; batch errors combine in quadrature."""
    import math

    terms = {}
    mean = 0.0
    var = 0.0
    n_eff = 0
    variance_flag = False
    for i, term in enumerate(TERMS):
        sub_cfg = MCConfig(
            samples=cfg.samples,
            seed=cfg.seed + i,
            batches=cfg.batches,
            cutoff=cfg.cutoff,
            tail_scale=cfg.tail_scale,
            antithetic=cfg.antithetic,
        )
        est = z2_term_estimate(term, embedding, sub_cfg)
        terms[term] = est.to_json_dict()
        mean += COEFFS[term] * est.mean
        var += (COEFFS[term] * est.stderr) ** 2
        n_eff += est.n_effective
        if not math.isfinite(est.stderr) or est.stderr > 10:
            variance_flag = True
    out = Estimate(
        mean,
        math.sqrt(var),
        [terms[t]["mean"] for t in TERMS],
        n_eff,
        3 * cfg.samples,
        {"mode": "z2", "terms": terms, "variance_flag": variance_flag, **cfg.to_json_dict()},
    )
    return out


def z2_plane_estimate(cfg: MCConfig) -> Estimate:
    return z2_estimate(StandardPlane(), cfg)


def z2_wheel_estimate(eps: float, cfg: MCConfig, unclasped: frozenset = frozenset()) -> Estimate:
    return z2_estimate(wheel_embedding(2, eps, unclasped), cfg)
