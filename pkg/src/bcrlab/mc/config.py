"""Run configuration and estimate containers for the Monte Carlo integrators."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class MCConfig:
    samples: int = 1_000_000
    seed: int = 42
    batches: int = 20
    cutoff: float = 1e-9       # minimum pairwise distance kept
    tail_scale: float = 2.0    # scale of the heavy-tailed proposal over R^n
    antithetic: bool = False   # mirror samples across the base plane

    def __post_init__(self):
        if self.samples < 1:
            raise ValueError("samples must be positive")
        if self.cutoff <= 0:
            raise ValueError("cutoff must be positive")
        if not 1 <= self.batches <= self.samples:
            raise ValueError("batches must be between 1 and samples")

    def to_json_dict(self) -> dict:
        return {
            "samples": self.samples,
            "seed": self.seed,
            "batches": self.batches,
            "cutoff": self.cutoff,
            "tail_scale": self.tail_scale,
            "antithetic": self.antithetic,
        }


@dataclass
class Estimate:
    mean: float
    stderr: float
    batch_means: list[float]
    n_effective: int
    n_total: int
    config: dict = field(default_factory=dict)

    def to_json_dict(self) -> dict:
        return {
            "mean": self.mean,
            "stderr": self.stderr,
            "batches": self.batch_means,
            "n_effective": self.n_effective,
            "n_total": self.n_total,
            "config": self.config,
        }

    def __str__(self) -> str:
        return f"{self.mean:.6f} +/- {self.stderr:.6f} (n_eff={self.n_effective})"


def combine_batches(batch_means, n_effective, n_total, config) -> Estimate:
    import math

    b = len(batch_means)
    mean = sum(batch_means) / b
    if b > 1:
        var = sum((x - mean) ** 2 for x in batch_means) / (b - 1)
        stderr = math.sqrt(var / b)
    else:
        stderr = float("nan")
    return Estimate(mean, stderr, list(batch_means), n_effective, n_total, config)
