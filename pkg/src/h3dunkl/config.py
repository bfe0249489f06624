"""Dataclass configurations shared by the CLI, scripts and verification suites."""

from __future__ import annotations

import os
from dataclasses import dataclass, field

DEGREE_CAP_ENV = "H3DUNKL_DEGREE_CAP"
DEFAULT_DEGREE_CAP = 20


def default_degree_cap() -> int:
    """Degree cap for q/w/phi families, overridable through the environment."""
    raw = os.environ.get(DEGREE_CAP_ENV)
    if raw is None or raw.strip() == "":
        return DEFAULT_DEGREE_CAP
    try:
        cap = int(raw)
    except ValueError as exc:
        raise ValueError(f"{DEGREE_CAP_ENV} must be an integer, got {raw!r}") from exc
    if cap < 0:
        raise ValueError(f"{DEGREE_CAP_ENV} must be nonnegative")
    return cap


@dataclass(frozen=True)
class WaveConfig:
    vertex_index: int = 0
    degree_cap: int = field(default_factory=default_degree_cap)


@dataclass(frozen=True)
class MonteCarloConfig:
    kappa: float = 0.5
    omega: float = 1.0
    samples: int = 1_000_000
    seed: int = 20240601
    chunk: int = 200_000
    # "radial" or "gaussian"; see numeric.WeightSampler
    proposal: str = "radial"


@dataclass(frozen=True)
class VerifyConfig:
    slow: bool = False
    seed: int = 12345
    max_degree_ops: int = 4
    max_degree_waves: int = 12
    random_polys_per_degree: int = 5
