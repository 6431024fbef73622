"""Experiment configuration and the seeded random curve corpus."""

from dataclasses import dataclass

import numpy as np

from fastbezier.core import ControlPolygon
from fastbezier.errors import DomainError
from fastbezier.fastsub import METHODS, default_scale

DEFAULT_DEGREES = (*range(2, 21), 25, 30, 35, 40, 45, 50, 60, 70)
DEFAULT_METHODS = ("decasteljau", "fft", "direct")


@dataclass(frozen=True)
class ExperimentConfig:
    """One run of the timing or accuracy protocol.

    Curves of degree n are drawn from PCG64 seeded with ``(seed, n)``, so each
    degree's corpus does not depend on which other degrees are run.
    """

    degrees: tuple[int, ...] = DEFAULT_DEGREES
    curves_per_degree: int = 1000
    split_points: int = 499
    dimension: int = 2
    coordinate_range: tuple[float, float] = (1.0, 2.0)
    seed: int = 0
    scale: float | None = None
    methods: tuple[str, ...] = DEFAULT_METHODS
    engine: str | None = None

    def __post_init__(self) -> None:
        if not self.degrees or min(self.degrees) < 1:
            raise DomainError(f"Degrees must be at least 1, got {self.degrees}")
        if self.curves_per_degree < 0:
            raise DomainError("Curve count must be non-negative")
        if self.split_points < 1:
            raise DomainError("At least one split point is required")
        if self.dimension < 1:
            raise DomainError("Dimension must be at least 1")
        low, high = self.coordinate_range
        if not low < high:
            raise DomainError(f"Invalid coordinate range {self.coordinate_range}")
        if self.seed < 0:
            raise DomainError("Seed must be a non-negative integer")
        if self.scale is not None and self.scale == 0.0:
            raise DomainError("Scaling factor must be non-zero")
        unknown = set(self.methods) - set(METHODS)
        if unknown:
            raise DomainError(f"Unknown methods: {', '.join(sorted(unknown))}")

    @property
    def split_parameters(self) -> np.ndarray:
        """t_i = i / (k + 1) for i = 1..k, strictly inside (0, 1)."""
        k = self.split_points
        return np.arange(1, k + 1) / (k + 1)

    def scale_for(self, degree: int, method: str) -> float:
        if method == "unscaled":
            return 1.0
        return default_scale(degree) if self.scale is None else self.scale


def generate_curves(
    config: ExperimentConfig, degree: int | None = None
) -> list[ControlPolygon]:
    """Curves of one degree, or of every configured degree in order."""
    if degree is None:
        return [
            curve for n in config.degrees for curve in generate_curves(config, n)
        ]
    rng = np.random.Generator(np.random.PCG64(np.random.SeedSequence([config.seed, degree])))
    low, high = config.coordinate_range
    samples = rng.uniform(
        low, high, size=(config.curves_per_degree, degree + 1, config.dimension)
    )
    return [ControlPolygon(points) for points in samples]
