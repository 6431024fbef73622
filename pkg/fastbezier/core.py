"""Domain types shared by every module, plus Bernstein basis evaluation.

Points are stored as float64 arrays of shape ``(n + 1, d)``: one row per
control point. Arrays handed out by these types are read-only.
"""

from collections.abc import Sequence
from dataclasses import dataclass
from typing import Any

import numpy as np

from fastbezier.errors import DomainError


def _frozen_array(values: Any, what: str) -> np.ndarray:
    try:
        array = np.array(values, dtype=np.float64)
    except (TypeError, ValueError) as e:
        raise DomainError(f"{what} must contain real numbers: {e}") from e
    if not np.all(np.isfinite(array)):
        raise DomainError(f"{what} must contain only finite numbers")
    array.setflags(write=False)
    return array


def binomial(n: int, i: int) -> float:
    """C(n, i) as a float, by the multiplicative running product."""
    if i < 0 or i > n:
        return 0.0
    k = min(i, n - i)
    value = 1.0
    for j in range(1, k + 1):
        value = value * (n - k + j) / j
    return value


def bernstein(n: int, i: int, t: float) -> float:
    """The Bernstein polynomial B^n_i(t); zero for i outside [0, n]."""
    if i < 0 or i > n:
        return 0.0
    return binomial(n, i) * t**i * (1.0 - t) ** (n - i)


def bernstein_row(n: int, t: float) -> np.ndarray:
    """All of B^n_0(t), ..., B^n_n(t) at once.

    Built by the degree-raising recurrence B^k_j = (1-t) B^{k-1}_j + t B^{k-1}_{j-1},
    which only forms convex combinations and keeps the row summing to one.
    """
    if n < 0:
        raise DomainError(f"Degree must be non-negative, got {n}")
    row = np.zeros(n + 1)
    row[0] = 1.0
    u = 1.0 - t
    for k in range(1, n + 1):
        previous = row[:k].copy()
        row[1 : k + 1] = u * row[1 : k + 1] + t * previous
        row[0] = u * previous[0]
    return row


@dataclass(frozen=True, eq=False)
class ControlPolygon:
    """Control points W_0..W_n of a polynomial Bézier curve of degree n.

    A one-dimensional sequence is read as scalar control points (d = 1).
    """

    points: np.ndarray

    def __post_init__(self) -> None:
        points = _frozen_array(self.points, "Control points")
        if points.ndim == 1:
            points = points.reshape(-1, 1)
            points.setflags(write=False)
        if points.ndim != 2 or points.shape[0] < 1 or points.shape[1] < 1:
            raise DomainError(
                "Control points must form a non-empty (n + 1) x d array, "
                f"got shape {points.shape}"
            )
        object.__setattr__(self, "points", points)

    @classmethod
    def from_points(cls, points: Sequence[Sequence[float]]) -> "ControlPolygon":
        return cls(np.asarray(points, dtype=np.float64))

    @property
    def degree(self) -> int:
        return self.points.shape[0] - 1

    @property
    def dimension(self) -> int:
        return self.points.shape[1]

    def __len__(self) -> int:
        return self.points.shape[0]

    def coordinate(self, k: int) -> np.ndarray:
        """The scalar control points of dimension ``k``."""
        return self.points[:, k]

    def reversed(self) -> "ControlPolygon":
        return ControlPolygon(self.points[::-1])

    def to_list(self) -> list[list[float]]:
        return self.points.tolist()


@dataclass(frozen=True)
class SubdivisionOutcome:
    left: ControlPolygon
    right: ControlPolygon
    split_parameter: float

    def __post_init__(self) -> None:
        if (
            self.left.degree != self.right.degree
            or self.left.dimension != self.right.dimension
        ):
            raise DomainError("Left and right segments must share degree and dimension")


@dataclass(frozen=True, eq=False)
class RationalControlPolygon:
    """Control points with strictly positive weights ω_0..ω_n."""

    polygon: ControlPolygon
    weights: np.ndarray

    def __post_init__(self) -> None:
        weights = _frozen_array(self.weights, "Weights")
        if weights.ndim != 1 or weights.shape[0] != len(self.polygon):
            raise DomainError(
                f"Expected {len(self.polygon)} weights, got shape {weights.shape}"
            )
        if np.any(weights <= 0.0):
            raise DomainError("All weights must be strictly positive")
        object.__setattr__(self, "weights", weights)

    @classmethod
    def from_points(
        cls, points: Sequence[Sequence[float]], weights: Sequence[float]
    ) -> "RationalControlPolygon":
        return cls(ControlPolygon.from_points(points), np.asarray(weights))

    @property
    def degree(self) -> int:
        return self.polygon.degree

    @property
    def dimension(self) -> int:
        return self.polygon.dimension

    def lifted(self) -> ControlPolygon:
        """The projective lift: rows (ω_i W_i, ω_i) of a (d + 1)-dimensional curve."""
        weights = self.weights[:, None]
        return ControlPolygon(np.hstack([self.polygon.points * weights, weights]))

    @classmethod
    def from_lifted(cls, lifted: ControlPolygon) -> "RationalControlPolygon":
        weights = lifted.points[:, -1]
        return cls(ControlPolygon(lifted.points[:, :-1] / weights[:, None]), weights)

    def reversed(self) -> "RationalControlPolygon":
        return RationalControlPolygon(self.polygon.reversed(), self.weights[::-1])


@dataclass(frozen=True, eq=False)
class TensorPatch:
    """Control net W_ij of a rectangular patch, grid shape ``(n + 1, m + 1, d)``.

    Row index i runs along the first parameter t, column index j along u.
    """

    grid: np.ndarray

    def __post_init__(self) -> None:
        grid = _frozen_array(self.grid, "Patch control points")
        if grid.ndim == 2:
            grid = grid.reshape(grid.shape + (1,))
            grid.setflags(write=False)
        if grid.ndim != 3 or min(grid.shape) < 1:
            raise DomainError(
                f"Patch grid must have shape (n + 1, m + 1, d), got {grid.shape}"
            )
        object.__setattr__(self, "grid", grid)

    @property
    def row_degree(self) -> int:
        return self.grid.shape[0] - 1

    @property
    def column_degree(self) -> int:
        return self.grid.shape[1] - 1

    @property
    def dimension(self) -> int:
        return self.grid.shape[2]

    def column(self, j: int) -> ControlPolygon:
        """Control points W_0j..W_nj as a curve along t."""
        return ControlPolygon(self.grid[:, j, :])

    def transpose(self) -> "TensorPatch":
        return TensorPatch(self.grid.transpose(1, 0, 2))

    @classmethod
    def from_columns(cls, columns: Sequence[ControlPolygon]) -> "TensorPatch":
        return cls(np.stack([column.points for column in columns], axis=1))
