"""The classical de Casteljau algorithm.

Every other module is checked against these results, so they favour a literal
rendition of the recurrence W^(k)_i = (1 - c) W^(k-1)_i + c W^(k-1)_{i+1}
over speed.
"""

import math
from dataclasses import dataclass

import numpy as np

from fastbezier.core import ControlPolygon, SubdivisionOutcome
from fastbezier.errors import DomainError


def check_unit_parameter(c: float, name: str = "c") -> float:
    c = float(c)
    if not (0.0 <= c <= 1.0):
        raise DomainError(f"Parameter {name} must lie in [0, 1], got {c}")
    return c


def _level_offsets(n: int) -> np.ndarray:
    # level k holds n - k + 1 points
    sizes = np.arange(n + 1, 0, -1)
    return np.concatenate(([0], np.cumsum(sizes)[:-1]))


@dataclass(frozen=True, eq=False)
class DeCasteljauTable:
    """The triangular de Casteljau table stored level after level in one buffer."""

    degree: int
    buffer: np.ndarray
    offsets: np.ndarray

    def level(self, k: int) -> np.ndarray:
        """Points W^(k)_0..W^(k)_{n-k}."""
        if not 0 <= k <= self.degree:
            raise IndexError(f"Level {k} outside [0, {self.degree}]")
        start = self.offsets[k]
        return self.buffer[start : start + self.degree - k + 1]

    @property
    def levels(self) -> list[np.ndarray]:
        return [self.level(k) for k in range(self.degree + 1)]

    @property
    def diagonal(self) -> np.ndarray:
        """W^(0)_0, W^(1)_0, ..., W^(n)_0: the left segment."""
        return self.buffer[self.offsets]

    @property
    def bottom_row(self) -> np.ndarray:
        """W^(n)_0, W^(n-1)_1, ..., W^(0)_n: the right segment."""
        k = np.arange(self.degree + 1)
        return self.buffer[self.offsets[self.degree - k] + k]


def build_table(polygon: ControlPolygon, c: float) -> DeCasteljauTable:
    c = check_unit_parameter(c)
    n = polygon.degree
    offsets = _level_offsets(n)
    buffer = np.empty((offsets[-1] + 1, polygon.dimension))
    buffer[: n + 1] = polygon.points
    u = 1.0 - c
    for k in range(1, n + 1):
        previous = buffer[offsets[k - 1] : offsets[k - 1] + n - k + 2]
        buffer[offsets[k] : offsets[k] + n - k + 1] = (
            u * previous[:-1] + c * previous[1:]
        )
    buffer.setflags(write=False)
    offsets.setflags(write=False)
    return DeCasteljauTable(degree=n, buffer=buffer, offsets=offsets)


def evaluate(polygon: ControlPolygon, c: float) -> np.ndarray:
    """P_n(c) = W^(n)_0."""
    c = check_unit_parameter(c)
    u = 1.0 - c
    work = polygon.points.copy()
    for k in range(polygon.degree, 0, -1):
        work[:k] = u * work[:k] + c * work[1 : k + 1]
    return work[0]


def subdivide(polygon: ControlPolygon, c: float) -> SubdivisionOutcome:
    """Split the curve at c into P_n([0, c]) and P_n([c, 1])."""
    c = check_unit_parameter(c)
    n = polygon.degree
    if c == 0.0:
        repeated = np.repeat(polygon.points[:1], n + 1, axis=0)
        return SubdivisionOutcome(ControlPolygon(repeated), polygon, c)
    if c == 1.0:
        repeated = np.repeat(polygon.points[-1:], n + 1, axis=0)
        return SubdivisionOutcome(polygon, ControlPolygon(repeated), c)

    table = build_table(polygon, c)
    return SubdivisionOutcome(
        left=ControlPolygon(table.diagonal),
        right=ControlPolygon(table.bottom_row),
        split_parameter=c,
    )


def subdivide_left_direct_sum(polygon: ControlPolygon, c: float) -> ControlPolygon:
    """V_k = sum_i B^k_i(c) W_i summed term by term, O(d n^2).

    A second, independent route to the left segment used to cross-check the
    table's diagonal.
    """
    c = check_unit_parameter(c)
    n = polygon.degree
    rows = []
    for k in range(n + 1):
        weights = np.array(
            [math.comb(k, i) * c**i * (1.0 - c) ** (k - i) for i in range(k + 1)]
        )
        rows.append(weights @ polygon.points[: k + 1])
    return ControlPolygon(np.array(rows))
