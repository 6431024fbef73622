"""All endpoint derivatives P^(k)(0), P^(k)(1), k = 0..n, in O(d n log n).

P^(k)(0) = n!/(n-k)! * sum_i C(k, i) (-1)^(k-i) W_i. Because
B^k_i(1/2) = 2^-k C(k, i), the binomial sums are left-segment points at
c = 1/2 of the sign-alternated polygon z_i = (-1)^i W_i:

    P^(k)(0) = (-1)^k 2^k n!/(n-k)! V_k(z).

The convolution output is first rescaled to V_k(z), which stays bounded, and
only then multiplied by (-2)^k n!/(n-k)!. High orders of large-degree curves
exceed the double range; those rows come back as +-inf while the low orders
stay usable.
"""

import logging

import numpy as np

from fastbezier import instrumentation
from fastbezier.core import ControlPolygon, binomial
from fastbezier.fastsub import convolve_scaled, make_plan

logger = logging.getLogger(__name__)


def _falling_factors(n: int) -> np.ndarray:
    """(-2)^k n!/(n-k)! for k = 0..n; overflow saturates to +-inf."""
    k = np.arange(1, n + 1, dtype=np.float64)
    with np.errstate(over="ignore"):
        return np.concatenate(([1.0], np.cumprod(-2.0 * (n - k + 1))))


def derivatives_at_zero(
    polygon: ControlPolygon, s: float | None = None, engine: str | None = None
) -> np.ndarray:
    """Array of shape ``(n + 1, d)``; row k is P^(k)(0)."""
    n = polygon.degree
    plan = make_plan(n, 0.5, s, engine)
    signs = np.where(np.arange(n + 1) % 2 == 0, 1.0, -1.0)
    alternated = polygon.points.T * signs
    gamma = convolve_scaled(plan, alternated)[:, : n + 1]
    points = gamma * plan.rescale_factors
    with np.errstate(over="ignore", invalid="ignore"):
        derivatives = (points * _falling_factors(n)).T
    instrumentation.record(instrumentation.FLOPS, 2 * derivatives.size + 2 * n)
    derivatives[0] = polygon.points[0]
    finite_rows = np.all(np.isfinite(derivatives), axis=1)
    if not finite_rows.all():
        first = int(np.argmin(finite_rows))
        logger.warning(
            f"Derivatives of order {first} and above of a degree-{n} curve "
            "exceed the double range"
        )
    return derivatives


def derivatives_at_one(
    polygon: ControlPolygon, s: float | None = None, engine: str | None = None
) -> np.ndarray:
    """Row k is P^(k)(1): the reversed curve's derivatives at 0, times (-1)^k."""
    reversed_derivatives = derivatives_at_zero(polygon.reversed(), s, engine)
    signs = np.where(np.arange(polygon.degree + 1) % 2 == 0, 1.0, -1.0)
    return reversed_derivatives * signs[:, None]


def derivatives_direct(polygon: ControlPolygon, at: float) -> np.ndarray:
    """The endpoint formulas summed term by term, O(d n^2); ``at`` is 0 or 1."""
    n = polygon.degree
    points = polygon.points if at == 0.0 else polygon.points[::-1]
    rows = []
    falling = 1.0
    for k in range(n + 1):
        if k > 0:
            falling *= n - k + 1
        coefficients = np.array(
            [binomial(k, i) * (-1.0) ** (k - i) for i in range(k + 1)]
        )
        rows.append(falling * (coefficients @ points[: k + 1]))
    result = np.array(rows)
    if at != 0.0:
        result *= np.where(np.arange(n + 1) % 2 == 0, 1.0, -1.0)[:, None]
    return result
