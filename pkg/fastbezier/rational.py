"""Rational Bézier curves through their projective lift.

The lifted polygon (ω_i W_i, ω_i) is an ordinary (d + 1)-dimensional Bézier
curve. Subdividing it gives the weighted sums sum_i ω_i B^k_i(c) W_i and the
new weights ν_k in one batched fast subdivision; one division per output point
projects back.
"""

import numpy as np

from fastbezier import fastsub, reference
from fastbezier.core import ControlPolygon, RationalControlPolygon
from fastbezier.errors import DegenerateWeightError
from fastbezier.fastsub import SubdivisionPlan, subdivide_left_fft


def _project(lifted: ControlPolygon) -> RationalControlPolygon:
    weights = lifted.points[:, -1]
    if not np.all(np.isfinite(weights)) or np.any(weights <= 0.0):
        raise DegenerateWeightError(
            f"Subdivision produced non-positive weights (min {weights.min():.3g}); "
            "the weights are too disparate for double precision"
        )
    return RationalControlPolygon.from_lifted(lifted)


def subdivide_left_rational(
    plan: SubdivisionPlan, rpolygon: RationalControlPolygon
) -> RationalControlPolygon:
    """Weights ν_0..ν_n and points V_0..V_n of R_n([0, c])."""
    if np.all(rpolygon.weights == 1.0):
        # ν_k = sum_i B^k_i(c) = 1: the curve is polynomial
        left = subdivide_left_fft(plan, rpolygon.polygon)
        return RationalControlPolygon(left, np.ones(len(left)))
    return _project(subdivide_left_fft(plan, rpolygon.lifted()))


def subdivide_right_rational(
    plan: SubdivisionPlan, rpolygon: RationalControlPolygon
) -> RationalControlPolygon:
    """R_n([c, 1]) from a plan built for split 1 - c."""
    return subdivide_left_rational(plan, rpolygon.reversed()).reversed()


def evaluate_rational(rpolygon: RationalControlPolygon, t: float) -> np.ndarray:
    lifted_point = reference.evaluate(rpolygon.lifted(), t)
    return lifted_point[:-1] / lifted_point[-1]


def subdivide_rational(
    rpolygon: RationalControlPolygon,
    c: float,
    method: str = "decasteljau",
    s: float | None = None,
    engine: str | None = None,
) -> tuple[RationalControlPolygon, RationalControlPolygon]:
    """Both segments of the rational curve with any subdivision method.

    The default runs de Casteljau on the lifted polygon and serves as the
    oracle for the fast paths.
    """
    if np.all(rpolygon.weights == 1.0):
        outcome = fastsub.subdivide(rpolygon.polygon, c, method, s, engine)
        ones = np.ones(rpolygon.degree + 1)
        return (
            RationalControlPolygon(outcome.left, ones),
            RationalControlPolygon(outcome.right, ones),
        )
    outcome = fastsub.subdivide(rpolygon.lifted(), c, method, s, engine)
    return _project(outcome.left), _project(outcome.right)
