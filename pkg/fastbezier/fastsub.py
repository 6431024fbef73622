"""Subdivision in O(d n log n) through scaled polynomial multiplication.

For one coordinate the left-segment points are

    v_k = k!/s^k * gamma^s_k,  gamma^s_k = sum_i alpha^s_i beta^s_{k-i},
    alpha^s_i = w_i (s c)^i / i!,  beta^s_j = (s (1 - c))^j / j!,

so all of v_0..v_n follow from one product of two degree-n polynomials. The
scale s is algebraically neutral; it keeps the FFT inputs and outputs away from
the underflow that ruins the s = 1 variant for moderate n.
"""

import logging
from collections.abc import Callable, Sequence
from dataclasses import dataclass, replace

import numpy as np

from fastbezier import instrumentation, reference, transform
from fastbezier.core import ControlPolygon, SubdivisionOutcome
from fastbezier.errors import (
    DegreeMismatchError,
    DomainError,
    NumericFailure,
    TailExhaustedError,
)
from fastbezier.transform import Spectrum, TransformPlan

logger = logging.getLogger(__name__)

METHODS = ("decasteljau", "fft", "direct", "unscaled")


def default_scale(n: int) -> float:
    return 0.375 * n + 0.9


@dataclass(frozen=True, eq=False)
class SubdivisionPlan:
    """Everything that depends on (n, c, s) but not on the control points.

    One plan serves any number of polygons and all of their coordinates.
    """

    degree: int
    split: float
    scale: float
    alpha_prefactors: np.ndarray
    beta_coefficients: np.ndarray
    beta_spectrum: Spectrum
    rescale_factors: np.ndarray
    transform_plan: TransformPlan


def make_plan(
    n: int,
    c: float,
    s: float | None = None,
    engine: str | None = None,
) -> SubdivisionPlan:
    if n < 0:
        raise DomainError(f"Degree must be non-negative, got {n}")
    c = float(c)
    if not (0.0 < c < 1.0):
        raise DomainError(f"Split parameter must lie in (0, 1), got {c}")
    s = default_scale(n) if s is None else float(s)
    if s == 0.0 or not np.isfinite(s):
        raise DomainError(f"Scaling factor must be finite and non-zero, got {s}")

    # rows: alpha prefactors, beta coefficients, rescale factors
    i = np.arange(1, n + 1, dtype=np.float64)
    ratios = np.empty((3, n + 1))
    ratios[:, 0] = 1.0
    ratios[0, 1:] = s * c / i
    ratios[1, 1:] = s * (1.0 - c) / i
    ratios[2, 1:] = i / s
    factors = np.cumprod(ratios, axis=1)
    if not np.all(np.isfinite(factors)):
        names = ("alpha prefactors", "beta coefficients", "rescale factors")
        bad = names[int(np.argmin(np.all(np.isfinite(factors), axis=1)))]
        raise NumericFailure(
            f"Non-finite {bad} for n={n}, c={c}, s={s}; choose another scale"
        )
    factors.setflags(write=False)
    alpha, beta, rescale = factors

    transform_plan = transform.plan(2 * n + 1, engine)
    beta_spectrum = transform.forward(transform_plan, beta)
    instrumentation.record(instrumentation.BETA_SPECTRA)
    instrumentation.record(instrumentation.FLOPS, 3 * n)
    return SubdivisionPlan(
        degree=n,
        split=c,
        scale=s,
        alpha_prefactors=alpha,
        beta_coefficients=beta,
        beta_spectrum=beta_spectrum,
        rescale_factors=rescale,
        transform_plan=transform_plan,
    )


def make_extension_plan(
    n: int, c: float, engine: str | None = None
) -> SubdivisionPlan:
    """Plan for :func:`subdivide_with_tail` on a degree-n polygon.

    The scale is chosen for degree 2n, the furthest the tail can be extended,
    so extended points agree with a fresh degree-2n subdivision.
    """
    s = default_scale(2 * n)
    logger.debug(f"Extension plan n={n}, c={c}, s={s}")
    return make_plan(n, c, s, engine)


def make_plan_pair(
    n: int, c: float, s: float | None = None, engine: str | None = None
) -> tuple[SubdivisionPlan, SubdivisionPlan]:
    """Plans for the left segment (c) and the right segment (1 - c)."""
    return make_plan(n, c, s, engine), make_plan(n, 1.0 - c, s, engine)


def _check_degree(plan: SubdivisionPlan, polygon: ControlPolygon) -> None:
    if polygon.degree != plan.degree:
        raise DegreeMismatchError(
            f"Plan built for degree {plan.degree}, polygon has degree {polygon.degree}"
        )


def convolve_scaled(plan: SubdivisionPlan, values: np.ndarray) -> np.ndarray:
    """gamma^s_0..gamma^s_{2n} for each row of ``values`` (shape ``(r, n + 1)``)."""
    n = plan.degree
    scaled = values * plan.alpha_prefactors
    tp = plan.transform_plan
    product = transform.multiply_spectra(transform.forward(tp, scaled), plan.beta_spectrum)
    instrumentation.record(instrumentation.FLOPS, scaled.size)
    return transform.inverse(tp, product)[..., : 2 * n + 1]


def _finish(
    plan: SubdivisionPlan, polygon: ControlPolygon, gamma: np.ndarray
) -> ControlPolygon:
    points = (gamma[:, : plan.degree + 1] * plan.rescale_factors).T
    instrumentation.record(instrumentation.FLOPS, points.size)
    # gamma^s_0 = w_0 exactly
    points[0] = polygon.points[0]
    try:
        return ControlPolygon(points)
    except DomainError as e:
        raise NumericFailure(
            f"Subdivision produced non-finite points (n={plan.degree}, s={plan.scale})"
        ) from e


def subdivide_left_fft(plan: SubdivisionPlan, polygon: ControlPolygon) -> ControlPolygon:
    """Control points of P_n([0, c]) by FFT convolution, O(d n log n)."""
    _check_degree(plan, polygon)
    gamma = convolve_scaled(plan, polygon.points.T)
    return _finish(plan, polygon, gamma)


def subdivide_left_direct(
    plan: SubdivisionPlan, polygon: ControlPolygon
) -> ControlPolygon:
    """Same scaled formula, with gamma^s_k summed directly: O(d n^2), more accurate."""
    _check_degree(plan, polygon)
    n = plan.degree
    beta = plan.beta_coefficients
    gamma = np.array(
        [
            np.convolve(plan.alpha_prefactors * row, beta)[: n + 1]
            for row in polygon.points.T
        ]
    )
    instrumentation.record(instrumentation.FLOPS, polygon.dimension * (n + 1) ** 2)
    return _finish(plan, polygon, gamma)


def subdivide_left_unscaled(
    polygon: ControlPolygon, c: float, engine: str | None = None
) -> ControlPolygon:
    """The unscaled variant (s = 1): exact in theory, unstable beyond small n."""
    return subdivide_left_fft(make_plan(polygon.degree, c, 1.0, engine), polygon)


LeftMethod = Callable[[SubdivisionPlan, ControlPolygon], ControlPolygon]

LEFT_METHODS: dict[str, LeftMethod] = {
    "fft": subdivide_left_fft,
    "direct": subdivide_left_direct,
    "unscaled": subdivide_left_fft,
}


def subdivide_right(
    plan: SubdivisionPlan, polygon: ControlPolygon, method: str = "fft"
) -> ControlPolygon:
    """Control points of P_n([c, 1]) from a plan built for split 1 - c.

    The right segment at c is the reversed left segment of the reversed
    polygon at 1 - c.
    """
    try:
        left = LEFT_METHODS[method]
    except KeyError:
        raise DomainError(f"Unknown subdivision method '{method}'") from None
    if method == "unscaled" and plan.scale != 1.0:
        raise DomainError(
            f"The unscaled method needs a plan built with s = 1, got s = {plan.scale}"
        )
    return left(plan, polygon.reversed()).reversed()


def subdivide(
    polygon: ControlPolygon,
    c: float,
    method: str = "fft",
    s: float | None = None,
    engine: str | None = None,
) -> SubdivisionOutcome:
    """Both segments with any method; c in {0, 1} takes the exact shortcut."""
    if method not in METHODS:
        raise DomainError(
            f"Unknown subdivision method '{method}'. Choose from {', '.join(METHODS)}"
        )
    c = reference.check_unit_parameter(c)
    if method == "decasteljau" or c in (0.0, 1.0):
        return reference.subdivide(polygon, c)
    if method == "unscaled":
        s = 1.0
    left_plan, right_plan = make_plan_pair(polygon.degree, c, s, engine)
    return SubdivisionOutcome(
        left=LEFT_METHODS[method](left_plan, polygon),
        right=subdivide_right(right_plan, polygon, method),
        split_parameter=c,
    )


@dataclass(frozen=True, eq=False)
class GammaTail:
    """Raw gamma^s_{n+1..2n} per dimension plus what extension needs.

    Extending from degree N - 1 to N = n + m consumes gamma^s_N; the
    coefficients the base convolution never saw are the terms B^N_i(c) W_i for
    i < m and i > n, m of each.
    """

    gamma: np.ndarray
    base_points: np.ndarray
    added_points: tuple[np.ndarray, ...]
    split: float
    scale: float
    base_degree: int
    rescale: float
    low_power: float
    high_power: float

    @property
    def degree(self) -> int:
        """Degree of the curve extended so far."""
        return self.base_degree + len(self.added_points)

    @property
    def remaining(self) -> int:
        return self.base_degree - len(self.added_points)

    def __len__(self) -> int:
        return self.remaining


def subdivide_with_tail(
    plan: SubdivisionPlan, polygon: ControlPolygon
) -> tuple[ControlPolygon, GammaTail]:
    """Left segment plus the retained tail for later :func:`extend_by_one` calls.

    Extended points inherit the plan's scale. Build the plan with
    :func:`make_extension_plan` for them to match a fresh subdivision of the
    extended polygon to 1e-10; a plan scaled for degree n alone loses digits
    as the extended degree approaches 2n.
    """
    _check_degree(plan, polygon)
    n = plan.degree
    gamma = convolve_scaled(plan, polygon.points.T)
    tail_values = gamma[:, n + 1 :].copy()
    tail_values.setflags(write=False)
    c = plan.split
    tail = GammaTail(
        gamma=tail_values,
        base_points=polygon.points,
        added_points=(),
        split=c,
        scale=plan.scale,
        base_degree=n,
        rescale=float(plan.rescale_factors[-1]),
        low_power=(1.0 - c) ** n,
        high_power=c**n,
    )
    return _finish(plan, polygon, gamma), tail


def extend_by_one(tail: GammaTail, new_point: Sequence[float]) -> tuple[np.ndarray, GammaTail]:
    """V_{N} for the curve extended by W_N, in O(m) per dimension at step m.

    Previously returned points stay valid: appending a control point leaves
    V_0..V_{N-1} unchanged.
    """
    if tail.remaining <= 0:
        raise TailExhaustedError(
            f"All {tail.base_degree} retained coefficients used; build a new plan "
            f"for degree {tail.degree}"
        )
    point = np.asarray(new_point, dtype=np.float64).reshape(-1)
    d = tail.base_points.shape[1]
    if point.shape != (d,) or not np.all(np.isfinite(point)):
        raise DomainError(f"New control point must be {d} finite coordinates")

    c, u = tail.split, 1.0 - tail.split
    m = len(tail.added_points) + 1
    n = tail.base_degree
    degree = n + m
    rescale = tail.rescale * degree / tail.scale
    low_power = tail.low_power * u
    high_power = tail.high_power * c
    added = tail.added_points + (point,)

    value = rescale * tail.gamma[:, m - 1]
    # i = 0..m-1 from the base polygon
    weight = low_power
    value = value + weight * tail.base_points[0]
    for i in range(1, m):
        weight = weight * (degree - i + 1) / i * c / u
        value = value + weight * tail.base_points[i]
    # i = N, N-1, ..., n+1 from the appended points
    weight = high_power
    value = value + weight * added[m - 1]
    for j in range(1, m):
        weight = weight * (degree - j + 1) / j * u / c
        value = value + weight * added[m - 1 - j]

    instrumentation.record(instrumentation.FLOPS, 4 * m * d + 8 * m + 2 * d)
    if not np.all(np.isfinite(value)):
        raise NumericFailure(f"Extension to degree {degree} produced non-finite values")
    return value, replace(
        tail,
        added_points=added,
        rescale=rescale,
        low_power=low_power,
        high_power=high_power,
    )


def extend_by(
    tail: GammaTail, new_points: Sequence[Sequence[float]]
) -> tuple[np.ndarray, GammaTail]:
    """Several extensions in a row; O(d m^2) for m new points."""
    values = []
    for point in new_points:
        value, tail = extend_by_one(tail, point)
        values.append(value)
    return np.array(values).reshape(len(values), -1), tail
