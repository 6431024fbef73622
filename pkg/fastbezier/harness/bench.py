"""Timing comparison of the subdivision methods on identical inputs."""

import logging
import time
from collections.abc import Callable
from dataclasses import dataclass

from fastbezier import reference
from fastbezier.core import ControlPolygon
from fastbezier.fastsub import LEFT_METHODS, make_plan
from fastbezier.harness.corpus import ExperimentConfig, generate_curves

logger = logging.getLogger(__name__)

PER_CALL = "per-call"
AMORTIZED = "amortized"
MODES = (PER_CALL, AMORTIZED)


@dataclass(frozen=True)
class TimingRow:
    degree: int
    method: str
    mode: str
    total_seconds: float


@dataclass(frozen=True)
class TimingReport:
    rows: tuple[TimingRow, ...]

    def seconds(self, degree: int, method: str, mode: str = PER_CALL) -> float:
        for row in self.rows:
            if (row.degree, row.method, row.mode) == (degree, method, mode):
                return row.total_seconds
        raise KeyError((degree, method, mode))


def _time_runs(
    curves: list[ControlPolygon],
    splits: list[float],
    subdivide_one: Callable[[ControlPolygon, int, float], object],
) -> float:
    # warm-up on the first curve, excluded from the total
    for index, c in enumerate(splits):
        subdivide_one(curves[0], index, c)
    start = time.perf_counter()
    for polygon in curves:
        for index, c in enumerate(splits):
            subdivide_one(polygon, index, c)
    return time.perf_counter() - start


def _method_timings(
    config: ExperimentConfig,
    degree: int,
    method: str,
    curves: list[ControlPolygon],
    splits: list[float],
) -> dict[str, float]:
    if method == "decasteljau":
        seconds = _time_runs(curves, splits, lambda p, _, c: reference.subdivide(p, c))
        return {mode: seconds for mode in MODES}

    scale = config.scale_for(degree, method)
    engine = config.engine
    left = LEFT_METHODS[method]

    def per_call(polygon: ControlPolygon, _: int, c: float) -> object:
        return left(make_plan(degree, c, scale, engine), polygon)

    plans = [make_plan(degree, c, scale, engine) for c in splits]

    def amortized(polygon: ControlPolygon, index: int, c: float) -> object:
        return left(plans[index], polygon)

    return {
        PER_CALL: _time_runs(curves, splits, per_call),
        AMORTIZED: _time_runs(curves, splits, amortized),
    }


def run_bench(config: ExperimentConfig) -> TimingReport:
    """Total seconds over all curves x split points, per degree, method and mode.

    Curve generation and the warm-up pass are excluded. Runs are sequential.
    """
    rows = []
    splits = [float(c) for c in config.split_parameters]
    for degree in config.degrees:
        curves = generate_curves(config, degree)
        if not curves:
            rows.extend(
                TimingRow(degree, method, mode, 0.0)
                for method in config.methods
                for mode in MODES
            )
            continue
        for method in config.methods:
            timings = _method_timings(config, degree, method, curves, splits)
            for mode in MODES:
                rows.append(TimingRow(degree, method, mode, timings[mode]))
            logger.debug(
                f"n={degree} {method}: {timings[PER_CALL]:.3f}s per-call, "
                f"{timings[AMORTIZED]:.3f}s amortized"
            )
    return TimingReport(tuple(rows))
