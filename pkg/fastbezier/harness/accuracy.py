"""Digits-of-accuracy statistics against the de Casteljau oracle."""

import logging
import math
from dataclasses import dataclass

import numpy as np

from fastbezier import reference
from fastbezier.errors import FastBezierError
from fastbezier.fastsub import LEFT_METHODS, make_plan
from fastbezier.harness.corpus import ExperimentConfig, generate_curves

logger = logging.getLogger(__name__)

# Exact matches are credited one digit beyond double precision.
MAX_DIGITS = 17.0


def digits_of_accuracy(exact: float, computed: float) -> float:
    """Correct significant decimal digits of ``computed``, clamped to [0, 17].

    Relative error is used unless ``exact`` is zero, then the absolute error.
    """
    if computed == exact:
        return MAX_DIGITS
    error = abs(computed - exact)
    if exact != 0.0:
        error /= abs(exact)
    if math.isnan(error):
        return 0.0
    return min(MAX_DIGITS, max(0.0, -math.log10(error)))


def digits_array(exact: np.ndarray, computed: np.ndarray) -> np.ndarray:
    """Element-wise :func:`digits_of_accuracy`."""
    exact = np.asarray(exact, dtype=np.float64)
    error = np.abs(np.asarray(computed, dtype=np.float64) - exact)
    relative = error / np.where(exact != 0.0, np.abs(exact), 1.0)
    with np.errstate(divide="ignore"):
        digits = -np.log10(relative)
    digits = np.nan_to_num(digits, nan=0.0, posinf=MAX_DIGITS)
    return np.clip(digits, 0.0, MAX_DIGITS)


@dataclass(frozen=True)
class AccuracyRow:
    degree: int
    method: str
    min_digits: float
    mean_digits: float
    error_count: int


@dataclass(frozen=True)
class AccuracyReport:
    rows: tuple[AccuracyRow, ...]

    def row(self, degree: int, method: str) -> AccuracyRow:
        for row in self.rows:
            if row.degree == degree and row.method == method:
                return row
        raise KeyError((degree, method))


class _DigitsAccumulator:
    def __init__(self) -> None:
        self.minimum = MAX_DIGITS
        self.total = 0.0
        self.count = 0
        self.errors = 0

    def add(self, digits: np.ndarray) -> None:
        self.minimum = min(self.minimum, float(digits.min()))
        self.total += float(digits.sum())
        self.count += digits.size

    def row(self, degree: int, method: str) -> AccuracyRow:
        if self.count == 0:
            return AccuracyRow(degree, method, 0.0, 0.0, self.errors)
        return AccuracyRow(
            degree, method, self.minimum, self.total / self.count, self.errors
        )


def run_accuracy(config: ExperimentConfig) -> AccuracyReport:
    """The digits protocol: every coordinate of every left-segment point."""
    rows = []
    splits = config.split_parameters
    for degree in config.degrees:
        curves = generate_curves(config, degree)
        stats = {method: _DigitsAccumulator() for method in config.methods}
        for c in splits:
            plans = {}
            for method in config.methods:
                if method == "decasteljau":
                    continue
                try:
                    plans[method] = make_plan(
                        degree, c, config.scale_for(degree, method), config.engine
                    )
                except FastBezierError as e:
                    logger.debug(f"n={degree} c={c} {method}: plan failed: {e}")
                    stats[method].errors += len(curves)
            for polygon in curves:
                exact = reference.subdivide(polygon, c).left.points
                for method in config.methods:
                    if method == "decasteljau":
                        stats[method].add(digits_array(exact, exact))
                        continue
                    if method not in plans:
                        continue
                    try:
                        computed = LEFT_METHODS[method](plans[method], polygon).points
                    except FastBezierError as e:
                        logger.debug(f"n={degree} c={c} {method}: {e}")
                        stats[method].errors += 1
                        continue
                    stats[method].add(digits_array(exact, computed))
        for method in config.methods:
            row = stats[method].row(degree, method)
            logger.debug(
                f"n={degree} {method}: min {row.min_digits:.2f}, "
                f"mean {row.mean_digits:.2f}, errors {row.error_count}"
            )
            rows.append(row)
    return AccuracyReport(tuple(rows))
