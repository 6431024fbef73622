"""Line-oriented JSON curve and patch files, and the file-level jobs behind the CLI.

Each line holds one JSON object:

- curve: ``{"dimension": d, "points": [[...], ...], "weights": [...]}``
  (``weights`` optional; present means a rational curve)
- patch: ``{"dimension": d, "grid": [[[...], ...], ...]}`` (rows along t)

Doubles are written in shortest round-trip form, so reading back what was
written reproduces the same bits.
"""

import json
import logging
from pathlib import Path
from typing import Any

import click
import numpy as np

from fastbezier import calculus, fastsub, rational, surface
from fastbezier.core import ControlPolygon, RationalControlPolygon, TensorPatch
from fastbezier.errors import CurveFileError, FastBezierError, OutputFileError

logger = logging.getLogger(__name__)


def _read_object(path: Path | str) -> dict[str, Any]:
    try:
        with click.open_file(str(path), "r", encoding="utf-8") as f:
            lines = [line for line in f if line.strip()]
    except OSError as e:
        raise CurveFileError(f"Could not read {path}: {e}") from e
    if not lines:
        raise CurveFileError(f"{path} is empty")
    try:
        data = json.loads(lines[0])
    except json.JSONDecodeError as e:
        raise CurveFileError(f"{path}: invalid JSON on line 1: {e}") from e
    if not isinstance(data, dict):
        raise CurveFileError(f"{path}: expected a JSON object on line 1")
    return data


def _all_numbers(value: Any) -> bool:
    if isinstance(value, list):
        return all(_all_numbers(item) for item in value)
    # JSON true/false load as bool, a subclass of int
    return isinstance(value, (int, float)) and not isinstance(value, bool)


def _numeric_array(value: Any, ndim: int, what: str) -> np.ndarray:
    if not _all_numbers(value):
        raise CurveFileError(f"'{what}' must contain only numbers")
    try:
        array = np.array(value, dtype=np.float64)
    except (TypeError, ValueError) as e:
        raise CurveFileError(f"'{what}' must form a regular nested array") from e
    if array.ndim != ndim or array.size == 0:
        raise CurveFileError(f"'{what}' must be a non-empty {ndim}-level nested array")
    return array


def _dimension(data: dict[str, Any], array: np.ndarray, what: str) -> int:
    dimension = data.get("dimension")
    if not isinstance(dimension, int) or isinstance(dimension, bool) or dimension < 1:
        raise CurveFileError("'dimension' must be a positive integer")
    if array.shape[-1] != dimension:
        raise CurveFileError(
            f"'{what}' entries have {array.shape[-1]} coordinates, expected {dimension}"
        )
    return dimension


def parse_curve(data: dict[str, Any]) -> ControlPolygon | RationalControlPolygon:
    if "points" not in data:
        raise CurveFileError("Curve object needs a 'points' field")
    points = _numeric_array(data["points"], 2, "points")
    _dimension(data, points, "points")
    polygon = ControlPolygon(points)
    if data.get("weights") is None:
        return polygon
    weights = _numeric_array(data["weights"], 1, "weights")
    return RationalControlPolygon(polygon, weights)


def parse_patch(data: dict[str, Any]) -> TensorPatch:
    if "grid" not in data:
        raise CurveFileError("Patch object needs a 'grid' field")
    grid = _numeric_array(data["grid"], 3, "grid")
    _dimension(data, grid, "grid")
    return TensorPatch(grid)


def read_curve(path: Path | str) -> ControlPolygon | RationalControlPolygon:
    return parse_curve(_read_object(path))


def read_patch(path: Path | str) -> TensorPatch:
    return parse_patch(_read_object(path))


def curve_record(
    curve: ControlPolygon | RationalControlPolygon, **extra: Any
) -> dict[str, Any]:
    record: dict[str, Any] = dict(extra)
    if isinstance(curve, RationalControlPolygon):
        record.update(
            dimension=curve.dimension,
            points=curve.polygon.to_list(),
            weights=curve.weights.tolist(),
        )
    else:
        record.update(dimension=curve.dimension, points=curve.to_list())
    return record


def patch_record(patch: TensorPatch, **extra: Any) -> dict[str, Any]:
    return {**extra, "dimension": patch.dimension, "grid": patch.grid.tolist()}


def write_records(path: Path | str, records: list[dict[str, Any]]) -> None:
    try:
        with click.open_file(str(path), "w", encoding="utf-8") as f:
            for record in records:
                f.write(json.dumps(record) + "\n")
    except OSError as e:
        raise OutputFileError(f"Could not write {path}: {e}") from e


def _run_job(job, *args) -> int:
    try:
        job(*args)
    except FastBezierError as e:
        logger.error(str(e))
        return e.exit_code
    return 0


def _subdivide(
    input_path: Path | str,
    c: float,
    s: float | None,
    method: str,
    output_path: Path | str,
    engine: str | None,
) -> None:
    curve = read_curve(input_path)
    if isinstance(curve, RationalControlPolygon):
        left, right = rational.subdivide_rational(curve, c, method, s, engine)
    else:
        outcome = fastsub.subdivide(curve, c, method, s, engine)
        left, right = outcome.left, outcome.right
    logger.debug(f"Subdivided degree-{left.degree} curve at c={c} with {method}")
    write_records(
        output_path,
        [curve_record(left, segment="left"), curve_record(right, segment="right")],
    )


def subdivide_file(
    input_path: Path | str,
    c: float,
    s: float | None = None,
    method: str = "fft",
    output_path: Path | str = "-",
    engine: str | None = None,
) -> int:
    """Write the left and right segments of the curve in ``input_path``.

    Returns the process exit status: 0 success, 2 unreadable input, 3 domain
    error, 4 numeric failure.
    """
    return _run_job(_subdivide, input_path, c, s, method, output_path, engine)


def _derivatives(
    input_path: Path | str,
    s: float | None,
    output_path: Path | str,
    engine: str | None,
) -> None:
    curve = read_curve(input_path)
    if isinstance(curve, RationalControlPolygon):
        raise CurveFileError("Derivatives are computed for polynomial curves only")
    at_zero = calculus.derivatives_at_zero(curve, s, engine)
    at_one = calculus.derivatives_at_one(curve, s, engine)
    write_records(
        output_path,
        [
            {"at": 0, "derivatives": at_zero.tolist()},
            {"at": 1, "derivatives": at_one.tolist()},
        ],
    )


def derivatives_file(
    input_path: Path | str,
    s: float | None = None,
    output_path: Path | str = "-",
    engine: str | None = None,
) -> int:
    return _run_job(_derivatives, input_path, s, output_path, engine)


def _subdivide_patch(
    input_path: Path | str,
    c: float,
    s: float | None,
    direction: str,
    output_path: Path | str,
    engine: str | None,
) -> None:
    patch = read_patch(input_path)
    if direction == "u":
        plan = fastsub.make_plan(patch.column_degree, c, s, engine)
        left = surface.subdivide_patch_left_u(plan, patch)
    else:
        plan = fastsub.make_plan(patch.row_degree, c, s, engine)
        left = surface.subdivide_patch_left(plan, patch)
    write_records(output_path, [patch_record(left, direction=direction)])


def subdivide_patch_file(
    input_path: Path | str,
    c: float,
    s: float | None = None,
    direction: str = "t",
    output_path: Path | str = "-",
    engine: str | None = None,
) -> int:
    return _run_job(_subdivide_patch, input_path, c, s, direction, output_path, engine)
