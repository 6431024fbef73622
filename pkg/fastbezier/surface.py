"""Left-part subdivision of rectangular tensor-product patches.

V_ij = sum_k B^i_k(c) W_kj: every column of the control net is subdivided as a
curve along t. All columns and coordinates share the plan's single β spectrum.
"""

import numpy as np

from fastbezier import reference
from fastbezier.core import ControlPolygon, TensorPatch
from fastbezier.errors import DegreeMismatchError
from fastbezier.fastsub import SubdivisionPlan, subdivide_left_fft


def subdivide_patch_left(plan: SubdivisionPlan, patch: TensorPatch) -> TensorPatch:
    """Control net of S_nm([0, c], [0, 1])."""
    if patch.row_degree != plan.degree:
        raise DegreeMismatchError(
            f"Plan built for degree {plan.degree}, patch has row degree "
            f"{patch.row_degree}"
        )
    columns = [
        subdivide_left_fft(plan, patch.column(j))
        for j in range(patch.column_degree + 1)
    ]
    return TensorPatch.from_columns(columns)


def subdivide_patch_left_u(plan: SubdivisionPlan, patch: TensorPatch) -> TensorPatch:
    """Control net of S_nm([0, 1], [0, c]); ``plan`` is built for degree m."""
    return subdivide_patch_left(plan, patch.transpose()).transpose()


def evaluate_patch(patch: TensorPatch, t: float, u: float) -> np.ndarray:
    """S_nm(t, u) by de Casteljau along u in every row, then along t."""
    reference.check_unit_parameter(t, "t")
    row_points = [
        reference.evaluate(ControlPolygon(patch.grid[i]), u)
        for i in range(patch.row_degree + 1)
    ]
    return reference.evaluate(ControlPolygon(np.array(row_points)), t)
