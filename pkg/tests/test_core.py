import math
import unittest

import numpy as np
from hypothesis import given
from hypothesis import strategies as st
from numpy.testing import assert_allclose

from fastbezier.core import (
    ControlPolygon,
    RationalControlPolygon,
    SubdivisionOutcome,
    TensorPatch,
    bernstein,
    bernstein_row,
    binomial,
)
from fastbezier.errors import DomainError


class TestBernstein(unittest.TestCase):
    def test_binomial_small_values(self):
        self.assertEqual(binomial(5, 2), 10.0)
        self.assertEqual(binomial(7, 0), 1.0)
        self.assertEqual(binomial(7, 7), 1.0)
        self.assertEqual(binomial(4, 5), 0.0)
        self.assertEqual(binomial(4, -1), 0.0)

    def test_binomial_large_degree_matches_exact_integer(self):
        for n in (30, 60, 70):
            for i in (1, n // 3, n // 2):
                self.assertAlmostEqual(
                    binomial(n, i) / math.comb(n, i), 1.0, delta=1e-13
                )

    def test_bernstein_values(self):
        self.assertEqual(bernstein(2, 1, 0.5), 0.5)
        self.assertEqual(bernstein(3, 0, 0.0), 1.0)
        self.assertEqual(bernstein(3, 3, 1.0), 1.0)
        self.assertEqual(bernstein(3, 4, 0.5), 0.0)
        self.assertEqual(bernstein(3, -1, 0.5), 0.0)

    def test_row_matches_individual_polynomials(self):
        for n in (0, 1, 5, 12):
            for t in (0.0, 0.3, 0.5, 0.9, 1.0):
                expected = [bernstein(n, i, t) for i in range(n + 1)]
                assert_allclose(bernstein_row(n, t), expected, rtol=1e-13, atol=1e-300)

    def test_row_symmetry_at_dyadic_parameter(self):
        for n in (3, 8, 20):
            assert_allclose(
                bernstein_row(n, 0.25), bernstein_row(n, 0.75)[::-1], rtol=1e-15
            )

    def test_row_rejects_negative_degree(self):
        with self.assertRaises(DomainError):
            bernstein_row(-1, 0.5)


@given(n=st.integers(0, 70), t=st.floats(0.0, 1.0))
def test_partition_of_unity(n, t):
    """The Bernstein basis of every degree sums to one on [0, 1]."""
    assert abs(bernstein_row(n, t).sum() - 1.0) <= 1e-13


class TestControlPolygon(unittest.TestCase):
    def test_one_dimensional_input_is_scalar_curve(self):
        polygon = ControlPolygon([0.0, 1.0, 0.0])
        self.assertEqual(polygon.degree, 2)
        self.assertEqual(polygon.dimension, 1)
        self.assertEqual(len(polygon), 3)
        assert_allclose(polygon.coordinate(0), [0.0, 1.0, 0.0])

    def test_points_are_read_only(self):
        polygon = ControlPolygon.from_points([[0.0, 1.0], [2.0, 3.0]])
        self.assertFalse(polygon.points.flags.writeable)
        with self.assertRaises(ValueError):
            polygon.points[0, 0] = 5.0

    def test_source_array_is_copied(self):
        source = np.array([[0.0, 1.0], [2.0, 3.0]])
        polygon = ControlPolygon(source)
        source[0, 0] = 99.0
        self.assertEqual(polygon.points[0, 0], 0.0)

    def test_rejects_non_finite_and_empty(self):
        with self.assertRaises(DomainError):
            ControlPolygon([[0.0, float("nan")]])
        with self.assertRaises(DomainError):
            ControlPolygon([[0.0, float("inf")]])
        with self.assertRaises(DomainError):
            ControlPolygon(np.zeros((0, 2)))
        with self.assertRaises(DomainError):
            ControlPolygon([["a", "b"]])

    def test_reversed(self):
        polygon = ControlPolygon.from_points([[0.0, 0.0], [1.0, 2.0], [3.0, 4.0]])
        assert_allclose(polygon.reversed().points, [[3.0, 4.0], [1.0, 2.0], [0.0, 0.0]])
        self.assertEqual(polygon.to_list()[1], [1.0, 2.0])

    def test_outcome_requires_matching_segments(self):
        left = ControlPolygon([[0.0], [1.0]])
        right = ControlPolygon([[0.0], [1.0], [2.0]])
        with self.assertRaises(DomainError):
            SubdivisionOutcome(left, right, 0.5)


class TestRationalControlPolygon(unittest.TestCase):
    def test_lift_and_project_back(self):
        rpolygon = RationalControlPolygon.from_points(
            [[1.0, 0.0], [1.0, 1.0], [0.0, 1.0]], [1.0, 0.5, 2.0]
        )
        lifted = rpolygon.lifted()
        self.assertEqual(lifted.dimension, 3)
        assert_allclose(lifted.points[1], [0.5, 0.5, 0.5])
        assert_allclose(lifted.points[2], [0.0, 2.0, 2.0])
        projected = RationalControlPolygon.from_lifted(lifted)
        assert_allclose(projected.polygon.points, rpolygon.polygon.points)
        assert_allclose(projected.weights, rpolygon.weights)

    def test_rejects_non_positive_weights(self):
        with self.assertRaises(DomainError):
            RationalControlPolygon.from_points([[0.0], [1.0]], [1.0, 0.0])
        with self.assertRaises(DomainError):
            RationalControlPolygon.from_points([[0.0], [1.0]], [1.0, -2.0])

    def test_rejects_weight_count_mismatch(self):
        with self.assertRaises(DomainError):
            RationalControlPolygon.from_points([[0.0], [1.0]], [1.0, 1.0, 1.0])

    def test_reversed_keeps_weights_aligned(self):
        rpolygon = RationalControlPolygon.from_points([[0.0], [1.0], [2.0]], [1.0, 2.0, 3.0])
        reversed_polygon = rpolygon.reversed()
        assert_allclose(reversed_polygon.polygon.coordinate(0), [2.0, 1.0, 0.0])
        assert_allclose(reversed_polygon.weights, [3.0, 2.0, 1.0])


class TestTensorPatch(unittest.TestCase):
    def test_shape_accessors(self):
        patch = TensorPatch(np.zeros((4, 3, 2)))
        self.assertEqual(patch.row_degree, 3)
        self.assertEqual(patch.column_degree, 2)
        self.assertEqual(patch.dimension, 2)

    def test_scalar_grid(self):
        patch = TensorPatch([[0.0, 1.0], [2.0, 3.0]])
        self.assertEqual(patch.dimension, 1)
        assert_allclose(patch.column(1).coordinate(0), [1.0, 3.0])

    def test_transpose_and_columns(self):
        grid = np.arange(24, dtype=float).reshape(4, 3, 2)
        patch = TensorPatch(grid)
        transposed = patch.transpose()
        self.assertEqual(transposed.grid.shape, (3, 4, 2))
        assert_allclose(transposed.grid[2, 1], grid[1, 2])
        rebuilt = TensorPatch.from_columns([patch.column(j) for j in range(3)])
        assert_allclose(rebuilt.grid, grid)


if __name__ == "__main__":
    unittest.main()
