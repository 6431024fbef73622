import os
import unittest
from unittest.mock import patch

import numpy as np
import pytest
from numpy.testing import assert_allclose

from fastbezier import instrumentation, transform
from fastbezier.errors import (
    DomainError,
    PlanMismatchError,
    ResourceLimitError,
    TransformLengthError,
)
from fastbezier.settings import ENGINES
from tests.curves import relative_error


def fft_convolve(a: np.ndarray, b: np.ndarray, engine: str) -> np.ndarray:
    length = len(a) + len(b) - 1
    tp = transform.plan(length, engine)
    product = transform.multiply_spectra(transform.forward(tp, a), transform.forward(tp, b))
    return transform.inverse(tp, product)[:length]


class TestPlans(unittest.TestCase):
    def test_next_power_of_two(self):
        self.assertEqual(transform.next_power_of_two(1), 1)
        self.assertEqual(transform.next_power_of_two(2), 2)
        self.assertEqual(transform.next_power_of_two(5), 8)
        self.assertEqual(transform.next_power_of_two(8), 8)
        self.assertEqual(transform.next_power_of_two(129), 256)

    def test_physical_lengths(self):
        self.assertEqual(transform.plan(9, "numpy").physical_length, 16)
        self.assertEqual(transform.plan(9, "radix2").physical_length, 16)
        self.assertEqual(transform.plan(9, "bluestein").physical_length, 9)
        self.assertEqual(transform.plan(9, "numpy").bins, 9)

    def test_plans_are_cached_per_length_and_engine(self):
        self.assertIs(transform.plan(21, "radix2"), transform.plan(21, "radix2"))
        self.assertIsNot(transform.plan(21, "radix2"), transform.plan(21, "numpy"))

    def test_invalid_requests(self):
        with self.assertRaises(DomainError):
            transform.plan(0)
        with self.assertRaises(DomainError):
            transform.plan(8, "fftw")

    @patch.dict(os.environ, {"FASTBEZIER_MAX_TRANSFORM_LENGTH": "64"})
    def test_length_limit_from_environment(self):
        transform.plan(64, "numpy")
        with self.assertRaises(ResourceLimitError):
            transform.plan(65, "numpy")

    @patch.dict(os.environ, {"FASTBEZIER_FFT_ENGINE": "bluestein"})
    def test_engine_from_environment(self):
        self.assertEqual(transform.plan(11).engine, "bluestein")

    def test_sequence_longer_than_plan(self):
        tp = transform.plan(4, "numpy")
        with self.assertRaises(TransformLengthError):
            transform.forward(tp, np.ones(5))

    def test_mismatched_plans(self):
        a = transform.forward(transform.plan(7, "numpy"), np.ones(3))
        b = transform.forward(transform.plan(17, "numpy"), np.ones(3))
        with self.assertRaises(PlanMismatchError):
            transform.multiply_spectra(a, b)
        with self.assertRaises(PlanMismatchError):
            transform.inverse(transform.plan(17, "numpy"), a)
        c = transform.forward(transform.plan(7, "radix2"), np.ones(3))
        with self.assertRaises(PlanMismatchError):
            transform.multiply_spectra(a, c)


class TestEngines(unittest.TestCase):
    def setUp(self) -> None:
        self.rng = np.random.default_rng(11)

    def test_half_spectrum_matches_numpy_reference(self):
        for engine in ENGINES:
            for length in (1, 2, 3, 8, 13, 100, 257):
                tp = transform.plan(length, engine)
                x = self.rng.uniform(-1.0, 1.0, size=(3, length))
                expected = np.fft.rfft(x, n=tp.physical_length, axis=-1)
                spectrum = transform.forward(tp, x)
                self.assertEqual(spectrum.bins.shape, (3, tp.bins))
                assert_allclose(spectrum.bins, expected, atol=1e-12 * length)

    def test_small_worked_examples(self):
        for engine in ENGINES:
            four = transform.plan(4, engine)
            assert_allclose(
                transform.forward(four, [1.0, 2.0]).bins, [3, 1 - 2j, -1], atol=1e-14
            )
            ones = transform.forward(four, [1.0, 1.0])
            square = transform.inverse(four, transform.multiply_spectra(ones, ones))
            assert_allclose(square, [1, 2, 1, 0], atol=1e-14)

            eight = transform.plan(8, engine)
            product = transform.multiply_spectra(
                transform.forward(eight, [1.0, 0.0, -1.0]),
                transform.forward(eight, [1.0, 0.0, 1.0]),
            )
            assert_allclose(
                transform.inverse(eight, product), [1, 0, 0, 0, -1, 0, 0, 0], atol=1e-14
            )

    def test_roundtrip(self):
        for engine in ENGINES:
            for length in (1, 2, 5, 64, 99, 1025):
                tp = transform.plan(length, engine)
                x = self.rng.uniform(-1.0, 1.0, size=length)
                back = transform.inverse(tp, transform.forward(tp, x))
                self.assertEqual(back.shape, (tp.physical_length,))
                self.assertLessEqual(relative_error(x, back[:length]), 1e-12)
                assert_allclose(back[length:], 0.0, atol=1e-12)

    def test_energy_is_preserved(self):
        for engine in ENGINES:
            x = self.rng.uniform(-1.0, 1.0, size=9)
            spectrum = transform.forward(transform.plan(9, engine), x)
            self.assertAlmostEqual(spectrum.energy(), float(np.sum(x * x)), places=12)

    def test_single_spectrum_broadcasts_against_stack(self):
        tp = transform.plan(9, "radix2")
        stack = transform.forward(tp, self.rng.uniform(size=(4, 5)))
        single = transform.forward(tp, self.rng.uniform(size=5))
        self.assertEqual(transform.multiply_spectra(stack, single).rows, 4)

    def test_every_engine_convolves(self):
        for engine in ENGINES:
            for _ in range(50):
                a = self.rng.uniform(0.0, 1.0, size=self.rng.integers(1, 300))
                b = self.rng.uniform(0.0, 1.0, size=self.rng.integers(1, 300))
                self.assertLessEqual(
                    relative_error(np.convolve(a, b), fft_convolve(a, b, engine)),
                    1e-11,
                )


def test_fft_convolution_matches_direct_convolution():
    """1000 random coefficient pairs with products up to 2047 terms."""
    rng = np.random.default_rng(5)
    for _ in range(1000):
        a = rng.uniform(0.0, 1.0, size=rng.integers(1, 1025))
        b = rng.uniform(0.0, 1.0, size=rng.integers(1, 1025))
        assert relative_error(np.convolve(a, b), fft_convolve(a, b, "numpy")) <= 1e-11


@pytest.mark.parametrize("engine", ENGINES)
def test_transforms_are_counted(engine):
    tp = transform.plan(10, engine)
    with instrumentation.counting() as counter:
        spectrum = transform.forward(tp, np.ones((3, 10)))
        transform.inverse(tp, spectrum)
    assert counter[instrumentation.FORWARD_ROWS] == 3
    assert counter[instrumentation.INVERSE_ROWS] == 3
    assert counter.flops == 6 * tp.nominal_flops


def test_nothing_is_counted_outside_a_block():
    tp = transform.plan(10, "numpy")
    with instrumentation.counting() as counter:
        pass
    transform.forward(tp, np.ones(10))
    assert counter.flops == 0


if __name__ == "__main__":
    unittest.main()
