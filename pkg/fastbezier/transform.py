"""Real-input discrete Fourier transforms with precomputed plans.

Conventions: the forward transform is unnormalized, the inverse scales by 1/M,
so multiplying two spectra and inverting yields the plain cyclic convolution.
With a physical length M >= p + q - 1 that cyclic convolution equals the linear
convolution of a length-p and a length-q sequence.

Three engines sit behind the same plan interface:

``numpy``
    NumPy's pocketfft ``rfft``/``irfft`` at the smallest power of two >= L.
``radix2``
    An iterative radix-2 transform with precomputed bit-reversal and twiddle
    tables; the real input is packed into a half-length complex transform.
``bluestein``
    The chirp-z transform at exactly L points, convolving on the radix-2 kernel.
"""

import functools
import logging
import math
from dataclasses import dataclass

import numpy as np

from fastbezier import instrumentation
from fastbezier.errors import (
    DomainError,
    PlanMismatchError,
    ResourceLimitError,
    TransformLengthError,
)
from fastbezier.settings import ENGINES, settings

logger = logging.getLogger(__name__)


def next_power_of_two(n: int) -> int:
    return 1 << max(n - 1, 0).bit_length()


def _bit_reversal(n: int) -> np.ndarray:
    bits = n.bit_length() - 1
    index = np.arange(n)
    reversed_index = np.zeros(n, dtype=np.intp)
    for b in range(bits):
        reversed_index |= ((index >> b) & 1) << (bits - 1 - b)
    return reversed_index


class _Radix2Kernel:
    """Unnormalized complex DFT of power-of-two length along the last axis."""

    def __init__(self, size: int):
        self.size = size
        self.bit_reversal = _bit_reversal(size)
        twiddles = np.exp(-2j * np.pi * np.arange(size // 2) / size)
        # stage with block length 2h uses every (size / 2h)-th twiddle
        self.stage_twiddles = []
        block = 2
        while block <= size:
            self.stage_twiddles.append(twiddles[:: size // block])
            block *= 2

    def transform(self, values: np.ndarray, inverse: bool = False) -> np.ndarray:
        size = self.size
        if size == 1:
            return values.astype(np.complex128)
        batch = values.shape[:-1]
        out = values[..., self.bit_reversal].astype(np.complex128)
        block = 2
        for twiddles in self.stage_twiddles:
            half = block // 2
            blocks = out.reshape(batch + (size // block, block))
            even = blocks[..., :half]
            odd = blocks[..., half:] * (np.conj(twiddles) if inverse else twiddles)
            out = np.concatenate((even + odd, even - odd), axis=-1).reshape(
                batch + (size,)
            )
            block *= 2
        return out


class _NumpyEngine:
    name = "numpy"

    def __init__(self, physical_length: int):
        self.physical_length = physical_length

    def forward(self, values: np.ndarray) -> np.ndarray:
        return np.fft.rfft(values, n=self.physical_length, axis=-1)

    def inverse(self, bins: np.ndarray) -> np.ndarray:
        return np.fft.irfft(bins, n=self.physical_length, axis=-1)


class _Radix2RealEngine:
    name = "radix2"

    def __init__(self, physical_length: int):
        self.physical_length = physical_length
        self.half = physical_length // 2
        if physical_length >= 2:
            self.kernel = _Radix2Kernel(self.half)
            k = np.arange(self.half + 1)
            self.post_twiddles = np.exp(-2j * np.pi * k / physical_length)

    def _padded(self, values: np.ndarray) -> np.ndarray:
        padded = np.zeros(values.shape[:-1] + (self.physical_length,))
        padded[..., : values.shape[-1]] = values
        return padded

    def forward(self, values: np.ndarray) -> np.ndarray:
        x = self._padded(values)
        if self.physical_length == 1:
            return x.astype(np.complex128)
        z = self.kernel.transform(x[..., 0::2] + 1j * x[..., 1::2])
        extended = np.concatenate((z, z[..., :1]), axis=-1)
        mirrored = np.conj(extended[..., ::-1])
        even = (extended + mirrored) / 2
        odd = (extended - mirrored) / 2j
        return even + self.post_twiddles * odd

    def inverse(self, bins: np.ndarray) -> np.ndarray:
        if self.physical_length == 1:
            return bins.real.copy()
        mirrored = np.conj(bins[..., ::-1])
        even = (bins + mirrored) / 2
        odd = (bins - mirrored) / 2 * np.conj(self.post_twiddles)
        packed = (even + 1j * odd)[..., : self.half]
        z = self.kernel.transform(packed, inverse=True) / self.half
        x = np.empty(bins.shape[:-1] + (self.physical_length,))
        x[..., 0::2] = z.real
        x[..., 1::2] = z.imag
        return x


class _BluesteinEngine:
    name = "bluestein"

    def __init__(self, physical_length: int):
        length = physical_length
        self.physical_length = length
        self.kernel = _Radix2Kernel(next_power_of_two(2 * length - 1))
        n = np.arange(length)
        # n^2 mod 2L keeps the chirp phase small for large n
        self.chirp = np.exp(-1j * np.pi * ((n * n) % (2 * length)) / length)
        filt = np.zeros(self.kernel.size, dtype=np.complex128)
        filt[:length] = np.conj(self.chirp)
        if length > 1:
            filt[-(length - 1) :] = np.conj(self.chirp[1:][::-1])
        self.filter_spectrum = self.kernel.transform(filt)

    def _full_dft(self, values: np.ndarray) -> np.ndarray:
        length = self.physical_length
        work = np.zeros(values.shape[:-1] + (self.kernel.size,), dtype=np.complex128)
        work[..., :length] = values * self.chirp
        convolved = self.kernel.transform(
            self.kernel.transform(work) * self.filter_spectrum, inverse=True
        )
        return convolved[..., :length] / self.kernel.size * self.chirp

    def forward(self, values: np.ndarray) -> np.ndarray:
        x = np.zeros(values.shape[:-1] + (self.physical_length,))
        x[..., : values.shape[-1]] = values
        return self._full_dft(x)[..., : self.physical_length // 2 + 1]

    def inverse(self, bins: np.ndarray) -> np.ndarray:
        length = self.physical_length
        upper = length - bins.shape[-1]
        # Hermitian completion: X[L - k] = conj(X[k])
        tail = np.conj(bins[..., 1 : upper + 1][..., ::-1])
        full = np.concatenate((bins, tail), axis=-1)
        return np.conj(self._full_dft(np.conj(full))).real / length


_ENGINE_TYPES = {
    "numpy": _NumpyEngine,
    "radix2": _Radix2RealEngine,
    "bluestein": _BluesteinEngine,
}


@dataclass(frozen=True, eq=False)
class TransformPlan:
    """Transform length choice plus the engine tables for it."""

    logical_length: int
    physical_length: int
    engine: str
    _impl: object

    @property
    def bins(self) -> int:
        return self.physical_length // 2 + 1

    @property
    def key(self) -> tuple[int, int, str]:
        return (self.logical_length, self.physical_length, self.engine)

    @property
    def nominal_flops(self) -> int:
        """Nominal cost of one real transform of this plan: 2.5 M log2 M."""
        m = self.physical_length
        if m < 2:
            return 0
        return int(2.5 * m * math.log2(m))


@dataclass(frozen=True, eq=False)
class Spectrum:
    """Half spectrum (M // 2 + 1 complex bins) of one or more real sequences."""

    bins: np.ndarray
    plan: TransformPlan

    @property
    def rows(self) -> int:
        return self.bins.size // self.bins.shape[-1]

    def energy(self) -> float:
        """Sum of squares of the time-domain sequence, recovered from the bins."""
        m = self.plan.physical_length
        power = np.abs(self.bins) ** 2
        total = power[..., 0].sum()
        if m % 2 == 0 and m > 1:
            total += 2 * power[..., 1:-1].sum() + power[..., -1].sum()
        else:
            total += 2 * power[..., 1:].sum()
        return float(total / m)


@functools.lru_cache(maxsize=256)
def _cached_plan(logical_length: int, engine: str) -> TransformPlan:
    if engine == "bluestein":
        physical_length = logical_length
    else:
        physical_length = next_power_of_two(logical_length)
    logger.debug(
        f"Transform plan: L={logical_length}, M={physical_length}, engine={engine}"
    )
    return TransformPlan(
        logical_length=logical_length,
        physical_length=physical_length,
        engine=engine,
        _impl=_ENGINE_TYPES[engine](physical_length),
    )


def plan(logical_length: int, engine: str | None = None) -> TransformPlan:
    """Plan transforms able to hold ``logical_length`` samples without wrap-around."""
    if logical_length < 1:
        raise DomainError(f"Transform length must be at least 1, got {logical_length}")
    limit = settings.max_transform_length
    if logical_length > limit:
        raise ResourceLimitError(
            f"Transform length {logical_length} exceeds the configured maximum {limit}"
        )
    engine = engine or settings.fft_engine
    if engine not in ENGINES:
        raise DomainError(
            f"Unknown transform engine '{engine}'. Choose from {', '.join(ENGINES)}"
        )
    return _cached_plan(int(logical_length), engine)


def _count(transform_plan: TransformPlan, rows_key: str, bins: np.ndarray) -> None:
    counter = instrumentation.active()
    if counter is not None:
        rows = bins.size // bins.shape[-1]
        counter[rows_key] += rows
        counter[instrumentation.FLOPS] += rows * transform_plan.nominal_flops


def forward(transform_plan: TransformPlan, values) -> Spectrum:
    """Spectrum of ``values`` zero-padded to the plan's physical length.

    ``values`` may be a single sequence or a stack of sequences (last axis).
    """
    if not isinstance(values, np.ndarray):
        values = np.asarray(values, dtype=np.float64)
    if values.shape[-1] > transform_plan.physical_length:
        raise TransformLengthError(
            f"Sequence of length {values.shape[-1]} does not fit a transform of "
            f"length {transform_plan.physical_length}"
        )
    bins = transform_plan._impl.forward(values)
    _count(transform_plan, instrumentation.FORWARD_ROWS, bins)
    return Spectrum(bins, transform_plan)


def _same_plan(a: TransformPlan, b: TransformPlan) -> bool:
    # plans are cached, so identity is the usual case
    return a is b or a.key == b.key


def inverse(transform_plan: TransformPlan, spectrum: Spectrum) -> np.ndarray:
    """Real sequence(s) of the plan's physical length."""
    if not _same_plan(spectrum.plan, transform_plan):
        raise PlanMismatchError(
            f"Spectrum from plan {spectrum.plan.key} cannot be inverted "
            f"with plan {transform_plan.key}"
        )
    _count(transform_plan, instrumentation.INVERSE_ROWS, spectrum.bins)
    return transform_plan._impl.inverse(spectrum.bins)


def multiply_spectra(a: Spectrum, b: Spectrum) -> Spectrum:
    """Bin-wise product; a single spectrum broadcasts against a stack."""
    if not _same_plan(a.plan, b.plan):
        raise PlanMismatchError(
            f"Cannot multiply spectra of plans {a.plan.key} and {b.plan.key}"
        )
    product = Spectrum(a.bins * b.bins, a.plan)
    instrumentation.record(instrumentation.FLOPS, 6 * product.bins.size)
    return product
