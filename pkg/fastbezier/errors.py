class FastBezierError(Exception):
    """Base class for all errors raised by fastbezier."""

    exit_code = 1


class DomainError(FastBezierError, ValueError):
    """A parameter lies outside the domain an operation accepts."""

    exit_code = 3


class DegreeMismatchError(DomainError):
    """The input degree differs from the degree a plan was built for."""


class PlanMismatchError(FastBezierError, ValueError):
    """Spectra or sequences come from incompatible transform plans."""

    exit_code = 4


class TransformLengthError(FastBezierError, ValueError):
    """A sequence does not fit into the physical transform length."""

    exit_code = 4


class ResourceLimitError(FastBezierError):
    """A requested transform length exceeds the configured maximum."""

    exit_code = 4


class NumericFailure(FastBezierError, ArithmeticError):
    """A computation produced non-finite or otherwise unusable values."""

    exit_code = 4


class DegenerateWeightError(NumericFailure):
    """A computed rational weight is non-positive or non-finite."""


class TailExhaustedError(FastBezierError):
    """All retained convolution coefficients have been consumed."""

    exit_code = 4


class CurveFileError(FastBezierError):
    """An input file could not be parsed into a curve or patch."""

    exit_code = 2


class OutputFileError(FastBezierError):
    """A result file could not be opened or written."""

    exit_code = 2
