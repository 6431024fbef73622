"""Opt-in operation counters.

Numerical routines report what they do through :func:`record`. Nothing is
stored unless a :func:`counting` block is active in the current context, so
the counters cost a single context-variable lookup otherwise.
"""

from collections import Counter
from collections.abc import Iterator
from contextlib import contextmanager
from contextvars import ContextVar

FLOPS = "flops"
FORWARD_ROWS = "forward_rows"
INVERSE_ROWS = "inverse_rows"
BETA_SPECTRA = "beta_spectra"

_active: ContextVar["OperationCounter | None"] = ContextVar(
    "fastbezier_counter", default=None
)


class OperationCounter(Counter):
    """Named event totals collected while a :func:`counting` block runs."""

    @property
    def flops(self) -> int:
        return self[FLOPS]


def active() -> OperationCounter | None:
    """The counter of the enclosing :func:`counting` block, if any."""
    return _active.get()


def record(name: str, amount: int = 1) -> None:
    counter = _active.get()
    if counter is not None:
        counter[name] += amount


@contextmanager
def counting() -> Iterator[OperationCounter]:
    counter = OperationCounter()
    token = _active.set(counter)
    try:
        yield counter
    finally:
        _active.reset(token)
