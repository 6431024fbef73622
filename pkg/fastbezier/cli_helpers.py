import functools
import logging
import sys
import traceback
from dataclasses import dataclass
from pathlib import Path

import click

from fastbezier.errors import DomainError, FastBezierError
from fastbezier.harness.corpus import DEFAULT_DEGREES, DEFAULT_METHODS, ExperimentConfig
from fastbezier.logging import configure_logging
from fastbezier.settings import settings

logger = logging.getLogger(__name__)


def parse_degrees(ctx, param, value: str | None) -> tuple[int, ...] | None:
    """Parse a degree list such as ``2-20,25,30`` into a tuple of integers."""
    if value is None:
        return None
    degrees: list[int] = []
    for part in value.split(","):
        part = part.strip()
        if not part:
            continue
        try:
            if "-" in part:
                low, high = (int(bound) for bound in part.split("-", 1))
                if high < low:
                    raise ValueError
                degrees.extend(range(low, high + 1))
            else:
                degrees.append(int(part))
        except ValueError:
            raise click.BadParameter(
                f"Invalid degree entry '{part}'. Use integers or ranges like 2-20"
            ) from None
    if not degrees:
        raise click.BadParameter("At least one degree is required")
    return tuple(dict.fromkeys(degrees))


@dataclass(frozen=True)
class GlobalOptions:
    """Options given on the root command, shared by every subcommand."""

    seed: int = 0
    scale: float | None = None
    methods: tuple[str, ...] = ()
    degrees: tuple[int, ...] | None = None
    count: int | None = None
    splits: int | None = None
    dimension: int = 2
    output_format: str = "csv"
    out: str | None = None
    engine: str | None = None

    @property
    def method(self) -> str:
        """The single method used by per-file commands."""
        if len(self.methods) > 1:
            raise DomainError(
                f"This command takes one --method, got {', '.join(self.methods)}"
            )
        return self.methods[0] if self.methods else "fft"

    def experiment_config(self) -> ExperimentConfig:
        defaults = ExperimentConfig()
        return ExperimentConfig(
            degrees=self.degrees or DEFAULT_DEGREES,
            curves_per_degree=(
                defaults.curves_per_degree if self.count is None else self.count
            ),
            split_points=defaults.split_points if self.splits is None else self.splits,
            dimension=self.dimension,
            seed=self.seed,
            scale=self.scale,
            methods=self.methods or DEFAULT_METHODS,
            engine=self.engine,
        )

    def report_path(self, stem: str) -> str:
        """Where a report goes: ``--out`` (``-`` for stdout) or the output dir."""
        if self.out is not None:
            return self.out
        suffix = "md" if self.output_format == "md" else "csv"
        return str(Path(settings.output_dir) / f"{stem}.{suffix}")


def common_command_wrapper(command_to_wrap: click.Command) -> click.Command:
    """
    Wraps an existing Click command to add common functionality:
    - A --verbose option for detailed logging.
    - fastbezier errors reported as one log line and the error's exit code.
    This function modifies the command_to_wrap in-place.
    """
    original_callback = command_to_wrap.callback
    if not original_callback:
        raise ValueError(
            f"Command '{command_to_wrap.name or 'Unnamed'}' has no callback to wrap."
        )

    @functools.wraps(original_callback)
    def new_wrapped_callback(**kwargs):
        verbose_value = kwargs.pop("verbose", False)

        log_level = logging.DEBUG if verbose_value else logging.INFO
        configure_logging(level=log_level)

        try:
            return original_callback(**kwargs)
        except FastBezierError as e:
            logger.error(str(e))
            if verbose_value:
                click.secho("\nDebug traceback:", fg="yellow", err=True)
                click.secho(traceback.format_exc(), fg="yellow", err=True)
            sys.exit(e.exit_code)

    command_to_wrap.callback = new_wrapped_callback

    if not any(
        isinstance(p, click.Option) and p.name == "verbose"
        for p in command_to_wrap.params
    ):
        verbose_option = click.Option(
            ["--verbose"],
            is_flag=True,
            help="Enable verbose output.",
        )
        command_to_wrap.params.append(verbose_option)

    return command_to_wrap
