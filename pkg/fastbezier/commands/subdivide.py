import logging
import sys
from pathlib import Path

import click

from fastbezier.cli_helpers import GlobalOptions
from fastbezier.harness.curve_io import subdivide_file

logger = logging.getLogger(__name__)


@click.command(name="subdivide")
@click.argument(
    "input_path", type=click.Path(dir_okay=False, allow_dash=True, path_type=Path)
)
@click.option(
    "-c",
    "--split",
    "c",
    type=float,
    required=True,
    help="Split parameter c in [0, 1].",
)
@click.pass_obj
def subdivide_cmd(options: GlobalOptions, input_path: Path, c: float):
    """Split the curve in INPUT_PATH at c and write both segments.

    Rational curves (objects with a 'weights' field) are subdivided through
    their projective lift. The output has one JSON line per segment.
    """
    status = subdivide_file(
        input_path,
        c,
        s=options.scale,
        method=options.method,
        output_path=options.out or "-",
        engine=options.engine,
    )
    if status:
        sys.exit(status)
    if options.out and options.out != "-":
        logger.info(f"✅ Wrote segments to {options.out}")
