import sys
from pathlib import Path

import click

from fastbezier.cli_helpers import GlobalOptions
from fastbezier.harness.curve_io import derivatives_file


@click.command(name="derivatives")
@click.argument(
    "input_path", type=click.Path(dir_okay=False, allow_dash=True, path_type=Path)
)
@click.pass_obj
def derivatives_cmd(options: GlobalOptions, input_path: Path):
    """All derivatives of the curve in INPUT_PATH at both end points."""
    status = derivatives_file(
        input_path,
        s=options.scale,
        output_path=options.out or "-",
        engine=options.engine,
    )
    if status:
        sys.exit(status)
