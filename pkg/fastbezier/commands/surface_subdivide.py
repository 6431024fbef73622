import sys
from pathlib import Path

import click

from fastbezier.cli_helpers import GlobalOptions
from fastbezier.harness.curve_io import subdivide_patch_file


@click.command(name="surface-subdivide")
@click.argument(
    "input_path", type=click.Path(dir_okay=False, allow_dash=True, path_type=Path)
)
@click.option(
    "-c",
    "--split",
    "c",
    type=float,
    required=True,
    help="Split parameter c, strictly inside (0, 1).",
)
@click.option(
    "--direction",
    type=click.Choice(["t", "u"]),
    default="t",
    show_default=True,
    help="Parameter to split along: t (grid rows) or u (grid columns).",
)
@click.pass_obj
def surface_subdivide_cmd(
    options: GlobalOptions, input_path: Path, c: float, direction: str
):
    """Write the patch in INPUT_PATH restricted to [0, c] along one parameter."""
    status = subdivide_patch_file(
        input_path,
        c,
        s=options.scale,
        direction=direction,
        output_path=options.out or "-",
        engine=options.engine,
    )
    if status:
        sys.exit(status)
