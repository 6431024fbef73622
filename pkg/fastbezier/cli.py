import click

from fastbezier import __version__
from fastbezier.cli_helpers import GlobalOptions, common_command_wrapper, parse_degrees
from fastbezier.commands.accuracy import accuracy_cmd
from fastbezier.commands.bench import bench_cmd
from fastbezier.commands.derivatives import derivatives_cmd
from fastbezier.commands.subdivide import subdivide_cmd
from fastbezier.commands.surface_subdivide import surface_subdivide_cmd
from fastbezier.fastsub import METHODS
from fastbezier.settings import ENGINES


def print_version(ctx, param, value):
    if not value or ctx.resilient_parsing:
        return
    click.echo(f"fastbezier {__version__}")
    ctx.exit()


@click.group()
@click.option(
    "--version",
    is_flag=True,
    callback=print_version,
    expose_value=False,
    is_eager=True,
    help="Show the version and exit.",
)
@click.option(
    "--seed",
    type=click.IntRange(min=0),
    default=0,
    show_default=True,
    help="Seed of the random curve corpus.",
)
@click.option(
    "--scale",
    type=float,
    default=None,
    help="Fixed scaling factor s. Defaults to 0.375 n + 0.9 per degree.",
)
@click.option(
    "--method",
    "methods",
    type=click.Choice(METHODS),
    multiple=True,
    help="Subdivision method (can be used multiple times for bench and accuracy).",
)
@click.option(
    "--degrees",
    callback=parse_degrees,
    default=None,
    help="Degrees to run, e.g. 2-20,25,30. Defaults to the full experiment list.",
)
@click.option(
    "--count",
    type=click.IntRange(min=0),
    default=None,
    help="Random curves per degree (default 1000).",
)
@click.option(
    "--splits",
    type=click.IntRange(min=1),
    default=None,
    help="Split points per curve, t_i = i/(k+1) (default 499).",
)
@click.option(
    "--dim",
    "dimension",
    type=click.IntRange(min=1),
    default=2,
    show_default=True,
    help="Dimension of the random curves.",
)
@click.option(
    "--format",
    "output_format",
    type=click.Choice(["csv", "md"]),
    default="csv",
    show_default=True,
    help="Report format for bench and accuracy.",
)
@click.option(
    "--out",
    type=click.Path(dir_okay=False, allow_dash=True),
    default=None,
    help="Output file ('-' for stdout).",
)
@click.option(
    "--engine",
    type=click.Choice(ENGINES),
    default=None,
    help="FFT engine. Defaults to FASTBEZIER_FFT_ENGINE or numpy.",
)
@click.pass_context
def main(ctx, seed, scale, methods, degrees, count, splits, dimension, output_format, out, engine):
    """fastbezier - fast Bézier curve and patch subdivision with an accuracy and timing harness."""
    ctx.obj = GlobalOptions(
        seed=seed,
        scale=scale,
        methods=tuple(methods),
        degrees=degrees,
        count=count,
        splits=splits,
        dimension=dimension,
        output_format=output_format,
        out=out,
        engine=engine,
    )


# Register commands
main.add_command(common_command_wrapper(subdivide_cmd))
main.add_command(common_command_wrapper(bench_cmd))
main.add_command(common_command_wrapper(accuracy_cmd))
main.add_command(common_command_wrapper(derivatives_cmd))
main.add_command(common_command_wrapper(surface_subdivide_cmd))


if __name__ == "__main__":
    main()
