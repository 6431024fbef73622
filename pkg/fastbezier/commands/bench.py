import logging

import click

from fastbezier.cli_helpers import GlobalOptions
from fastbezier.harness.bench import run_bench
from fastbezier.harness.reports import bench_csv, bench_markdown, write_report

logger = logging.getLogger(__name__)


@click.command(name="bench")
@click.pass_obj
def bench_cmd(options: GlobalOptions):
    """Total running time of each method over the same random curves.

    Both timing modes are reported: a fresh plan per split point, and plans
    built once and reused for every curve.
    """
    config = options.experiment_config()
    logger.info(
        f"⏱️  Timing run: {len(config.degrees)} degrees, "
        f"{config.curves_per_degree} curves x {config.split_points} splits"
    )
    report = run_bench(config)
    text = bench_markdown(report) if options.output_format == "md" else bench_csv(report)
    target = options.report_path("bench")
    write_report(target, text)
    if target != "-":
        logger.info(f"✅ Wrote {target}")
