import logging

import click

from fastbezier.cli_helpers import GlobalOptions
from fastbezier.harness.accuracy import run_accuracy
from fastbezier.harness.reports import accuracy_csv, accuracy_markdown, write_report

logger = logging.getLogger(__name__)


@click.command(name="accuracy")
@click.pass_obj
def accuracy_cmd(options: GlobalOptions):
    """Digits of accuracy of each method against de Casteljau.

    Every coordinate of every left-segment control point is scored; the report
    lists the minimum and mean per degree and method.
    """
    config = options.experiment_config()
    logger.info(
        f"🎯 Accuracy run: {len(config.degrees)} degrees, "
        f"{config.curves_per_degree} curves x {config.split_points} splits"
    )
    report = run_accuracy(config)
    text = accuracy_markdown(report) if options.output_format == "md" else accuracy_csv(report)
    target = options.report_path("accuracy")
    write_report(target, text)
    if target != "-":
        logger.info(f"✅ Wrote {target}")
