"""CSV and Markdown renderings of accuracy and timing reports.

The CSV column sets are fixed:

- accuracy: degree, method, min_digits, mean_digits, error_count
- bench: degree, method, mode, total_seconds
"""

import csv
import io
from pathlib import Path

import click
from jinja2 import Environment, PackageLoader

from fastbezier.errors import OutputFileError
from fastbezier.harness.accuracy import AccuracyReport
from fastbezier.harness.bench import MODES, TimingReport

ACCURACY_COLUMNS = ("degree", "method", "min_digits", "mean_digits", "error_count")
BENCH_COLUMNS = ("degree", "method", "mode", "total_seconds")


def create_jinja_environment() -> Environment:
    return Environment(
        loader=PackageLoader("fastbezier.harness", "templates"),
        keep_trailing_newline=True,
        autoescape=False,  # Markdown, not HTML
    )


def _ordered(values) -> list:
    return list(dict.fromkeys(values))


def accuracy_csv(report: AccuracyReport) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(ACCURACY_COLUMNS)
    for row in report.rows:
        writer.writerow(
            [
                row.degree,
                row.method,
                f"{row.min_digits:.4f}",
                f"{row.mean_digits:.4f}",
                row.error_count,
            ]
        )
    return buffer.getvalue()


def bench_csv(report: TimingReport) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(BENCH_COLUMNS)
    for row in report.rows:
        writer.writerow([row.degree, row.method, row.mode, f"{row.total_seconds:.6f}"])
    return buffer.getvalue()


def accuracy_markdown(report: AccuracyReport) -> str:
    template = create_jinja_environment().get_template("accuracy.md.j2")
    return template.render(
        degrees=_ordered(row.degree for row in report.rows),
        methods=_ordered(row.method for row in report.rows),
        cells={(row.degree, row.method): row for row in report.rows},
    )


def bench_markdown(report: TimingReport) -> str:
    """One table per timing mode, the fastest method of each degree in bold."""
    cells = {(row.degree, row.method, row.mode): row.total_seconds for row in report.rows}
    fastest: dict[tuple[int, str], float] = {}
    for (degree, _, mode), seconds in cells.items():
        key = (degree, mode)
        fastest[key] = min(seconds, fastest.get(key, seconds))
    template = create_jinja_environment().get_template("bench.md.j2")
    return template.render(
        modes=[mode for mode in MODES if any(row.mode == mode for row in report.rows)],
        degrees=_ordered(row.degree for row in report.rows),
        methods=_ordered(row.method for row in report.rows),
        cells=cells,
        fastest=fastest,
    )


def write_report(target: Path | str, text: str) -> None:
    """Write a rendered report to a path, or to stdout for ``-``."""
    try:
        with click.open_file(str(target), "w", encoding="utf-8") as f:
            f.write(text)
    except OSError as e:
        raise OutputFileError(f"Could not write {target}: {e}") from e
