import json
import os
import tempfile
import unittest
from pathlib import Path
from unittest.mock import patch

import click
from click.testing import CliRunner

from fastbezier.cli import main
from fastbezier.cli_helpers import GlobalOptions, parse_degrees
from fastbezier.errors import DomainError


class TestCli(unittest.TestCase):
    def setUp(self) -> None:
        self.temp_dir = tempfile.TemporaryDirectory()
        self.root = Path(self.temp_dir.name)
        self.runner = CliRunner()
        self.curve = self.root / "curve.json"
        self.curve.write_text(
            json.dumps({"dimension": 1, "points": [[0.0], [1.0], [0.0]]}) + "\n",
            encoding="utf-8",
        )

    def tearDown(self) -> None:
        self.temp_dir.cleanup()

    def test_version(self):
        result = self.runner.invoke(main, ["--version"])
        self.assertEqual(result.exit_code, 0)
        self.assertTrue(result.output.startswith("fastbezier "))

    def test_subdivide_to_stdout(self):
        result = self.runner.invoke(main, ["subdivide", str(self.curve), "-c", "0.5"])
        self.assertEqual(result.exit_code, 0, result.output)
        left, right = (json.loads(line) for line in result.stdout.splitlines())
        self.assertEqual(left["segment"], "left")
        self.assertAlmostEqual(left["points"][1][0], 0.5, places=14)
        self.assertAlmostEqual(right["points"][1][0], 0.5, places=14)

    def test_subdivide_to_file_with_oracle(self):
        out = self.root / "segments.jsonl"
        result = self.runner.invoke(
            main,
            ["--method", "decasteljau", "--out", str(out), "subdivide", str(self.curve), "-c", "0.5"],
        )
        self.assertEqual(result.exit_code, 0, result.output)
        left = json.loads(out.read_text(encoding="utf-8").splitlines()[0])
        self.assertEqual(left["points"], [[0.0], [0.5], [0.5]])

    def test_subdivide_exit_codes(self):
        bad = self.root / "bad.json"
        bad.write_text("nope\n", encoding="utf-8")
        result = self.runner.invoke(main, ["subdivide", str(bad), "-c", "0.5"])
        self.assertEqual(result.exit_code, 2)

        result = self.runner.invoke(main, ["subdivide", str(self.curve), "-c", "1.5"])
        self.assertEqual(result.exit_code, 3)

        result = self.runner.invoke(
            main, ["--scale", "0", "subdivide", str(self.curve), "-c", "0.5"]
        )
        self.assertEqual(result.exit_code, 3)

    def test_subdivide_takes_a_single_method(self):
        result = self.runner.invoke(
            main,
            ["--method", "fft", "--method", "direct", "subdivide", str(self.curve), "-c", "0.5"],
        )
        self.assertEqual(result.exit_code, 3)

    def test_derivatives(self):
        result = self.runner.invoke(main, ["derivatives", str(self.curve)])
        self.assertEqual(result.exit_code, 0, result.output)
        at_zero = json.loads(result.stdout.splitlines()[0])
        self.assertAlmostEqual(at_zero["derivatives"][1][0], 2.0, places=12)

    def test_surface_subdivide(self):
        patch_file = self.root / "patch.json"
        patch_file.write_text(
            json.dumps({"dimension": 1, "grid": [[[0.0], [1.0]], [[2.0], [3.0]]]}),
            encoding="utf-8",
        )
        result = self.runner.invoke(
            main, ["surface-subdivide", str(patch_file), "-c", "0.5", "--direction", "u"]
        )
        self.assertEqual(result.exit_code, 0, result.output)
        record = json.loads(result.stdout)
        self.assertEqual(record["direction"], "u")
        self.assertAlmostEqual(record["grid"][1][1][0], 2.5, places=14)

    def test_accuracy_csv(self):
        out = self.root / "accuracy.csv"
        result = self.runner.invoke(
            main,
            ["--degrees", "2-3", "--count", "2", "--splits", "3", "--out", str(out), "accuracy"],
        )
        self.assertEqual(result.exit_code, 0, result.output)
        lines = out.read_text(encoding="utf-8").splitlines()
        self.assertEqual(lines[0], "degree,method,min_digits,mean_digits,error_count")
        self.assertEqual(len(lines), 1 + 2 * 3)

    def test_bench_markdown_to_stdout(self):
        result = self.runner.invoke(
            main,
            [
                "--degrees", "4",
                "--count", "1",
                "--splits", "2",
                "--method", "fft",
                "--method", "decasteljau",
                "--format", "md",
                "--out", "-",
                "bench",
            ],
        )
        self.assertEqual(result.exit_code, 0, result.output)
        self.assertIn("### per-call", result.stdout)
        self.assertIn("| 4 |", result.stdout)

    def test_reports_default_to_output_dir(self):
        with patch.dict(os.environ, {"FASTBEZIER_OUTPUT_DIR": str(self.root)}):
            result = self.runner.invoke(
                main, ["--degrees", "2", "--count", "1", "--splits", "1", "accuracy"]
            )
        self.assertEqual(result.exit_code, 0, result.output)
        self.assertTrue((self.root / "accuracy.csv").exists())

    def test_unwritable_report_path(self):
        out = self.root / "missing" / "accuracy.csv"
        result = self.runner.invoke(
            main,
            ["--degrees", "2", "--count", "1", "--splits", "1", "--out", str(out), "accuracy"],
        )
        self.assertEqual(result.exit_code, 2)
        self.assertIsInstance(result.exception, SystemExit)

    def test_invalid_degrees(self):
        result = self.runner.invoke(main, ["--degrees", "5-2", "accuracy"])
        self.assertEqual(result.exit_code, 2)

    def test_verbose_flag_is_accepted(self):
        result = self.runner.invoke(
            main, ["subdivide", str(self.curve), "-c", "0.25", "--verbose"]
        )
        self.assertEqual(result.exit_code, 0, result.output)


def test_parse_degrees():
    """Ranges and single values, deduplicated in order."""
    assert parse_degrees(None, None, "2-4,7,3") == (2, 3, 4, 7)
    assert parse_degrees(None, None, None) is None
    for bad in ("x", "4-2", ","):
        try:
            parse_degrees(None, None, bad)
        except click.BadParameter:
            continue
        raise AssertionError(f"{bad!r} was accepted")


def test_global_options_defaults():
    options = GlobalOptions()
    assert options.method == "fft"
    config = options.experiment_config()
    assert config.curves_per_degree == 1000
    assert config.split_points == 499
    assert config.methods == ("decasteljau", "fft", "direct")
    assert options.report_path("bench").endswith("bench.csv")
    assert GlobalOptions(output_format="md").report_path("bench").endswith("bench.md")
    assert GlobalOptions(out="-").report_path("bench") == "-"


def test_global_options_single_method():
    try:
        _ = GlobalOptions(methods=("fft", "direct")).method
    except DomainError:
        return
    raise AssertionError("two methods accepted")


if __name__ == "__main__":
    unittest.main()
