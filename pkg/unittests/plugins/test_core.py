"""Unit tests for the core plugin."""

from __future__ import annotations

import json
import math
from argparse import ArgumentParser, ArgumentTypeError

import pytest

from fqcalc.lib.dataclass.results import CheckResult, CommandOutput
from fqcalc.lib.fqcalc_config import Config
from fqcalc.plugins import core


def test_non_empty_str() -> None:
    """Ensure that empty option values are refused."""
    assert core._non_empty_str("x") == "x"
    with pytest.raises(ArgumentTypeError, match="should not be empty"):
        core._non_empty_str("")


def test_cmdline_overrides() -> None:
    """Ensure that command line options reach the configuration."""
    argparser = ArgumentParser()
    core.fqcalc_add_cmdline_args(argparser=argparser)
    args = core.fqcalc_cmdline_parse(
        argparser=argparser,
        cmdline_args=["--q", "4", "--precision", "32", "--format", "json"],
    )
    config = core.fqcalc_parse_config(
        cmdline_args=args,
        settings={
            "field": {"p": 2, "gamma": 1, "modulus": None},
            "precision": 64,
            "budget": 4096,
            "output_format": "text",
            "seed": 0,
            "parallel": True,
        },
    )
    assert (config.q, config.precision, config.output_format) == (4, 32, "json")


def test_infinite_exponents_become_null() -> None:
    """Ensure that -inf exponents are written as JSON null."""
    output = CommandOutput("apply", {"profile": [-math.inf, 2]})
    document = json.loads(core.render_json(Config(), output))
    assert document["result"] == {"profile": [None, 2]}
    assert "checks" not in document


def test_report_of_checks() -> None:
    """Ensure that verification reports list the checks and the verdict."""
    output = CommandOutput(
        "verify",
        checks=[CheckResult("field_axioms", "pass", "F_2", 3)],
    )
    report = core.build_report(Config(), output)
    assert report["passed"] is True
    assert report["checks"][0]["cases"] == 3
    assert "result" not in report


def test_render_text_failure(capsys: pytest.CaptureFixture[str]) -> None:
    """Ensure that failed checks are named in the text summary."""
    output = CommandOutput(
        "verify",
        checks=[
            CheckResult("field_axioms", "pass", "F_2", 3),
            CheckResult("gamma_identity", "fail", "m = 1", 1, ["m=1"]),
        ],
    )
    core.fqcalc_render_output(config=Config(), output=output)
    out = capsys.readouterr().out
    assert "FAIL: gamma_identity" in out
    assert "failed: m=1" in out


def test_render_rows(capsys: pytest.CaptureFixture[str]) -> None:
    """Ensure that compute results are printed as a table of rows."""
    output = CommandOutput("constants", rows=[("bracket(1)", "x^2 + x")])
    core.fqcalc_render_output(config=Config(), output=output)
    assert "x^2 + x" in capsys.readouterr().out
