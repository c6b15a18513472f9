"""Unit tests for the fqcalc command line entry point."""

from __future__ import annotations

import json
from typing import TYPE_CHECKING

import pytest

from fqcalc.lib.dataclass.results import CheckResult
from fqcalc.main import (
    EXIT_ERROR,
    EXIT_OK,
    EXIT_VERIFICATION_FAILED,
    build_argparser,
    get_plugin_manager,
    run,
)

if TYPE_CHECKING:
    from pytest_mock import MockerFixture


def test_plugin_manager_is_shared() -> None:
    """Ensure that the plugin manager is built once and holds the plugins."""
    plugin_manager = get_plugin_manager()
    assert plugin_manager is get_plugin_manager()
    assert {"core", "commands", "verify"} <= {
        name for name, _ in plugin_manager.list_name_plugin()
    }


def test_subcommands_are_registered() -> None:
    """Ensure that every subcommand parses its own options."""
    argparser = build_argparser(get_plugin_manager())
    for cmdline in (
        ["constants", "--i", "1"],
        ["basis", "--i", "1"],
        ["expand", "--basis-index", "1"],
        ["apply", "--monomial", "1"],
        ["recover", "--monomial", "1", "--index", "1"],
        ["integrate", "--basis-index", "0"],
        ["carlitz"],
        ["verify"],
    ):
        assert argparser.parse_args(cmdline).command == cmdline[0]


def test_missing_subcommand() -> None:
    """Ensure that argparse refuses a command line without a subcommand."""
    with pytest.raises(SystemExit):
        run([])


def test_constants_text(capsys: pytest.CaptureFixture[str]) -> None:
    """Ensure that [1] over F_2 is printed as x^2 + x."""
    assert run(["constants", "--q", "2", "--kind", "bracket", "--i", "1"]) == EXIT_OK
    assert "x^2 + x" in capsys.readouterr().out


def test_integrate_json(capsys: pytest.CaptureFixture[str]) -> None:
    """Ensure that int f_0 is reported as JSON with both methods agreeing."""
    exit_code = run(
        [
            "integrate",
            "--q",
            "2",
            "--basis-index",
            "0",
            "--precision",
            "20",
            "--format",
            "json",
        ],
    )
    assert exit_code == EXIT_OK
    report = json.loads(capsys.readouterr().out)
    assert report["schema"] == 1
    assert report["command"] == "integrate"
    assert report["config"]["precision"] == 20
    assert report["result"]["agree"] is True
    assert report["result"]["exact"] == "1/(x^2 + x)"


def test_integrate_limit_json(capsys: pytest.CaptureFixture[str]) -> None:
    """Ensure that the limit sequence alone is reported with its trace."""
    exit_code = run(
        [
            "integrate",
            "--q",
            "2",
            "--basis-index",
            "0",
            "--method",
            "limit",
            "--precision",
            "20",
            "--format",
            "json",
        ],
    )
    assert exit_code == EXIT_OK
    report = json.loads(capsys.readouterr().out)
    (result,) = report["result"]["results"]
    assert result["method"] == "limit-sequence"
    assert result["trace"]
    assert result["stabilized_at"] is not None
    assert report["result"]["agree"] is True
    assert report["result"]["exact"] == "1/(x^2 + x)"


def test_json_is_deterministic(capsys: pytest.CaptureFixture[str]) -> None:
    """Ensure that the same command line prints the same bytes twice."""
    cmdline = ["expand", "--q", "3", "--monomial", "1", "--format", "json"]
    run(cmdline)
    first = capsys.readouterr().out
    run(cmdline)
    assert capsys.readouterr().out == first


@pytest.mark.parametrize(
    "cmdline",
    [
        ["constants", "--q", "6", "--i", "1"],
        ["constants", "--q", "2", "--i", "99"],
        ["expand", "--q", "2", "--carlitz", "x, y"],
        ["carlitz", "--q", "2", "--fn", "exp", "--z", "x"],
    ],
)
def test_errors_exit_2(cmdline: list[str]) -> None:
    """Ensure that configuration and domain errors exit with 2."""
    assert run(cmdline) == EXIT_ERROR


def test_verify_passes(capsys: pytest.CaptureFixture[str]) -> None:
    """Ensure that a passing check prints PASS and exits 0."""
    assert run(["verify", "--q", "2", "--check", "field_axioms"]) == EXIT_OK
    assert "PASS: 1 checks on F_2" in capsys.readouterr().out


def test_verify_all_checks(capsys: pytest.CaptureFixture[str]) -> None:
    """Ensure that every acceptance check passes over F_2."""
    assert run(["verify", "--q", "2", "--seed", "7", "--format", "json"]) == EXIT_OK
    report = json.loads(capsys.readouterr().out)
    assert report["passed"] is True
    assert len(report["checks"]) == 17
    assert all(check["status"] != "fail" for check in report["checks"])


def test_verify_failure_exits_1(
    mocker: MockerFixture,
    capsys: pytest.CaptureFixture[str],
) -> None:
    """Ensure that a failed check is reported and exits 1."""
    mocker.patch(
        "fqcalc.plugins.verify.run_checks",
        return_value=[CheckResult("broken", "fail", "always fails", 1, ["case"])],
    )
    assert run(["verify", "--q", "2", "--format", "json"]) == EXIT_VERIFICATION_FAILED
    report = json.loads(capsys.readouterr().out)
    assert report["passed"] is False
    assert report["checks"][0]["name"] == "broken"
