"""fqcalc core plugin: shared options, configuration and rendering."""

from __future__ import annotations

import json
import logging
import math
from argparse import ArgumentParser, ArgumentTypeError, Namespace
from typing import TYPE_CHECKING, Any

from rich import print as rich_print
from rich.box import HORIZONTALS
from rich.markup import escape
from rich.table import Table
from termcolor import colored

from fqcalc import hookimpl
from fqcalc.lib.fqcalc_config import OUTPUT_FORMATS, Config, parse_config

if TYPE_CHECKING:
    from fqcalc.lib.custom_typing.report import Report
    from fqcalc.lib.dataclass.results import CommandOutput

_LOGGER = logging.getLogger(__name__)

REPORT_SCHEMA = 1
LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR")
_OVERRIDES = (
    "q",
    "p",
    "gamma",
    "modulus",
    "precision",
    "budget",
    "output_format",
    "seed",
    "parallel",
)


def _non_empty_str(arg: str) -> str:
    """Type to check command line arguments for an empty value.

    :param arg: command line argument
    :type arg: str
    :raises ArgumentTypeError: for empty argument values
    :return: arg if the argument is non empty
    :rtype: str
    """
    if arg:
        return arg
    message = "Argument value should not be empty"
    raise ArgumentTypeError(message)


@hookimpl
def fqcalc_add_cmdline_args(argparser: ArgumentParser) -> None:
    """Add the field, precision and output options.

    :param argparser: parent parser of all subcommands
    :type argparser: ArgumentParser
    """
    field = argparser.add_argument_group("coefficient field")
    field.add_argument("--q", type=int, help="Field order, resolves p and gamma")
    field.add_argument("--p", type=int, help="Characteristic")
    field.add_argument("--gamma", type=int, help="Extension degree")
    field.add_argument(
        "--modulus",
        type=_non_empty_str,
        help="Monic irreducible modulus in u, e.g. 'u^2+u+1'",
    )
    argparser.add_argument(
        "--precision",
        type=int,
        help="Working precision N, results are known modulo x^N",
    )
    argparser.add_argument(
        "--format",
        dest="output_format",
        choices=OUTPUT_FORMATS,
        help="Output format",
    )
    argparser.add_argument("--seed", type=int, help="Seed of randomized checks")
    argparser.add_argument(
        "--budget",
        type=int,
        help="Largest number of enumerated polynomials",
    )
    argparser.add_argument(
        "--config",
        type=_non_empty_str,
        help="User JSON config file path",
    )
    argparser.add_argument(
        "--log-level",
        choices=LOG_LEVELS,
        help="Root log level, WARNING by default",
    )


@hookimpl
def fqcalc_cmdline_parse(
    argparser: ArgumentParser,
    cmdline_args: list[str],
) -> Namespace:
    """Parse command line arguments.

    :param argparser: argument parser instance
    :type argparser: ArgumentParser
    :param cmdline_args: command line arguments list
    :type cmdline_args: list[str]
    :return: command line arguments
    :rtype: Namespace
    """
    return argparser.parse_args(args=cmdline_args)


@hookimpl
def fqcalc_parse_config(cmdline_args: Namespace, settings: dict[str, Any]) -> Config:
    """Validate the settings with the command line overrides.

    :param cmdline_args: command line arguments
    :type cmdline_args: Namespace
    :param settings: defaults merged with the user config file
    :type settings: dict[str, Any]
    :return: the validated configuration
    :rtype: Config
    """
    overrides = {key: getattr(cmdline_args, key, None) for key in _OVERRIDES}
    config = parse_config(settings, overrides)
    _LOGGER.debug("Configuration: %s", config)
    return config


def _finite(value: Any) -> Any:  # noqa: ANN401
    """Replace infinite exponents by None so the document stays valid JSON."""
    if isinstance(value, float) and not math.isfinite(value):
        return None
    if isinstance(value, dict):
        return {key: _finite(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [_finite(item) for item in value]
    return value


def build_report(config: Config, output: CommandOutput) -> Report:
    """Return the JSON document of a command output.

    :param config: the configuration
    :type config: Config
    :param output: the command output
    :type output: CommandOutput
    :return: the versioned report
    :rtype: Report
    """
    report: Report = {
        "schema": REPORT_SCHEMA,
        "command": output.command,
        "config": config.to_json(),
    }
    if output.checks is not None:
        report["checks"] = [check.to_json() for check in output.checks]
        report["passed"] = output.passed
    else:
        report["result"] = output.result
    return report


def render_json(config: Config, output: CommandOutput) -> str:
    """Serialize a command output, byte identical for identical inputs.

    :param config: the configuration
    :type config: Config
    :param output: the command output
    :type output: CommandOutput
    :return: the JSON text
    :rtype: str
    """
    return json.dumps(_finite(build_report(config, output)), sort_keys=True, indent=2)


def _checks_table(output: CommandOutput) -> Table:
    table = Table(title="verification", box=HORIZONTALS, show_lines=True)
    table.add_column("check", style="cyan")
    table.add_column("status", justify="center")
    table.add_column("cases", justify="right")
    table.add_column("detail")
    for check in output.checks or []:
        style = "red" if check.status == "fail" else "green"
        detail = check.detail
        if check.failures:
            detail = f"{detail}\nfailed: {', '.join(check.failures)}"
        table.add_row(
            check.name,
            f"[{style}]{check.status}[/{style}]",
            str(check.cases),
            escape(detail),
        )
    return table


def _rows_table(output: CommandOutput) -> Table:
    table = Table(title=output.command, box=HORIZONTALS, show_header=False)
    table.add_column("name", style="cyan")
    table.add_column("value", overflow="fold")
    for name, value in output.rows:
        table.add_row(escape(name), escape(value))
    return table


@hookimpl
def fqcalc_render_output(config: Config, output: CommandOutput) -> None:
    """Write the command output to stdout.

    :param config: the configuration
    :type config: Config
    :param output: the command output
    :type output: CommandOutput
    """
    if config.output_format == "json":
        print(render_json(config, output))  # noqa: T201
        return
    if output.checks is None:
        rich_print(_rows_table(output))
        return
    rich_print(_checks_table(output))
    failed = [check.name for check in output.checks if not check.passed]
    if failed:
        summary = colored(f"FAIL: {', '.join(failed)}", color="red")
    else:
        summary = colored(
            f"PASS: {len(output.checks)} checks on {config.context}",
            color="green",
        )
    print(summary)  # noqa: T201
