"""fqcalc verify plugin: the acceptance sweep."""

from __future__ import annotations

import logging
from argparse import ArgumentParser, Namespace, _SubParsersAction
from typing import TYPE_CHECKING

from fqcalc import hookimpl
from fqcalc.lib.dataclass.results import CommandOutput
from fqcalc.lib.verification import CHECKS, run_checks

if TYPE_CHECKING:
    from fqcalc.lib.fqcalc_config import Config

_LOGGER = logging.getLogger(__name__)


@hookimpl
def fqcalc_add_subcommands(
    subparsers: _SubParsersAction[ArgumentParser],
    parent: ArgumentParser,
) -> None:
    """Add the verify subcommand.

    :param subparsers: subcommand registry of the main parser
    :type subparsers: _SubParsersAction[ArgumentParser]
    :param parent: parser holding the shared options
    :type parent: ArgumentParser
    """
    parser = subparsers.add_parser(
        "verify",
        parents=[parent],
        help="Run the acceptance suite, exit 1 on any failure",
    )
    parser.add_argument(
        "--check",
        action="append",
        choices=sorted(CHECKS),
        dest="checks",
        help="Run only this check, may be repeated",
    )
    parser.add_argument(
        "--sequential",
        action="store_const",
        const=False,
        dest="parallel",
        help="Run the checks one after the other",
    )


@hookimpl
def fqcalc_run_command(config: Config, cmdline_args: Namespace) -> CommandOutput | None:
    """Run the acceptance checks.

    :param config: the configuration
    :type config: Config
    :param cmdline_args: command line arguments
    :type cmdline_args: Namespace
    :return: the report, None for other subcommands
    :rtype: CommandOutput | None
    """
    if cmdline_args.command != "verify":
        return None
    results = run_checks(config, cmdline_args.checks)
    failed = [result.name for result in results if not result.passed]
    if failed:
        _LOGGER.error("Failed checks: %s", ", ".join(failed))
    else:
        _LOGGER.info("All %d checks passed on %s", len(results), config.context)
    return CommandOutput("verify", checks=results)
