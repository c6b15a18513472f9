"""fqcalc main hook specifications."""

from __future__ import annotations

from argparse import ArgumentParser, Namespace, _SubParsersAction
from typing import TYPE_CHECKING, Any

from fqcalc import hookspec

if TYPE_CHECKING:
    from fqcalc.lib.dataclass.results import CommandOutput
    from fqcalc.lib.fqcalc_config import Config

# pylint: disable=unused-argument


@hookspec
def fqcalc_add_cmdline_args(argparser: ArgumentParser) -> None:
    """Add options shared by every subcommand.

    :param argparser: parent parser of all subcommands
    :type argparser: ArgumentParser
    """


@hookspec
def fqcalc_add_subcommands(
    subparsers: _SubParsersAction[ArgumentParser],
    parent: ArgumentParser,
) -> None:
    """Add subcommands.

    :param subparsers: subcommand registry of the main parser
    :type subparsers: _SubParsersAction[ArgumentParser]
    :param parent: parser holding the shared options
    :type parent: ArgumentParser
    """


@hookspec(firstresult=True)
def fqcalc_cmdline_parse(
    argparser: ArgumentParser,
    cmdline_args: list[str],
) -> Namespace:
    """Parse command line arguments.

    :param argparser: argument parser
    :type argparser: ArgumentParser
    :param cmdline_args: command line arguments
    :type cmdline_args: list[str]
    :return: command line arguments
    :rtype: Namespace
    """


@hookspec(firstresult=True)
def fqcalc_parse_config(
    cmdline_args: Namespace,
    settings: dict[str, Any],
) -> Config:
    """Validate the settings with the command line overrides.

    :param cmdline_args: command line arguments
    :type cmdline_args: Namespace
    :param settings: defaults merged with the user config file
    :type settings: dict[str, Any]
    :return: the validated configuration
    :rtype: Config
    """


@hookspec(firstresult=True)
def fqcalc_run_command(config: Config, cmdline_args: Namespace) -> CommandOutput:
    """Run the selected subcommand.

    Implementations return None for subcommands they do not own.

    :param config: the configuration
    :type config: Config
    :param cmdline_args: command line arguments
    :type cmdline_args: Namespace
    :return: the command output
    :rtype: CommandOutput
    """


@hookspec
def fqcalc_render_output(config: Config, output: CommandOutput) -> None:
    """Write the command output to stdout in the configured format.

    :param config: the configuration
    :type config: Config
    :param output: the command output
    :type output: CommandOutput
    """
