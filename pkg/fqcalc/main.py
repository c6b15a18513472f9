"""fqcalc main module."""

from __future__ import annotations

import logging.config
import sys
from argparse import ArgumentParser

from pluggy import PluginManager

from fqcalc import PROJECT_NAME
from fqcalc.configs import LOGGING_CONFIG
from fqcalc.exceptions import FqCalcException
from fqcalc.lib.fqcalc_config import load_settings
from fqcalc.plugins import commands, core, verify
from fqcalc.plugins.hookspecs import core as core_hookspecs

# pylint: disable=no-member  # plugin_manager.hook.* calls are dynamic

_LOGGER = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_ERROR = 2

_FQCALC_PLUGIN_MANAGER: PluginManager | None = None


def get_plugin_manager() -> PluginManager:
    """Get fqcalc plugin manager.

    :return: fqcalc plugin manager
    :rtype: PluginManager
    """
    global _FQCALC_PLUGIN_MANAGER  # pylint: disable=global-statement  # noqa: PLW0603
    if _FQCALC_PLUGIN_MANAGER is not None:
        return _FQCALC_PLUGIN_MANAGER
    plugin_manager = PluginManager(PROJECT_NAME)
    plugin_manager.add_hookspecs(core_hookspecs)
    for name, plugin in (("core", core), ("commands", commands), ("verify", verify)):
        plugin_manager.register(plugin, name=name)
    plugin_manager.load_setuptools_entrypoints(PROJECT_NAME)
    _FQCALC_PLUGIN_MANAGER = plugin_manager
    return plugin_manager


def build_argparser(plugin_manager: PluginManager) -> ArgumentParser:
    """Assemble the parser from the options and subcommands of all plugins.

    :param plugin_manager: plugin manager
    :type plugin_manager: PluginManager
    :return: the main parser
    :rtype: ArgumentParser
    """
    parent = ArgumentParser(add_help=False)
    plugin_manager.hook.fqcalc_add_cmdline_args(argparser=parent)
    argparser = ArgumentParser(
        PROJECT_NAME,
        description="Exact F_q-linear calculus over F_q((x))",
    )
    subparsers = argparser.add_subparsers(dest="command", required=True)
    plugin_manager.hook.fqcalc_add_subcommands(subparsers=subparsers, parent=parent)
    return argparser


def run(cmdline_args: list[str]) -> int:
    """Run one fqcalc command and return its exit code.

    :param cmdline_args: command line arguments
    :type cmdline_args: list[str]
    :return: 0 on success, 1 on a failed verification, 2 on an error
    :rtype: int
    """
    plugin_manager = get_plugin_manager()
    argparser = build_argparser(plugin_manager)
    args = plugin_manager.hook.fqcalc_cmdline_parse(
        argparser=argparser,
        cmdline_args=cmdline_args,
    )
    if args.log_level is not None:
        logging.getLogger().setLevel(args.log_level)
    try:
        config = plugin_manager.hook.fqcalc_parse_config(
            cmdline_args=args,
            settings=load_settings(args.config),
        )
        output = plugin_manager.hook.fqcalc_run_command(
            config=config,
            cmdline_args=args,
        )
    except FqCalcException as e:
        _LOGGER.error("%s: %s", type(e).__name__, e)  # noqa: TRY400
        return EXIT_ERROR
    plugin_manager.hook.fqcalc_render_output(config=config, output=output)
    return EXIT_OK if output.passed else EXIT_VERIFICATION_FAILED


def main() -> None:
    """Fqcalc main function."""
    logging.config.dictConfig(LOGGING_CONFIG)
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
