"""Exact F_q-linear calculus over the field of formal Laurent series F_q((x))."""

__version__ = "1.0.0"

from pluggy import HookimplMarker, HookspecMarker

PROJECT_NAME = "fqcalc"

hookspec = HookspecMarker(PROJECT_NAME)
hookimpl = HookimplMarker(PROJECT_NAME)


__all__ = ["hookimpl", "hookspec"]
