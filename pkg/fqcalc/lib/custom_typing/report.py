"""Type hints of the JSON documents written to stdout."""

from typing import Any, TypedDict


class CheckEntry(TypedDict):
    """One acceptance check in the verification report."""

    name: str
    status: str
    detail: str
    cases: int
    failures: list[str]


class Report(TypedDict, total=False):
    """Top level JSON document of every subcommand."""

    schema: int
    command: str
    config: dict[str, Any]
    result: dict[str, Any]
    checks: list[CheckEntry]
    passed: bool
