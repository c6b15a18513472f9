"""Data classes to store computation results and identity reports."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Any, Literal

if TYPE_CHECKING:
    from fqcalc.lib.custom_typing.report import CheckEntry
    from fqcalc.lib.series import Laurent

CheckStatus = Literal["pass", "fail", "vacuous", "not-applicable"]


@dataclass(frozen=True)
class LinearOperatorResult:
    """To store the image of a function under an operator."""

    operator: str
    representation: str
    coefficients: tuple[Laurent, ...]

    @property
    def precision(self) -> int | None:
        """Smallest precision among the coefficients."""
        known = [c.precision for c in self.coefficients if c.precision is not None]
        return min(known, default=None)

    def to_json(self) -> dict[str, Any]:
        """Return the JSON form."""
        return {
            "operator": self.operator,
            "representation": self.representation,
            "coefficients": [c.to_json() for c in self.coefficients],
            "precision": self.precision,
        }


@dataclass(frozen=True)
class TaylorRecovery:
    """To store a Taylor coefficient recovered by the difference quotient sweep."""

    index: int
    trace: tuple[Laurent, ...]
    value: Laurent
    stabilized_at: int | None
    expected: Laurent | None = None

    @property
    def matches_expected(self) -> bool:
        """Check the stabilized value against the expected coefficient."""
        return self.expected is not None and self.value.agrees_with(self.expected)

    def to_json(self) -> dict[str, Any]:
        """Return the JSON form."""
        return {
            "index": self.index,
            "trace": [value.to_json() for value in self.trace],
            "value": self.value.to_json(),
            "stabilized_at": self.stabilized_at,
            "expected": None if self.expected is None else self.expected.to_json(),
        }


@dataclass(frozen=True)
class BoundRow:
    """One coefficient compared with its analyticity bound, as q exponents."""

    index: int
    exponent: float
    bound: float

    @property
    def holds(self) -> bool:
        """Check the coefficient against the bound."""
        return self.exponent <= self.bound


@dataclass(frozen=True)
class AnalyticityReport:
    """To store the coefficient bounds between the two expansions."""

    forward: tuple[BoundRow, ...]
    backward: tuple[BoundRow, ...]
    exponent_signs: bool

    @property
    def holds(self) -> bool:
        """Check every bound and the sign of every binomial exponent."""
        rows = (*self.forward, *self.backward)
        return self.exponent_signs and all(row.holds for row in rows)

    def to_json(self) -> dict[str, Any]:
        """Return the JSON form."""

        def rows(items: tuple[BoundRow, ...]) -> list[dict[str, Any]]:
            return [
                {"index": r.index, "exponent": r.exponent, "bound": r.bound}
                for r in items
            ]

        return {
            "forward": rows(self.forward),
            "backward": rows(self.backward),
            "exponent_signs": self.exponent_signs,
            "holds": self.holds,
        }


@dataclass(frozen=True)
class IntegralResult:
    """To store a Volkenborn-type integral and how it was computed."""

    value: Laurent
    method: Literal["closed-form", "limit-sequence", "termwise"]
    trace: tuple[Laurent, ...] = ()
    stabilized_at: int | None = None

    def agrees_with(self, other: IntegralResult) -> bool:
        """Check two integrals against each other."""
        return self.value.agrees_with(other.value)

    def to_json(self) -> dict[str, Any]:
        """Return the JSON form."""
        return {
            "value": self.value.to_json(),
            "method": self.method,
            "trace": [value.to_json() for value in self.trace],
            "stabilized_at": self.stabilized_at,
        }


@dataclass(frozen=True)
class SpecialValue:
    """To store a value of the Carlitz module, logarithm or exponential."""

    function: str
    value: Laurent
    arguments: dict[str, str]
    precision: int

    def to_json(self) -> dict[str, Any]:
        """Return the JSON form."""
        return {
            "function": self.function,
            "value": self.value.to_json(),
            "arguments": self.arguments,
            "precision": self.precision,
        }


@dataclass(frozen=True)
class IdentityReport:
    """To store the two sides of an identity and the verdict."""

    name: str
    lhs: Laurent
    rhs: Laurent
    status: CheckStatus
    detail: str = ""

    @property
    def passed(self) -> bool:
        """Treat vacuous and not applicable comparisons as passing."""
        return self.status != "fail"

    def to_json(self) -> dict[str, Any]:
        """Return the JSON form."""
        return {
            "name": self.name,
            "lhs": self.lhs.to_json(),
            "rhs": self.rhs.to_json(),
            "status": self.status,
            "detail": self.detail,
        }


@dataclass
class CheckResult:
    """To store the outcome of one acceptance check."""

    name: str
    status: CheckStatus
    detail: str
    cases: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        """Check whether the acceptance check passed."""
        return self.status != "fail"

    def to_json(self) -> CheckEntry:
        """Return the report entry."""
        return {
            "name": self.name,
            "status": self.status,
            "detail": self.detail,
            "cases": self.cases,
            "failures": list(self.failures),
        }


@dataclass
class CommandOutput:
    """To store what a subcommand produced.

    ``rows`` feed the text table, ``result`` the JSON document.
    """

    command: str
    result: dict[str, Any] = field(default_factory=dict)
    rows: list[tuple[str, str]] = field(default_factory=list)
    checks: list[CheckResult] | None = None

    @property
    def passed(self) -> bool:
        """Check that no acceptance check failed."""
        return all(check.passed for check in self.checks or [])
