"""Unit tests for the Carlitz module, logarithm and exponential."""

from __future__ import annotations

import pytest

from fqcalc.exceptions import DomainError
from fqcalc.lib.field import FqContext, FqElement
from fqcalc.lib.series import Laurent, Poly
from fqcalc.lib.specialfn import (
    carlitz_module,
    exp_c,
    exp_integral_identity,
    exp_log_roundtrip,
    goss_integral,
    in_exponential_domain,
    integral_of_module,
    log_c,
    log_functional_equation,
    module_expansion,
    module_integral_check,
    module_law_check,
)


def test_module_at_x(ctx3: FqContext) -> None:
    """Ensure that C_x(z) = x z + z^q."""
    result = carlitz_module(Poly.variable(ctx3), Poly.variable(ctx3), 30)
    assert result.function == "module"
    assert result.arguments["s"] == "x"
    assert result.value.agrees_with(Laurent.parse(ctx3, "x^2 + x^3"), 30)


def test_module_degenerate_value(ctx2: FqContext) -> None:
    """Ensure that C_x(1 + x) = 1 + x over F_2."""
    result = carlitz_module(Poly.variable(ctx2), Poly.parse(ctx2, "x + 1"), 30)
    assert result.value.agrees_with(Laurent.parse(ctx2, "1 + x"), 30)


def test_module_series_scalar(ctx: FqContext) -> None:
    """Ensure that a truncated scalar sums the same terms as the polynomial."""
    scalar = Poly.parse(ctx, "x + 1")
    z = Laurent.monomial(ctx, 1)
    series = carlitz_module(scalar.to_laurent().truncate(30), z, 30)
    exact = carlitz_module(scalar, z, 30)
    assert series.value.agrees_with(exact.value, 30)


def test_module_domain(ctx2: FqContext) -> None:
    """Ensure that s outside O, or |z| = 1 with a series s, are refused."""
    with pytest.raises(DomainError, match="s in O"):
        carlitz_module(Laurent.monomial(ctx2, -1), Laurent.monomial(ctx2, 1))
    inverse = Laurent.one(ctx2).divide(Laurent.parse(ctx2, "1 + x"), 20)
    with pytest.raises(DomainError, match=r"needs \|z\| < 1"):
        carlitz_module(inverse, Poly.one(ctx2))


def test_module_laws(ctx: FqContext) -> None:
    """Ensure composition, identity, additivity and F_q-linearity."""
    reports = module_law_check(
        Poly.variable(ctx),
        Poly.parse(ctx, "x + 1"),
        Laurent.monomial(ctx, 1),
        30,
    )
    assert len(reports) == 3 + ctx.q - 1
    assert all(report.status == "pass" for report in reports)


def test_log_needs_small_argument(ctx2: FqContext) -> None:
    """Ensure that log_C(z) is refused for |z| = 1."""
    with pytest.raises(DomainError, match="log_C needs"):
        log_c(Poly.one(ctx2))


def test_log_leading_terms(ctx2: FqContext) -> None:
    """Ensure that log_C(x^2) = x^2 - x^4/[1] + ..."""
    value = log_c(Laurent.monomial(ctx2, 2), 30).value
    assert value.valuation == 2
    assert value.coefficient(2) == FqElement.from_int(ctx2, 1)


@pytest.mark.parametrize(
    ("q", "exponent", "expected"),
    [(2, 1, False), (2, 2, True), (3, 1, True), (4, 1, True)],
)
def test_exponential_domain(q: int, exponent: int, expected: bool) -> None:
    """Ensure that e_C converges exactly when v(z) (q - 1) > 1."""
    ctx = FqContext.from_order(q)
    assert in_exponential_domain(Laurent.monomial(ctx, exponent)) is expected


def test_exp_diverges(ctx2: FqContext) -> None:
    """Ensure that e_C(x) is refused over F_2."""
    with pytest.raises(DomainError, match="diverges"):
        exp_c(Laurent.monomial(ctx2, 1))


def test_exp_log_round_trip(ctx2: FqContext) -> None:
    """Ensure that e_C and log_C are inverse inside the exponential domain."""
    reports = exp_log_roundtrip(Laurent.monomial(ctx2, 2), 30)
    assert [report.status for report in reports] == ["pass", "pass"]
    outside = exp_log_roundtrip(Laurent.monomial(ctx2, 1), 30)
    assert {report.status for report in outside} == {"not-applicable"}
    assert all(report.passed for report in outside)


def test_module_expansion_coefficients(ctx2: FqContext) -> None:
    """Ensure that s -> C_s(z) has Carlitz coefficients z^(q^i)."""
    z = Laurent.monomial(ctx2, 1)
    expansion = module_expansion(z, 20)
    assert expansion.coeffs[0].agrees_with(z, 20)
    assert expansion.coeffs[2].agrees_with(Laurent.monomial(ctx2, 4), 20)


def test_module_integral(ctx: FqContext) -> None:
    """Ensure that int C_s(z) ds = log_C(z) - z by both methods."""
    z = Laurent.monomial(ctx, 1)
    reports = module_integral_check(z, 20)
    assert [report.name for report in reports] == [
        "module_integral_closed",
        "module_integral_limit",
    ]
    assert all(report.status == "pass" for report in reports)
    value = integral_of_module(z, 20)
    assert value.value.agrees_with(log_c(z, 20).value - z, 20)


def test_goss_integral(ctx3: FqContext) -> None:
    """Ensure that int C_(s a)(z) ds = a log_C(z) - C_a(z) three ways."""
    reports = goss_integral(Poly.monomial(ctx3, 2), Laurent.monomial(ctx3, 1), 20)
    assert [report.name for report in reports] == [
        "goss_two_way",
        "goss_expansion",
        "goss_three_way",
    ]
    assert all(report.status == "pass" for report in reports)


def test_goss_integral_general_scalar(ctx3: FqContext) -> None:
    """Ensure that a non monomial scalar is compared two ways only."""
    scalar = Poly.parse(ctx3, "x + 2")
    reports = goss_integral(scalar, Laurent.monomial(ctx3, 1), 20)
    assert len(reports) == 1
    assert reports[0].status == "pass"


def test_functional_equation(ctx2: FqContext) -> None:
    """Ensure that a log_C(z) = log_C(C_a(z)) and its exponential form."""
    reports = log_functional_equation(
        Poly.variable(ctx2),
        Laurent.monomial(ctx2, 2),
        30,
    )
    assert [report.status for report in reports] == ["pass", "pass"]
    small = log_functional_equation(
        Poly.parse(ctx2, "x + 1"),
        Laurent.monomial(ctx2, 1),
        30,
    )
    assert [report.status for report in small] == ["pass", "not-applicable"]


def test_functional_equation_vacuous(ctx2: FqContext) -> None:
    """Ensure that C_x(x) = 0 over F_2 gives a vacuous comparison."""
    reports = log_functional_equation(
        Poly.variable(ctx2),
        Laurent.monomial(ctx2, 1),
        30,
    )
    assert [report.status for report in reports] == ["vacuous"]
    assert reports[0].passed


def test_exp_integral(ctx2: FqContext) -> None:
    """Ensure that int e_C(s t) ds = t - e_C(t)."""
    reports = exp_integral_identity(Laurent.monomial(ctx2, 2), 30)
    assert len(reports) == 2
    assert all(report.status == "pass" for report in reports)
    outside = exp_integral_identity(Laurent.monomial(ctx2, 1), 30)
    assert outside[0].status == "not-applicable"
