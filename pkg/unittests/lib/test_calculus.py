"""Unit tests for the indefinite sum and the Volkenborn-type integral."""

from __future__ import annotations

import pytest

from fqcalc.exceptions import DomainError
from fqcalc.lib.calculus import (
    compose_scalar,
    indefinite_sum,
    indefinite_sum_values,
    integral_bound,
    integrate,
    invariance_check,
    results_agree,
    sum_uniqueness_check,
    volkenborn,
    volkenborn_limit,
    volkenborn_qexpansion,
)
from fqcalc.lib.constants import get_constants
from fqcalc.lib.field import FqContext
from fqcalc.lib.fqlinear import (
    CarlitzExpansion,
    QExpansion,
    a_minus,
    is_zero_function,
    subtract,
    to_table,
)
from fqcalc.lib.series import Laurent, Poly
from fqcalc.lib.utils import random_carlitz, seeded_random


def test_sum_shifts_the_basis(ctx: FqContext) -> None:
    """Ensure that S f_k = f_(k+1)."""
    for index in range(3):
        summed = indefinite_sum(CarlitzExpansion.basis_vector(ctx, index))
        assert summed == CarlitzExpansion.basis_vector(ctx, index + 1)


def test_sum_of_zero(ctx2: FqContext) -> None:
    """Ensure that the zero function sums to itself."""
    assert not indefinite_sum(CarlitzExpansion(ctx2)).coeffs


def test_sum_is_right_inverse(ctx: FqContext) -> None:
    """Ensure that a- S f = f for random polynomial coefficients."""
    function = random_carlitz(ctx, seeded_random(0, "right-inverse"))
    recovered = a_minus(indefinite_sum(function))
    assert is_zero_function(subtract(recovered, function))


def test_sum_values_match_expansion(ctx: FqContext) -> None:
    """Ensure that the recursive table of S f_0 is the table of f_1."""
    table = to_table(CarlitzExpansion.basis_vector(ctx, 0), 5, 30)
    summed = indefinite_sum_values(table)
    expected = to_table(CarlitzExpansion.basis_vector(ctx, 1), 5, 30)
    assert summed.values[0].is_zero()
    for value, reference in zip(summed.values, expected.values):
        assert value.agrees_with(reference, 30)


def test_sum_values_needs_two_entries(ctx2: FqContext) -> None:
    """Ensure that a one entry table is refused."""
    table = to_table(CarlitzExpansion.basis_vector(ctx2, 0), 1)
    with pytest.raises(DomainError, match="at least 2 values"):
        indefinite_sum_values(table)


def test_integral_of_identity(ctx: FqContext) -> None:
    """Ensure that int t dt = -1/[1]."""
    result = volkenborn(CarlitzExpansion.basis_vector(ctx, 0), 20)
    bracket = get_constants(ctx).bracket(1).to_laurent()
    assert result.method == "closed-form"
    assert result.value.agrees_with(-Laurent.one(ctx).divide(bracket, 20), 20)


def test_limit_matches_closed_form(ctx2: FqContext) -> None:
    """Ensure that Sf(x^n) / x^n stabilizes at the closed form."""
    function = CarlitzExpansion.basis_vector(ctx2, 0)
    limit = volkenborn_limit(function, precision=20)
    assert limit.method == "limit-sequence"
    assert limit.stabilized_at is not None
    assert len(limit.trace) == 30
    assert limit.value.agrees_with(volkenborn(function, 20).value, 20)


def test_limit_needs_two_steps(ctx2: FqContext) -> None:
    """Ensure that n_max < 2 is refused."""
    with pytest.raises(DomainError, match="n_max >= 2"):
        volkenborn_limit(CarlitzExpansion.basis_vector(ctx2, 0), 1)


def test_termwise_integral(ctx: FqContext) -> None:
    """Ensure that int t^(q^n) dt = -1/[n+1]."""
    result = volkenborn_qexpansion(QExpansion.monomial(ctx, 1), 20)
    bracket = get_constants(ctx).bracket(2).to_laurent()
    assert result.value.agrees_with(-Laurent.one(ctx).divide(bracket, 20), 20)


def test_integrate_all_methods_agree(ctx2: FqContext) -> None:
    """Ensure that the closed form, limit and termwise integrals agree."""
    results = integrate(QExpansion.monomial(ctx2, 1), "all", 20)
    assert [result.method for result in results] == [
        "closed-form",
        "limit-sequence",
        "termwise",
    ]
    assert results_agree(results)


def test_integrate_unknown_method(ctx2: FqContext) -> None:
    """Ensure that unknown methods are refused."""
    function = CarlitzExpansion.basis_vector(ctx2, 0)
    with pytest.raises(DomainError, match="Unknown integration method"):
        integrate(function, "simpson")  # type: ignore[arg-type]


def test_compose_with_one(ctx: FqContext) -> None:
    """Ensure that t -> f(1 t) keeps the expansion."""
    function = CarlitzExpansion.basis_vector(ctx, 2, Poly.variable(ctx))
    composed = compose_scalar(function, Poly.one(ctx), 30)
    for coef, reference in zip(composed.coeffs, function.coeffs):
        assert coef.agrees_with(reference, 30)


def test_invariance_laws(ctx2: FqContext) -> None:
    """Ensure that translation, scalar and vanishing laws hold for f_1."""
    reports = invariance_check(CarlitzExpansion.basis_vector(ctx2, 1), 20, 2)
    names = [report.name for report in reports]
    assert "translation" in names
    assert "translation_x^2" in names
    assert any(name.startswith("vanishing[") for name in names)
    assert all(report.passed for report in reports)


def test_sum_uniqueness(ctx: FqContext) -> None:
    """Ensure that S f is the normalized solution of a- u = f."""
    function = CarlitzExpansion.from_polys(ctx, [Poly.one(ctx), Poly.variable(ctx)])
    reports = sum_uniqueness_check(function)
    assert reports[0].name == "left_inverse"
    assert all(report.status == "pass" for report in reports)


def test_integral_bound(ctx: FqContext) -> None:
    """Ensure that |int f| stays below the largest term size."""
    function = random_carlitz(ctx, seeded_random(1, "bound"), terms=3)
    exponent, bound = integral_bound(function, 30)
    assert exponent <= bound
