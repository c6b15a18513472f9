"""Unit tests for the Carlitz polynomial families and the h-basis."""

from __future__ import annotations

import math

import pytest

from fqcalc.exceptions import BudgetExceededError, DomainError
from fqcalc.lib.basis import (
    LinearTPoly,
    TPoly,
    fraction_exponent,
    fraction_to_laurent,
    get_basis,
)
from fqcalc.lib.constants import get_constants
from fqcalc.lib.field import FqContext
from fqcalc.lib.series import Laurent, Poly, poly_enumerate


@pytest.fixture(name="ctx_small", params=(2, 3), ids=lambda q: f"q={q}")
def fixture_ctx_small(request: pytest.FixtureRequest) -> FqContext:
    """Return F_2 and F_3, where the brute force products stay small."""
    return FqContext.from_order(request.param)


def test_tpoly_rejects_zero_denominator(ctx2: FqContext) -> None:
    """Ensure that a polynomial in t needs a denominator."""
    with pytest.raises(DomainError, match="non zero denominator"):
        TPoly((Poly.one(ctx2),), Poly.zero(ctx2))


def test_tpoly_equality_cross_multiplies(ctx2: FqContext) -> None:
    """Ensure that x t / x equals t."""
    x = Poly.variable(ctx2)
    scaled = TPoly((Poly.zero(ctx2), x), x)
    plain = TPoly.from_polys([Poly.zero(ctx2), Poly.one(ctx2)])
    assert scaled == plain
    assert scaled.reduced().denominator == Poly.one(ctx2)


def test_tpoly_text(ctx2: FqContext) -> None:
    """Ensure that a fraction prints its bracketed numerator and denominator."""
    poly = TPoly.linear_factor(Poly.variable(ctx2)).divide(Poly.parse(ctx2, "x + 1"))
    assert str(poly) == "[t + (x)] / (x + 1)"


def test_e_binomial_matches_product(ctx_small: FqContext) -> None:
    """Ensure that the binomial form of e_i equals the product over roots."""
    basis = get_basis(ctx_small)
    for index in range(3):
        assert basis.e_binomial(index).to_tpoly() == basis.e_product(index)


def test_e_product_budget(ctx2: FqContext) -> None:
    """Ensure that the root product respects the enumeration budget."""
    with pytest.raises(BudgetExceededError):
        get_basis(ctx2).e_product(5, budget=8)


def test_f_values(ctx: FqContext) -> None:
    """Ensure that f_i vanishes below degree i and f_i(x^i) = 1."""
    basis = get_basis(ctx)
    for index in range(3):
        assert basis.f_value(index, Poly.monomial(ctx, index)) == Poly.one(ctx)
        if ctx.q**index <= 64:
            assert basis.vanishes_below(index)


def test_f_at_matches_exact_value(ctx3: FqContext) -> None:
    """Ensure that the series evaluation of f_i agrees with the exact value."""
    basis = get_basis(ctx3)
    point = Poly.parse(ctx3, "x^3 + 2x + 1")
    for index in range(4):
        exact = basis.f_value(index, point).to_laurent()
        assert basis.f_at(index, point, 30).agrees_with(exact, 30)


def test_f_at_zero(ctx2: FqContext) -> None:
    """Ensure that f_i(0) is the exact zero."""
    assert get_basis(ctx2).f_at(3, Laurent.zero(ctx2), 20).is_zero()


def test_f_at_reuses_exact_inverse(ctx2: FqContext) -> None:
    """Ensure that f_0(t) = t survives repeated calls at growing precision."""
    basis = get_basis(ctx2)
    for exponent, precision in ((1, 10), (2, 10), (3, 40)):
        point = Laurent.monomial(ctx2, exponent)
        assert basis.f_at(0, point, precision).agrees_with(point, precision)


def test_f_is_normalized(ctx: FqContext) -> None:
    """Ensure that every f_i has sup norm 1 and is its own Carlitz expansion."""
    basis = get_basis(ctx)
    for index in range(3):
        assert basis.sup_norm(basis.f(index)) == 0
        fractions = basis.carlitz_coefficients_exact(basis.f(index))
        assert fractions[index] == (Poly.one(ctx), Poly.one(ctx))
        assert all(not numerator for numerator, _ in fractions[:index])


def test_h_basis_is_orthonormal(ctx_small: FqContext) -> None:
    """Ensure that every h_j has a single unit h-coefficient."""
    basis = get_basis(ctx_small)
    for index in range(ctx_small.q**2):
        coefficients = basis.to_h_basis_exact(basis.h(index))
        assert coefficients[index] == (Poly.one(ctx_small), Poly.one(ctx_small))
        assert basis.sup_norm(basis.h(index)) == 0


def test_h_basis_round_trip(ctx3: FqContext) -> None:
    """Ensure that synthesis inverts the h-expansion of e_2."""
    basis = get_basis(ctx3)
    poly = basis.e_product(2)
    assert basis.from_h_basis(basis.to_h_basis_exact(poly)) == poly


def test_tau_two_ways(ctx_small: FqContext) -> None:
    """Ensure that the product and digit forms of tau_m agree."""
    basis = get_basis(ctx_small)
    for level in range(3):
        assert basis.tau(level) == basis.tau_from_g(level)


def test_tau_has_norm_one(ctx_small: FqContext) -> None:
    """Ensure that |tau_m| = 1."""
    basis = get_basis(ctx_small)
    for level in range(1, 3):
        assert basis.sup_norm(basis.tau(level)) == 0


def test_g_at_zero(ctx_small: FqContext) -> None:
    """Ensure that g_j(0) matches the constant term of g_j."""
    basis = get_basis(ctx_small)
    for index in range(ctx_small.q**2):
        numerator, denominator = basis.g(index).evaluate_exact(Poly.zero(ctx_small))
        assert numerator == basis.g_at_zero(index) * denominator


def test_orthonormality_bound(ctx2: FqContext) -> None:
    """Ensure that |sum lambda_k tau_k| >= |lambda_m|."""
    basis = get_basis(ctx2)
    weights = [Poly.parse(ctx2, "x"), Poly.one(ctx2), Poly.parse(ctx2, "x^2 + x")]
    norm, bound = basis.orthonormality_bound(weights)
    assert bound == -1
    assert norm >= bound


@pytest.mark.parametrize(("q", "level"), [(2, 1), (2, 2), (3, 1), (3, 2)])
def test_monic_sum_identity(q: int, level: int) -> None:
    """Verifies the sum of g_l G_k over monic t of degree m for all k, l < q^m."""
    basis = get_basis(FqContext.from_order(q))
    table = basis.monic_sum_table(level)
    assert len(table) == q ** (2 * level)
    for (lower, upper), value in table.items():
        assert value == basis.monic_sum_expected(lower, upper, level)


def test_monic_sum_low_order(ctx2: FqContext) -> None:
    """Ensure that x + (x + 1) = 1 = -D_1 / L_1 over F_2."""
    basis = get_basis(ctx2)
    assert basis.monic_sum(0, 1, 1) == Laurent.one(ctx2)
    assert basis.monic_sum(0, 0, 1).is_zero()


def test_monic_sum_vanishes_for_lower_digits(ctx2: FqContext) -> None:
    """Ensure that the sum of g_(q^n - 1) over monic t of degree m is 0 for n < m."""
    basis = get_basis(ctx2)
    for power in range(2):
        total = Poly.zero(ctx2)
        for point in poly_enumerate(ctx2, 2):
            total = total + basis.g_value(2**power - 1, point)
        assert not total


def test_monic_sum_range(ctx2: FqContext) -> None:
    """Ensure that k, l must stay below q^m."""
    with pytest.raises(DomainError, match="k, l < q"):
        get_basis(ctx2).monic_sum(0, 4, 2)


def test_fraction_helpers(ctx2: FqContext) -> None:
    """Ensure that fractions become Laurent values with their size."""
    fraction = (Poly.one(ctx2), get_constants(ctx2).bracket(1))
    assert fraction_exponent(fraction) == 1
    assert fraction_exponent((Poly.zero(ctx2), Poly.one(ctx2))) == -math.inf
    value = fraction_to_laurent(fraction, 6)
    assert value.valuation == -1
    assert value.agrees_with(Laurent.parse(ctx2, "x^-1 + 1 + x + x^2 + x^3 + x^4"), 6)


def test_linear_tpoly_degree(ctx3: FqContext) -> None:
    """Ensure that the degree of sum a_j t^(q^j) is q^top."""
    poly = LinearTPoly((Poly.one(ctx3), Poly.one(ctx3)), Poly.one(ctx3))
    assert poly.degree == 3
    assert poly.to_tpoly().degree == 3
