"""Unit tests for the Carlitz constants module."""

from __future__ import annotations

import pytest

from fqcalc.exceptions import BudgetExceededError, DomainError
from fqcalc.lib.constants import (
    CarlitzConstants,
    digit_expansion,
    get_constants,
    index_cap,
)
from fqcalc.lib.field import FqContext
from fqcalc.lib.series import Poly


@pytest.mark.parametrize(
    ("number", "q", "digits"),
    [(0, 2, ()), (5, 2, (1, 0, 1)), (8, 3, (2, 2)), (16, 4, (0, 0, 1))],
)
def test_digit_expansion(number: int, q: int, digits: tuple[int, ...]) -> None:
    """Ensure that digits are listed least significant first."""
    assert digit_expansion(number, q) == digits


@pytest.mark.parametrize(("q", "cap"), [(2, 13), (3, 8), (4, 7), (5, 6)])
def test_index_cap(q: int, cap: int) -> None:
    """Ensure that the cap keeps i q^i within the degree cap."""
    assert index_cap(q) == cap


def test_low_order_constants(ctx2: FqContext) -> None:
    """Ensure that [1], D_2 and L_2 match their products over F_2."""
    constants = get_constants(ctx2)
    bracket1 = Poly.parse(ctx2, "x^2 + x")
    bracket2 = Poly.parse(ctx2, "x^4 + x")
    assert constants.bracket(1) == bracket1
    assert constants.D(1) == constants.L(1) == bracket1
    assert constants.D(2) == bracket2 * bracket1**2
    assert constants.L(2) == bracket2 * bracket1
    assert constants.D(0) == constants.L(0) == Poly.one(ctx2)


def test_bracket_rejects_non_positive(ctx2: FqContext) -> None:
    """Ensure that [0] is not a Carlitz bracket."""
    with pytest.raises(DomainError):
        get_constants(ctx2).bracket(0)


@pytest.mark.parametrize("index", [14, 30, 99])
def test_bracket_respects_cap(ctx2: FqContext, index: int) -> None:
    """Ensure that [i] above the index cap raises before any allocation."""
    with pytest.raises(BudgetExceededError, match="exceeds the cap 13"):
        get_constants(ctx2).bracket(index)


def test_degrees_and_valuations(ctx: FqContext) -> None:
    """Ensure the degrees of D_i and L_i and the valuation of D_i."""
    constants = get_constants(ctx)
    q = ctx.q
    for index in range(4):
        assert constants.D(index).degree == index * q**index
        assert constants.L(index).degree == sum(q**i for i in range(1, index + 1))
        assert constants.D(index).valuation == constants.d_valuation(index)
        assert constants.L(index).valuation == index


def test_gamma_identity(ctx: FqContext) -> None:
    """Ensure that Gamma_(q^m - 1) L_m = D_m for small m."""
    constants = get_constants(ctx)
    assert all(constants.gamma_identity_holds(level) for level in range(1, 4))


def test_gamma_of_digit_one(ctx: FqContext) -> None:
    """Ensure that Gamma_(q^i) = D_i."""
    constants = get_constants(ctx)
    for index in range(3):
        assert constants.gamma(ctx.q**index) == constants.D(index)


def test_gamma_rejects_negative(ctx2: FqContext) -> None:
    """Ensure that Gamma_j needs a non negative j."""
    with pytest.raises(DomainError, match="j >= 0"):
        get_constants(ctx2).gamma(-1)


def test_carlitz_binomial(ctx2: FqContext) -> None:
    """Ensure the binomial values at [2 over 1] and at both edges."""
    constants = get_constants(ctx2)
    assert constants.carlitz_binomial(2, 1) == Poly.parse(ctx2, "x^2 + x + 1")
    expected = constants.D(3).exact_divide(constants.L(3))
    assert constants.carlitz_binomial(3, 0) == expected
    assert constants.carlitz_binomial(3, 3) == Poly.one(ctx2)


def test_carlitz_binomial_range(ctx2: FqContext) -> None:
    """Ensure that j > i is refused."""
    with pytest.raises(DomainError, match="0 <= j <= i"):
        get_constants(ctx2).carlitz_binomial(1, 2)


def test_e_coefficient_sign(ctx3: FqContext) -> None:
    """Ensure that odd i - j flips the sign of the binomial."""
    constants = get_constants(ctx3)
    assert constants.e_coefficient(2, 1) == -constants.carlitz_binomial(2, 1)
    assert constants.e_coefficient(2, 0) == constants.carlitz_binomial(2, 0)


def test_falling_bracket(ctx: FqContext) -> None:
    """Ensure that the falling bracket is D_n / D_(n-j)^(q^j)."""
    constants = get_constants(ctx)
    for upper in range(4):
        for lower in range(upper + 1):
            expected = constants.D(upper).exact_divide(
                constants.D(upper - lower).frobenius(lower),
            )
            assert constants.falling_bracket(upper, lower) == expected
    assert not constants.falling_bracket(1, 2)


def test_check_index(ctx2: FqContext) -> None:
    """Ensure that indices outside 0..cap are refused."""
    constants = CarlitzConstants(ctx2, degree_cap=64)
    assert constants.cap == 4
    constants.check_index(4)
    with pytest.raises(BudgetExceededError, match="exceeds the cap 4"):
        constants.check_index(5)
    with pytest.raises(DomainError, match="negative"):
        constants.check_index(-1)


def test_get_constants_is_shared(ctx3: FqContext) -> None:
    """Ensure that one cache serves every caller of a field."""
    assert get_constants(ctx3) is get_constants(FqContext.from_order(3))
