"""Unit tests for the finite field module."""

from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from fqcalc.exceptions import ContextMismatchError, FieldDivisionError, FieldError
from fqcalc.lib.field import FqContext, FqElement, enumerate_fq, parse_modulus


@pytest.mark.parametrize(
    ("q", "p", "gamma"),
    [(2, 2, 1), (3, 3, 1), (4, 2, 2), (8, 2, 3), (9, 3, 2), (25, 5, 2)],
)
def test_from_order_resolves_characteristic(q: int, p: int, gamma: int) -> None:
    """Ensure that a prime power order is split into p and gamma."""
    ctx = FqContext.from_order(q)
    assert (ctx.p, ctx.gamma, ctx.q) == (p, gamma, q)


@pytest.mark.parametrize("q", [6, 10, 12])
def test_from_order_rejects_non_prime_powers(q: int) -> None:
    """Ensure that an order with two prime factors is refused."""
    with pytest.raises(FieldError, match="not a prime power"):
        FqContext.from_order(q)


def test_create_rejects_composite_characteristic() -> None:
    """Ensure that a composite characteristic is refused."""
    with pytest.raises(FieldError, match="is not a prime"):
        FqContext.create(4)


def test_create_rejects_large_fields() -> None:
    """Ensure that orders above the table limit are refused."""
    with pytest.raises(FieldError, match="outside"):
        FqContext.create(2, 9)


def test_create_rejects_reducible_modulus() -> None:
    """Ensure that u^2+1 = (u+1)^2 over F_2 is refused."""
    with pytest.raises(FieldError, match="reducible"):
        FqContext.create(2, 2, "u^2+1")


def test_create_rejects_non_monic_modulus() -> None:
    """Ensure that a modulus of the wrong degree is refused."""
    with pytest.raises(FieldError, match="not monic of degree 2"):
        FqContext.create(3, 2, "u+1")


def test_create_rejects_malformed_modulus() -> None:
    """Ensure that garbage modulus text raises a FieldError."""
    with pytest.raises(FieldError, match="Malformed modulus term"):
        FqContext.create(3, 2, "u^2+v")


def test_parse_modulus_lowest_degree_first() -> None:
    """Ensure that the parsed modulus lists coefficients from degree 0."""
    assert parse_modulus("u^3+2u+1", 3) == (1, 2, 0, 1)


def test_prime_field_ignores_modulus() -> None:
    """Ensure that a modulus passed for a prime field is dropped."""
    assert FqContext.create(5, 1, "u+1") == FqContext.create(5)


def test_context_text(ctx2: FqContext, ctx4: FqContext) -> None:
    """Ensure that contexts describe themselves with their modulus."""
    assert str(ctx2) == "F_2"
    assert str(ctx4) == "F_4 = F_2[u]/(u^2+u+1)"


def test_enumerate_fq_order(ctx4: FqContext) -> None:
    """Ensure that F_4 is listed as 0, 1, u, u+1."""
    assert [str(element) for element in enumerate_fq(ctx4)] == ["0", "1", "u", "u+1"]


def test_extension_multiplication(ctx4: FqContext) -> None:
    """Ensure that u^2 = u + 1 and u (u+1) = 1 in F_4."""
    u = FqElement.parse(ctx4, "u")
    assert u * u == FqElement.parse(ctx4, "u+1")
    assert u * (u + 1) == FqElement(ctx4, 1)
    assert u.inverse() == u + 1


def test_prime_field_parse_negative(ctx3: FqContext) -> None:
    """Ensure that negative integers are reduced mod p."""
    assert FqElement.parse(ctx3, "-1") == FqElement(ctx3, 2)
    assert FqElement.from_int(ctx3, 7) == FqElement(ctx3, 1)


def test_parse_rejects_garbage(ctx3: FqContext) -> None:
    """Ensure that non numeric text is refused in a prime field."""
    with pytest.raises(FieldError, match="Malformed element"):
        FqElement.parse(ctx3, "x")


def test_division_by_zero(ctx: FqContext) -> None:
    """Ensure that the zero element has no inverse."""
    with pytest.raises(FieldDivisionError, match="Division by zero"):
        FqElement(ctx, 0).inverse()


def test_mixing_fields_raises(ctx2: FqContext, ctx3: FqContext) -> None:
    """Ensure that elements of different fields do not combine."""
    with pytest.raises(ContextMismatchError):
        _ = FqElement(ctx2, 1) + FqElement(ctx3, 1)


def test_field_axioms(ctx: FqContext) -> None:
    """Verifies inverses, distributivity and Fermat's little theorem."""
    elements = enumerate_fq(ctx)
    one = FqElement(ctx, 1)
    for a in elements:
        assert a + (-a) == FqElement(ctx, 0)
        assert a**ctx.q == a
        if a:
            assert a * a.inverse() == one
        for b in elements:
            assert a * b == b * a
            for c in elements:
                assert a * (b + c) == a * b + a * c


@given(st.sampled_from([4, 8, 9, 16, 25, 27]), st.data())
def test_frobenius_is_additive(q: int, data: st.DataObject) -> None:
    """Ensure that (a + b)^p = a^p + b^p in every built-in extension."""
    ctx = FqContext.from_order(q)
    a = FqElement(ctx, data.draw(st.integers(0, q - 1)))
    b = FqElement(ctx, data.draw(st.integers(0, q - 1)))
    assert (a + b) ** ctx.p == a**ctx.p + b**ctx.p


def test_negative_power_inverts(ctx: FqContext) -> None:
    """Ensure that a^-1 is the inverse."""
    for element in enumerate_fq(ctx)[1:]:
        assert element**-1 == element.inverse()
