"""The Carlitz module, logarithm and exponential and their integral identities."""

from __future__ import annotations

import logging

from fqcalc.exceptions import DomainError
from fqcalc.lib.basis import get_basis
from fqcalc.lib.calculus import volkenborn, volkenborn_limit, volkenborn_qexpansion
from fqcalc.lib.constants import get_constants
from fqcalc.lib.dataclass.results import (
    CheckStatus,
    IdentityReport,
    SpecialValue,
)
from fqcalc.lib.field import FqElement
from fqcalc.lib.fqlinear import (
    DEFAULT_PRECISION,
    CarlitzExpansion,
    QExpansion,
    ValueTable,
    qexp_to_carlitz,
)
from fqcalc.lib.series import Laurent, Poly

_LOGGER = logging.getLogger(__name__)


def _as_laurent(value: Laurent | Poly) -> Laurent:
    return value.to_laurent() if isinstance(value, Poly) else value


def _require_small(z: Laurent, what: str) -> None:
    if z.coeffs and z.valuation < 1:
        msg = f"{what} needs |z| < 1, got {z}"
        raise DomainError(msg)


def _power_term(z: Laurent, level: int, precision: int) -> Laurent:
    """Return ``z^(q^level)`` known at least modulo ``x^precision``."""
    step = z.ctx.q**level
    return z.truncate(-(-precision // step)).frobenius(level)


def in_exponential_domain(z: Laurent) -> bool:
    """Check ``v(z) > 1 / (q - 1)``, where the exponential converges."""
    return not z.coeffs or z.valuation * (z.ctx.q - 1) > 1


def _compare(
    name: str,
    lhs: Laurent,
    rhs: Laurent,
    precision: int,
    detail: str = "",
    *,
    applicable: bool = True,
) -> IdentityReport:
    status: CheckStatus
    if not applicable:
        status = "not-applicable"
        _LOGGER.debug("%s is outside the domain of the identity: %s", name, detail)
    else:
        status = "pass" if lhs.agrees_with(rhs, precision) else "fail"
    return IdentityReport(
        name,
        lhs.truncate(precision),
        rhs.truncate(precision),
        status,
        detail,
    )


def carlitz_module(
    scalar: Poly | Laurent,
    z: Laurent | Poly,
    precision: int = DEFAULT_PRECISION,
) -> SpecialValue:
    """Return ``C_s(z) = sum f_i(s) z^(q^i)``.

    For a polynomial s the sum stops at ``deg s``. Any other s in O needs
    ``|z| < 1`` and the sum stops once ``q^i v(z) >= N``.

    :param scalar: s, a polynomial or a series in O
    :type scalar: Poly | Laurent
    :param z: the argument
    :type z: Laurent | Poly
    :param precision: working precision N
    :type precision: int
    :return: the value with its arguments
    :rtype: SpecialValue
    :raises DomainError: for ``|s| > 1``, or ``|z| >= 1`` with a non
        polynomial s
    """
    z = _as_laurent(z)
    basis = get_basis(z.ctx)
    if isinstance(scalar, Laurent) and scalar.is_exact() and scalar.valuation >= 0:
        scalar = scalar.to_poly()
    arguments = {"s": str(scalar), "z": str(z)}
    total = Laurent.zero(z.ctx)
    if isinstance(scalar, Poly):
        for level in range(scalar.degree + 1):
            coef = basis.f_value(level, scalar)
            if coef:
                total = total + _power_term(z, level, precision) * coef
        return SpecialValue("module", total.truncate(precision), arguments, precision)
    if scalar.coeffs and scalar.valuation < 0:
        msg = f"C_s(z) needs s in O, got {scalar}"
        raise DomainError(msg)
    _require_small(z, "C_s(z) for a non polynomial s")
    if z.coeffs:
        level = 0
        while z.ctx.q**level * z.valuation < precision:
            coef = basis.f_at(level, scalar, precision)
            total = total + _power_term(z, level, precision) * coef
            level += 1
    return SpecialValue("module", total.truncate(precision), arguments, precision)


def log_c(z: Laurent | Poly, precision: int = DEFAULT_PRECISION) -> SpecialValue:
    """Return ``log_C(z) = sum (-1)^n z^(q^n) / L_n``.

    The n-th term has valuation ``q^n v(z) - n``; the sum stops once it
    reaches N.

    :raises DomainError: for ``|z| >= 1``
    """
    z = _as_laurent(z)
    _require_small(z, "log_C")
    constants = get_constants(z.ctx)
    total = Laurent.zero(z.ctx)
    level = 0
    while z.coeffs and z.ctx.q**level * z.valuation - level < precision:
        term = _power_term(z, level, precision + level).divide(
            constants.L(level).to_laurent(),
            precision,
        )
        total = total + (-term if level % 2 else term)
        level += 1
    _LOGGER.debug("log_C summed %d terms", level)
    return SpecialValue("log", total.truncate(precision), {"z": str(z)}, precision)


def exp_c(z: Laurent | Poly, precision: int = DEFAULT_PRECISION) -> SpecialValue:
    """Return ``e_C(z) = sum z^(q^n) / D_n``.

    The n-th term has valuation ``q^n v(z) - (q^n - 1) / (q - 1)``, which
    grows only when ``v(z) (q - 1) > 1``.

    :raises DomainError: outside ``v(z) > 1 / (q - 1)``
    """
    z = _as_laurent(z)
    _require_small(z, "e_C")
    if not in_exponential_domain(z):
        msg = (
            f"e_C(z) diverges for v(z) = {z.valuation} at q = {z.ctx.q}; "
            "it needs v(z) > 1/(q-1)"
        )
        raise DomainError(msg)
    constants = get_constants(z.ctx)
    total = Laurent.zero(z.ctx)
    level = 0
    while z.coeffs:
        shift = constants.d_valuation(level)
        if z.ctx.q**level * z.valuation - shift >= precision:
            break
        term = _power_term(z, level, precision + shift).divide(
            constants.D(level).to_laurent(),
            precision,
        )
        total = total + term
        level += 1
    return SpecialValue("exp", total.truncate(precision), {"z": str(z)}, precision)


def module_expansion(
    z: Laurent,
    precision: int = DEFAULT_PRECISION,
) -> CarlitzExpansion:
    """Return ``s -> C_s(z)`` as the expansion with ``phi_i = z^(q^i)``.

    Terms whose integral ``z^(q^(i+1)) / L_(i+1)`` is below ``x^N`` are
    dropped.
    """
    _require_small(z, "the expansion of s -> C_s(z)")
    coeffs = []
    level = 0
    while z.coeffs and z.ctx.q ** (level + 1) * z.valuation - (level + 1) < precision:
        coeffs.append(_power_term(z, level, precision + level + 1))
        level += 1
    return CarlitzExpansion(z.ctx, tuple(coeffs))


def module_integral_limit(
    z: Laurent,
    precision: int = DEFAULT_PRECISION,
    n_max: int | None = None,
) -> Laurent:
    """Return ``lim Sg(x^n) / x^n`` for ``g(s) = C_s(z)``.

    ``g(x^k) = C_(x^k)(z)`` comes from iterating ``C_x(w) = x w + w^q``;
    the error after n steps has valuation about ``(q-1) n``.
    """
    q = z.ctx.q
    if n_max is None:
        n_max = (precision + 1) // (q - 1) + 4
    width = precision + n_max + 1
    values = []
    current = z.truncate(width)
    for _ in range(n_max):
        values.append(current)
        current = (current.shift(1) + current.frobenius(1)).truncate(width)
    return volkenborn_limit(ValueTable(z.ctx, tuple(values)), n_max, precision).value


def integral_of_module(
    z: Laurent | Poly,
    precision: int = DEFAULT_PRECISION,
) -> SpecialValue:
    """Return ``int C_s(z) ds`` through the closed form on ``s -> C_s(z)``."""
    z = _as_laurent(z)
    value = volkenborn(module_expansion(z, precision), precision).value
    return SpecialValue("integral_of_module", value, {"z": str(z)}, precision)


def module_integral_check(
    z: Laurent | Poly,
    precision: int = DEFAULT_PRECISION,
) -> list[IdentityReport]:
    """Compare ``int C_s(z) ds`` by both methods with ``log_C(z) - z``."""
    z = _as_laurent(z)
    rhs = log_c(z, precision).value - z
    closed = integral_of_module(z, precision).value
    limit = module_integral_limit(z, precision)
    return [
        _compare("module_integral_closed", closed, rhs, precision, f"z = {z}"),
        _compare("module_integral_limit", limit, rhs, precision, f"z = {z}"),
    ]


def goss_integral(
    scalar: Poly,
    z: Laurent | Poly,
    precision: int = DEFAULT_PRECISION,
) -> list[IdentityReport]:
    """Check ``int C_(s a)(z) ds = a log_C(z) - C_a(z)``.

    The left side integrates ``s -> C_s(C_a(z))``. For ``a = x^n`` the
    expansion ``x^n (log_C(z) - z) - sum x^(n-k) C_(x^(k-1))(z)^q`` is a
    third path.
    """
    z = _as_laurent(z)
    _require_small(z, "the integral of C_(sa)(z)")
    image = carlitz_module(scalar, z, precision).value
    lhs = volkenborn(module_expansion(image, precision), precision).value
    rhs = log_c(z, precision).value * scalar - image
    detail = f"a = {scalar}, z = {z}"
    reports = [_compare("goss_two_way", lhs, rhs, precision, detail)]
    if scalar.is_monomial() and scalar.leading == 1:
        power = scalar.degree
        expansion = (log_c(z, precision).value - z).shift(power)
        for k in range(1, power + 1):
            inner = carlitz_module(Poly.monomial(z.ctx, k - 1), z, precision).value
            expansion = expansion - inner.frobenius(1).shift(power - k)
        reports.append(_compare("goss_expansion", lhs, expansion, precision, detail))
        reports.append(_compare("goss_three_way", expansion, rhs, precision, detail))
    return reports


def log_functional_equation(
    scalar: Poly,
    z: Laurent | Poly,
    precision: int = DEFAULT_PRECISION,
) -> list[IdentityReport]:
    """Check ``a log_C(z) = log_C(C_a(z))`` and ``e_C(a t) - a e_C(t) = C_a(z) - a z``.

    ``t = log_C(z)``. A degenerate ``C_a(z) = 0`` makes the comparison
    vacuous; the exponential identity needs ``v(z) > 1 / (q - 1)``.
    """
    z = _as_laurent(z)
    _require_small(z, "the functional equation")
    image = carlitz_module(scalar, z, precision).value
    detail = f"a = {scalar}, z = {z}"
    lhs = log_c(z, precision).value * scalar
    if not image.coeffs and z.coeffs:
        _LOGGER.warning("C_a(z) vanishes for %s; the comparison is vacuous", detail)
        return [
            IdentityReport(
                "functional_equation",
                lhs.truncate(precision),
                image,
                "vacuous",
                f"{detail}: C_a(z) = 0 within precision",
            ),
        ]
    applicable = in_exponential_domain(z)
    rhs = log_c(image, precision).value
    reports = [
        _compare("functional_equation", lhs, rhs, precision, detail),
    ]
    if applicable:
        argument = log_c(z, precision).value
        exp_lhs = (
            exp_c(argument * scalar, precision).value
            - exp_c(argument, precision).value * scalar
        )
        exp_rhs = image - z * scalar
    else:
        exp_lhs = exp_rhs = Laurent.zero(z.ctx, precision)
    reports.append(
        _compare(
            "exponential_identity",
            exp_lhs,
            exp_rhs,
            precision,
            detail,
            applicable=applicable,
        ),
    )
    return reports


def exp_log_roundtrip(
    z: Laurent | Poly,
    precision: int = DEFAULT_PRECISION,
) -> list[IdentityReport]:
    """Check ``e_C(log_C(z)) = z`` and ``log_C(e_C(z)) = z``."""
    z = _as_laurent(z)
    detail = f"z = {z}"
    if not in_exponential_domain(z):
        empty = Laurent.zero(z.ctx, precision)
        return [
            _compare(name, empty, empty, precision, detail, applicable=False)
            for name in ("exp_of_log", "log_of_exp")
        ]
    return [
        _compare(
            "exp_of_log",
            exp_c(log_c(z, precision).value, precision).value,
            z,
            precision,
            detail,
        ),
        _compare(
            "log_of_exp",
            log_c(exp_c(z, precision).value, precision).value,
            z,
            precision,
            detail,
        ),
    ]


def exponential_expansion(
    t: Laurent,
    precision: int = DEFAULT_PRECISION,
) -> QExpansion:
    """Return ``s -> e_C(s t)`` as the Q-expansion ``a_n = t^(q^n) / D_n``."""
    constants = get_constants(t.ctx)
    coeffs = []
    level = 0
    while t.coeffs:
        shift = constants.d_valuation(level + 1)
        if t.ctx.q ** (level + 1) * t.valuation - shift >= precision:
            break
        coeffs.append(
            _power_term(t, level, precision + shift).divide(
                constants.D(level).to_laurent(),
                precision + shift,
            ),
        )
        level += 1
    return QExpansion(t.ctx, tuple(coeffs))


def exp_integral_identity(
    t: Laurent | Poly,
    precision: int = DEFAULT_PRECISION,
) -> list[IdentityReport]:
    """Check ``int e_C(s t) ds = t - e_C(t)`` termwise and in closed form."""
    t = _as_laurent(t)
    _require_small(t, "the exponential integral")
    detail = f"t = {t}"
    if not in_exponential_domain(t):
        empty = Laurent.zero(t.ctx, precision)
        return [
            _compare("exp_integral", empty, empty, precision, detail, applicable=False),
        ]
    function = exponential_expansion(t, precision)
    rhs = t - exp_c(t, precision).value
    termwise = volkenborn_qexpansion(function, precision).value
    closed = volkenborn(qexp_to_carlitz(function), precision).value
    return [
        _compare("exp_integral_termwise", termwise, rhs, precision, detail),
        _compare("exp_integral_closed", closed, rhs, precision, detail),
    ]


def module_law_check(
    first: Poly,
    second: Poly,
    z: Laurent | Poly,
    precision: int = DEFAULT_PRECISION,
    other: Laurent | Poly | None = None,
) -> list[IdentityReport]:
    """Check ``C_(s a) = C_s o C_a``, ``C_1 = id`` and additivity in z."""
    z = _as_laurent(z)
    ctx = z.ctx
    other = _as_laurent(other) if other is not None else z.shift(1) + 1
    detail = f"s = {first}, a = {second}, z = {z}"
    inner = carlitz_module(second, z, precision).value
    composed = carlitz_module(first, inner, precision)
    product = carlitz_module(first * second, z, precision)
    reports = [
        _compare("composition", product.value, composed.value, precision, detail),
        _compare(
            "identity",
            carlitz_module(Poly.one(ctx), z, precision).value,
            z,
            precision,
            detail,
        ),
        _compare(
            "additivity",
            carlitz_module(first, z + other, precision).value,
            carlitz_module(first, z, precision).value
            + carlitz_module(first, other, precision).value,
            precision,
            detail,
        ),
    ]
    for index in range(1, ctx.q):
        alpha = FqElement(ctx, index)
        reports.append(
            _compare(
                f"linearity[{alpha}]",
                carlitz_module(first, z * alpha, precision).value,
                carlitz_module(first, z, precision).value * alpha,
                precision,
                detail,
            ),
        )
    return reports
