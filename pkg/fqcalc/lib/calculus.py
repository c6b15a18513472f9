"""Indefinite sum and the Volkenborn-type integral of F_q-linear functions.

``S`` is the right inverse of the annihilation operator normalized by
``Sf(1) = 0``; the integral is ``lim Sf(x^n) / x^n = (Sf)'(0)``.
"""

from __future__ import annotations

import logging
import math
from typing import Literal

from fqcalc.exceptions import DomainError
from fqcalc.lib.constants import get_constants
from fqcalc.lib.dataclass.results import CheckStatus, IdentityReport, IntegralResult
from fqcalc.lib.fqlinear import (
    DEFAULT_PRECISION,
    CarlitzExpansion,
    LinearFunction,
    QExpansion,
    ValueTable,
    a_minus,
    add,
    convert,
    evaluate,
    is_zero_function,
    scale,
    subtract,
    table_to_carlitz,
    to_table,
)
from fqcalc.lib.series import Laurent, Poly

_LOGGER = logging.getLogger(__name__)

IntegrationMethod = Literal["closed", "limit", "termwise", "both", "all"]


def _status(lhs: Laurent, rhs: Laurent, precision: int) -> CheckStatus:
    return "pass" if lhs.agrees_with(rhs, precision) else "fail"


def _as_carlitz(function: LinearFunction, precision: int) -> CarlitzExpansion:
    converted = convert(function, "carlitz", precision)
    if not isinstance(converted, CarlitzExpansion):
        msg = f"Cannot integrate a {function.kind} representation"
        raise DomainError(msg)
    return converted


def indefinite_sum(function: CarlitzExpansion) -> CarlitzExpansion:
    """Return ``S f``: ``c_0 = 0`` and ``c_(l+1) = phi_l^q``.

    :param function: f with finite support
    :type function: CarlitzExpansion
    :return: the indefinite sum, ``S f_k = f_(k+1)``
    :rtype: CarlitzExpansion
    """
    ctx = function.ctx
    if not function.coeffs:
        return function
    return function.with_coeffs(
        [Laurent.zero(ctx)] + [c.frobenius(1) for c in function.coeffs],
    )


def indefinite_sum_values(table: ValueTable) -> ValueTable:
    """Tabulate ``u = S f`` from a table of f.

    ``u(1) = 0`` and ``u(x^n) = x u(x^(n-1)) + f(x^(n-1))^q``.

    :raises DomainError: for tables shorter than 2
    """
    if len(table.values) < 2:
        msg = f"The interpolation form needs at least 2 values, got {len(table.values)}"
        raise DomainError(msg)
    ctx = table.ctx
    values = [Laurent.zero(ctx)]
    for previous in table.values[:-1]:
        values.append(values[-1].shift(1) + previous.frobenius(1))
    return table.with_coeffs(values)


def volkenborn(
    function: LinearFunction,
    precision: int = DEFAULT_PRECISION,
) -> IntegralResult:
    """Return ``sum_l phi_l^q (-1)^(l+1) / L_(l+1)``.

    This is ``(Sf)'(0)``: S shifts ``phi_l^q`` onto ``f_(l+1)``, whose
    linear term is ``(-1)^(l+1) / L_(l+1)``.
    """
    ctx = function.ctx
    constants = get_constants(ctx)
    carlitz = _as_carlitz(function, precision)
    total = Laurent.zero(ctx)
    for level, coef in enumerate(carlitz.coeffs):
        if coef.is_zero():
            continue
        term = coef.frobenius(1).divide(constants.L(level + 1).to_laurent(), precision)
        total = total + (-term if level % 2 == 0 else term)
    return IntegralResult(total.truncate(precision), "closed-form")


def default_limit_length(function: LinearFunction, precision: int) -> int:
    """Return an n_max after which ``Sf(x^n) / x^n`` is settled mod ``x^N``.

    The error after n steps has valuation about ``n (q-1) - l q`` for a
    support reaching index l.
    """
    q = function.ctx.q
    if isinstance(function, ValueTable):
        return len(function.values)
    support = len(function.coeffs) + 1
    return (precision + support * q + 2) // (q - 1) + 4


def volkenborn_limit(
    function: LinearFunction,
    n_max: int | None = None,
    precision: int = DEFAULT_PRECISION,
) -> IntegralResult:
    """Compute the integral as the limit of ``Sf(x^n) / x^n``.

    The trace holds ``n = 1 .. n_max``. It is stabilized from the first n
    whose entries agree with the last one modulo ``x^N``.

    :param function: f in any representation
    :type function: LinearFunction
    :param n_max: last n of the trace, derived from the support by default
    :type n_max: int | None
    :param precision: working precision N
    :type precision: int
    :return: the last entry, the trace and the stabilization index
    :rtype: IntegralResult
    :raises DomainError: for ``n_max < 2``
    """
    if n_max is None:
        n_max = default_limit_length(function, precision)
    if n_max < 2:
        msg = f"The limit sequence needs n_max >= 2, got {n_max}"
        raise DomainError(msg)
    if isinstance(function, ValueTable):
        table = ValueTable(function.ctx, function.values[:n_max])
        n_max = len(table.values)
    else:
        table = to_table(function, n_max, precision + n_max)
    summed = Laurent.zero(table.ctx)
    trace = []
    for exponent, previous in enumerate(table.values, start=1):
        summed = summed.shift(1) + previous.frobenius(1)
        trace.append(summed.shift(-exponent))
    value = trace[-1].truncate(precision)
    stabilized_at = None
    for position in range(len(trace) - 1, -1, -1):
        if not trace[position].agrees_with(value, precision, guard=0):
            break
        stabilized_at = position + 1
    if stabilized_at == len(trace):
        _LOGGER.warning(
            "Limit sequence Sf(x^n)/x^n did not stabilize within n_max=%d",
            n_max,
        )
        stabilized_at = None
    else:
        _LOGGER.debug("Limit sequence stabilized at n=%s", stabilized_at)
    return IntegralResult(value, "limit-sequence", tuple(trace), stabilized_at)


def volkenborn_qexpansion(
    function: QExpansion,
    precision: int = DEFAULT_PRECISION,
) -> IntegralResult:
    """Integrate ``sum a_n t^(q^n)`` termwise as ``-sum a_n^q / [n+1]``."""
    ctx = function.ctx
    constants = get_constants(ctx)
    total = Laurent.zero(ctx)
    for level, coef in enumerate(function.coeffs):
        if coef.is_zero():
            continue
        total = total - coef.frobenius(1).divide(
            constants.bracket(level + 1).to_laurent(),
            precision,
        )
    return IntegralResult(total.truncate(precision), "termwise")


def integrate(
    function: LinearFunction,
    method: IntegrationMethod = "both",
    precision: int = DEFAULT_PRECISION,
    n_max: int | None = None,
) -> list[IntegralResult]:
    """Integrate with one or several methods.

    :param function: f in any representation
    :type function: LinearFunction
    :param method: ``closed``, ``limit``, ``termwise``, ``both`` (closed and
        limit) or ``all``
    :type method: IntegrationMethod
    :param precision: working precision
    :type precision: int
    :param n_max: length of the limit trace
    :type n_max: int | None
    :return: one result per method
    :rtype: list[IntegralResult]
    :raises DomainError: on an unknown method
    """
    if method not in ("closed", "limit", "termwise", "both", "all"):
        msg = f"Unknown integration method {method!r}"
        raise DomainError(msg)
    results = []
    if method in ("closed", "both", "all"):
        results.append(volkenborn(function, precision))
    if method in ("limit", "both", "all"):
        results.append(volkenborn_limit(function, n_max, precision))
    if method in ("termwise", "all"):
        qexp = convert(function, "qexp", precision)
        if not isinstance(qexp, QExpansion):
            msg = "Termwise integration needs a Q-expansion"
            raise DomainError(msg)
        results.append(volkenborn_qexpansion(qexp, precision))
    return results


def results_agree(results: list[IntegralResult]) -> bool:
    """Check that every computed integral agrees with the first."""
    return all(results[0].agrees_with(other) for other in results[1:])


def compose_scalar(
    function: CarlitzExpansion,
    scalar: Poly,
    precision: int = DEFAULT_PRECISION,
) -> CarlitzExpansion:
    """Return the Carlitz expansion of ``t -> f(s t)``.

    ``f_n(s t)`` is a combination of ``f_0 .. f_n``, so the support does
    not grow and interpolation on ``x^0 .. x^(L-1)`` is exact.
    """
    ctx = function.ctx
    values = tuple(
        evaluate(function, scalar.shift(exponent), precision)
        for exponent in range(len(function.coeffs))
    )
    return table_to_carlitz(ValueTable(ctx, values), precision)


def _first_support(function: CarlitzExpansion) -> int:
    for index, coef in enumerate(function.coeffs):
        if not coef.is_zero():
            return index
    return len(function.coeffs)


def invariance_check(
    function: CarlitzExpansion,
    precision: int = DEFAULT_PRECISION,
    max_power: int = 3,
) -> list[IdentityReport]:
    """Check the translation and scalar laws of the integral.

    * ``int f(x t) dt = x int f - f(1)^q``,
    * ``int f(x^n t) dt = x^n int f - sum_k x^(n-k) f(x^(k-1))^q``,
    * ``int c f = c^q int f`` for ``c in {x, 1 + x}`` against the limit,
    * ``int f(g t) dt = g int f`` when f vanishes on degrees below deg g.
    """
    ctx = function.ctx
    reports: list[IdentityReport] = []
    integral = volkenborn(function, precision).value
    variable = Poly.variable(ctx)

    for power in range(1, max_power + 1):
        shifted = compose_scalar(function, Poly.monomial(ctx, power), precision)
        lhs = volkenborn(shifted, precision).value
        rhs = integral.shift(power)
        for k in range(1, power + 1):
            value = evaluate(function, Laurent.monomial(ctx, k - 1), precision)
            rhs = rhs - value.frobenius(1).shift(power - k)
        name = "translation" if power == 1 else f"translation_x^{power}"
        reports.append(
            IdentityReport(name, lhs, rhs, _status(lhs, rhs, precision)),
        )

    for scalar in (variable, variable + 1):
        lhs = volkenborn_limit(scale(function, scalar), precision=precision).value
        rhs = integral * scalar.frobenius(1)
        reports.append(
            IdentityReport(
                f"scalar_twist[{scalar}]",
                lhs,
                rhs,
                _status(lhs, rhs, precision),
                "limit sequence against c^q times the closed form",
            ),
        )

    vanishing = min(_first_support(function), max_power)
    for degree in range(1, vanishing + 1):
        for scalar in (Poly.monomial(ctx, degree), Poly.monomial(ctx, degree) + 1):
            composed = compose_scalar(function, scalar, precision)
            lhs = volkenborn(composed, precision).value
            rhs = integral * scalar
            reports.append(
                IdentityReport(
                    f"vanishing[{scalar}]",
                    lhs,
                    rhs,
                    _status(lhs, rhs, precision),
                    f"f vanishes on degrees < {_first_support(function)}",
                ),
            )
    return reports


def sum_uniqueness_check(
    function: CarlitzExpansion,
    shifts: tuple[Poly, ...] = (),
) -> list[IdentityReport]:
    """Check that ``S f`` solves ``a- u = f`` uniquely up to ``c f_0``.

    Adding ``c f_0`` keeps a solution, the normalization ``u(1) = 0``
    singles out ``S f``, and no ``f_k`` with ``k >= 1`` is in the kernel
    of ``a-``.
    """
    ctx = function.ctx
    summed = indefinite_sum(function)
    reports = []
    if not shifts:
        shifts = (Poly.one(ctx), Poly.variable(ctx))
    recovered = a_minus(summed)
    reports.append(_function_report("left_inverse", recovered, function))
    for shift in shifts:
        other = add(summed, CarlitzExpansion.basis_vector(ctx, 0, shift))
        reports.append(_function_report(f"kernel[{shift}]", a_minus(other), function))
        normalized = evaluate(other, Laurent.one(ctx))
        status: CheckStatus = (
            "pass" if normalized.agrees_with(shift.to_laurent()) else "fail"
        )
        reports.append(
            IdentityReport(
                f"normalization[{shift}]",
                normalized,
                shift.to_laurent(),
                status,
                "u(1) separates the solutions",
            ),
        )
    for index in range(1, len(summed.coeffs) + 1):
        image = a_minus(CarlitzExpansion.basis_vector(ctx, index))
        lead = (
            image.coeffs[index - 1]
            if len(image.coeffs) >= index
            else Laurent.zero(ctx)
        )
        reports.append(
            IdentityReport(
                f"kernel_excludes_f_{index}",
                lead,
                Laurent.one(ctx),
                "pass" if lead.agrees_with(Laurent.one(ctx)) else "fail",
                f"a- f_{index} = f_{index - 1}",
            ),
        )
    return reports


def _function_report(
    name: str,
    lhs: LinearFunction,
    rhs: LinearFunction,
) -> IdentityReport:
    ctx = lhs.ctx
    difference = subtract(lhs, rhs)
    status: CheckStatus = "pass" if is_zero_function(difference) else "fail"
    return IdentityReport(
        name,
        Laurent.zero(ctx),
        Laurent.zero(ctx),
        status,
        f"{len(difference.coeffs)} coefficients compared",
    )


def integral_bound(
    function: CarlitzExpansion,
    precision: int = DEFAULT_PRECISION,
) -> tuple[float, float]:
    """Return ``log_q |int f|`` and its bound ``max_l (q log_q |phi_l| + l + 1)``.

    ``|1 / L_(l+1)| = q^(l+1)``, so the bound is the largest term size.
    """
    q = function.ctx.q
    value = volkenborn(function, precision).value
    exponent = -precision if value.is_zero_within_precision() else value.abs_exponent()
    bound = max(
        (
            q * coef.abs_exponent() + level + 1
            for level, coef in enumerate(function.coeffs)
            if coef.coeffs
        ),
        default=-math.inf,
    )
    return exponent, bound
