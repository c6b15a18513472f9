"""F_q-linear functions on O and the operators of the calculus.

A function is held in one of three representations:

* :class:`QExpansion` - ``u(t) = sum a_n t^(q^n)``,
* :class:`CarlitzExpansion` - ``u = sum c_n f_n``,
* :class:`ValueTable` - the values ``u(x^n)``.

Coefficient representations carry Laurent values; operators keep the
representation of their argument.
"""

from __future__ import annotations

import logging
import math
from collections.abc import Sequence
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import ClassVar, Union

from fqcalc.exceptions import (
    DomainError,
    InsufficientPrecisionError,
)
from fqcalc.lib.basis import get_basis
from fqcalc.lib.constants import get_constants
from fqcalc.lib.dataclass.results import (
    AnalyticityReport,
    BoundRow,
    LinearOperatorResult,
    TaylorRecovery,
)
from fqcalc.lib.field import FqContext, FqElement
from fqcalc.lib.series import Laurent, Poly

_LOGGER = logging.getLogger(__name__)

DEFAULT_PRECISION = 64
SAMPLE_EXPONENTS = 8

Scalar = Union[Laurent, Poly, FqElement, int]


def _trim(values: Sequence[Laurent]) -> tuple[Laurent, ...]:
    end = len(values)
    while end and values[end - 1].is_zero():
        end -= 1
    return tuple(values[:end])


def _combine(
    ctx: FqContext,
    first: Sequence[Laurent],
    second: Sequence[Laurent],
    *,
    subtract: bool = False,
) -> tuple[Laurent, ...]:
    size = max(len(first), len(second))
    zero = Laurent.zero(ctx)
    result = []
    for index in range(size):
        left = first[index] if index < len(first) else zero
        right = second[index] if index < len(second) else zero
        result.append(left - right if subtract else left + right)
    return tuple(result)


def _upper_exponent(value: Laurent) -> float:
    """Return an upper bound of ``log_q |value|``, exact when known."""
    if value.is_zero_within_precision():
        return -value.precision
    return value.abs_exponent()


@dataclass(frozen=True)
class QExpansion:
    """``u(t) = sum a_n t^(q^n)`` with raw coefficients ``a_n``.

    ``h_normalized`` records that the function was specified by
    ``a_n^H = D_n a_n``, the coefficients recovered by the difference
    quotient sweep.
    """

    ctx: FqContext
    coeffs: tuple[Laurent, ...] = ()
    h_normalized: bool = False

    kind: ClassVar[str] = "qexp"

    def __post_init__(self) -> None:
        """Drop trailing exact zeros."""
        object.__setattr__(self, "coeffs", _trim(self.coeffs))

    @classmethod
    def from_h(
        cls,
        ctx: FqContext,
        h_coeffs: Sequence[Laurent | Poly],
        precision: int = DEFAULT_PRECISION,
    ) -> QExpansion:
        """Build from H-normalized coefficients, ``a_n = a_n^H / D_n``."""
        constants = get_constants(ctx)
        raw = []
        for level, value in enumerate(h_coeffs):
            laurent = value.to_laurent() if isinstance(value, Poly) else value
            raw.append(laurent.divide(constants.D(level).to_laurent(), precision))
        return cls(ctx, tuple(raw), h_normalized=True)

    @classmethod
    def monomial(cls, ctx: FqContext, level: int, coef: Scalar = 1) -> QExpansion:
        """Return ``coef * t^(q^level)``."""
        value = Laurent.one(ctx) * coef
        return cls(ctx, (Laurent.zero(ctx),) * level + (value,))

    def h_coefficients(self) -> list[Laurent]:
        """Return ``a_n^H = D_n a_n``."""
        constants = get_constants(self.ctx)
        return [a * constants.D(level) for level, a in enumerate(self.coeffs)]

    def norm_a(self) -> float:
        """Return ``log_q ||u||_A = max log_q |a_n^H|``."""
        return max(
            (_upper_exponent(a) for a in self.h_coefficients()),
            default=-math.inf,
        )

    def with_coeffs(self, coeffs: Sequence[Laurent]) -> QExpansion:
        """Return the same kind of expansion with other coefficients."""
        return replace(self, coeffs=tuple(coeffs))


@dataclass(frozen=True)
class CarlitzExpansion:
    """The Fourier-Carlitz expansion ``u = sum c_n f_n``."""

    ctx: FqContext
    coeffs: tuple[Laurent, ...] = ()

    kind: ClassVar[str] = "carlitz"

    def __post_init__(self) -> None:
        """Drop trailing exact zeros."""
        object.__setattr__(self, "coeffs", _trim(self.coeffs))

    @classmethod
    def basis_vector(
        cls,
        ctx: FqContext,
        index: int,
        coef: Scalar = 1,
    ) -> CarlitzExpansion:
        """Return ``coef * f_index``."""
        value = Laurent.one(ctx) * coef
        return cls(ctx, (Laurent.zero(ctx),) * index + (value,))

    @classmethod
    def from_polys(cls, ctx: FqContext, coeffs: Sequence[Poly]) -> CarlitzExpansion:
        """Build from exact polynomial coefficients."""
        return cls(ctx, tuple(c.to_laurent() for c in coeffs))

    def norm(self) -> float:
        """Return ``log_q ||u|| = max log_q |c_n|``."""
        return max((_upper_exponent(c) for c in self.coeffs), default=-math.inf)

    def with_coeffs(self, coeffs: Sequence[Laurent]) -> CarlitzExpansion:
        """Return the same kind of expansion with other coefficients."""
        return replace(self, coeffs=tuple(coeffs))


@dataclass(frozen=True)
class ValueTable:
    """The values ``u(x^n)`` for ``n < len(values)``."""

    ctx: FqContext
    values: tuple[Laurent, ...] = ()

    kind: ClassVar[str] = "table"

    @property
    def coeffs(self) -> tuple[Laurent, ...]:
        """The table entries, for uniform handling with expansions."""
        return self.values

    def with_coeffs(self, coeffs: Sequence[Laurent]) -> ValueTable:
        """Return a table with other entries."""
        return replace(self, values=tuple(coeffs))


LinearFunction = Union[QExpansion, CarlitzExpansion, ValueTable]


def _as_point(ctx: FqContext, point: Laurent | Poly) -> Laurent:
    if isinstance(point, Poly):
        point = point.to_laurent()
    if point.ctx != ctx:
        msg = f"Point over {point.ctx} used with a function over {ctx}"
        raise DomainError(msg)
    if point.coeffs and point.valuation < 0:
        msg = f"{point} is outside O (|t| > 1)"
        raise DomainError(msg)
    return point


def evaluate(
    function: LinearFunction,
    point: Laurent | Poly,
    precision: int = DEFAULT_PRECISION,
) -> Laurent:
    """Evaluate an F_q-linear function at a point of O.

    :param function: the function in any representation
    :type function: LinearFunction
    :param point: the argument t with ``|t| <= 1``
    :type point: Laurent | Poly
    :param precision: absolute precision wanted
    :type precision: int
    :return: ``u(t)``
    :rtype: Laurent
    :raises DomainError: when ``|t| > 1``
    :raises InsufficientPrecisionError: when a value table does not reach t
    """
    ctx = function.ctx
    point = _as_point(ctx, point)
    total = Laurent.zero(ctx)
    if isinstance(function, QExpansion):
        for level, coef in enumerate(function.coeffs):
            if coef.is_zero():
                continue
            power = point.frobenius(level).truncate(precision - coef.valuation)
            total = total + coef * power
    elif isinstance(function, CarlitzExpansion):
        basis = get_basis(ctx)
        for index, coef in enumerate(function.coeffs):
            if coef.is_zero():
                continue
            if not coef.coeffs:
                total = total + Laurent.zero(ctx, coef.precision)
                continue
            value = basis.f_at(index, point, precision - coef.valuation)
            total = total + coef * value
    else:
        count = len(function.values)
        if not point.is_exact() or point.degree >= count:
            msg = f"A table of u(x^n), n < {count}, does not determine u({point})"
            raise InsufficientPrecisionError(msg)
        for exponent, digit in enumerate(point.digits(count)):
            if digit:
                total = total + function.values[exponent] * FqElement(ctx, digit)
    return total.truncate(precision)


def qexp_to_carlitz(function: QExpansion) -> CarlitzExpansion:
    """Convert with ``c_j = sum_(n>=j) D_n / D_(n-j)^(q^j) a_n``.

    ``D_n / D_(n-j)^(q^j)`` is the value of ``Delta^(j) t^(q^n)`` at 1.
    """
    ctx = function.ctx
    constants = get_constants(ctx)
    size = len(function.coeffs)
    coeffs = []
    for j in range(size):
        total = Laurent.zero(ctx)
        for level in range(j, size):
            coef = function.coeffs[level]
            if not coef.is_zero():
                total = total + coef * constants.falling_bracket(level, j)
        coeffs.append(total)
    return CarlitzExpansion(ctx, tuple(coeffs))


def carlitz_to_qexp(
    function: CarlitzExpansion,
    precision: int = DEFAULT_PRECISION,
) -> QExpansion:
    """Convert by expanding each ``f_n`` into ``t^(q^j)`` monomials."""
    ctx = function.ctx
    constants = get_constants(ctx)
    size = len(function.coeffs)
    coeffs = []
    for j in range(size):
        total = Laurent.zero(ctx)
        for index in range(j, size):
            coef = function.coeffs[index]
            if coef.is_zero():
                continue
            term = coef * constants.e_coefficient(index, j)
            total = total + term.divide(constants.D(index).to_laurent(), precision)
        coeffs.append(total)
    return QExpansion(ctx, tuple(coeffs))


def to_table(
    function: QExpansion | CarlitzExpansion,
    length: int,
    precision: int = DEFAULT_PRECISION,
) -> ValueTable:
    """Tabulate ``u(x^n)`` for ``n < length``."""
    ctx = function.ctx
    return ValueTable(
        ctx,
        tuple(
            evaluate(function, Laurent.monomial(ctx, exponent), precision)
            for exponent in range(length)
        ),
    )


def table_to_carlitz(
    table: ValueTable,
    precision: int = DEFAULT_PRECISION,
) -> CarlitzExpansion:
    """Interpolate Fourier-Carlitz coefficients from a value table.

    The system is unit triangular: ``f_n(x^m) = 0`` for ``n > m`` and
    ``f_m(x^m) = 1``.

    :raises BudgetExceededError: when the table is longer than the index cap
    """
    ctx = table.ctx
    basis = get_basis(ctx)
    coeffs: list[Laurent] = []
    for exponent, value in enumerate(table.values):
        point = Laurent.monomial(ctx, exponent)
        residual = value.truncate(precision)
        for index, coef in enumerate(coeffs):
            if coef.is_zero():
                continue
            if not coef.coeffs:
                residual = residual + Laurent.zero(ctx, coef.precision)
                continue
            residual = residual - coef * basis.f_at(
                index,
                point,
                precision - coef.valuation,
            )
        coeffs.append(residual)
    return CarlitzExpansion(ctx, tuple(coeffs))


def convert(
    function: LinearFunction,
    target: str,
    precision: int = DEFAULT_PRECISION,
    length: int | None = None,
) -> LinearFunction:
    """Convert between the three representations.

    :param function: the function
    :type function: LinearFunction
    :param target: ``qexp``, ``carlitz`` or ``table``
    :type target: str
    :param precision: working precision
    :type precision: int
    :param length: table length, defaults to the support size
    :type length: int | None
    :return: the converted function
    :rtype: LinearFunction
    :raises DomainError: on an unknown target
    """
    if target == function.kind:
        return function
    if isinstance(function, ValueTable):
        carlitz = table_to_carlitz(function, precision)
        return carlitz if target == "carlitz" else convert(carlitz, target, precision)
    if target == "table":
        size = length if length is not None else max(len(function.coeffs), 1)
        return to_table(function, size, precision)
    if target == "carlitz" and isinstance(function, QExpansion):
        return qexp_to_carlitz(function)
    if target == "qexp" and isinstance(function, CarlitzExpansion):
        return carlitz_to_qexp(function, precision)
    msg = f"Unknown representation {target!r}"
    raise DomainError(msg)


def scale(function: LinearFunction, factor: Scalar) -> LinearFunction:
    """Multiply a function by a constant of K."""
    return function.with_coeffs([c * factor for c in function.coeffs])


def subtract(first: LinearFunction, second: LinearFunction) -> LinearFunction:
    """Subtract two functions held in the same representation."""
    if isinstance(first, ValueTable):
        size = min(len(first.values), len(second.coeffs))
        return first.with_coeffs(
            [a - b for a, b in zip(first.values[:size], second.coeffs[:size])],
        )
    return first.with_coeffs(
        _combine(first.ctx, first.coeffs, second.coeffs, subtract=True),
    )


def add(first: LinearFunction, second: LinearFunction) -> LinearFunction:
    """Add two functions held in the same representation."""
    if isinstance(first, ValueTable):
        size = min(len(first.values), len(second.coeffs))
        return first.with_coeffs(
            [a + b for a, b in zip(first.values[:size], second.coeffs[:size])],
        )
    return first.with_coeffs(_combine(first.ctx, first.coeffs, second.coeffs))


def is_zero_function(function: LinearFunction) -> bool:
    """Check that no known coefficient is non zero."""
    return not any(c.coeffs for c in function.coeffs)


def _frobenius_rows(ctx: FqContext, rows: Sequence[Laurent]) -> list[Laurent]:
    """Apply ``R_q`` to Carlitz coefficients.

    ``R_q(sum s_i f_i) = sum s_i^q ([i+1] f_(i+1) + f_i)``.
    """
    constants = get_constants(ctx)
    result = [Laurent.zero(ctx)] * (len(rows) + 1)
    for index, value in enumerate(rows):
        if value.is_zero():
            continue
        power = value.frobenius(1)
        result[index] = result[index] + power
        result[index + 1] = result[index + 1] + power * constants.bracket(index + 1)
    return result


def frobenius_basis_image(ctx: FqContext, index: int, power: int) -> list[Poly]:
    """Return the Carlitz coefficients of ``f_index^(q^power)``."""
    constants = get_constants(ctx)
    rows = [Poly.zero(ctx)] * index + [Poly.one(ctx)]
    for _ in range(power):
        lifted = [Poly.zero(ctx)] * (len(rows) + 1)
        for position, row in enumerate(rows):
            if row:
                square = row.frobenius(1)
                lifted[position] = lifted[position] + square
                lifted[position + 1] = lifted[position + 1] + square * (
                    constants.bracket(position + 1)
                )
        rows = lifted
    return rows


def delta(
    function: LinearFunction,
    order: int = 1,
) -> LinearFunction:
    """Apply the difference operator ``Delta^(k)``.

    ``Delta^(k) t^(q^n) = D_n / D_(n-k)^(q^k) t^(q^n)``,
    ``Delta^(k) f_n = f_(n-k)^(q^k)`` and on tables the defining recursion
    ``Delta^(j) u(t) = Delta^(j-1) u(xt) - x^(q^(j-1)) Delta^(j-1) u(t)``,
    which shortens the table by one entry per order.

    :raises DomainError: for a negative order
    """
    if order < 0:
        msg = f"Difference order must be >= 0, got {order}"
        raise DomainError(msg)
    if order == 0:
        return function
    ctx = function.ctx
    constants = get_constants(ctx)
    if isinstance(function, QExpansion):
        coeffs = [
            Laurent.zero(ctx)
            if level < order or coef.is_zero()
            else coef * constants.falling_bracket(level, order)
            for level, coef in enumerate(function.coeffs)
        ]
        return function.with_coeffs(coeffs)
    if isinstance(function, CarlitzExpansion):
        result: tuple[Laurent, ...] = ()
        for index in range(order, len(function.coeffs)):
            coef = function.coeffs[index]
            if coef.is_zero():
                continue
            image = frobenius_basis_image(ctx, index - order, order)
            result = _combine(ctx, result, [coef * row for row in image])
        return function.with_coeffs(result)
    values = list(function.values)
    for level in range(order):
        weight = Poly.monomial(ctx, ctx.q**level)
        values = [
            values[exponent + 1] - values[exponent] * weight
            for exponent in range(len(values) - 1)
        ]
    return function.with_coeffs(values)


def frobenius(function: LinearFunction) -> LinearFunction:
    """Apply ``R_q: u -> u^q``."""
    ctx = function.ctx
    if isinstance(function, QExpansion):
        return function.with_coeffs(
            [Laurent.zero(ctx)] + [c.frobenius(1) for c in function.coeffs],
        )
    if isinstance(function, CarlitzExpansion):
        return function.with_coeffs(_frobenius_rows(ctx, function.coeffs))
    return function.with_coeffs([v.frobenius(1) for v in function.values])


def a_plus(function: LinearFunction) -> LinearFunction:
    """Apply the creation operator ``a+ = R_q - I``."""
    return subtract(frobenius(function), function)


def a_minus(function: LinearFunction) -> LinearFunction:
    """Apply the annihilation operator ``a- = q-th root after Delta``.

    :raises NotAQthPowerError: when a needed q-th root is not in K
    """
    ctx = function.ctx
    if isinstance(function, CarlitzExpansion):
        return function.with_coeffs([c.q_root() for c in function.coeffs[1:]])
    if isinstance(function, QExpansion):
        constants = get_constants(ctx)
        coeffs = [
            (coef * constants.bracket(level + 1)).q_root()
            for level, coef in enumerate(function.coeffs[1:])
        ]
        return function.with_coeffs(coeffs)
    return function.with_coeffs([v.q_root() for v in delta(function).coeffs])


def commutator_defect(function: LinearFunction) -> LinearFunction:
    """Return ``Delta a+ u - a+ Delta u - [1] R_q u``.

    The ladder commutator ``a- a+ - a+ a- = [1]^(1/q) I`` raised to the
    q-th power; it vanishes identically.
    """
    bracket = get_constants(function.ctx).bracket(1)
    left = subtract(delta(a_plus(function)), a_plus(delta(function)))
    return subtract(left, scale(frobenius(function), bracket))


def apply_operator(
    function: LinearFunction,
    operator: str,
    order: int = 1,
) -> LinearOperatorResult:
    """Apply a named operator and package the image.

    :param function: the function
    :type function: LinearFunction
    :param operator: ``delta``, ``a_plus``, ``a_minus`` or ``frobenius``
    :type operator: str
    :param order: order of the difference operator
    :type order: int
    :return: the image with its representation
    :rtype: LinearOperatorResult
    :raises DomainError: on an unknown operator
    """
    if operator == "delta":
        image = delta(function, order)
    elif operator == "a_plus":
        image = a_plus(function)
    elif operator == "a_minus":
        image = a_minus(function)
    elif operator == "frobenius":
        image = frobenius(function)
    else:
        msg = f"Unknown operator {operator!r}"
        raise DomainError(msg)
    return LinearOperatorResult(operator, function.kind, tuple(image.coeffs))


def taylor_recover(
    function: QExpansion,
    index: int,
    exponent: int,
    precision: int = DEFAULT_PRECISION,
) -> Laurent:
    """Return ``Delta^(n) u(x^m) / x^(m q^n)``.

    :raises DomainError: for ``m < 1``
    """
    if exponent < 1:
        msg = f"Taylor recovery needs t = x^m with m >= 1, got m = {exponent}"
        raise DomainError(msg)
    ctx = function.ctx
    shift = exponent * ctx.q**index
    image = delta(function, index)
    value = evaluate(image, Laurent.monomial(ctx, exponent), precision + shift)
    return value.shift(-shift)


def taylor_sweep(
    function: QExpansion,
    index: int,
    precision: int = DEFAULT_PRECISION,
    max_exponent: int | None = None,
) -> TaylorRecovery:
    """Sweep ``m = 1, 2, ...`` until two successive quotients agree.

    The tail after the n-th term decays like ``x^(m (q-1) q^n)``, so the
    sweep bound defaults to ``precision // ((q-1) q^n) + 2``.

    :param function: the function
    :type function: QExpansion
    :param index: n
    :type index: int
    :param precision: working precision
    :type precision: int
    :param max_exponent: largest m tried
    :type max_exponent: int | None
    :return: the trace, the stabilized value and the first stable m
    :rtype: TaylorRecovery
    """
    ctx = function.ctx
    if max_exponent is None:
        max_exponent = precision // ((ctx.q - 1) * ctx.q**index) + 2
    trace = [taylor_recover(function, index, 1, precision)]
    stabilized_at = None
    for exponent in range(2, max_exponent + 1):
        trace.append(taylor_recover(function, index, exponent, precision))
        if trace[-1].agrees_with(trace[-2], precision, guard=0):
            stabilized_at = exponent - 1
            break
    if stabilized_at is None:
        _LOGGER.warning(
            "Quotients for n=%d did not stabilize up to m=%d",
            index,
            max_exponent,
        )
    else:
        _LOGGER.debug("Quotients for n=%d stabilized at m=%d", index, stabilized_at)
    expected = None
    if function.h_normalized:
        h_coeffs = function.h_coefficients()
        expected = h_coeffs[index] if index < len(h_coeffs) else Laurent.zero(ctx)
    return TaylorRecovery(index, tuple(trace), trace[-1], stabilized_at, expected)


def dk_apply(
    function: LinearFunction,
    order: int,
    point: Laurent | Poly,
    precision: int = DEFAULT_PRECISION,
) -> Laurent:
    """Return ``D^k u(t) = t^(-q^k) Delta^(k) u(t)``.

    :raises DomainError: for ``t = 0``
    """
    ctx = function.ctx
    point = _as_point(ctx, point)
    if not point.coeffs:
        msg = "D^k u(t) is undefined at t = 0"
        raise DomainError(msg)
    power = point.frobenius(order)
    image = delta(function, order)
    value = evaluate(image, point, precision + power.valuation)
    return value.divide(power, precision)


def _carlitz_of(
    function: LinearFunction,
    precision: int = DEFAULT_PRECISION,
) -> CarlitzExpansion:
    converted = convert(function, "carlitz", precision)
    if not isinstance(converted, CarlitzExpansion):
        msg = "Conversion to a Carlitz expansion failed"
        raise DomainError(msg)
    return converted


def dk_norm(function: LinearFunction, order: int) -> float:
    """Return ``log_q sup |D^k u| = max_(n>=k) ((n-k) q^k + log_q |c_n|)``."""
    carlitz = _carlitz_of(function)
    step = function.ctx.q**order
    return max(
        (
            (index - order) * step + _upper_exponent(coef)
            for index, coef in enumerate(carlitz.coeffs)
            if index >= order and not coef.is_zero()
        ),
        default=-math.inf,
    )


def dk_sampled_max(
    function: LinearFunction,
    order: int,
    max_exponent: int = SAMPLE_EXPONENTS,
    precision: int = DEFAULT_PRECISION,
) -> tuple[float, int | None]:
    """Return the largest ``log_q |D^k u(x^m)|`` over ``m <= max_exponent``.

    :return: the exponent and the first m attaining it
    :rtype: tuple[float, int | None]
    """
    norm = dk_norm(function, order)
    if norm != -math.inf:
        precision = max(precision, int(-norm) + 8)
    best, where = -math.inf, None
    for exponent in range(max_exponent + 1):
        value = dk_apply(
            function,
            order,
            Laurent.monomial(function.ctx, exponent),
            precision,
        )
        if not value.coeffs:
            continue
        if value.abs_exponent() > best:
            best, where = value.abs_exponent(), exponent
    return best, where


def s_exponent(upper: int, lower: int, q: int) -> int:
    """Return ``s_(nj)`` with ``|D_n / (D_j L_(n-j)^(q^j))| = q^(s_(nj))``."""
    if upper == lower:
        return 0
    return (upper - lower) * q**lower - sum(q**i for i in range(lower, upper))


def s_exponent_signs_hold(q: int, max_index: int = 8) -> bool:
    """Check the signs of ``s_(nj)`` for ``0 <= j < n <= max_index``.

    ``[j+1 over j]`` is a unit, so ``s_(j+1,j) = 0``; every other
    exponent is negative. ``s_(nj) <= 0`` is what bounds ``|a_n|``.
    """
    return all(
        s_exponent(upper, lower, q) == 0
        if upper == lower + 1
        else s_exponent(upper, lower, q) < 0
        for upper in range(1, max_index + 1)
        for lower in range(upper)
    )


def binomial_exponent_matches(ctx: FqContext, upper: int, lower: int) -> bool:
    """Compare ``s_(nj)`` with the valuation of the Carlitz binomial."""
    binomial = get_constants(ctx).carlitz_binomial(upper, lower)
    return -binomial.valuation == s_exponent(upper, lower, ctx.q)


def analyticity_bounds(
    function: LinearFunction,
    precision: int = DEFAULT_PRECISION,
) -> AnalyticityReport:
    """Check the coefficient bounds linking the two expansions.

    A Q-expansion is converted forward and checked against
    ``|c_n| <= q^(-(q^n-1)/(q-1)) max_(k>=n) |a_k|``; a Carlitz expansion
    (or table) is converted backward and checked against
    ``|a_n| <= max_(k>=n) |c_k / D_k|``.
    """
    q = function.ctx.q
    constants = get_constants(function.ctx)
    forward: list[BoundRow] = []
    backward: list[BoundRow] = []
    if isinstance(function, QExpansion):
        carlitz = qexp_to_carlitz(function)
        exponents = [_upper_exponent(a) for a in function.coeffs]
        for index, coef in enumerate(carlitz.coeffs):
            tail = max(exponents[index:], default=-math.inf)
            bound = tail - constants.d_valuation(index)
            forward.append(BoundRow(index, _upper_exponent(coef), bound))
    else:
        carlitz = _carlitz_of(function, precision)
        qexp = carlitz_to_qexp(carlitz, precision)
        weighted = [
            _upper_exponent(c) + constants.d_valuation(index)
            for index, c in enumerate(carlitz.coeffs)
        ]
        for index, coef in enumerate(qexp.coeffs):
            bound = max(weighted[index:], default=-math.inf)
            backward.append(BoundRow(index, _upper_exponent(coef), bound))
    return AnalyticityReport(tuple(forward), tuple(backward), s_exponent_signs_hold(q))


def smoothness_profile(function: LinearFunction, order: int) -> list[float]:
    """Return ``n q^k + log_q |c_n|``; bounded tails mark smoothness of order k."""
    carlitz = _carlitz_of(function)
    step = function.ctx.q**order
    return [
        index * step + _upper_exponent(coef)
        for index, coef in enumerate(carlitz.coeffs)
    ]


def analyticity_profile(function: LinearFunction) -> list[Fraction]:
    """Return ``q^n / (q-1) + log_q |c_n|``; decay marks analyticity."""
    carlitz = _carlitz_of(function)
    q = function.ctx.q
    profile = []
    for index, coef in enumerate(carlitz.coeffs):
        exponent = _upper_exponent(coef)
        if exponent == -math.inf:
            continue
        profile.append(Fraction(q**index, q - 1) + int(exponent))
    return profile


def derivative_at_zero(
    function: LinearFunction,
    precision: int = DEFAULT_PRECISION,
) -> Laurent:
    """Return ``u'(0) = sum c_n (-1)^n / L_n``, the linear term of u."""
    ctx = function.ctx
    constants = get_constants(ctx)
    total = Laurent.zero(ctx)
    for index, coef in enumerate(_carlitz_of(function, precision).coeffs):
        if coef.is_zero():
            continue
        term = coef.divide(constants.L(index).to_laurent(), precision)
        total = total + (term if index % 2 == 0 else -term)
    return total


def difference_quotients(
    function: LinearFunction,
    max_exponent: int,
    precision: int = DEFAULT_PRECISION,
) -> list[Laurent]:
    """Return ``u(x^m) / x^m`` for ``m = 0 .. max_exponent``.

    These converge to ``u'(0)`` exactly when u is differentiable at 0.
    """
    ctx = function.ctx
    quotients = []
    for exponent in range(max_exponent + 1):
        point = Laurent.monomial(ctx, exponent)
        quotients.append(
            evaluate(function, point, precision + exponent).shift(-exponent),
        )
    return quotients

