"""Carlitz polynomial families and the orthonormal h-basis.

Polynomials in the function argument t carry exact coefficients in
F_q(x): a tuple of numerators in F_q[x] over one common denominator.
"""

from __future__ import annotations

import logging
import math
import threading
from collections.abc import Sequence
from dataclasses import dataclass
from itertools import product as cartesian

from fqcalc.exceptions import DomainError
from fqcalc.lib.constants import CarlitzConstants, digit_expansion, get_constants
from fqcalc.lib.field import FqContext, FqElement
from fqcalc.lib.series import Laurent, Poly, poly_enumerate

_LOGGER = logging.getLogger(__name__)

DEFAULT_BUDGET = 4096
_SCHOOLBOOK_ROWS = 16

Fraction = tuple[Poly, Poly]


def _mul_rows(
    ctx: FqContext,
    first: Sequence[Poly],
    second: Sequence[Poly],
) -> list[Poly]:
    """Multiply two polynomials in t with F_q[x] coefficients.

    Large inputs are packed into one long coefficient sequence with a
    stride wide enough that no product coefficient overlaps the next.
    """
    size = len(first) + len(second) - 1
    if len(first) * len(second) <= _SCHOOLBOOK_ROWS:
        rows = [Poly.zero(ctx)] * size
        for i, left in enumerate(first):
            if left:
                for j, right in enumerate(second):
                    if right:
                        rows[i + j] = rows[i + j] + left * right
        return rows
    stride = (
        max(max(row.degree for row in first), 0)
        + max(max(row.degree for row in second), 0)
        + 1
    )

    def flatten(rows: Sequence[Poly]) -> list[int]:
        flat: list[int] = []
        for row in rows:
            flat.extend(row.coeffs)
            flat.extend([0] * (stride - len(row.coeffs)))
        return flat

    packed = ctx.convolve(flatten(first), flatten(second))
    return [
        Poly(ctx, tuple(packed[k * stride : (k + 1) * stride])) for k in range(size)
    ]


def _strip(rows: Sequence[Poly]) -> tuple[Poly, ...]:
    end = len(rows)
    while end and not rows[end - 1]:
        end -= 1
    return tuple(rows[:end])


def fraction_to_laurent(fraction: Fraction, precision: int) -> Laurent:
    """Realise ``numerator / denominator`` as a Laurent value."""
    numerator, denominator = fraction
    return numerator.to_laurent().divide(denominator.to_laurent(), precision)


def fraction_exponent(fraction: Fraction) -> float:
    """Return ``log_q |numerator / denominator|``, ``-inf`` for zero."""
    numerator, denominator = fraction
    if not numerator:
        return -math.inf
    return denominator.valuation - numerator.valuation


@dataclass(frozen=True, eq=False)
class TPoly:
    """A polynomial in t with coefficients in F_q(x).

    ``coeffs[k] / denominator`` is the coefficient of ``t^k``.
    """

    coeffs: tuple[Poly, ...]
    denominator: Poly

    def __post_init__(self) -> None:
        """Drop vanishing leading coefficients."""
        if not self.denominator:
            msg = "A polynomial in t needs a non zero denominator"
            raise DomainError(msg)
        object.__setattr__(self, "coeffs", _strip(self.coeffs))

    @classmethod
    def from_polys(
        cls,
        coeffs: Sequence[Poly],
        denominator: Poly | None = None,
    ) -> TPoly:
        """Build from numerators, over denominator 1 unless given."""
        ctx = (denominator or coeffs[0]).ctx
        return cls(tuple(coeffs), denominator or Poly.one(ctx))

    @classmethod
    def constant(cls, value: Poly) -> TPoly:
        """Return the constant polynomial ``value``."""
        return cls((value,), Poly.one(value.ctx))

    @classmethod
    def linear_factor(cls, root: Poly) -> TPoly:
        """Return ``t - root``."""
        return cls((-root, Poly.one(root.ctx)), Poly.one(root.ctx))

    @property
    def ctx(self) -> FqContext:
        """The coefficient field."""
        return self.denominator.ctx

    @property
    def degree(self) -> int:
        """Degree in t, -1 for zero."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        """Check for the zero polynomial."""
        return not self.coeffs

    def coefficient(self, power: int) -> Fraction:
        """Return the coefficient of ``t^power`` as numerator and denominator."""
        if 0 <= power < len(self.coeffs):
            return self.coeffs[power], self.denominator
        return Poly.zero(self.ctx), self.denominator

    def _coerce(self, other: TPoly | Poly | FqElement | int) -> TPoly:
        if isinstance(other, TPoly):
            return other
        if isinstance(other, Poly):
            return TPoly.constant(other)
        return TPoly.constant(Poly.constant(self.ctx, other))

    def __eq__(self, other: object) -> bool:
        """Compare as rational functions by cross multiplication."""
        if not isinstance(other, TPoly):
            return NotImplemented
        if len(self.coeffs) != len(other.coeffs):
            return False
        return all(
            mine * other.denominator == theirs * self.denominator
            for mine, theirs in zip(self.coeffs, other.coeffs)
        )

    __hash__ = None  # type: ignore[assignment]

    def __add__(self, other: TPoly | Poly | FqElement | int) -> TPoly:
        """Add two polynomials in t."""
        other = self._coerce(other)
        if self.denominator == other.denominator:
            common, mine, theirs = self.denominator, None, None
        else:
            common = self.denominator.lcm(other.denominator)
            mine = common // self.denominator
            theirs = common // other.denominator
        size = max(len(self.coeffs), len(other.coeffs))
        rows = []
        for power in range(size):
            left = self.coefficient(power)[0]
            right = other.coefficient(power)[0]
            if mine is not None:
                left, right = left * mine, right * theirs
            rows.append(left + right)
        return TPoly(tuple(rows), common)

    __radd__ = __add__

    def __neg__(self) -> TPoly:
        """Negate the polynomial."""
        return TPoly(tuple(-row for row in self.coeffs), self.denominator)

    def __sub__(self, other: TPoly | Poly | FqElement | int) -> TPoly:
        """Subtract two polynomials in t."""
        return self + (-self._coerce(other))

    def __mul__(self, other: TPoly | Poly | FqElement | int) -> TPoly:
        """Multiply two polynomials in t."""
        other = self._coerce(other)
        if self.is_zero() or other.is_zero():
            return TPoly((), self.denominator)
        return TPoly(
            tuple(_mul_rows(self.ctx, self.coeffs, other.coeffs)),
            self.denominator * other.denominator,
        )

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> TPoly:
        """Raise to a non negative integer power."""
        result = TPoly.constant(Poly.one(self.ctx))
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def divide(self, value: Poly) -> TPoly:
        """Divide every coefficient by a non zero polynomial in x."""
        return TPoly(self.coeffs, self.denominator * value)

    def reduced(self) -> TPoly:
        """Cancel common factors and make the denominator monic."""
        common = self.denominator
        for row in self.coeffs:
            if common.degree == 0:
                break
            common = common.gcd(row)
        scale = common * FqElement(self.ctx, self.denominator.leading)
        return TPoly(
            tuple(row // scale for row in self.coeffs),
            self.denominator // scale,
        )

    def evaluate_exact(self, point: Poly) -> Fraction:
        """Evaluate at a polynomial t, returning numerator and denominator."""
        value = Poly.zero(self.ctx)
        for row in reversed(self.coeffs):
            value = value * point + row
        return value, self.denominator

    def evaluate(self, point: Laurent | Poly, precision: int) -> Laurent:
        """Evaluate at t, the result known modulo ``x^precision`` at best."""
        if isinstance(point, Poly):
            return fraction_to_laurent(self.evaluate_exact(point), precision)
        slack = precision + self.denominator.valuation
        value = Laurent.zero(self.ctx)
        for row in reversed(self.coeffs):
            value = (value * point + row.to_laurent()).truncate(slack)
        return value.divide(self.denominator.to_laurent(), precision)

    def __str__(self) -> str:
        """Render as ``(c_k t^k + ... ) / d``."""
        terms = []
        for power in range(len(self.coeffs) - 1, -1, -1):
            row = self.coeffs[power]
            if not row:
                continue
            variable = "" if power == 0 else ("t" if power == 1 else f"t^{power}")
            if power and row == Poly.one(self.ctx):
                terms.append(variable)
            else:
                terms.append(f"({row}){variable}" if power else f"({row})")
        text = " + ".join(terms) or "0"
        if self.denominator == Poly.one(self.ctx):
            return text
        return f"[{text}] / ({self.denominator})"


@dataclass(frozen=True, eq=False)
class LinearTPoly:
    """An F_q-linear polynomial in t.

    ``coeffs[j] / denominator`` is the coefficient of ``t^(q^j)``.
    """

    coeffs: tuple[Poly, ...]
    denominator: Poly

    def __post_init__(self) -> None:
        """Drop vanishing leading coefficients."""
        if not self.denominator:
            msg = "A polynomial in t needs a non zero denominator"
            raise DomainError(msg)
        object.__setattr__(self, "coeffs", _strip(self.coeffs))

    @property
    def ctx(self) -> FqContext:
        """The coefficient field."""
        return self.denominator.ctx

    @property
    def degree(self) -> int:
        """Degree in t, -1 for zero."""
        return self.ctx.q ** (len(self.coeffs) - 1) if self.coeffs else -1

    def coefficient(self, level: int) -> Fraction:
        """Return the coefficient of ``t^(q^level)``."""
        if 0 <= level < len(self.coeffs):
            return self.coeffs[level], self.denominator
        return Poly.zero(self.ctx), self.denominator

    def laurent_coefficients(self, precision: int) -> list[Laurent]:
        """Return the coefficients of ``t^(q^j)`` as Laurent values."""
        return [
            fraction_to_laurent((row, self.denominator), precision)
            for row in self.coeffs
        ]

    def __eq__(self, other: object) -> bool:
        """Compare by cross multiplication."""
        if not isinstance(other, LinearTPoly):
            return NotImplemented
        return self.to_tpoly() == other.to_tpoly()

    __hash__ = None  # type: ignore[assignment]

    def to_tpoly(self) -> TPoly:
        """Spread the coefficients to the exponents ``q^j``."""
        if not self.coeffs:
            return TPoly((), self.denominator)
        rows = [Poly.zero(self.ctx)] * (self.degree + 1)
        for level, row in enumerate(self.coeffs):
            rows[self.ctx.q**level] = row
        return TPoly(tuple(rows), self.denominator)

    def evaluate_exact(self, point: Poly) -> Fraction:
        """Evaluate at a polynomial t using ``t^(q^j) = frob_j(t)``."""
        value = Poly.zero(self.ctx)
        for level, row in enumerate(self.coeffs):
            if row:
                value = value + row * point.frobenius(level)
        return value, self.denominator

    def evaluate(self, point: Laurent | Poly, precision: int) -> Laurent:
        """Evaluate at t, the result known modulo ``x^precision`` at best."""
        if isinstance(point, Poly):
            point = point.to_laurent()
        slack = precision + self.denominator.valuation
        value = Laurent.zero(self.ctx)
        for level, row in enumerate(self.coeffs):
            if row:
                power = point.frobenius(level)
                reach = slack - (power.valuation if power else 0)
                value = value + row.to_laurent(reach) * power
        return value.truncate(slack).divide(self.denominator.to_laurent(), precision)

    def __str__(self) -> str:
        """Render via the spread polynomial."""
        return str(self.to_tpoly())


class CarlitzBasis:
    """The Carlitz families of one coefficient field, cached on first use."""

    def __init__(self, constants: CarlitzConstants) -> None:
        """Initialise the cache.

        :param constants: the constants cache of the field
        :type constants: CarlitzConstants
        """
        self._constants = constants
        self._lock = threading.RLock()
        self._g_products: dict[int, TPoly] = {}
        self._d_inverses: dict[int, Laurent] = {}
        self._e_values: dict[tuple[int, tuple[int, ...]], Poly] = {}

    @property
    def constants(self) -> CarlitzConstants:
        """The constants cache."""
        return self._constants

    @property
    def ctx(self) -> FqContext:
        """The coefficient field."""
        return self._constants.ctx

    @property
    def q(self) -> int:
        """Order of the coefficient field."""
        return self._constants.q

    def e_binomial(self, index: int) -> LinearTPoly:
        """Return ``e_i = sum_j (-1)^(i-j) [i over j] t^(q^j)``."""
        self._constants.check_index(index)
        return LinearTPoly(
            tuple(self._constants.e_coefficient(index, j) for j in range(index + 1)),
            Poly.one(self.ctx),
        )

    def e_product(self, index: int, budget: int = DEFAULT_BUDGET) -> TPoly:
        """Return ``e_i = prod (t - m)`` over every m of degree below i.

        :raises BudgetExceededError: when q^i linear factors exceed the budget
        """
        factors = [
            TPoly.linear_factor(root)
            for root in poly_enumerate(self.ctx, index, monic_only=False, budget=budget)
        ]
        while len(factors) > 1:
            paired = [
                factors[k] * factors[k + 1] for k in range(0, len(factors) - 1, 2)
            ]
            if len(factors) % 2:
                paired.append(factors[-1])
            factors = paired
        return factors[0]

    def f(self, index: int) -> LinearTPoly:
        """Return the normalized Carlitz polynomial ``f_i = e_i / D_i``."""
        binomial = self.e_binomial(index)
        return LinearTPoly(binomial.coeffs, self._constants.D(index))

    def G(self, index: int) -> TPoly:  # pylint: disable=invalid-name
        """Return ``G_j = prod e_i^(alpha_i)`` over the base q digits of j."""
        with self._lock:
            if index not in self._g_products:
                result = TPoly.constant(Poly.one(self.ctx))
                for level, digit in enumerate(digit_expansion(index, self.q)):
                    if digit:
                        result = result * self.e_binomial(level).to_tpoly() ** digit
                self._g_products[index] = result
            return self._g_products[index]

    def g(self, index: int) -> TPoly:
        """Return Carlitz's ``g_j``.

        Digit factors are ``e_i^alpha`` for ``alpha < q - 1`` and
        ``e_i^(q-1) - D_i^(q-1)`` for ``alpha = q - 1``.
        """
        result = TPoly.constant(Poly.one(self.ctx))
        for level, digit in enumerate(digit_expansion(index, self.q)):
            if not digit:
                continue
            factor = self.e_binomial(level).to_tpoly() ** digit
            if digit == self.q - 1:
                factor = factor - self._constants.D(level) ** digit
            result = result * factor
        return result

    def h(self, index: int) -> TPoly:
        """Return the orthonormal basis element ``h_j = G_j / Gamma_j``."""
        return self.G(index).divide(self._constants.gamma(index))

    def tau(self, level: int) -> TPoly:
        """Return ``tau_m = prod_(i<m) (f_i^(q-1) - 1)``."""
        result = TPoly.constant(Poly.one(self.ctx))
        for index in range(level):
            result = result * (self.f(index).to_tpoly() ** (self.q - 1) - 1)
        return result

    def tau_from_g(self, level: int) -> TPoly:
        """Return ``tau_m = g_(q^m-1) / Gamma_(q^m-1)``."""
        index = self.q**level - 1
        return self.g(index).divide(self._constants.gamma(index))

    def g_at_zero(self, index: int) -> Poly:
        """Return ``g_j(0)``; only digits equal to q - 1 survive."""
        value = Poly.one(self.ctx)
        for level, digit in enumerate(digit_expansion(index, self.q)):
            if digit == self.q - 1:
                value = value * -(self._constants.D(level) ** digit)
            elif digit:
                return Poly.zero(self.ctx)
        return value

    def tau_h_coefficients(self, level: int) -> list[Fraction]:
        """Return ``sigma_(m,j) = g_(q^m-1-j)(0) / Gamma_(q^m-1-j)``."""
        top = self.q**level - 1
        return [
            (self.g_at_zero(top - j), self._constants.gamma(top - j))
            for j in range(top + 1)
        ]

    def to_h_basis_exact(self, poly: TPoly | LinearTPoly) -> list[Fraction]:
        """Expand a polynomial in the h-basis by back substitution.

        The monic G-basis is triangular; ``c_j = gamma_j Gamma_j / d``.

        :param poly: the polynomial to expand
        :type poly: TPoly | LinearTPoly
        :return: coefficients of ``h_0 .. h_deg``, reduced fractions
        :rtype: list[Fraction]
        """
        if isinstance(poly, LinearTPoly):
            poly = poly.to_tpoly()
        remaining = list(poly.coeffs)
        weights = [Poly.zero(self.ctx)] * len(remaining)
        for power in range(len(remaining) - 1, -1, -1):
            lead = remaining[power]
            if not lead:
                continue
            weights[power] = lead
            basis_rows = self.G(power).coeffs
            for lower in range(power):
                if basis_rows[lower]:
                    remaining[lower] = remaining[lower] - lead * basis_rows[lower]
            remaining[power] = Poly.zero(self.ctx)
        return [
            _reduce_fraction(weight * self._constants.gamma(j), poly.denominator)
            for j, weight in enumerate(weights)
        ]

    def to_h_basis(
        self,
        poly: TPoly | LinearTPoly,
        precision: int,
    ) -> list[Laurent]:
        """Expand in the h-basis, coefficients realised as Laurent values."""
        return [
            fraction_to_laurent(fraction, precision)
            for fraction in self.to_h_basis_exact(poly)
        ]

    def from_h_basis(self, coefficients: Sequence[Fraction]) -> TPoly:
        """Synthesise ``sum_j c_j h_j``."""
        result = TPoly((), Poly.one(self.ctx))
        for j, (numerator, denominator) in enumerate(coefficients):
            if numerator:
                result = result + (self.h(j) * numerator).divide(denominator)
        return result

    def carlitz_coefficients_exact(self, poly: LinearTPoly) -> list[Fraction]:
        """Expand an F_q-linear polynomial in the basis ``f_j``.

        ``c_j = sum_(n>=j) falling(n, j) a_n``.
        """
        result = []
        for j in range(len(poly.coeffs)):
            numerator = Poly.zero(self.ctx)
            for level in range(j, len(poly.coeffs)):
                row = poly.coeffs[level]
                if row:
                    numerator = numerator + row * self._constants.falling_bracket(
                        level,
                        j,
                    )
            result.append(_reduce_fraction(numerator, poly.denominator))
        return result

    def sup_norm(self, poly: TPoly | LinearTPoly) -> float:
        """Return ``log_q`` of the sup-norm on O via basis coefficients.

        :return: the exponent, ``-inf`` for the zero polynomial
        :rtype: float
        """
        if isinstance(poly, LinearTPoly):
            fractions = self.carlitz_coefficients_exact(poly)
        else:
            fractions = self.to_h_basis_exact(poly)
        return max((fraction_exponent(item) for item in fractions), default=-math.inf)

    def orthonormality_bound(
        self,
        weights: Sequence[Poly],
    ) -> tuple[float, float]:
        """Return ``(log_q ||sum lambda_k tau_k||, log_q |lambda_m|)``.

        The norm uses the h-coefficients ``sum_k lambda_k sigma_(k,j)``.
        """
        top = len(weights) - 1
        size = self.q**top
        sigmas = [self.tau_h_coefficients(level) for level in range(top + 1)]
        exponents = []
        for j in range(size):
            total = (Poly.zero(self.ctx), Poly.one(self.ctx))
            for level, weight in enumerate(weights):
                if weight and j < len(sigmas[level]):
                    numerator, denominator = sigmas[level][j]
                    total = _add_fractions(total, (weight * numerator, denominator))
            exponents.append(fraction_exponent(total))
        last = weights[-1]
        bound = -math.inf if not last else -last.valuation
        return max(exponents, default=-math.inf), bound

    def _d_inverse(self, index: int, precision: int) -> Laurent:
        with self._lock:
            cached = self._d_inverses.get(index)
            stale = cached is None or (
                cached.precision is not None and cached.precision < precision
            )
            if stale:
                cached = self._constants.D(index).to_laurent().inverse(precision)
                self._d_inverses[index] = cached
            return cached.truncate(precision)

    def e_value(self, index: int, point: Poly) -> Poly:
        """Return the exact value ``e_i(t)`` at a polynomial t."""
        key = (index, point.coeffs)
        with self._lock:
            if key not in self._e_values:
                self._e_values[key] = self.e_binomial(index).evaluate_exact(point)[0]
            return self._e_values[key]

    def f_value(self, index: int, point: Poly) -> Poly:
        """Return the exact value ``f_i(t)`` at a polynomial t.

        f_i maps F_q[x] into itself, so the division by D_i is exact.
        """
        return self.e_value(index, point).exact_divide(self._constants.D(index))

    def f_at(self, index: int, point: Laurent | Poly, precision: int) -> Laurent:
        """Return ``f_i(t)`` known modulo ``x^precision`` at best.

        A point known modulo ``x^M`` gives a value known modulo
        ``x^(M - i)``.
        """
        if isinstance(point, Poly):
            point = point.to_laurent()
        if point.is_zero():
            return Laurent.zero(self.ctx)
        shift = self._constants.d_valuation(index)
        numerator = self.e_binomial(index).evaluate(point, precision + shift)
        if not numerator.coeffs:
            return numerator.shift(-shift).truncate(precision)
        inverse = self._d_inverse(index, precision - numerator.valuation)
        return (numerator * inverse).truncate(precision)

    def G_value(self, index: int, point: Poly) -> Poly:  # pylint: disable=invalid-name
        """Return ``G_j(t)`` from the digit product of ``e_i(t)``."""
        value = Poly.one(self.ctx)
        for level, digit in enumerate(digit_expansion(index, self.q)):
            if digit:
                value = value * self.e_value(level, point) ** digit
        return value

    def g_value(self, index: int, point: Poly) -> Poly:
        """Return ``g_j(t)`` from the digit product of ``e_i(t)``."""
        value = Poly.one(self.ctx)
        for level, digit in enumerate(digit_expansion(index, self.q)):
            if not digit:
                continue
            factor = self.e_value(level, point) ** digit
            if digit == self.q - 1:
                factor = factor - self._constants.D(level) ** digit
            value = value * factor
        return value

    def monic_sum(
        self,
        lower: int,
        upper: int,
        level: int,
        budget: int = DEFAULT_BUDGET,
    ) -> Laurent:
        """Return ``sum g_l(t) G_k(t)`` over monic t of degree m.

        :param lower: l
        :type lower: int
        :param upper: k
        :type upper: int
        :param level: m
        :type level: int
        :param budget: enumeration budget
        :type budget: int
        :return: the exact sum
        :rtype: Laurent
        :raises DomainError: unless ``k, l < q^m``
        :raises BudgetExceededError: when q^m exceeds the budget
        """
        if not (0 <= lower < self.q**level and 0 <= upper < self.q**level):
            msg = f"monic_sum needs k, l < q^m = {self.q**level}"
            raise DomainError(msg)
        total = Poly.zero(self.ctx)
        for point in poly_enumerate(self.ctx, level, budget=budget):
            total = total + self.g_value(lower, point) * self.G_value(upper, point)
        return total.to_laurent()

    def monic_sum_table(
        self,
        level: int,
        budget: int = DEFAULT_BUDGET,
    ) -> dict[tuple[int, int], Poly]:
        """Return every ``monic_sum(l, k, m)`` for ``k, l < q^m`` at once."""
        size = self.q**level
        points = list(poly_enumerate(self.ctx, level, budget=budget))
        g_values = [[self.g_value(lower, t) for t in points] for lower in range(size)]
        big_g = [[self.G_value(upper, t) for t in points] for upper in range(size)]
        table = {}
        for lower, upper in cartesian(range(size), repeat=2):
            total = Poly.zero(self.ctx)
            for small, big in zip(g_values[lower], big_g[upper]):
                if small and big:
                    total = total + small * big
            table[lower, upper] = total
        return table

    def monic_sum_expected(self, lower: int, upper: int, level: int) -> Poly:
        """Return 0 or ``(-1)^m D_m / L_m`` as the identity predicts."""
        if lower + upper != self.q**level - 1:
            return Poly.zero(self.ctx)
        value = self._constants.D(level).exact_divide(self._constants.L(level))
        return value if level % 2 == 0 else -value

    def vanishes_below(self, index: int, budget: int = DEFAULT_BUDGET) -> bool:
        """Check ``f_i(m) = 0`` for every m of degree below i."""
        return all(
            not self.e_value(index, point)
            for point in poly_enumerate(
                self.ctx,
                index,
                monic_only=False,
                budget=budget,
            )
        )


def _reduce_fraction(numerator: Poly, denominator: Poly) -> Fraction:
    if not numerator:
        return Poly.zero(numerator.ctx), Poly.one(numerator.ctx)
    common = numerator.gcd(denominator)
    scale = common * FqElement(numerator.ctx, denominator.leading)
    return numerator // scale, denominator // scale


def _add_fractions(first: Fraction, second: Fraction) -> Fraction:
    if not first[0]:
        return second
    if not second[0]:
        return first
    return _reduce_fraction(
        first[0] * second[1] + second[0] * first[1],
        first[1] * second[1],
    )


_INSTANCES: dict[FqContext, CarlitzBasis] = {}
_INSTANCES_LOCK = threading.Lock()


def get_basis(ctx: FqContext) -> CarlitzBasis:
    """Return the shared basis cache of a coefficient field."""
    with _INSTANCES_LOCK:
        if ctx not in _INSTANCES:
            _INSTANCES[ctx] = CarlitzBasis(get_constants(ctx))
        return _INSTANCES[ctx]
