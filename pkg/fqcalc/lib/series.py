"""Exact polynomials in F_q[x] and truncated Laurent series in F_q((x)).

A :class:`Laurent` value is known modulo ``x^precision``; ``precision``
``None`` marks an exact value. Every operation propagates precision so
that the printed coefficients are always correct.
"""

from __future__ import annotations

import logging
import math
import re
from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from typing import Any

import numpy as np

from fqcalc.exceptions import (
    BudgetExceededError,
    CodeError,
    ContextMismatchError,
    DomainError,
    FieldDivisionError,
    FieldError,
    InsufficientPrecisionError,
    NotAQthPowerError,
    ZeroWithinPrecisionError,
)
from fqcalc.lib.field import FqContext, FqElement

_LOGGER = logging.getLogger(__name__)

AGREEMENT_GUARD = 2
_CLASSICAL_DIVISION_LIMIT = 4096
_MOD_SUFFIX = re.compile(r"\(\s*mod\s+x\^\(?(?P<precision>-?\d+)\)?\s*\)\s*$")


def series_inverse(ctx: FqContext, coeffs: Sequence[int], count: int) -> list[int]:
    """Invert a power series with a non zero constant term.

    Newton iteration ``b <- b + b * (1 - a * b)`` doubling the number of
    correct coefficients per step.

    :param ctx: the coefficient field
    :type ctx: FqContext
    :param coeffs: the series, constant term first
    :type coeffs: Sequence[int]
    :param count: number of inverse coefficients wanted
    :type count: int
    :return: the first ``count`` coefficients of the inverse
    :rtype: list[int]
    """
    inverse = [ctx.inv(coeffs[0])]
    known = 1
    while known < count:
        known = min(2 * known, count)
        residual = ctx.neg_vector(ctx.convolve(coeffs[:known], inverse, limit=known))
        residual += [0] * (known - len(residual))
        residual[0] = ctx.add(residual[0], 1)
        correction = ctx.convolve(inverse, residual, limit=known)
        inverse = ctx.add_vectors(inverse, correction)
    return inverse[:count]


def _min_precision(first: int | None, second: int | None) -> int | None:
    if first is None:
        return second
    if second is None:
        return first
    return min(first, second)


def _split_terms(text: str) -> list[str]:
    terms: list[str] = []
    depth, start = 0, 0
    for position, char in enumerate(text):
        if char == "(":
            depth += 1
        elif char == ")":
            depth -= 1
        elif (
            char in "+-"
            and depth == 0
            and position > start
            and text[position - 1] != "^"
        ):
            terms.append(text[start:position])
            start = position
    terms.append(text[start:])
    return terms


def _parse_terms(ctx: FqContext, text: str) -> dict[int, int]:
    """Parse ``c x^k`` terms into an exponent to element index mapping."""
    exponents: dict[int, int] = {}
    compact = text.replace(" ", "").replace("*", "")
    if compact in ("", "0"):
        return exponents
    for raw_term in _split_terms(compact):
        term = raw_term.lstrip("+")
        negative = term.startswith("-")
        term = term.removeprefix("-")
        if not term:
            msg = f"Malformed term {raw_term!r} in {text!r}"
            raise FieldError(msg)
        head, has_x, tail = term.partition("x")
        try:
            coef = ctx.parse_index(head) if head else 1
            if not has_x:
                exponent = 0
            elif not tail:
                exponent = 1
            else:
                exponent = int(tail.removeprefix("^").strip("(){}"))
        except (FieldError, ValueError) as exc:
            msg = f"Malformed term {raw_term!r} in {text!r}"
            raise FieldError(msg) from exc
        if negative:
            coef = ctx.neg(coef)
        exponents[exponent] = ctx.add(exponents.get(exponent, 0), coef)
    return exponents


def _term_text(ctx: FqContext, coef: int, exponent: int) -> str:
    text = ctx.element_text(coef)
    if exponent == 0:
        return text
    if coef == 1:
        head = ""
    elif "+" in text:
        head = f"({text})"
    else:
        head = text
    return f"{head}x" if exponent == 1 else f"{head}x^{exponent}"


@dataclass(frozen=True)
class Poly:
    """An exact polynomial in F_q[x], coefficients lowest degree first."""

    ctx: FqContext
    coeffs: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        """Strip trailing zero coefficients."""
        coeffs = self.coeffs
        if coeffs and not coeffs[-1]:
            end = len(coeffs)
            while end and not coeffs[end - 1]:
                end -= 1
            object.__setattr__(self, "coeffs", tuple(coeffs[:end]))

    @classmethod
    def zero(cls, ctx: FqContext) -> Poly:
        """Return the zero polynomial."""
        return cls(ctx)

    @classmethod
    def one(cls, ctx: FqContext) -> Poly:
        """Return the constant 1."""
        return cls(ctx, (1,))

    @classmethod
    def variable(cls, ctx: FqContext) -> Poly:
        """Return the polynomial x."""
        return cls(ctx, (0, 1))

    @classmethod
    def monomial(cls, ctx: FqContext, degree: int, coef: int = 1) -> Poly:
        """Return ``coef * x^degree``."""
        return cls(ctx, (0,) * degree + (coef,))

    @classmethod
    def constant(cls, ctx: FqContext, element: FqElement | int) -> Poly:
        """Embed a field element."""
        index = element.index if isinstance(element, FqElement) else element % ctx.p
        return cls(ctx, (index,))

    @classmethod
    def parse(cls, ctx: FqContext, text: str) -> Poly:
        """Parse text such as ``x^2 + (u+1)x + 1``.

        :raises FieldError: on malformed text or a negative exponent
        """
        terms = _parse_terms(ctx, text)
        if terms and min(terms) < 0:
            msg = f"{text!r} is not a polynomial"
            raise FieldError(msg)
        coeffs = [0] * (max(terms, default=-1) + 1)
        for exponent, coef in terms.items():
            coeffs[exponent] = coef
        return cls(ctx, tuple(coeffs))

    @property
    def degree(self) -> int:
        """Degree, -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def valuation(self) -> int | None:
        """Exponent of the lowest non zero term, None for zero."""
        for exponent, coef in enumerate(self.coeffs):
            if coef:
                return exponent
        return None

    @property
    def leading(self) -> int:
        """Index of the leading coefficient."""
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        """Check for the zero polynomial."""
        return not self.coeffs

    def __bool__(self) -> bool:
        """Return False for the zero polynomial."""
        return bool(self.coeffs)

    def is_monic(self) -> bool:
        """Check for a leading coefficient 1."""
        return self.leading == 1

    def is_monomial(self) -> bool:
        """Check for a single non zero term."""
        return bool(self.coeffs) and self.valuation == self.degree

    def coefficient(self, exponent: int) -> FqElement:
        """Return the coefficient of ``x^exponent``."""
        if 0 <= exponent < len(self.coeffs):
            return FqElement(self.ctx, self.coeffs[exponent])
        return FqElement(self.ctx, 0)

    def _coerce(self, other: Any) -> Poly:
        if isinstance(other, Poly):
            if other.ctx != self.ctx:
                msg = f"Cannot combine polynomials over {self.ctx} and {other.ctx}"
                raise ContextMismatchError(msg)
            return other
        if isinstance(other, FqElement | int):
            return Poly.constant(self.ctx, other)
        msg = f"Cannot combine a polynomial with {other!r}"
        raise TypeError(msg)

    def __add__(self, other: Poly | FqElement | int) -> Poly:
        """Add two polynomials."""
        other = self._coerce(other)
        return Poly(self.ctx, tuple(self.ctx.add_vectors(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self) -> Poly:
        """Negate the polynomial."""
        return Poly(self.ctx, tuple(self.ctx.neg_vector(self.coeffs)))

    def __sub__(self, other: Poly | FqElement | int) -> Poly:
        """Subtract two polynomials."""
        return self + (-self._coerce(other))

    def __rsub__(self, other: Poly | FqElement | int) -> Poly:
        """Subtract the polynomial from a constant."""
        return self._coerce(other) - self

    def __mul__(self, other: Poly | FqElement | int) -> Poly:
        """Multiply two polynomials."""
        other = self._coerce(other)
        if len(other.coeffs) == 1:
            return Poly(
                self.ctx,
                tuple(self.ctx.scale_vector(self.coeffs, other.coeffs[0])),
            )
        return Poly(self.ctx, tuple(self.ctx.convolve(self.coeffs, other.coeffs)))

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> Poly:
        """Raise to a non negative integer power."""
        if exponent < 0:
            msg = "Negative powers of polynomials are not polynomials"
            raise DomainError(msg)
        result, base = Poly.one(self.ctx), self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def shift(self, places: int) -> Poly:
        """Multiply by ``x^places``."""
        if not self.coeffs:
            return self
        return Poly(self.ctx, (0,) * places + self.coeffs)

    def truncate(self, length: int) -> Poly:
        """Reduce modulo ``x^length``."""
        return Poly(self.ctx, self.coeffs[:length])

    def frobenius(self, power: int = 1) -> Poly:
        """Return ``self^(q^power)``, i.e. substitute ``x -> x^(q^power)``."""
        if power == 0 or len(self.coeffs) <= 1:
            return self
        step = self.ctx.q**power
        spread = np.zeros((len(self.coeffs) - 1) * step + 1, dtype=np.int64)
        spread[::step] = self.coeffs
        return Poly(self.ctx, tuple(spread.tolist()))

    def __divmod__(self, other: Poly | FqElement | int) -> tuple[Poly, Poly]:
        """Divide with remainder.

        :raises FieldDivisionError: on division by zero
        """
        other = self._coerce(other)
        if not other.coeffs:
            msg = "Polynomial division by zero"
            raise FieldDivisionError(msg)
        span = self.degree - other.degree
        if span < 0:
            return Poly.zero(self.ctx), self
        if (span + 1) * len(other.coeffs) <= _CLASSICAL_DIVISION_LIMIT:
            return self._classical_divmod(other, span)
        reversed_inverse = series_inverse(self.ctx, other.coeffs[::-1], span + 1)
        quotient_reversed = self.ctx.convolve(
            self.coeffs[::-1][: span + 1],
            reversed_inverse,
            limit=span + 1,
        )
        quotient_reversed += [0] * (span + 1 - len(quotient_reversed))
        quotient = Poly(self.ctx, tuple(quotient_reversed[::-1]))
        return quotient, self - quotient * other

    def _classical_divmod(self, other: Poly, span: int) -> tuple[Poly, Poly]:
        ctx = self.ctx
        remainder = list(self.coeffs)
        quotient = [0] * (span + 1)
        lead_inverse = ctx.inv(other.leading)
        top = other.degree
        for shift in range(span, -1, -1):
            coef = remainder[shift + top]
            if coef:
                factor = ctx.mul(coef, lead_inverse)
                quotient[shift] = factor
                for i, divisor_coef in enumerate(other.coeffs):
                    if divisor_coef:
                        remainder[shift + i] = ctx.sub(
                            remainder[shift + i],
                            ctx.mul(factor, divisor_coef),
                        )
        return Poly(ctx, tuple(quotient)), Poly(ctx, tuple(remainder[:top]))

    def __floordiv__(self, other: Poly | FqElement | int) -> Poly:
        """Return the quotient of a division."""
        return divmod(self, other)[0]

    def __mod__(self, other: Poly | FqElement | int) -> Poly:
        """Return the remainder of a division."""
        return divmod(self, other)[1]

    def exact_divide(self, other: Poly | FqElement | int) -> Poly:
        """Divide by a polynomial known to divide self.

        :raises CodeError: if the remainder is not zero
        """
        quotient, remainder = divmod(self, other)
        if remainder:
            msg = f"Division by {other} is not exact (remainder {remainder})"
            raise CodeError(msg)
        return quotient

    def monic(self) -> Poly:
        """Scale to a monic polynomial."""
        if not self.coeffs or self.is_monic():
            return self
        return self * FqElement(self.ctx, self.ctx.inv(self.leading))

    def gcd(self, other: Poly) -> Poly:
        """Return the monic greatest common divisor."""
        first, second = self, self._coerce(other)
        while second:
            first, second = second, first % second
        return first.monic()

    def lcm(self, other: Poly) -> Poly:
        """Return the monic least common multiple."""
        if not self or not other:
            return Poly.zero(self.ctx)
        return (self * other // self.gcd(other)).monic()

    def to_laurent(self, precision: int | None = None) -> Laurent:
        """Embed into F_q((x)), optionally truncated."""
        return Laurent(self.ctx, 0, self.coeffs, precision)

    def __str__(self) -> str:
        """Render highest degree first, e.g. ``x^2 + x``."""
        terms = [
            _term_text(self.ctx, coef, exponent)
            for exponent, coef in reversed(list(enumerate(self.coeffs)))
            if coef
        ]
        return " + ".join(terms) or "0"


@dataclass(frozen=True)
class Laurent:
    """A Laurent series ``x^valuation * sum(coeffs[i] x^i)`` mod ``x^precision``.

    Normalised on construction: the first coefficient is non zero, the
    value carries no coefficient at or above ``precision``, and a value
    without coefficients has valuation 0 (exact zero) or ``precision``
    (zero within precision).
    """

    ctx: FqContext
    valuation: int = 0
    coeffs: tuple[int, ...] = ()
    precision: int | None = None

    def __post_init__(self) -> None:
        """Normalise coefficients against valuation and precision."""
        coeffs = self.coeffs
        valuation = self.valuation
        if self.precision is not None and len(coeffs) > self.precision - valuation:
            coeffs = coeffs[: max(0, self.precision - valuation)]
        start = 0
        while start < len(coeffs) and not coeffs[start]:
            start += 1
        end = len(coeffs)
        while end > start and not coeffs[end - 1]:
            end -= 1
        if start or end < len(coeffs):
            coeffs = tuple(coeffs[start:end])
            valuation += start
        if not coeffs:
            valuation = 0 if self.precision is None else self.precision
        object.__setattr__(self, "coeffs", tuple(coeffs))
        object.__setattr__(self, "valuation", valuation)

    @classmethod
    def zero(cls, ctx: FqContext, precision: int | None = None) -> Laurent:
        """Return zero, exact or known modulo ``x^precision``."""
        return cls(ctx, 0, (), precision)

    @classmethod
    def one(cls, ctx: FqContext) -> Laurent:
        """Return the exact constant 1."""
        return cls(ctx, 0, (1,))

    @classmethod
    def monomial(
        cls,
        ctx: FqContext,
        exponent: int,
        coef: int = 1,
        precision: int | None = None,
    ) -> Laurent:
        """Return ``coef * x^exponent``."""
        return cls(ctx, exponent, (coef,), precision)

    @classmethod
    def from_element(cls, element: FqElement) -> Laurent:
        """Embed a field element."""
        return cls(element.ctx, 0, (element.index,))

    @classmethod
    def parse(cls, ctx: FqContext, text: str, precision: int | None = None) -> Laurent:
        """Parse text such as ``x^-1 + 1 + (u+1)x^3 (mod x^64)``.

        :param ctx: the coefficient field
        :type ctx: FqContext
        :param text: terms joined by ``+``/``-``, optionally ending in a
            ``(mod x^N)`` marker
        :type text: str
        :param precision: precision for values without a marker, None for exact
        :type precision: int | None
        :return: the parsed value
        :rtype: Laurent
        :raises FieldError: on malformed text
        """
        marker = _MOD_SUFFIX.search(text)
        if marker:
            precision = _min_precision(precision, int(marker["precision"]))
            text = text[: marker.start()]
        terms = _parse_terms(ctx, text)
        if not terms:
            return cls.zero(ctx, precision)
        low = min(terms)
        coeffs = [0] * (max(terms) - low + 1)
        for exponent, coef in terms.items():
            coeffs[exponent - low] = coef
        return cls(ctx, low, tuple(coeffs), precision)

    @classmethod
    def from_json(cls, ctx: FqContext, data: dict[str, Any]) -> Laurent:
        """Build a value from its JSON form."""
        return cls(
            ctx,
            data["valuation"],
            tuple(ctx.parse_index(str(coef)) for coef in data["coeffs"]),
            data["precision"],
        )

    def is_exact(self) -> bool:
        """Check whether every coefficient is known."""
        return self.precision is None

    def is_zero(self) -> bool:
        """Check for exact zero."""
        return not self.coeffs and self.precision is None

    def is_zero_within_precision(self) -> bool:
        """Check for a truncated value without known non zero terms."""
        return not self.coeffs and self.precision is not None

    def __bool__(self) -> bool:
        """Return True when a non zero coefficient is known."""
        return bool(self.coeffs)

    @property
    def degree(self) -> int:
        """Exponent of the last known non zero term."""
        return self.valuation + len(self.coeffs) - 1

    @property
    def relative_precision(self) -> int | None:
        """Number of known coefficients from the valuation on."""
        return None if self.precision is None else self.precision - self.valuation

    def coefficient(self, exponent: int) -> FqElement:
        """Return the coefficient of ``x^exponent``.

        :raises InsufficientPrecisionError: above the known precision
        """
        if self.precision is not None and exponent >= self.precision:
            msg = f"Coefficient of x^{exponent} is unknown modulo x^{self.precision}"
            raise InsufficientPrecisionError(msg)
        position = exponent - self.valuation
        if 0 <= position < len(self.coeffs):
            return FqElement(self.ctx, self.coeffs[position])
        return FqElement(self.ctx, 0)

    def truncate(self, precision: int | None) -> Laurent:
        """Forget every coefficient at or above ``x^precision``."""
        combined = _min_precision(self.precision, precision)
        if combined == self.precision:
            return self
        return Laurent(self.ctx, self.valuation, self.coeffs, combined)

    def _coerce(self, other: Any) -> Laurent:
        if isinstance(other, Laurent):
            if other.ctx != self.ctx:
                msg = f"Cannot combine series over {self.ctx} and {other.ctx}"
                raise ContextMismatchError(msg)
            return other
        if isinstance(other, Poly):
            return self._coerce(other.to_laurent())
        if isinstance(other, FqElement):
            return self._coerce(Laurent.from_element(other))
        if isinstance(other, int):
            return Laurent(self.ctx, 0, (other % self.ctx.p,))
        msg = f"Cannot combine a Laurent series with {other!r}"
        raise TypeError(msg)

    def __add__(self, other: Laurent | Poly | FqElement | int) -> Laurent:
        """Add two series, the result is known to the smaller precision."""
        other = self._coerce(other)
        if other.is_zero():
            return self
        if self.is_zero():
            return other
        precision = _min_precision(self.precision, other.precision)
        low = min(self.valuation, other.valuation)
        high = max(self.degree, other.degree) + 1
        if precision is not None:
            high = min(high, precision)
        if high <= low:
            return Laurent.zero(self.ctx, precision)
        first = [0] * (self.valuation - low) + list(self.coeffs)
        second = [0] * (other.valuation - low) + list(other.coeffs)
        summed = self.ctx.add_vectors(first[: high - low], second[: high - low])
        return Laurent(self.ctx, low, tuple(summed), precision)

    __radd__ = __add__

    def __neg__(self) -> Laurent:
        """Negate the series."""
        return Laurent(
            self.ctx,
            self.valuation,
            tuple(self.ctx.neg_vector(self.coeffs)),
            self.precision,
        )

    def __sub__(self, other: Laurent | Poly | FqElement | int) -> Laurent:
        """Subtract two series."""
        return self + (-self._coerce(other))

    def __rsub__(self, other: Laurent | Poly | FqElement | int) -> Laurent:
        """Subtract the series from a constant."""
        return self._coerce(other) - self

    def __mul__(self, other: Laurent | Poly | FqElement | int) -> Laurent:
        """Multiply two series.

        The product of ``a mod x^Na`` and ``b mod x^Nb`` is known modulo
        ``x^min(Na + v(b), Nb + v(a))``.
        """
        other = self._coerce(other)
        if self.is_zero() or other.is_zero():
            return Laurent.zero(self.ctx)
        precision = _min_precision(
            None if self.precision is None else self.precision + other.valuation,
            None if other.precision is None else other.precision + self.valuation,
        )
        valuation = self.valuation + other.valuation
        if not self.coeffs or not other.coeffs:
            return Laurent.zero(self.ctx, precision)
        limit = None if precision is None else precision - valuation
        if limit is not None and limit <= 0:
            return Laurent.zero(self.ctx, precision)
        if len(other.coeffs) == 1:
            product = self.ctx.scale_vector(self.coeffs[:limit], other.coeffs[0])
        elif len(self.coeffs) == 1:
            product = self.ctx.scale_vector(other.coeffs[:limit], self.coeffs[0])
        else:
            product = self.ctx.convolve(self.coeffs, other.coeffs, limit=limit)
        return Laurent(self.ctx, valuation, tuple(product), precision)

    __rmul__ = __mul__

    def shift(self, places: int) -> Laurent:
        """Multiply by ``x^places``."""
        if self.is_zero():
            return self
        precision = None if self.precision is None else self.precision + places
        return Laurent(self.ctx, self.valuation + places, self.coeffs, precision)

    def is_exact_monomial(self) -> bool:
        """Check for an exact value with a single term."""
        return self.precision is None and len(self.coeffs) == 1

    def inverse(self, precision: int | None = None) -> Laurent:
        """Return ``1 / self``.

        :param precision: absolute precision wanted; the result is capped at
            what the known coefficients of self determine
        :type precision: int | None
        :return: the inverse
        :rtype: Laurent
        :raises FieldDivisionError: for exact zero
        :raises ZeroWithinPrecisionError: for a value zero to its precision
        :raises InsufficientPrecisionError: for an exact non monomial value
            without a target precision
        """
        if self.is_zero():
            msg = "Inverse of exact zero"
            raise FieldDivisionError(msg)
        if not self.coeffs:
            msg = f"Inverse of a value that is zero modulo x^{self.precision}"
            raise ZeroWithinPrecisionError(msg)
        valuation = self.valuation
        if self.is_exact_monomial():
            return Laurent(self.ctx, -valuation, (self.ctx.inv(self.coeffs[0]),))
        if self.precision is not None:
            precision = _min_precision(precision, self.precision - 2 * valuation)
        if precision is None:
            msg = "Inverting an exact series needs a target precision"
            raise InsufficientPrecisionError(msg)
        count = precision + valuation
        if count <= 0:
            return Laurent.zero(self.ctx, precision)
        coeffs = series_inverse(self.ctx, self.coeffs, count)
        return Laurent(self.ctx, -valuation, tuple(coeffs), precision)

    def divide(
        self,
        other: Laurent | Poly | FqElement | int,
        precision: int | None = None,
    ) -> Laurent:
        """Divide two series.

        The quotient keeps the smaller relative precision of the operands,
        capped at ``precision`` when given. Division by an exact monomial
        is exact.

        :raises InsufficientPrecisionError: when both operands are exact,
            the divisor is not a monomial and no precision is given
        """
        other = self._coerce(other)
        if other.is_exact_monomial():
            return (self * other.inverse()).truncate(precision)
        if other.is_zero():
            msg = "Division by exact zero"
            raise FieldDivisionError(msg)
        if not other.coeffs:
            msg = f"Division by a value that is zero modulo x^{other.precision}"
            raise ZeroWithinPrecisionError(msg)
        if self.is_zero():
            return self
        valuation = self.valuation - other.valuation
        relative = _min_precision(self.relative_precision, other.relative_precision)
        target = _min_precision(
            None if relative is None else valuation + relative,
            precision,
        )
        if target is None:
            msg = f"Exact quotient by {other} needs a target precision"
            raise InsufficientPrecisionError(msg)
        if not self.coeffs:
            return Laurent.zero(self.ctx, target)
        inverse = other.inverse(target - self.valuation)
        return (self * inverse).truncate(target)

    def __truediv__(self, other: Laurent | Poly | FqElement | int) -> Laurent:
        """Divide two series, see :meth:`divide`."""
        return self.divide(other)

    def __pow__(self, exponent: int) -> Laurent:
        """Raise to an integer power."""
        if exponent < 0:
            return self.inverse() ** -exponent
        result, base = Laurent.one(self.ctx), self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def frobenius(self, power: int = 1) -> Laurent:
        """Return ``self^(q^power)``."""
        if power == 0:
            return self
        step = self.ctx.q**power
        precision = None if self.precision is None else self.precision * step
        if len(self.coeffs) <= 1:
            return Laurent(self.ctx, self.valuation * step, self.coeffs, precision)
        spread = np.zeros((len(self.coeffs) - 1) * step + 1, dtype=np.int64)
        spread[::step] = self.coeffs
        return Laurent(
            self.ctx,
            self.valuation * step,
            tuple(spread.tolist()),
            precision,
        )

    def q_root(self) -> Laurent:
        """Return the unique q-th root in K.

        A value known modulo ``x^N`` has a root known modulo ``x^ceil(N/q)``.

        :raises NotAQthPowerError: when a non zero coefficient sits at an
            exponent not divisible by q
        """
        q = self.ctx.q
        precision = None if self.precision is None else -(-self.precision // q)
        if not self.coeffs:
            return Laurent.zero(self.ctx, precision)
        values = np.asarray(self.coeffs, dtype=np.int64)
        offsets = (self.valuation + np.arange(len(values))) % q
        if self.valuation % q or values[offsets != 0].any():
            msg = f"{self} is not a q-th power in F_{q}((x))"
            raise NotAQthPowerError(msg)
        return Laurent(
            self.ctx,
            self.valuation // q,
            tuple(values[::q].tolist()),
            precision,
        )

    def abs_exponent(self) -> float:
        """Return ``log_q |self| = -valuation``.

        :return: the exponent, ``-inf`` for exact zero
        :rtype: float
        :raises ZeroWithinPrecisionError: if the value is zero to its precision
        """
        if self.is_zero():
            return -math.inf
        if not self.coeffs:
            msg = f"|0 mod x^{self.precision}| is undetermined"
            raise ZeroWithinPrecisionError(msg)
        return -self.valuation

    def agrees_with(
        self,
        other: Laurent | Poly | FqElement | int,
        precision: int | None = None,
        guard: int = AGREEMENT_GUARD,
    ) -> bool:
        """Check equality modulo ``x^(precision - guard)``.

        Without ``precision`` the smaller precision of the operands is used;
        exact operands are compared exactly.
        """
        difference = self - self._coerce(other)
        target = _min_precision(difference.precision, precision)
        if target is None:
            return difference.is_zero()
        return not difference.coeffs or difference.valuation >= target - guard

    def to_poly(self) -> Poly:
        """Return the exact polynomial value.

        :raises DomainError: for a truncated value or a negative valuation
        """
        if self.precision is not None or (self.coeffs and self.valuation < 0):
            msg = f"{self} is not an exact polynomial"
            raise DomainError(msg)
        return Poly(self.ctx, (0,) * self.valuation + self.coeffs)

    def digits(self, count: int) -> list[int]:
        """Return the coefficient indices of ``x^0 .. x^(count-1)``.

        :raises DomainError: when the value is not integral
        :raises InsufficientPrecisionError: when a wanted digit is unknown
        """
        if self.coeffs and self.valuation < 0:
            msg = f"{self} has a pole at x = 0"
            raise DomainError(msg)
        if self.precision is not None and self.precision < count:
            msg = f"Digits up to x^{count - 1} are unknown for {self}"
            raise InsufficientPrecisionError(msg)
        digits = [0] * count
        for position, coef in enumerate(self.coeffs):
            exponent = self.valuation + position
            if exponent >= count:
                break
            digits[exponent] = coef
        return digits

    def __str__(self) -> str:
        """Render lowest exponent first, e.g. ``x^-1 + 1 + x (mod x^64)``."""
        terms = [
            _term_text(self.ctx, coef, self.valuation + position)
            for position, coef in enumerate(self.coeffs)
            if coef
        ]
        text = " + ".join(terms) or "0"
        return text if self.precision is None else f"{text} (mod x^{self.precision})"

    def to_json(self) -> dict[str, Any]:
        """Return the JSON form ``{"valuation", "coeffs", "precision"}``."""
        return {
            "valuation": self.valuation,
            "coeffs": [self.ctx.element_text(coef) for coef in self.coeffs],
            "precision": self.precision,
        }


def laurent_inv(value: Laurent, precision: int) -> Laurent:
    """Return ``1 / value`` to absolute precision ``precision``."""
    return value.inverse(precision)


def abs_exponent(value: Laurent | Poly) -> float:
    """Return ``log_q |value|``."""
    if isinstance(value, Poly):
        value = value.to_laurent()
    return value.abs_exponent()


def frob_power(value: Laurent, power: int) -> Laurent:
    """Return ``value^(q^power)``."""
    return value.frobenius(power)


def q_root(value: Laurent) -> Laurent:
    """Return the q-th root of ``value``."""
    return value.q_root()


def poly_enumerate(
    ctx: FqContext,
    degree: int,
    *,
    monic_only: bool = True,
    budget: int | None = None,
) -> Iterator[Poly]:
    """Enumerate polynomials in a deterministic order.

    :param ctx: the coefficient field
    :type ctx: FqContext
    :param degree: exact degree of monic polynomials, or the strict bound on
        the degree of all polynomials
    :type degree: int
    :param monic_only: enumerate the monic polynomials of degree ``degree``
        instead of every polynomial of degree below ``degree``
    :type monic_only: bool
    :param budget: maximum number of polynomials allowed
    :type budget: int | None
    :return: the polynomials, lower coefficients counting up in base q
    :rtype: Iterator[Poly]
    :raises BudgetExceededError: when q^degree exceeds the budget
    """
    count = ctx.q**degree
    if budget is not None and count > budget:
        msg = f"Enumerating {count} polynomials exceeds the budget of {budget}"
        raise BudgetExceededError(msg)
    for number in range(count):
        lower = [(number // ctx.q**i) % ctx.q for i in range(degree)]
        yield Poly(ctx, tuple(lower + [1] if monic_only else lower))
