"""Finite coefficient fields F_q, q = p^gamma, with table driven arithmetic.

Elements are stored as integer indices ``sum(c_j * p**j)`` of their
coordinate vectors ``(c_0, ..., c_{gamma-1})`` over the basis
``1, u, ..., u^(gamma-1)``, where ``u`` is a root of the modulus.
"""

from __future__ import annotations

import logging
import re
from collections.abc import Sequence
from dataclasses import dataclass, field
from functools import cached_property
from itertools import product
from typing import Any

import numpy as np
from sympy import isprime

from fqcalc.configs import BUILTIN_MODULI
from fqcalc.exceptions import ContextMismatchError, FieldDivisionError, FieldError

_LOGGER = logging.getLogger(__name__)

MAX_FIELD_ORDER = 256
_SCHOOLBOOK_LIMIT = 256
_TERM_PATTERN = re.compile(r"^(?P<coef>\d*)(?P<u>u(?:\^(?P<exp>\d+))?)?$")


def _trim(coeffs: list[int]) -> list[int]:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def _poly_mod_p(numerator: list[int], divisor: list[int], p: int) -> list[int]:
    """Return the remainder of two polynomials over F_p (low to high)."""
    remainder = _trim([c % p for c in numerator])
    lead_inverse = pow(divisor[-1], -1, p)
    shift = len(remainder) - len(divisor)
    while remainder and shift >= 0:
        factor = remainder[-1] * lead_inverse % p
        for i, coef in enumerate(divisor):
            remainder[shift + i] = (remainder[shift + i] - factor * coef) % p
        _trim(remainder)
        shift = len(remainder) - len(divisor)
    return remainder


def is_irreducible(modulus: Sequence[int], p: int) -> bool:
    """Check a monic polynomial over F_p for irreducibility.

    Trial division by every monic polynomial of degree at most half
    the degree of the modulus.

    :param modulus: coefficients, lowest degree first
    :type modulus: Sequence[int]
    :param p: the characteristic
    :type p: int
    :return: True if the polynomial has no proper factor
    :rtype: bool
    """
    degree = len(modulus) - 1
    for factor_degree in range(1, degree // 2 + 1):
        for lower in product(range(p), repeat=factor_degree):
            if not _poly_mod_p(list(modulus), [*lower, 1], p):
                return False
    return True


def parse_modulus(text: str, p: int) -> tuple[int, ...]:
    """Parse a modulus written in ``u``, e.g. ``u^2+u+1``.

    :param text: the polynomial text
    :type text: str
    :param p: the characteristic
    :type p: int
    :return: the coefficients, lowest degree first
    :rtype: tuple[int, ...]
    :raises FieldError: on malformed text
    """
    coeffs: dict[int, int] = {}
    for term in text.replace(" ", "").split("+"):
        match = _TERM_PATTERN.match(term)
        if not term or match is None or (not match["coef"] and not match["u"]):
            msg = f"Malformed modulus term {term!r} in {text!r}"
            raise FieldError(msg)
        coef = int(match["coef"]) if match["coef"] else 1
        exponent = 0 if not match["u"] else int(match["exp"] or 1)
        coeffs[exponent] = (coeffs.get(exponent, 0) + coef) % p
    degree = max(coeffs)
    return tuple(coeffs.get(i, 0) for i in range(degree + 1))


@dataclass(frozen=True)
class FqContext:
    """The coefficient field F_q with q = p^gamma.

    Equality and hashing use ``(p, gamma, modulus)`` only; the arithmetic
    tables are derived lazily.
    """

    p: int
    gamma: int = 1
    modulus: tuple[int, ...] = field(default=())

    @classmethod
    def create(
        cls,
        p: int,
        gamma: int = 1,
        modulus: Sequence[int] | str | None = None,
    ) -> FqContext:
        """Validate the field data and build a context.

        :param p: prime characteristic
        :type p: int
        :param gamma: extension degree
        :type gamma: int
        :param modulus: monic irreducible polynomial of degree gamma, either
            as coefficients (lowest degree first) or text in ``u``; the
            built-in modulus for q is used when omitted
        :type modulus: Sequence[int] | str | None
        :return: the validated context
        :rtype: FqContext
        :raises FieldError: on a non prime p, an unsupported order or a
            reducible or malformed modulus
        """
        if not isprime(p):
            msg = f"Characteristic p={p} is not a prime"
            raise FieldError(msg)
        if gamma < 1 or p**gamma > MAX_FIELD_ORDER:
            msg = f"Field order {p}^{gamma} is outside 2..{MAX_FIELD_ORDER}"
            raise FieldError(msg)
        if gamma == 1:
            if modulus:
                _LOGGER.debug("Ignoring modulus %s for a prime field", modulus)
            return cls(p, 1, ())
        if modulus is None:
            if p**gamma not in BUILTIN_MODULI:
                msg = f"No built-in modulus for q={p**gamma}, pass one explicitly"
                raise FieldError(msg)
            modulus = BUILTIN_MODULI[p**gamma]
        coeffs = (
            parse_modulus(modulus, p)
            if isinstance(modulus, str)
            else tuple(c % p for c in modulus)
        )
        if len(coeffs) != gamma + 1 or coeffs[-1] != 1:
            msg = f"Modulus {modulus!r} is not monic of degree {gamma}"
            raise FieldError(msg)
        if not is_irreducible(coeffs, p):
            msg = f"Modulus {modulus!r} is reducible over F_{p}"
            raise FieldError(msg)
        return cls(p, gamma, coeffs)

    @classmethod
    def from_order(cls, q: int) -> FqContext:
        """Build the context of order q with its built-in modulus.

        :param q: the field order, a prime power
        :type q: int
        :return: the context
        :rtype: FqContext
        :raises FieldError: when q is not a supported prime power
        """
        for p in range(2, q + 1):
            if q % p == 0:
                gamma = 1
                while p**gamma < q:
                    gamma += 1
                if p**gamma != q:
                    break
                return cls.create(p, gamma)
        msg = f"q={q} is not a prime power"
        raise FieldError(msg)

    @property
    def q(self) -> int:
        """Order of the field."""
        return self.p**self.gamma

    def __str__(self) -> str:
        """Describe the field."""
        if self.gamma == 1:
            return f"F_{self.p}"
        return f"F_{self.q} = F_{self.p}[u]/({self.modulus_text()})"

    def modulus_text(self) -> str:
        """Return the modulus written in ``u``."""
        return self._coords_text(self.modulus) if self.modulus else ""

    @cached_property
    def coordinates(self) -> np.ndarray:
        """Coordinate vectors of every element, one row per index."""
        digits = np.arange(self.q, dtype=np.int64)
        rows = [(digits // self.p**j) % self.p for j in range(self.gamma)]
        return np.stack(rows, axis=1)

    @cached_property
    def _weights(self) -> np.ndarray:
        return self.p ** np.arange(self.gamma, dtype=np.int64)

    def _reduce_coords(self, coords: Sequence[int]) -> int:
        """Reduce a coordinate vector of any length modulo the modulus."""
        work = [c % self.p for c in coords]
        for degree in range(len(work) - 1, self.gamma - 1, -1):
            coef = work[degree]
            if coef:
                for i in range(self.gamma + 1):
                    position = degree - self.gamma + i
                    work[position] = (work[position] - coef * self.modulus[i]) % self.p
        return sum(c * self.p**j for j, c in enumerate(work[: self.gamma]))

    @cached_property
    def add_table(self) -> np.ndarray:
        """Addition table indexed by two element indices."""
        coords = self.coordinates
        summed = (coords[:, None, :] + coords[None, :, :]) % self.p
        return summed @ self._weights

    @cached_property
    def neg_table(self) -> np.ndarray:
        """Additive inverses indexed by element index."""
        return ((-self.coordinates) % self.p) @ self._weights

    @cached_property
    def mul_table(self) -> np.ndarray:
        """Multiplication table indexed by two element indices."""
        if self.gamma == 1:
            values = np.arange(self.q, dtype=np.int64)
            return np.outer(values, values) % self.p
        table = np.zeros((self.q, self.q), dtype=np.int64)
        coords = self.coordinates.tolist()
        for a in range(1, self.q):
            for b in range(a, self.q):
                full = [0] * (2 * self.gamma - 1)
                for i, ca in enumerate(coords[a]):
                    for j, cb in enumerate(coords[b]):
                        full[i + j] += ca * cb
                table[a, b] = table[b, a] = self._reduce_coords(full)
        return table

    @cached_property
    def inv_table(self) -> np.ndarray:
        """Multiplicative inverses, -1 marks zero."""
        inverses = np.full(self.q, -1, dtype=np.int64)
        rows, cols = np.nonzero(self.mul_table == 1)
        inverses[rows] = cols
        return inverses

    @cached_property
    def _scalar_tables(self) -> tuple[list[list[int]], list[list[int]], list[int]]:
        return (
            self.add_table.tolist(),
            self.mul_table.tolist(),
            self.inv_table.tolist(),
        )

    @cached_property
    def block_lookup(self) -> np.ndarray:
        """Reduced index of every coordinate block of length 2*gamma-1."""
        width = 2 * self.gamma - 1
        lookup = np.empty(self.p**width, dtype=np.int64)
        for key in range(self.p**width):
            lookup[key] = self._reduce_coords(
                [(key // self.p**j) % self.p for j in range(width)],
            )
        return lookup

    # scalar operations on indices

    def add(self, a: int, b: int) -> int:
        """Add two element indices."""
        if self.gamma == 1:
            return (a + b) % self.p
        return self._scalar_tables[0][a][b]

    def neg(self, a: int) -> int:
        """Negate an element index."""
        if self.gamma == 1:
            return -a % self.p
        return int(self.neg_table[a])

    def sub(self, a: int, b: int) -> int:
        """Subtract two element indices."""
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        """Multiply two element indices."""
        if self.gamma == 1:
            return a * b % self.p
        return self._scalar_tables[1][a][b]

    def inv(self, a: int) -> int:
        """Invert a non zero element index.

        :raises FieldDivisionError: when a is zero
        """
        if a == 0:
            msg = f"Division by zero in {self}"
            raise FieldDivisionError(msg)
        return self._scalar_tables[2][a]

    def power(self, a: int, exponent: int) -> int:
        """Raise an element index to an integer power."""
        if exponent < 0:
            a, exponent = self.inv(a), -exponent
        result = 1
        while exponent:
            if exponent & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            exponent >>= 1
        return result

    # vector operations on coefficient sequences

    def add_vectors(self, a: Sequence[int], b: Sequence[int]) -> list[int]:
        """Add two coefficient sequences, padding the shorter with zeros."""
        if len(a) < len(b):
            a, b = b, a
        if not b:
            return list(a)
        head = np.asarray(a[: len(b)], dtype=np.int64)
        other = np.asarray(b, dtype=np.int64)
        if self.gamma == 1:
            summed = (head + other) % self.p
        else:
            summed = self.add_table[head, other]
        return [*summed.tolist(), *a[len(b) :]]

    def neg_vector(self, a: Sequence[int]) -> list[int]:
        """Negate a coefficient sequence."""
        if not a:
            return []
        return self.neg_table[np.asarray(a, dtype=np.int64)].tolist()

    def scale_vector(self, a: Sequence[int], scalar: int) -> list[int]:
        """Multiply a coefficient sequence by an element index."""
        if scalar == 1 or not a:
            return list(a)
        return self.mul_table[scalar, np.asarray(a, dtype=np.int64)].tolist()

    def convolve(
        self,
        a: Sequence[int],
        b: Sequence[int],
        limit: int | None = None,
    ) -> list[int]:
        """Multiply two coefficient sequences as polynomials.

        Small inputs use schoolbook multiplication, larger ones Kronecker
        substitution into a single big integer product.

        :param a: first factor, lowest degree first
        :type a: Sequence[int]
        :param b: second factor, lowest degree first
        :type b: Sequence[int]
        :param limit: keep only the first ``limit`` coefficients
        :type limit: int | None
        :return: the product coefficients (not trimmed)
        :rtype: list[int]
        """
        if limit is not None:
            a, b = a[:limit], b[:limit]
        if not a or not b:
            return []
        if len(a) * len(b) <= _SCHOOLBOOK_LIMIT or min(len(a), len(b)) <= 2:
            result = self._schoolbook(a, b)
        else:
            result = self._kronecker(a, b)
        return result if limit is None else result[:limit]

    def _schoolbook(self, a: Sequence[int], b: Sequence[int]) -> list[int]:
        result = [0] * (len(a) + len(b) - 1)
        if self.gamma == 1:
            for i, ca in enumerate(a):
                if ca:
                    for j, cb in enumerate(b):
                        result[i + j] += ca * cb
            return [c % self.p for c in result]
        add_rows, mul_rows, _ = self._scalar_tables
        for i, ca in enumerate(a):
            if ca:
                row = mul_rows[ca]
                for j, cb in enumerate(b):
                    result[i + j] = add_rows[result[i + j]][row[cb]]
        return result

    def _pack(self, a: Sequence[int], block: int, width: int) -> int:
        values = np.asarray(a, dtype=np.int64)
        if self.gamma > 1:
            slots = np.zeros((len(values), block), dtype=np.int64)
            slots[:, : self.gamma] = self.coordinates[values]
            values = slots.reshape(-1)
        raw = values.astype("<u8").view(np.uint8).reshape(-1, 8)[:, :width]
        return int.from_bytes(raw.tobytes(), "little")

    def _kronecker(self, a: Sequence[int], b: Sequence[int]) -> list[int]:
        block = 2 * self.gamma - 1
        bound = min(len(a), len(b)) * self.gamma * (self.p - 1) ** 2
        width = max(1, (bound.bit_length() + 7) // 8)
        size = len(a) + len(b) - 1
        product_value = self._pack(a, block, width) * self._pack(b, block, width)
        raw = np.frombuffer(
            product_value.to_bytes(size * block * width, "little"),
            dtype=np.uint8,
        ).reshape(-1, width)
        byte_weights = np.uint64(256) ** np.arange(width, dtype=np.uint64)
        residues = (raw.astype(np.uint64) * byte_weights).sum(axis=1) % np.uint64(
            self.p,
        )
        residues = residues.astype(np.int64)
        if self.gamma == 1:
            return residues.tolist()
        keys = residues.reshape(size, block) @ (
            self.p ** np.arange(block, dtype=np.int64)
        )
        return self.block_lookup[keys].tolist()

    # text forms

    def _coords_text(self, coords: Sequence[int]) -> str:
        terms = []
        for power in range(len(coords) - 1, -1, -1):
            coef = coords[power]
            if not coef:
                continue
            if power == 0:
                terms.append(str(coef))
                continue
            head = "" if coef == 1 else str(coef)
            terms.append(f"{head}u" if power == 1 else f"{head}u^{power}")
        return "+".join(terms) or "0"

    def element_text(self, index: int) -> str:
        """Render an element index, e.g. ``2`` or ``u+1``."""
        if self.gamma == 1:
            return str(index)
        return self._coords_text(self.coordinates[index].tolist())

    def parse_index(self, text: str) -> int:
        """Parse element text into an index.

        Prime field elements are integers (reduced mod p, negatives
        allowed); extension elements are polynomials in ``u``.

        :raises FieldError: on malformed text
        """
        text = text.strip().replace(" ", "")
        if text.startswith("(") and text.endswith(")"):
            text = text[1:-1]
        negative = text.startswith("-")
        if negative:
            text = text[1:]
        if self.gamma == 1:
            if not text.isdigit():
                msg = f"Malformed element {text!r} of {self}"
                raise FieldError(msg)
            value = int(text) % self.p
        else:
            value = self._reduce_coords(parse_modulus(text, self.p))
        return self.neg(value) if negative else value


def enumerate_fq(ctx: FqContext) -> list[FqElement]:
    """Return every element of F_q in index order.

    For F_4 the order is ``0, 1, u, u+1``.
    """
    return [FqElement(ctx, index) for index in range(ctx.q)]


@dataclass(frozen=True)
class FqElement:
    """A single element of F_q."""

    ctx: FqContext
    index: int

    @classmethod
    def parse(cls, ctx: FqContext, text: str) -> FqElement:
        """Build an element from its text form."""
        return cls(ctx, ctx.parse_index(text))

    @classmethod
    def from_int(cls, ctx: FqContext, value: int) -> FqElement:
        """Embed an integer through the prime subfield."""
        index = value % ctx.p
        return cls(ctx, index)

    @property
    def coords(self) -> tuple[int, ...]:
        """Coordinates over the basis 1, u, ..., u^(gamma-1)."""
        return tuple(self.ctx.coordinates[self.index].tolist())

    def _other(self, other: Any) -> int:
        if isinstance(other, int):
            return other % self.ctx.p
        if not isinstance(other, FqElement):
            msg = f"Cannot combine an element of {self.ctx} with {other!r}"
            raise TypeError(msg)
        if other.ctx != self.ctx:
            msg = f"Cannot combine elements of {self.ctx} and {other.ctx}"
            raise ContextMismatchError(msg)
        return other.index

    def __add__(self, other: FqElement | int) -> FqElement:
        """Add two elements."""
        return FqElement(self.ctx, self.ctx.add(self.index, self._other(other)))

    __radd__ = __add__

    def __neg__(self) -> FqElement:
        """Negate the element."""
        return FqElement(self.ctx, self.ctx.neg(self.index))

    def __sub__(self, other: FqElement | int) -> FqElement:
        """Subtract two elements."""
        return FqElement(self.ctx, self.ctx.sub(self.index, self._other(other)))

    def __rsub__(self, other: FqElement | int) -> FqElement:
        """Subtract the element from an integer."""
        return FqElement(self.ctx, self.ctx.sub(self._other(other), self.index))

    def __mul__(self, other: FqElement | int) -> FqElement:
        """Multiply two elements."""
        return FqElement(self.ctx, self.ctx.mul(self.index, self._other(other)))

    __rmul__ = __mul__

    def inverse(self) -> FqElement:
        """Return the multiplicative inverse.

        :raises FieldDivisionError: for the zero element
        """
        return FqElement(self.ctx, self.ctx.inv(self.index))

    def __truediv__(self, other: FqElement | int) -> FqElement:
        """Divide two elements."""
        return self * FqElement(self.ctx, self._other(other)).inverse()

    def __pow__(self, exponent: int) -> FqElement:
        """Raise to an integer power, negative exponents invert first."""
        return FqElement(self.ctx, self.ctx.power(self.index, exponent))

    def __bool__(self) -> bool:
        """Return False for the zero element."""
        return self.index != 0

    def is_zero(self) -> bool:
        """Check for the zero element."""
        return self.index == 0

    def __str__(self) -> str:
        """Render the element."""
        return self.ctx.element_text(self.index)
