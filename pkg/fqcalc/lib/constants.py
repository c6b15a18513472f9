"""Carlitz constants over F_q[x].

``[i] = x^(q^i) - x``, ``D_i = [i] [i-1]^q ... [1]^(q^(i-1))``,
``L_i = [i] [i-1] ... [1]``, the Carlitz factorial ``Gamma_j`` and the
Carlitz binomials, all exact and cached per coefficient field.
"""

from __future__ import annotations

import logging
import threading

from fqcalc.exceptions import BudgetExceededError, DomainError
from fqcalc.lib.field import FqContext
from fqcalc.lib.series import Poly

_LOGGER = logging.getLogger(__name__)

DEGREE_CAP = 2**17


def digit_expansion(number: int, q: int) -> tuple[int, ...]:
    """Return the base q digits of ``number``, least significant first.

    :param number: a non negative integer
    :type number: int
    :param q: the base
    :type q: int
    :return: the digits, empty for 0
    :rtype: tuple[int, ...]
    """
    digits = []
    while number:
        number, digit = divmod(number, q)
        digits.append(digit)
    return tuple(digits)


def index_cap(q: int, degree_cap: int = DEGREE_CAP) -> int:
    """Return the largest i with ``deg D_i = i q^i`` within ``degree_cap``."""
    index = 0
    while (index + 1) * q ** (index + 1) <= degree_cap:
        index += 1
    return index


def _times_binomial(poly: Poly, high: int, low: int) -> Poly:
    """Multiply by ``x^high - x^low``."""
    return poly.shift(high) - poly.shift(low)


class CarlitzConstants:
    """Cache of the Carlitz constants of one coefficient field.

    Values are computed on first use and appended under a lock, so a
    shared instance may serve concurrent readers.
    """

    def __init__(self, ctx: FqContext, degree_cap: int = DEGREE_CAP) -> None:
        """Initialise the cache.

        :param ctx: the coefficient field
        :type ctx: FqContext
        :param degree_cap: bound on ``deg D_i``, fixing the largest index
        :type degree_cap: int
        """
        self._ctx = ctx
        self._lock = threading.RLock()
        self._cap = index_cap(ctx.q, degree_cap)
        one = Poly.one(ctx)
        self._d_values: list[Poly] = [one]
        self._l_values: list[Poly] = [one]
        self._gammas: dict[int, Poly] = {}
        self._binomials: dict[tuple[int, int], Poly] = {}
        self._falling: dict[tuple[int, int], Poly] = {}

    @property
    def ctx(self) -> FqContext:
        """The coefficient field."""
        return self._ctx

    @property
    def q(self) -> int:
        """Order of the coefficient field."""
        return self._ctx.q

    @property
    def cap(self) -> int:
        """Largest supported index."""
        return self._cap

    def check_index(self, index: int) -> None:
        """Validate an index against the degree cap.

        :raises DomainError: for negative indices
        :raises BudgetExceededError: for indices above the cap
        """
        if index < 0:
            msg = f"Index {index} is negative"
            raise DomainError(msg)
        if index > self._cap:
            msg = (
                f"Index {index} exceeds the cap {self._cap} for q={self.q} "
                f"(deg D_i = i*q^i is bounded)"
            )
            raise BudgetExceededError(msg)

    def bracket(self, index: int) -> Poly:
        """Return ``[i] = x^(q^i) - x``.

        :raises DomainError: for ``i <= 0``
        """
        if index <= 0:
            msg = f"[i] is only defined for i >= 1, got {index}"
            raise DomainError(msg)
        self.check_index(index)
        return _times_binomial(Poly.one(self._ctx), self.q**index, 1)

    def D(self, index: int) -> Poly:  # pylint: disable=invalid-name
        """Return ``D_i``, the product of all monic polynomials of degree i."""
        self.check_index(index)
        with self._lock:
            while len(self._d_values) <= index:
                level = len(self._d_values)
                previous = self._d_values[-1].frobenius(1)
                self._d_values.append(_times_binomial(previous, self.q**level, 1))
                _LOGGER.debug(
                    "Computed D_%d of degree %d",
                    level,
                    level * self.q**level,
                )
            return self._d_values[index]

    def L(self, index: int) -> Poly:  # pylint: disable=invalid-name
        """Return ``L_i``, the lcm of all monic polynomials of degree i."""
        self.check_index(index)
        with self._lock:
            while len(self._l_values) <= index:
                level = len(self._l_values)
                self._l_values.append(
                    _times_binomial(self._l_values[-1], self.q**level, 1),
                )
            return self._l_values[index]

    def d_valuation(self, index: int) -> int:
        """Return ``v(D_i) = (q^i - 1) / (q - 1)``."""
        return (self.q**index - 1) // (self.q - 1)

    def gamma(self, index: int) -> Poly:
        """Return the Carlitz factorial ``Gamma_j = prod D_i^(alpha_i)``.

        ``alpha_i`` are the base q digits of j.
        """
        if index < 0:
            msg = f"Gamma_j needs j >= 0, got {index}"
            raise DomainError(msg)
        with self._lock:
            if index not in self._gammas:
                result = Poly.one(self._ctx)
                for position, digit in enumerate(digit_expansion(index, self.q)):
                    if digit:
                        result = result * self.D(position) ** digit
                self._gammas[index] = result
            return self._gammas[index]

    def gamma_identity_holds(self, level: int) -> bool:
        """Check ``Gamma_(q^m - 1) L_m = D_m``."""
        return self.gamma(self.q**level - 1) * self.L(level) == self.D(level)

    def carlitz_binomial(self, upper: int, lower: int) -> Poly:
        """Return ``[i over j] = D_i / (D_j L_(i-j)^(q^j))``.

        The quotient is exact; a non zero remainder raises ``CodeError``.

        :raises DomainError: unless ``0 <= j <= i``
        """
        if not 0 <= lower <= upper:
            msg = f"Carlitz binomial [{upper} over {lower}] needs 0 <= j <= i"
            raise DomainError(msg)
        key = (upper, lower)
        with self._lock:
            if key not in self._binomials:
                denominator = self.D(lower) * self.L(upper - lower).frobenius(lower)
                self._binomials[key] = self.D(upper).exact_divide(denominator)
            return self._binomials[key]

    def e_coefficient(self, upper: int, lower: int) -> Poly:
        """Return ``(-1)^(i-j) [i over j]``, the coefficient of ``t^(q^j)`` in e_i."""
        binomial = self.carlitz_binomial(upper, lower)
        return binomial if (upper - lower) % 2 == 0 else -binomial

    def falling_bracket(self, upper: int, lower: int) -> Poly:
        """Return ``prod_(i=n-j+1..n) [i]^(q^(n-i)) = D_n / D_(n-j)^(q^j)``.

        This is the factor of ``t^(q^n)`` under the j-th order difference
        operator; it vanishes for ``j > n``.
        """
        if lower < 0:
            msg = f"Falling bracket order must be >= 0, got {lower}"
            raise DomainError(msg)
        if lower > upper:
            return Poly.zero(self._ctx)
        self.check_index(upper)
        key = (upper, lower)
        with self._lock:
            if key not in self._falling:
                result = Poly.one(self._ctx)
                for index in range(upper - lower + 1, upper + 1):
                    result = _times_binomial(
                        result,
                        self.q**upper,
                        self.q ** (upper - index),
                    )
                self._falling[key] = result
            return self._falling[key]


_INSTANCES: dict[FqContext, CarlitzConstants] = {}
_INSTANCES_LOCK = threading.Lock()


def get_constants(ctx: FqContext) -> CarlitzConstants:
    """Return the shared constants cache of a coefficient field."""
    with _INSTANCES_LOCK:
        if ctx not in _INSTANCES:
            _INSTANCES[ctx] = CarlitzConstants(ctx)
        return _INSTANCES[ctx]
