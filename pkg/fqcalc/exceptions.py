"""fqcalc exceptions for all plugins and modules of the library."""


class FqCalcException(Exception):
    """Base exception all fqcalc exceptions inherit from."""


class ConfigError(FqCalcException):
    """Raise this on invalid configuration or command line values."""


class FieldError(FqCalcException):
    """Raise this on invalid coefficient field data."""


class ContextMismatchError(FieldError):
    """Raise this when operands live in different coefficient fields."""


class FieldDivisionError(FieldError, ZeroDivisionError):
    """Raise this on division by zero."""


class PrecisionError(FqCalcException):
    """Raise this when a truncated series cannot answer the question asked."""


class ZeroWithinPrecisionError(PrecisionError):
    """Raise this when a value is zero to its known precision.

    Its valuation (and therefore its absolute value) is undetermined.
    """


class InsufficientPrecisionError(PrecisionError):
    """Raise this when an operation needs more known coefficients."""


class NotAQthPowerError(FqCalcException):
    """Raise this when a q-th root does not exist in K."""


class DomainError(FqCalcException):
    """Raise this on an argument outside the domain of an operation."""


class BudgetExceededError(FqCalcException):
    """Raise this when an enumeration budget or an index cap is exceeded."""


class CodeError(FqCalcException):
    """Raise this if an internal identity fails.

    This exception is only meant for exact identities that hold by
    construction, e.g. the integrality of Carlitz binomials.
    """
