"""Exception hierarchy shared across the package."""


class CommutantError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(CommutantError):
    """Malformed textual input (field spec, polynomial, matrix file, partition)."""


class PrimalityError(ParseError):
    """Requested prime-field modulus is not prime (or out of range)."""


class FieldMismatch(CommutantError):
    """Operands belong to different fields."""


class DimensionMismatch(CommutantError):
    """Matrix operands have incompatible shapes."""


class DivisionByZero(CommutantError, ZeroDivisionError):
    """Division or inversion by zero in a field or polynomial ring."""


class UndefinedGcd(CommutantError):
    """gcd(0, 0) requested."""


class NotAFactor(CommutantError):
    """Polynomial does not divide the characteristic polynomial."""


class NotIrreducible(CommutantError):
    """A polynomial required to be irreducible is not."""


class InternalError(CommutantError):
    """An internal consistency assertion failed; indicates a bug, not bad input."""


class VerificationFailure(CommutantError):
    """A brute-force verification check failed, naming the check."""
