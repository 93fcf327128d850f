"""Exact arithmetic over the two supported base fields: Q and GF(p).

Scalars are plain Python values -- `fractions.Fraction` for Q and canonical
int residues in [0, p) for GF(p) -- while the field object carries the
descriptor and supplies the arithmetic.  Keeping scalars unboxed makes the
hot elimination loops an order of magnitude faster than per-element wrapper
objects; containers (polynomials, matrices) carry the field tag and raise
FieldMismatch when operands disagree.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Union

from .errors import DivisionByZero, FieldMismatch, ParseError, PrimalityError

Scalar = Union[int, Fraction]

# Residues are machine-word ints; products of two residues must fit in a
# double-width intermediate, so larger moduli are rejected at parse time.
MAX_MODULUS = 1 << 31


def is_prime(n: int) -> bool:
    """Trial-division primality test, adequate for moduli below 2**31."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class RationalField:
    """The field Q.  Scalars are always fully reduced Fractions."""

    kind = "q"
    char = 0

    zero = Fraction(0)
    one = Fraction(1)

    def spec_string(self) -> str:
        return "q"

    def from_int(self, k: int) -> Fraction:
        return Fraction(k)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if not a:
            raise DivisionByZero("inverse of zero in Q")
        return 1 / a

    def div(self, a, b):
        if not b:
            raise DivisionByZero("division by zero in Q")
        return a / b

    def eq(self, a, b) -> bool:
        return a == b

    def validate(self, a) -> Fraction:
        """Coerce to a canonical scalar; Fraction normalizes on construction."""
        if isinstance(a, bool) or not isinstance(a, (int, Fraction)):
            raise FieldMismatch(f"not a rational scalar: {a!r}")
        return Fraction(a)

    def parse(self, text: str) -> Fraction:
        text = text.strip()
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"cannot parse rational scalar {text!r}") from exc

    def to_str(self, a: Fraction) -> str:
        return str(a)

    # Row kernels used by Gauss-Jordan elimination; one call per row keeps
    # the per-element dispatch overhead out of the inner loop.
    def row_addmul(self, dst, src, c):
        return [a + c * b for a, b in zip(dst, src)]

    def row_scale(self, row, c):
        return [c * a for a in row]

    def __eq__(self, other) -> bool:
        return isinstance(other, RationalField)

    def __hash__(self) -> int:
        return hash("q")

    def __repr__(self) -> str:
        return "RationalField()"


class PrimeField:
    """The field GF(p) for a prime p < 2**31.  Scalars are ints in [0, p)."""

    kind = "gf"

    def __init__(self, p: int):
        if not isinstance(p, int) or p < 2:
            raise PrimalityError(f"modulus must be an integer >= 2, got {p!r}")
        if p >= MAX_MODULUS:
            raise PrimalityError(f"modulus {p} exceeds the supported bound 2**31")
        if not is_prime(p):
            raise PrimalityError(f"modulus {p} is not prime")
        self.p = p
        self.char = p
        self.zero = 0
        self.one = 1

    def spec_string(self) -> str:
        return f"gf:{self.p}"

    def from_int(self, k: int) -> int:
        return k % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return -a % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise DivisionByZero(f"inverse of zero in GF({self.p})")
        return pow(a, -1, self.p)

    def div(self, a, b):
        return (a * self.inv(b)) % self.p

    def eq(self, a, b) -> bool:
        return a == b

    def validate(self, a) -> int:
        if isinstance(a, bool) or not isinstance(a, int):
            raise FieldMismatch(f"not a GF({self.p}) scalar: {a!r}")
        return a % self.p

    def parse(self, text: str) -> int:
        text = text.strip()
        try:
            return int(text, 10) % self.p
        except ValueError as exc:
            raise ParseError(
                f"cannot parse GF({self.p}) scalar {text!r} (decimal integer expected)"
            ) from exc

    def to_str(self, a: int) -> str:
        return str(a)

    def row_addmul(self, dst, src, c):
        p = self.p
        return [(a + c * b) % p for a, b in zip(dst, src)]

    def row_scale(self, row, c):
        p = self.p
        return [c * a % p for a in row]

    def __eq__(self, other) -> bool:
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self) -> int:
        return hash(("gf", self.p))

    def __repr__(self) -> str:
        return f"PrimeField({self.p})"


Field = Union[RationalField, PrimeField]


def make_field(spec_string: str) -> Field:
    """Parse a field descriptor: "q" for the rationals, "gf:<p>" for GF(p)."""
    spec = spec_string.strip().lower()
    if spec == "q":
        return RationalField()
    if spec.startswith("gf:"):
        body = spec[3:]
        try:
            p = int(body, 10)
        except ValueError as exc:
            raise ParseError(f"malformed prime-field spec {spec_string!r}") from exc
        return PrimeField(p)
    raise ParseError(f"unknown field spec {spec_string!r} (expected 'q' or 'gf:<p>')")
