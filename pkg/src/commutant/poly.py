"""Dense univariate polynomial arithmetic over Q and GF(p).

Coefficients are stored ascending by degree with no trailing zeros; the zero
polynomial is the empty tuple.  Factorization lives in `factorization`.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import (
    DivisionByZero,
    FieldMismatch,
    ParseError,
    UndefinedGcd,
)
from .fields import Field, PrimeField, RationalField, Scalar

NEG_INF = float("-inf")


class Poly:
    """Immutable dense polynomial over a fixed base field."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: Field, coeffs: Iterable[Scalar], *, validate: bool = True):
        cs = list(coeffs)
        if validate:
            cs = [field.validate(c) for c in cs]
        while cs and not cs[-1]:
            cs.pop()
        self.field = field
        self.coeffs = tuple(cs)

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, field: Field) -> "Poly":
        return cls(field, (), validate=False)

    @classmethod
    def one(cls, field: Field) -> "Poly":
        return cls(field, (field.one,), validate=False)

    @classmethod
    def constant(cls, field: Field, c: Scalar) -> "Poly":
        return cls(field, (field.validate(c),), validate=False)

    @classmethod
    def variable(cls, field: Field) -> "Poly":
        return cls(field, (field.zero, field.one), validate=False)

    @classmethod
    def from_ints(cls, field: Field, int_coeffs: Sequence[int]) -> "Poly":
        """Build from ascending integer coefficients, coerced into the field."""
        return cls(field, [field.from_int(c) for c in int_coeffs], validate=False)

    # -- basic queries -------------------------------------------------

    @property
    def degree(self):
        """Degree as an int, or -inf for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_one(self) -> bool:
        return len(self.coeffs) == 1 and self.coeffs[0] == self.field.one

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == self.field.one

    def leading_coefficient(self) -> Scalar:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Poly)
            and self.field == other.field
            and self.coeffs == other.coeffs
        )

    def __hash__(self) -> int:
        return hash((self.field, self.coeffs))

    def __repr__(self) -> str:
        return f"Poly({self.field!r}, {format_poly(self)!r})"

    def _check_field(self, other: "Poly") -> None:
        if self.field != other.field:
            raise FieldMismatch(f"mixed fields: {self.field!r} vs {other.field!r}")

    # -- ring operations -----------------------------------------------

    def __add__(self, other: "Poly") -> "Poly":
        self._check_field(other)
        F = self.field
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        cs = list(a)
        for i, c in enumerate(b):
            cs[i] = F.add(cs[i], c)
        return Poly(F, cs, validate=False)

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __neg__(self) -> "Poly":
        F = self.field
        return Poly(F, [F.neg(c) for c in self.coeffs], validate=False)

    def __mul__(self, other: "Poly") -> "Poly":
        self._check_field(other)
        F = self.field
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly.zero(F)
        out = [F.zero] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if not ai:
                continue
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] = F.add(out[i + j], F.mul(ai, bj))
        return Poly(F, out, validate=False)

    def scale(self, c: Scalar) -> "Poly":
        F = self.field
        return Poly(F, [F.mul(c, a) for a in self.coeffs], validate=False)

    def __divmod__(self, other: "Poly"):
        self._check_field(other)
        F = self.field
        if other.is_zero():
            raise DivisionByZero("polynomial division by zero")
        r = list(self.coeffs)
        d = other.coeffs
        dd = len(d) - 1
        lc_inv = F.inv(d[-1])
        if len(r) <= dd:
            return Poly.zero(F), self
        q = [F.zero] * (len(r) - dd)
        for k in range(len(r) - 1, dd - 1, -1):
            if not r[k]:
                continue
            factor = F.mul(r[k], lc_inv)
            q[k - dd] = factor
            for i in range(dd + 1):
                r[k - dd + i] = F.sub(r[k - dd + i], F.mul(factor, d[i]))
        return Poly(F, q, validate=False), Poly(F, r[:dd], validate=False)

    def __floordiv__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[1]

    def __pow__(self, e: int) -> "Poly":
        if e < 0:
            raise ValueError("negative polynomial power")
        out = Poly.one(self.field)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base if e > 1 else base
            e >>= 1
        return out

    def pow_mod(self, e: int, modulus: "Poly") -> "Poly":
        """self**e mod modulus by square-and-multiply."""
        if e < 0:
            raise ValueError("negative polynomial power")
        out = Poly.one(self.field) % modulus
        base = self % modulus
        while e:
            if e & 1:
                out = (out * base) % modulus
            e >>= 1
            if e:
                base = (base * base) % modulus
        return out

    def monic(self) -> "Poly":
        if self.is_zero():
            raise DivisionByZero("cannot normalize the zero polynomial")
        lc = self.coeffs[-1]
        if lc == self.field.one:
            return self
        return self.scale(self.field.inv(lc))

    def derivative(self) -> "Poly":
        F = self.field
        cs = [F.mul(F.from_int(i), c) for i, c in enumerate(self.coeffs) if i >= 1]
        return Poly(F, cs, validate=False)

    def evaluate(self, x: Scalar) -> Scalar:
        F = self.field
        acc = F.zero
        for c in reversed(self.coeffs):
            acc = F.add(F.mul(acc, x), c)
        return acc

    def eval_at_matrix(self, T):
        """Horner evaluation of self at a square matrix over the same field."""
        if self.field != T.field:
            raise FieldMismatch("polynomial and matrix live over different fields")
        acc = T.zero_like()
        for c in reversed(self.coeffs):
            acc = acc.mul(T).add_scaled_identity(c)
        return acc

    def shift_mul_x(self, k: int) -> "Poly":
        """Multiply by t**k."""
        if self.is_zero() or k == 0:
            return self
        return Poly(self.field, (self.field.zero,) * k + self.coeffs, validate=False)

    def sort_key(self):
        """Deterministic ordering: degree, then ascending coefficient sequence."""
        if isinstance(self.field, PrimeField):
            return (len(self.coeffs), self.coeffs)
        return (len(self.coeffs), tuple((c.numerator, c.denominator) for c in self.coeffs))


def poly_gcd(f: Poly, g: Poly) -> Poly:
    """Monic greatest common divisor by the Euclidean algorithm."""
    if f.field != g.field:
        raise FieldMismatch("gcd of polynomials over different fields")
    if f.is_zero() and g.is_zero():
        raise UndefinedGcd("gcd(0, 0) is undefined")
    a, b = f, g
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def poly_ext_gcd(f: Poly, g: Poly):
    """Extended Euclid: returns (g, s, t) monic with s*f + t*g = gcd."""
    if f.field != g.field:
        raise FieldMismatch("gcd of polynomials over different fields")
    if f.is_zero() and g.is_zero():
        raise UndefinedGcd("gcd(0, 0) is undefined")
    F = f.field
    r0, r1 = f, g
    s0, s1 = Poly.one(F), Poly.zero(F)
    t0, t1 = Poly.zero(F), Poly.one(F)
    while not r1.is_zero():
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    lc = r0.leading_coefficient()
    inv = F.inv(lc)
    return r0.scale(inv), s0.scale(inv), t0.scale(inv)


# -- squarefree decomposition ------------------------------------------


def _pth_root(f: Poly) -> Poly:
    """p-th root of f = v(t**p) over GF(p); Frobenius fixes the prime field,
    so the root just reindexes coefficients."""
    p = f.field.char
    cs = list(f.coeffs)
    root = []
    for i in range(0, len(cs), p):
        root.append(cs[i])
        for j in range(i + 1, min(i + p, len(cs))):
            if cs[j]:
                raise ValueError("polynomial is not of the form v(t^p)")
    return Poly(f.field, root, validate=False)


def _squarefree_char_zero(f: Poly) -> list[tuple[Poly, int]]:
    """Yun's algorithm; f monic nonconstant over Q."""
    out = []
    df = f.derivative()
    g = poly_gcd(f, df)
    w = f // g
    y = df // g
    z = y - w.derivative()
    i = 1
    while not w.is_one():
        h = poly_gcd(w, z) if not z.is_zero() else w.monic()
        if not h.is_one():
            out.append((h, i))
        w = w // h
        y = z // h
        z = y - w.derivative()
        i += 1
    return out


def _squarefree_char_p(f: Poly) -> list[tuple[Poly, int]]:
    """Squarefree decomposition over GF(p); valid because the prime field is
    perfect, so the derivative-kernel part has an exact p-th root."""
    p = f.field.char
    df = f.derivative()
    if df.is_zero():
        return [(g, p * m) for g, m in _squarefree_char_p(_pth_root(f))]
    out = []
    u = poly_gcd(f, df)
    v = f // u
    i = 1
    while not v.is_one():
        y = poly_gcd(v, u)
        h = v // y
        if not h.is_one():
            out.append((h, i))
        v = y
        u = u // y
        i += 1
    if not u.is_one():
        out.extend((g, p * m) for g, m in _squarefree_char_p(_pth_root(u)))
    out.sort(key=lambda gm: gm[1])
    return out


def squarefree_decomposition(f: Poly) -> list[tuple[Poly, int]]:
    """Write monic nonconstant f as a product of pairwise-coprime squarefree
    monic polynomials with distinct multiplicities.

    The product identity is re-verified before returning.
    """
    if not f.is_monic() or f.is_constant():
        raise ValueError("squarefree decomposition needs a monic nonconstant input")
    if f.field.char == 0:
        parts = _squarefree_char_zero(f)
    else:
        parts = _squarefree_char_p(f)
    check = Poly.one(f.field)
    for g, m in parts:
        check = check * g**m
    if check != f:
        raise AssertionError("squarefree decomposition failed the product identity")
    return parts


# -- text form ----------------------------------------------------------

_TERM_RE = re.compile(
    r"""^(?:
        (?P<coeff>[0-9]+(?:/[0-9]+)?)(?:\s*\*?\s*(?P<var1>t(?:\^(?P<exp1>[0-9]+))?))?
        |
        (?P<var2>t(?:\^(?P<exp2>[0-9]+))?)
    )$""",
    re.VERBOSE,
)


def _format_term(field: Field, c: Scalar, k: int) -> str:
    cs = field.to_str(c)
    if k == 0:
        return cs
    tpow = "t" if k == 1 else f"t^{k}"
    if c == field.one:
        return tpow
    return f"{cs}*{tpow}"


def format_poly(f: Poly) -> str:
    """Render as e.g. "t^3 + 2*t + 5/2": descending degree, zero terms omitted."""
    if f.is_zero():
        return "0"
    F = f.field
    pieces = []
    for k in range(len(f.coeffs) - 1, -1, -1):
        c = f.coeffs[k]
        if not c:
            continue
        negative = isinstance(F, RationalField) and c < 0
        mag = -c if negative else c
        term = _format_term(F, mag, k)
        if not pieces:
            pieces.append(f"-{term}" if negative else term)
        else:
            pieces.append(f"- {term}" if negative else f"+ {term}")
    return " ".join(pieces)


def parse_poly(text: str, field: Field) -> Poly:
    """Parse the display syntax: terms like "t^3", "2*t", "5/2" joined by +/-."""
    s = text.strip()
    if not s:
        raise ParseError("empty polynomial")
    s = s.replace("**", "^")
    # split into signed terms; a sign char applies to the following term
    terms: list[tuple[int, str]] = []
    sign, buf = 1, []
    for ch in s:
        if ch in "+-":
            chunk = "".join(buf).strip()
            if chunk:
                terms.append((sign, chunk))
                sign = 1
            if ch == "-":
                sign = -sign
            buf = []
        else:
            buf.append(ch)
    chunk = "".join(buf).strip()
    if chunk:
        terms.append((sign, chunk))
    if not terms:
        raise ParseError(f"cannot parse polynomial {text!r}")

    coeffs: dict[int, Scalar] = {}
    for sgn, raw in terms:
        m = _TERM_RE.match(raw.replace(" ", ""))
        if not m:
            raise ParseError(f"cannot parse polynomial term {raw!r}")
        if m.group("var2") is not None:
            exp = int(m.group("exp2") or 1)
            c = field.one
        else:
            c = field.parse(m.group("coeff"))
            if m.group("var1") is not None:
                exp = int(m.group("exp1") or 1)
            else:
                exp = 0
        if sgn < 0:
            c = field.neg(c)
        coeffs[exp] = field.add(coeffs.get(exp, field.zero), c)
    deg = max(coeffs) if coeffs else 0
    out = [field.zero] * (deg + 1)
    for k, c in coeffs.items():
        out[k] = c
    return Poly(field, out, validate=False)


def lcm_int(values: Iterable[int]) -> int:
    acc = 1
    for v in values:
        acc = acc * v // math.gcd(acc, v)
    return acc


def clear_denominators(f: Poly) -> list[int]:
    """Ascending integer coefficients of d*f for the least d > 0; Q only."""
    if not isinstance(f.field, RationalField):
        raise FieldMismatch("clear_denominators expects a rational polynomial")
    d = lcm_int(c.denominator for c in f.coeffs) if f.coeffs else 1
    return [int(c * d) for c in f.coeffs]
