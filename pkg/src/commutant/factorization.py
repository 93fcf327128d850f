"""Complete irreducible factorization over GF(p) and Q.

GF(p): squarefree decomposition, then distinct-degree splitting, then
Cantor-Zassenhaus equal-degree splitting (trace-map variant in
characteristic 2, where the odd-exponent trick fails).

Q: squarefree decomposition, then per squarefree part the Zassenhaus method:
reduce mod the smallest good prime, factor there, lift by quadratic Hensel
steps past the Landau-Mignotte coefficient bound, and recombine lifted
factors by subset enumeration in increasing subset size.  Desk-scale degrees
keep the subset search cheap.

All randomness is drawn from a seedable generator (default seed 0) so runs
are reproducible.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from itertools import combinations

from .errors import InternalError
from .fields import PrimeField, is_prime
from .poly import (
    Poly,
    clear_denominators,
    poly_ext_gcd,
    poly_gcd,
    squarefree_decomposition,
)


@dataclass(frozen=True)
class IrreducibleFactor:
    """A monic irreducible factor together with its degree and multiplicity."""

    poly: Poly
    degree: int
    multiplicity: int

    def __post_init__(self):
        if not self.poly.is_monic() or self.poly.is_constant():
            raise ValueError("factors must be monic and nonconstant")
        if self.degree != len(self.poly.coeffs) - 1:
            raise ValueError("stored degree disagrees with the polynomial")
        if self.multiplicity < 1:
            raise ValueError("multiplicity must be positive")


def factor(f: Poly, seed: int = 0) -> list[IrreducibleFactor]:
    """Factor a monic nonconstant polynomial into monic irreducibles.

    The result is sorted by (degree, coefficient sequence) and the product
    identity is re-verified before returning.
    """
    if not f.is_monic() or f.is_constant():
        raise ValueError("factor needs a monic nonconstant polynomial")
    rng = random.Random(seed)
    pairs: list[tuple[Poly, int]] = []
    for g, e in squarefree_decomposition(f):
        if isinstance(f.field, PrimeField):
            irreducibles = _factor_gf_squarefree(g, rng)
        else:
            irreducibles = _factor_q_squarefree(g, rng)
        pairs.extend((q, e) for q in irreducibles)
    pairs.sort(key=lambda pe: pe[0].sort_key())
    check = Poly.one(f.field)
    for q, e in pairs:
        check = check * q**e
    if check != f:
        raise InternalError("factorization failed the product identity")
    return [IrreducibleFactor(q, len(q.coeffs) - 1, e) for q, e in pairs]


def is_irreducible(f: Poly, seed: int = 0) -> bool:
    if not f.is_monic() or f.is_constant():
        return False
    fs = factor(f, seed=seed)
    return len(fs) == 1 and fs[0].multiplicity == 1


# -- GF(p) -------------------------------------------------------------------


def _factor_gf_squarefree(g: Poly, rng: random.Random) -> list[Poly]:
    out = []
    for h, k in _distinct_degree(g):
        out.extend(_equal_degree(h, k, rng))
    return out


def _distinct_degree(g: Poly) -> list[tuple[Poly, int]]:
    """Split monic squarefree g into products of irreducibles of equal degree."""
    F = g.field
    p = F.char
    x = Poly.variable(F)
    rem = g
    h = x % rem
    out = []
    k = 0
    while len(rem.coeffs) - 1 >= 2 * (k + 1):
        k += 1
        h = h.pow_mod(p, rem)
        d = poly_gcd(h - x, rem) if not (h - x).is_zero() else rem.monic()
        if not d.is_one():
            out.append((d, k))
            rem = rem // d
            h = h % rem
    if not rem.is_constant():
        out.append((rem, len(rem.coeffs) - 1))
    return out


def _random_nonzero_poly(F: PrimeField, max_deg: int, rng: random.Random) -> Poly:
    while True:
        coeffs = [rng.randrange(F.p) for _ in range(max_deg + 1)]
        f = Poly(F, coeffs, validate=False)
        if not f.is_zero():
            return f


def _equal_degree(h: Poly, k: int, rng: random.Random) -> list[Poly]:
    """Cantor-Zassenhaus splitting of a product of degree-k irreducibles."""
    deg = len(h.coeffs) - 1
    if deg == k:
        return [h.monic()]
    F = h.field
    p = F.char
    while True:
        a = _random_nonzero_poly(F, deg - 1, rng)
        d = poly_gcd(a, h)
        if not d.is_one() and len(d.coeffs) - 1 < deg:
            split = d
        elif p == 2:
            # trace of a into GF(2) over each residue field GF(2^k)
            tr = a
            acc = a
            for _ in range(k - 1):
                acc = (acc * acc) % h
                tr = tr + acc
            if tr.is_zero():
                continue
            split = poly_gcd(tr, h)
        else:
            b = a.pow_mod((p**k - 1) // 2, h)
            c = b - Poly.one(F)
            if c.is_zero():
                continue
            split = poly_gcd(c, h)
        sd = len(split.coeffs) - 1
        if 0 < sd < deg:
            left = _equal_degree(split.monic(), k, rng)
            right = _equal_degree((h // split).monic(), k, rng)
            return left + right


# -- Q (Zassenhaus) -----------------------------------------------------------
#
# Integer polynomials below are plain ascending int lists with no trailing
# zeros; coefficients mod m use the symmetric representative in (-m/2, m/2].


def _zt(f: list[int]) -> list[int]:
    while f and f[-1] == 0:
        f.pop()
    return f


def _zadd(a, b):
    n = max(len(a), len(b))
    return _zt([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)])


def _zsub(a, b):
    n = max(len(a), len(b))
    return _zt([(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)])


def _zmul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return _zt(out)


def _ztrunc(f, m):
    half = m // 2
    out = []
    for c in f:
        r = c % m
        if r > half:
            r -= m
        out.append(r)
    return _zt(out)


def _zdivmod_monic(a, b):
    """Euclidean division by a monic integer polynomial; exact over Z."""
    if not b or b[-1] != 1:
        raise InternalError("division expects a monic integer polynomial")
    r = list(a)
    db = len(b) - 1
    if len(r) - 1 < db:
        return [], _zt(r)
    q = [0] * (len(r) - db)
    for k in range(len(r) - 1, db - 1, -1):
        c = r[k]
        if c:
            q[k - db] = c
            for i in range(db + 1):
                r[k - db + i] -= c * b[i]
    return _zt(q), _zt(r[:db])


def _zcontent(f) -> int:
    c = 0
    for x in f:
        c = math.gcd(c, x)
    return c


def _zprimitive(f) -> list[int]:
    """Primitive part with positive leading coefficient."""
    if not f:
        return []
    c = _zcontent(f)
    if f[-1] < 0:
        c = -c
    return [x // c for x in f]


def _zexact_div(a, b):
    """a // b over Z[t] if the division is exact, else None."""
    if not b:
        return None
    if not a:
        return []
    da, db = len(a) - 1, len(b) - 1
    if da < db:
        return None
    lb = b[-1]
    r = list(a)
    q = [0] * (da - db + 1)
    for k in range(da, db - 1, -1):
        c = r[k]
        if c % lb:
            return None
        qq = c // lb
        q[k - db] = qq
        if qq:
            for i in range(db + 1):
                r[k - db + i] -= qq * b[i]
    if any(r[:db]):
        return None
    return _zt(q)


def _sym_int_coeffs(f: Poly) -> list[int]:
    p = f.field.p
    half = p // 2
    return [c - p if c > half else c for c in f.coeffs]


def _hensel_step(m, f, g, h, s, t):
    """One quadratic Hensel step: from f = g*h and s*g + t*h = 1 (mod m)
    to the same congruences mod m**2, with h kept monic."""
    M = m * m
    e = _ztrunc(_zsub(f, _zmul(g, h)), M)
    q, r = _zdivmod_monic(_zmul(s, e), h)
    q = _ztrunc(q, M)
    r = _ztrunc(r, M)
    u = _zadd(_zmul(t, e), _zmul(q, g))
    G = _ztrunc(_zadd(g, u), M)
    H = _ztrunc(_zadd(h, r), M)
    b = _ztrunc(_zsub(_zadd(_zmul(s, G), _zmul(t, H)), [1]), M)
    c, d = _zdivmod_monic(_zmul(s, b), H)
    c = _ztrunc(c, M)
    d = _ztrunc(d, M)
    S = _ztrunc(_zsub(s, d), M)
    T = _ztrunc(_zsub(t, _zadd(_zmul(t, b), _zmul(c, G))), M)
    return G, H, S, T


def _hensel_lift(p, f, factors_mod_p, l):
    """Lift f = lc(f) * prod(factors) (mod p) to mod p**l, factors monic.

    Binary tree over the factor list; each two-way split is lifted by
    quadratic steps, then the halves are lifted recursively.
    """
    r = len(factors_mod_p)
    pl = p**l
    lc = f[-1]
    if r == 1:
        inv = pow(lc % pl, -1, pl)
        return [_ztrunc([c * inv for c in f], pl)]
    k = r // 2
    gf = PrimeField(p)
    gP = Poly.constant(gf, lc % p)
    for fi in factors_mod_p[:k]:
        gP = gP * Poly.from_ints(gf, fi)
    hP = Poly.one(gf)
    for fi in factors_mod_p[k:]:
        hP = hP * Poly.from_ints(gf, fi)
    gcd_, sP, tP = poly_ext_gcd(gP, hP)
    if not gcd_.is_one():
        raise InternalError("Hensel tree halves are not coprime mod p")
    g = _sym_int_coeffs(gP)
    h = _sym_int_coeffs(hP)
    s = _sym_int_coeffs(sP)
    t = _sym_int_coeffs(tP)
    m = p
    steps = max(0, math.ceil(math.log2(l))) if l > 1 else 0
    for _ in range(steps):
        g, h, s, t = _hensel_step(m, f, g, h, s, t)
        m = m * m
    return _hensel_lift(p, g, factors_mod_p[:k], l) + _hensel_lift(p, h, factors_mod_p[k:], l)


def _good_prime(f: list[int]) -> int:
    """Smallest prime not dividing lc(f) whose image leaves f squarefree."""
    lc = f[-1]
    p = 2
    while True:
        if is_prime(p) and lc % p:
            gf = PrimeField(p)
            image = Poly.from_ints(gf, f)
            if len(image.coeffs) - 1 == len(f) - 1:
                d = image.derivative()
                if not d.is_zero() and poly_gcd(image, d).is_one():
                    return p
        p += 1


def _mignotte_bound(f: list[int]) -> int:
    """Integer over-approximation of the Landau-Mignotte factor bound."""
    n = len(f) - 1
    a = max(abs(c) for c in f)
    s = math.isqrt(n + 1)
    if s * s < n + 1:
        s += 1
    return s * (1 << n) * a * abs(f[-1])


def _zassenhaus(f: list[int], rng: random.Random) -> list[list[int]]:
    """Factor a primitive squarefree integer polynomial with lc > 0."""
    n = len(f) - 1
    if n == 1:
        return [f]
    p = _good_prime(f)
    gf = PrimeField(p)
    image = Poly.from_ints(gf, f).monic()
    modular = _factor_gf_squarefree(image, rng)
    if len(modular) == 1:
        return [f]
    bound = _mignotte_bound(f)
    l = 1
    pl = p
    while pl <= 2 * bound:
        pl *= p
        l += 1
    lifted = _hensel_lift(p, f, [_sym_int_coeffs(q) for q in modular], l)
    pl = p**l

    indices = list(range(len(lifted)))
    out: list[list[int]] = []
    current = f
    size = 1
    while 2 * size <= len(indices):
        found = False
        for subset in combinations(indices, size):
            cand = [current[-1]]
            for i in subset:
                cand = _zmul(cand, lifted[i])
            cand = _zprimitive(_ztrunc(cand, pl))
            quotient = _zexact_div(current, cand)
            if quotient is not None:
                out.append(cand)
                current = quotient
                indices = [i for i in indices if i not in subset]
                found = True
                break
        if not found:
            size += 1
    if len(current) > 1:
        out.append(current)
    return out


def _factor_q_squarefree(g: Poly, rng: random.Random) -> list[Poly]:
    """Monic irreducible factors of a monic squarefree rational polynomial."""
    zz = _zprimitive(clear_denominators(g))
    field = g.field
    out = []
    for part in _zassenhaus(zz, rng):
        q = Poly(field, [field.from_int(c) for c in part], validate=False)
        out.append(q.monic())
    return out
