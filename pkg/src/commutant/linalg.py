"""Dense exact linear algebra over Q and GF(p).

Gauss-Jordan with exact division is the main elimination routine; Bareiss
fraction-free elimination exists solely as an independent determinant oracle.
The characteristic polynomial uses Berkowitz's division-free algorithm so a
single code path covers every characteristic.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import DimensionMismatch, FieldMismatch, InternalError
from .fields import Field, Scalar
from .poly import Poly


class Matrix:
    """Dense matrix over a fixed exact field; treated as immutable."""

    __slots__ = ("field", "nrows", "ncols", "rows")

    def __init__(self, field: Field, rows: Sequence[Sequence[Scalar]], *, validate: bool = True):
        data = [list(r) for r in rows]
        if not data or not data[0]:
            raise DimensionMismatch("matrices must have at least one row and column")
        ncols = len(data[0])
        if any(len(r) != ncols for r in data):
            raise DimensionMismatch("ragged rows")
        if validate:
            data = [[field.validate(x) for x in r] for r in data]
        self.field = field
        self.nrows = len(data)
        self.ncols = ncols
        self.rows = data

    @classmethod
    def _new(cls, field: Field, rows: list[list[Scalar]]) -> "Matrix":
        m = object.__new__(cls)
        m.field = field
        m.nrows = len(rows)
        m.ncols = len(rows[0])
        m.rows = rows
        return m

    # -- constructors --------------------------------------------------

    @classmethod
    def zeros(cls, field: Field, nrows: int, ncols: int | None = None) -> "Matrix":
        ncols = nrows if ncols is None else ncols
        z = field.zero
        return cls._new(field, [[z] * ncols for _ in range(nrows)])

    @classmethod
    def identity(cls, field: Field, n: int) -> "Matrix":
        m = cls.zeros(field, n, n)
        for i in range(n):
            m.rows[i][i] = field.one
        return m

    @classmethod
    def from_int_rows(cls, field: Field, rows: Sequence[Sequence[int]]) -> "Matrix":
        return cls._new(field, [[field.from_int(x) for x in r] for r in rows])

    @classmethod
    def companion(cls, f: Poly) -> "Matrix":
        """Companion matrix of a monic polynomial of degree >= 1."""
        if not f.is_monic() or f.is_constant():
            raise ValueError("companion matrix needs a monic polynomial of degree >= 1")
        F = f.field
        n = len(f.coeffs) - 1
        m = cls.zeros(F, n, n)
        for i in range(1, n):
            m.rows[i][i - 1] = F.one
        for i in range(n):
            m.rows[i][n - 1] = F.neg(f.coeffs[i])
        return m

    @classmethod
    def block_diagonal(cls, blocks: Sequence["Matrix"]) -> "Matrix":
        if not blocks:
            raise DimensionMismatch("need at least one block")
        F = blocks[0].field
        if any(b.field != F for b in blocks):
            raise FieldMismatch("blocks over different fields")
        n = sum(b.nrows for b in blocks)
        out = cls.zeros(F, n, n)
        off = 0
        for b in blocks:
            if b.nrows != b.ncols:
                raise DimensionMismatch("block-diagonal blocks must be square")
            for i in range(b.nrows):
                out.rows[off + i][off : off + b.ncols] = list(b.rows[i])
            off += b.nrows
        return out

    # -- queries ---------------------------------------------------------

    @property
    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def is_zero(self) -> bool:
        return all(not x for row in self.rows for x in row)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Matrix)
            and self.field == other.field
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash((self.field, tuple(tuple(r) for r in self.rows)))

    def __repr__(self) -> str:
        return f"Matrix({self.field!r}, {self.nrows}x{self.ncols})"

    def _check_same_field(self, other: "Matrix") -> None:
        if self.field != other.field:
            raise FieldMismatch(f"mixed fields: {self.field!r} vs {other.field!r}")

    def flatten(self) -> list[Scalar]:
        """Row-major coordinates; the layout used for all subspace work."""
        return [x for row in self.rows for x in row]

    @classmethod
    def from_flat(cls, field: Field, vec: Sequence[Scalar], nrows: int, ncols: int) -> "Matrix":
        if len(vec) != nrows * ncols:
            raise DimensionMismatch("flat vector has the wrong length")
        return cls._new(field, [list(vec[i * ncols : (i + 1) * ncols]) for i in range(nrows)])

    def submatrix(self, r0: int, r1: int, c0: int, c1: int) -> "Matrix":
        return Matrix._new(self.field, [row[c0:c1] for row in self.rows[r0:r1]])

    def transpose(self) -> "Matrix":
        return Matrix._new(self.field, [list(col) for col in zip(*self.rows)])

    # -- arithmetic --------------------------------------------------------

    def add(self, other: "Matrix") -> "Matrix":
        self._check_same_field(other)
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise DimensionMismatch("shape mismatch in add")
        F = self.field
        return Matrix._new(
            F, [F.row_addmul(a, b, F.one) for a, b in zip(self.rows, other.rows)]
        )

    def sub(self, other: "Matrix") -> "Matrix":
        self._check_same_field(other)
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise DimensionMismatch("shape mismatch in sub")
        F = self.field
        neg_one = F.neg(F.one)
        return Matrix._new(
            F, [F.row_addmul(a, b, neg_one) for a, b in zip(self.rows, other.rows)]
        )

    def scalar_mul(self, c: Scalar) -> "Matrix":
        F = self.field
        return Matrix._new(F, [F.row_scale(r, c) for r in self.rows])

    def mul(self, other: "Matrix") -> "Matrix":
        self._check_same_field(other)
        if self.ncols != other.nrows:
            raise DimensionMismatch("inner dimensions disagree in mul")
        F = self.field
        z = F.zero
        out = []
        for arow in self.rows:
            acc = [z] * other.ncols
            for k, a in enumerate(arow):
                if a:
                    acc = F.row_addmul(acc, other.rows[k], a)
            out.append(acc)
        return Matrix._new(F, out)

    def pow(self, e: int) -> "Matrix":
        if not self.is_square:
            raise DimensionMismatch("pow needs a square matrix")
        if e < 0:
            raise ValueError("negative matrix power")
        out = Matrix.identity(self.field, self.nrows)
        base = self
        while e:
            if e & 1:
                out = out.mul(base)
            e >>= 1
            if e:
                base = base.mul(base)
        return out

    def add_scaled_identity(self, c: Scalar) -> "Matrix":
        if not self.is_square:
            raise DimensionMismatch("add_scaled_identity needs a square matrix")
        F = self.field
        rows = [list(r) for r in self.rows]
        if c:
            for i in range(self.nrows):
                rows[i][i] = F.add(rows[i][i], c)
        return Matrix._new(F, rows)

    def zero_like(self) -> "Matrix":
        return Matrix.zeros(self.field, self.nrows, self.ncols)

    def commutes_with(self, other: "Matrix") -> bool:
        return self.mul(other) == other.mul(self)


# -- elimination ------------------------------------------------------------


def rref_in_place(rows: list[list[Scalar]], field: Field) -> list[int]:
    """Reduce to canonical reduced row echelon form; returns pivot columns."""
    m = len(rows)
    if m == 0:
        return []
    n = len(rows[0])
    pivots: list[int] = []
    r = 0
    for c in range(n):
        pr = None
        for i in range(r, m):
            if rows[i][c]:
                pr = i
                break
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        if rows[r][c] != field.one:
            rows[r] = field.row_scale(rows[r], field.inv(rows[r][c]))
        lead = rows[r]
        for i in range(m):
            if i != r and rows[i][c]:
                rows[i] = field.row_addmul(rows[i], lead, field.neg(rows[i][c]))
        pivots.append(c)
        r += 1
        if r == m:
            break
    return pivots


@dataclass(frozen=True)
class SubspaceBasis:
    """Canonical basis of a subspace of coordinate vectors.

    Vectors are the rows of the unique reduced echelon form of any spanning
    set, so subspace equality is plain tuple equality.
    """

    field: Field
    ambient_dim: int
    vectors: tuple[tuple[Scalar, ...], ...]
    pivots: tuple[int, ...]

    @classmethod
    def from_spanning(
        cls, field: Field, vectors: Sequence[Sequence[Scalar]], ambient_dim: int
    ) -> "SubspaceBasis":
        rows = [list(v) for v in vectors]
        for v in rows:
            if len(v) != ambient_dim:
                raise DimensionMismatch("spanning vector has wrong length")
        pivots = rref_in_place(rows, field)
        rows = rows[: len(pivots)]
        return cls(field, ambient_dim, tuple(tuple(r) for r in rows), tuple(pivots))

    @property
    def dim(self) -> int:
        return len(self.vectors)

    def reduce(self, vec: Sequence[Scalar]) -> list[Scalar]:
        """Residual of vec after elimination against the basis rows."""
        F = self.field
        v = list(vec)
        for row, p in zip(self.vectors, self.pivots):
            c = v[p]
            if c:
                v = F.row_addmul(v, row, F.neg(c))
        return v

    def contains(self, vec: Sequence[Scalar]) -> bool:
        return not any(self.reduce(vec))

    def coordinates(self, vec: Sequence[Scalar]) -> list[Scalar] | None:
        """Coefficients of vec on the basis rows, or None if outside the span."""
        F = self.field
        v = list(vec)
        coords = []
        for row, p in zip(self.vectors, self.pivots):
            c = v[p]
            coords.append(c)
            if c:
                v = F.row_addmul(v, row, F.neg(c))
        if any(v):
            return None
        return coords


def rank_and_nullspace(M: Matrix) -> tuple[int, SubspaceBasis]:
    """Rank and the canonical right-kernel basis of a rectangular matrix."""
    F = M.field
    rows = [list(r) for r in M.rows]
    pivots = rref_in_place(rows, F)
    rank = len(pivots)
    n = M.ncols
    in_pivots = set(pivots)
    kernel = []
    for free in range(n):
        if free in in_pivots:
            continue
        v = [F.zero] * n
        v[free] = F.one
        for r_idx, p_col in enumerate(pivots):
            c = rows[r_idx][free]
            if c:
                v[p_col] = F.neg(c)
        kernel.append(v)
    basis = SubspaceBasis.from_spanning(F, kernel, n)
    if rank + basis.dim != n:
        raise InternalError("rank-nullity bookkeeping failed")
    return rank, basis


def rank(M: Matrix) -> int:
    rows = [list(r) for r in M.rows]
    return len(rref_in_place(rows, M.field))


def invert(M: Matrix) -> Matrix:
    """Inverse by Gauss-Jordan on the augmented matrix; raises if singular."""
    if not M.is_square:
        raise DimensionMismatch("inverse needs a square matrix")
    F = M.field
    n = M.nrows
    aug = [list(r) + [F.one if i == j else F.zero for j in range(n)]
           for i, r in enumerate(M.rows)]
    pivots = rref_in_place(aug, F)
    if pivots != list(range(n)):
        raise ValueError("matrix is not invertible")
    return Matrix._new(F, [row[n:] for row in aug])


def column_space_basis(M: Matrix) -> SubspaceBasis:
    """Canonical basis of the column space (as row vectors of length nrows)."""
    return SubspaceBasis.from_spanning(M.field, M.transpose().rows, M.nrows)


def left_nullspace(M: Matrix) -> SubspaceBasis:
    """Canonical basis of {y : y * M = 0}."""
    _, basis = rank_and_nullspace(M.transpose())
    return basis


# -- characteristic polynomial (Berkowitz) ----------------------------------


def charpoly(T: Matrix) -> Poly:
    """Characteristic polynomial det(t*I - T) by the Berkowitz algorithm.

    Division-free, so it is valid verbatim over GF(p) for any p as well as
    over Q.  Returns a monic polynomial of degree n.
    """
    if not T.is_square:
        raise DimensionMismatch("characteristic polynomial needs a square matrix")
    F = T.field
    A = T.rows
    n = T.nrows
    # coefficients of the leading 1x1 principal submatrix, descending degree
    coeffs = [F.one, F.neg(A[0][0])]
    for r in range(1, n):
        row = A[r][:r]
        col = [A[i][r] for i in range(r)]
        # first column of the (r+2) x (r+1) Toeplitz factor:
        # 1, -a_rr, -row.col, -row.A.col, -row.A^2.col, ...
        tvec = [F.one, F.neg(A[r][r])]
        v = col
        for step in range(r):
            s = F.zero
            for x, y in zip(row, v):
                if x and y:
                    s = F.add(s, F.mul(x, y))
            tvec.append(F.neg(s))
            if step + 1 < r:
                v = [
                    _dot(F, A[i][:r], v)
                    for i in range(r)
                ]
        new = []
        for i in range(r + 2):
            s = F.zero
            lo = max(0, i - (len(tvec) - 1))
            hi = min(i, len(coeffs) - 1)
            for j in range(lo, hi + 1):
                cj = coeffs[j]
                ti = tvec[i - j]
                if cj and ti:
                    s = F.add(s, F.mul(ti, cj))
            new.append(s)
        coeffs = new
    return Poly(F, list(reversed(coeffs)), validate=False)


def _dot(F: Field, xs, ys):
    s = F.zero
    for x, y in zip(xs, ys):
        if x and y:
            s = F.add(s, F.mul(x, y))
    return s


# -- Bareiss determinants (independent cross-check oracle) -------------------


def det_bareiss(M: Matrix) -> Scalar:
    """Determinant by fraction-free Bareiss elimination with row pivoting."""
    if not M.is_square:
        raise DimensionMismatch("determinant needs a square matrix")
    F = M.field
    n = M.nrows
    A = [list(r) for r in M.rows]
    flip = False
    prev = F.one
    for k in range(n - 1):
        if not A[k][k]:
            swap = next((i for i in range(k + 1, n) if A[i][k]), None)
            if swap is None:
                return F.zero
            A[k], A[swap] = A[swap], A[k]
            flip = not flip
        pivot = A[k][k]
        for i in range(k + 1, n):
            aik = A[i][k]
            for j in range(k + 1, n):
                num = F.sub(F.mul(A[i][j], pivot), F.mul(aik, A[k][j]))
                A[i][j] = F.div(num, prev)
            A[i][k] = F.zero
        prev = pivot
    d = A[n - 1][n - 1]
    return F.neg(d) if flip else d


def det_bareiss_int(rows: Sequence[Sequence[int]]) -> int:
    """Integer determinant by Bareiss; every division is exact by construction."""
    n = len(rows)
    if n == 0 or any(len(r) != n for r in rows):
        raise DimensionMismatch("determinant needs a square integer matrix")
    A = [list(map(int, r)) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if A[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if A[i][k]), None)
            if swap is None:
                return 0
            A[k], A[swap] = A[swap], A[k]
            sign = -sign
        pivot = A[k][k]
        for i in range(k + 1, n):
            aik = A[i][k]
            for j in range(k + 1, n):
                num = A[i][j] * pivot - aik * A[k][j]
                q, rem = divmod(num, prev)
                if rem:
                    raise InternalError("Bareiss exact division failed")
                A[i][j] = q
            A[i][k] = 0
        prev = pivot
    return sign * A[n - 1][n - 1]
