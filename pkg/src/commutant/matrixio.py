"""The matrix file format.

    field: q            (or gf:<p>)
    n: 3
    0 1 0
    0 0 1
    0 0 0

Entries follow the field's scalar syntax: "a/b" or "a" over Q; decimal
integers reduced mod p over GF(p).  Blank lines and '#' comments are
skipped on input; serialization is canonical, one row per line.
"""

from __future__ import annotations

from .errors import ParseError
from .fields import make_field
from .linalg import Matrix


def parse_matrix_text(text: str) -> Matrix:
    lines = [
        ln.strip()
        for ln in text.splitlines()
        if ln.strip() and not ln.lstrip().startswith("#")
    ]
    if len(lines) < 2:
        raise ParseError("matrix file needs a field line, a dimension line, and rows")
    field_line, dim_line = lines[0], lines[1]
    if not field_line.lower().startswith("field:"):
        raise ParseError(f"first line must be 'field: ...', got {field_line!r}")
    field = make_field(field_line.split(":", 1)[1])
    if not dim_line.lower().startswith("n:"):
        raise ParseError(f"second line must be 'n: ...', got {dim_line!r}")
    try:
        n = int(dim_line.split(":", 1)[1].strip())
    except ValueError as exc:
        raise ParseError(f"bad dimension line {dim_line!r}") from exc
    if n < 1:
        raise ParseError("matrix dimension must be at least 1")
    body = lines[2:]
    if len(body) != n:
        raise ParseError(f"expected {n} rows, found {len(body)}")
    rows = []
    for idx, line in enumerate(body):
        entries = line.split()
        if len(entries) != n:
            raise ParseError(f"row {idx + 1} has {len(entries)} entries, expected {n}")
        rows.append([field.parse(e) for e in entries])
    return Matrix(field, rows, validate=False)


def load_matrix(path: str) -> Matrix:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read matrix file {path!r}: {exc}") from exc
    return parse_matrix_text(text)


def matrix_to_text(M: Matrix) -> str:
    F = M.field
    lines = [f"field: {F.spec_string()}", f"n: {M.nrows}"]
    for row in M.rows:
        lines.append(" ".join(F.to_str(x) for x in row))
    return "\n".join(lines) + "\n"
