"""Cartan data of centralizer algebras: per-block Cartan matrix, its
determinant, global dimension, and all module dimension formulas.

Everything here is a closed form in the block partition and the extension
degree d of the irreducible factor; the brute-force counterparts live in
the verification module.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass

from .errors import InternalError
from .factorization import IrreducibleFactor
from .fields import Field
from .linalg import Matrix, charpoly, det_bareiss_int
from .poly import Poly
from .structure import PartitionData, PrimaryComponent, primary_decomposition


@dataclass(frozen=True)
class GlobalDimension:
    """Finite(g) or Infinite; ordered so reports can take a maximum."""

    value: int | None  # None encodes infinite

    @property
    def is_finite(self) -> bool:
        return self.value is not None

    def text(self) -> str:
        return f"finite:{self.value}" if self.is_finite else "infinite"

    @staticmethod
    def combine(values: "list[GlobalDimension]") -> "GlobalDimension":
        """Global dimension of a direct sum: infinite dominates, else max."""
        if any(not v.is_finite for v in values):
            return GlobalDimension(None)
        return GlobalDimension(max(v.value for v in values))


def cartan_matrix(partition: PartitionData) -> list[list[int]]:
    """The r x r matrix with entries min(part_i, part_j)."""
    parts = partition.parts
    return [[min(a, b) for b in parts] for a in parts]


def cartan_det(partition: PartitionData) -> int:
    """Telescoping closed form: part_1 * (part_2 - part_1) * ... ; always >= 1."""
    parts = partition.parts
    det = parts[0]
    for a, b in zip(parts, parts[1:]):
        det *= b - a
    return det


def cartan_det_checked(partition: PartitionData) -> int:
    """Closed form cross-checked against an independent Bareiss determinant."""
    det = cartan_det(partition)
    oracle = det_bareiss_int(cartan_matrix(partition))
    if det != oracle:
        raise InternalError(
            f"Cartan determinant mismatch: formula {det}, elimination {oracle}"
        )
    return det


def global_dimension(partition: PartitionData) -> GlobalDimension:
    """Finite exactly when the distinct parts are 1, 2, ..., r; then the
    value is 1 for r = 1 and 2 otherwise.  Multiplicities are irrelevant."""
    parts = partition.parts
    if parts == tuple(range(1, len(parts) + 1)):
        return GlobalDimension(1 if len(parts) == 1 else 2)
    return GlobalDimension(None)


@dataclass(frozen=True)
class BlockReport:
    """Cartan and dimension data for the block of one irreducible factor.

    factor is None in the direct partition mode of the CLI, where only the
    extension degree is known.
    """

    factor: IrreducibleFactor | None
    partition: PartitionData
    ext_degree: int
    cartan: tuple[tuple[int, ...], ...]
    cartan_det: int
    global_dimension: GlobalDimension
    semisimple: bool
    dim_algebra_over_E: int
    dim_algebra_over_K: int
    dim_radical_over_K: int
    simple_dims_over_K: tuple[int, ...]
    projective_dims_over_K: tuple[int, ...]
    injective_dims_over_K: tuple[int, ...]
    num_simples: int


@dataclass(frozen=True)
class AnalysisReport:
    """Whole-matrix aggregate: one block per irreducible factor."""

    input_checksum: str
    field: Field
    n: int
    charpoly: Poly
    blocks: tuple[BlockReport, ...]
    total_num_simples_l: int
    total_cartan_det: int
    overall_global_dimension: GlobalDimension


def partition_block(
    partition: PartitionData, ext_degree: int, factor: IrreducibleFactor | None = None
) -> BlockReport:
    """All closed-form invariants of one block.

    Dimensions over the base field K are d times the corresponding dimension
    over the extension field E of degree d.  Projective and injective
    dimension lists coincide because the Cartan matrix is symmetric.
    """
    if ext_degree < 1:
        raise ValueError("extension degree must be at least 1")
    d = ext_degree
    parts, mults = partition.parts, partition.mults
    cmatrix = cartan_matrix(partition)
    dim_e = sum(
        cmatrix[i][j] * mults[i] * mults[j]
        for i in range(len(parts))
        for j in range(len(parts))
    )
    semisimple_dim_e = sum(m * m for m in mults)
    projectives = tuple(
        d * sum(cmatrix[i][j] * mults[j] for j in range(len(parts)))
        for i in range(len(parts))
    )
    return BlockReport(
        factor=factor,
        partition=partition,
        ext_degree=d,
        cartan=tuple(tuple(row) for row in cmatrix),
        cartan_det=cartan_det_checked(partition),
        global_dimension=global_dimension(partition),
        semisimple=dim_e == semisimple_dim_e,
        dim_algebra_over_E=dim_e,
        dim_algebra_over_K=d * dim_e,
        dim_radical_over_K=d * (dim_e - semisimple_dim_e),
        simple_dims_over_K=tuple(d * m for m in mults),
        projective_dims_over_K=projectives,
        injective_dims_over_K=projectives,
        num_simples=len(parts),
    )


def dimension_report(comp: PrimaryComponent) -> BlockReport:
    """Block data of a primary component of a concrete matrix."""
    return partition_block(comp.partition, comp.factor.degree, comp.factor)


def matrix_checksum(T: Matrix) -> str:
    """SHA-256 over a canonical serialization, so equal matrices over the
    same field always agree regardless of input formatting."""
    F = T.field
    lines = [F.spec_string(), str(T.nrows)]
    for row in T.rows:
        lines.append(" ".join(F.to_str(x) for x in row))
    return hashlib.sha256("\n".join(lines).encode("utf-8")).hexdigest()


def assemble_report(T: Matrix, seed: int = 0) -> AnalysisReport:
    """Full analysis: factor the characteristic polynomial, extract the
    partition of every primary component, and aggregate the block data."""
    components = primary_decomposition(T, seed=seed)
    blocks = tuple(dimension_report(c) for c in components)
    total_det = 1
    for b in blocks:
        total_det *= b.cartan_det
    return AnalysisReport(
        input_checksum=matrix_checksum(T),
        field=T.field,
        n=T.nrows,
        charpoly=charpoly(T),
        blocks=blocks,
        total_num_simples_l=sum(b.num_simples for b in blocks),
        total_cartan_det=total_det,
        overall_global_dimension=GlobalDimension.combine(
            [b.global_dimension for b in blocks]
        ),
    )


def full_cartan_matrix(report: AnalysisReport) -> list[list[int]]:
    """Block-diagonal l x l Cartan matrix across all blocks; redundant with
    the per-block data, so only emitted on request."""
    l = report.total_num_simples_l
    out = [[0] * l for _ in range(l)]
    off = 0
    for b in report.blocks:
        r = b.num_simples
        for i in range(r):
            for j in range(r):
                out[off + i][off + j] = b.cartan[i][j]
        off += r
    return out
