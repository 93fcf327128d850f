"""Exact-arithmetic profiling of matrix centralizer algebras.

Given a square matrix over Q or GF(p), compute the block decomposition,
Cartan matrix, Cartan determinant, radical and module dimensions, and
global-dimension classification of its centralizer algebra, and verify
every formula against an independent brute-force oracle.
"""

from .cartan import (
    AnalysisReport,
    BlockReport,
    GlobalDimension,
    assemble_report,
    cartan_det,
    cartan_matrix,
    dimension_report,
    full_cartan_matrix,
    global_dimension,
    partition_block,
)
from .errors import (
    CommutantError,
    DimensionMismatch,
    DivisionByZero,
    FieldMismatch,
    InternalError,
    NotAFactor,
    NotIrreducible,
    ParseError,
    PrimalityError,
    UndefinedGcd,
    VerificationFailure,
)
from .factorization import IrreducibleFactor, factor, is_irreducible
from .fields import PrimeField, RationalField, make_field
from .linalg import (
    Matrix,
    SubspaceBasis,
    charpoly,
    det_bareiss,
    det_bareiss_int,
    rank,
    rank_and_nullspace,
)
from .matrixio import load_matrix, matrix_to_text, parse_matrix_text
from .oracle import (
    ModelInstance,
    RadicalCheckReport,
    VerificationReport,
    build_model,
    centralizer_basis,
    idempotent_compression_dim,
    radical_checks,
    radical_subspace,
    sample_instance,
    verify_instance,
)
from .poly import (
    Poly,
    format_poly,
    parse_poly,
    poly_gcd,
    squarefree_decomposition,
)
from .structure import (
    PartitionData,
    PrimaryComponent,
    extract_partition,
    primary_decomposition,
)

__version__ = "0.1.0"

__all__ = [
    "AnalysisReport",
    "BlockReport",
    "CommutantError",
    "DimensionMismatch",
    "DivisionByZero",
    "FieldMismatch",
    "GlobalDimension",
    "InternalError",
    "IrreducibleFactor",
    "Matrix",
    "ModelInstance",
    "NotAFactor",
    "NotIrreducible",
    "ParseError",
    "PartitionData",
    "Poly",
    "PrimalityError",
    "PrimaryComponent",
    "PrimeField",
    "RadicalCheckReport",
    "RationalField",
    "SubspaceBasis",
    "UndefinedGcd",
    "VerificationFailure",
    "VerificationReport",
    "assemble_report",
    "build_model",
    "cartan_det",
    "cartan_matrix",
    "centralizer_basis",
    "charpoly",
    "det_bareiss",
    "det_bareiss_int",
    "dimension_report",
    "extract_partition",
    "factor",
    "format_poly",
    "full_cartan_matrix",
    "global_dimension",
    "idempotent_compression_dim",
    "is_irreducible",
    "load_matrix",
    "make_field",
    "matrix_to_text",
    "parse_matrix_text",
    "parse_poly",
    "partition_block",
    "poly_gcd",
    "primary_decomposition",
    "radical_checks",
    "radical_subspace",
    "rank",
    "rank_and_nullspace",
    "sample_instance",
    "squarefree_decomposition",
    "verify_instance",
]
