"""Brute-force verification of every closed-form invariant.

The oracle never trusts the formulas it checks: centralizers come from
solving the Sylvester system T*B = B*T directly, Cartan entries from
explicit idempotent compressions inside the solved centralizer, and the
radical from its defining linear conditions followed by ideal, nilpotency
and quotient-size certificates.  Models are block-diagonal companion
matrices of p^part, which make the coordinate projections onto blocks
honest members of the centralizer.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field as dataclass_field
from fractions import Fraction
from functools import cached_property

from .errors import InternalError, NotIrreducible, VerificationFailure
from .factorization import IrreducibleFactor, is_irreducible
from .fields import Field, PrimeField, RationalField
from .linalg import (
    Matrix,
    SubspaceBasis,
    charpoly,
    left_nullspace,
    rank_and_nullspace,
)
from .poly import Poly, format_poly
from .structure import PartitionData, extract_partition


def centralizer_basis(T: Matrix) -> SubspaceBasis:
    """Canonical basis of {B : T*B = B*T}, found by solving the homogeneous
    n^2-variable Sylvester system.  Matrices are flattened row-major."""
    if not T.is_square:
        raise ValueError("centralizer needs a square matrix")
    F = T.field
    n = T.nrows
    rows = []
    for i in range(n):
        ti = T.rows[i]
        for j in range(n):
            row = [F.zero] * (n * n)
            for k in range(n):
                if ti[k]:
                    row[k * n + j] = F.add(row[k * n + j], ti[k])
            for l in range(n):
                tlj = T.rows[l][j]
                if tlj:
                    row[i * n + l] = F.sub(row[i * n + l], tlj)
            rows.append(row)
    system = Matrix._new(F, rows)
    _, kernel = rank_and_nullspace(system)
    for vec in kernel.vectors:
        B = Matrix.from_flat(F, vec, n, n)
        if not B.commutes_with(T):
            raise InternalError("kernel vector does not commute with T")
    if not kernel.contains(Matrix.identity(F, n).flatten()):
        raise InternalError("identity matrix missing from the centralizer span")
    return kernel


@dataclass(frozen=True)
class BlockSlot:
    """One companion block in the model: which part, which copy, where."""

    part_index: int  # 0-based index into partition.parts
    copy_index: int  # 0-based copy number within the part
    offset: int
    size: int


@dataclass
class ModelInstance:
    """Block-diagonal model matrix realizing a factor and partition."""

    factor: IrreducibleFactor
    partition: PartitionData
    model_matrix: Matrix
    block_offsets: tuple[BlockSlot, ...]

    @property
    def dimension(self) -> int:
        return self.model_matrix.nrows

    @cached_property
    def centralizer(self) -> SubspaceBasis:
        return centralizer_basis(self.model_matrix)

    def part_range(self, part_index: int) -> tuple[int, int]:
        """Row range covering every copy of the given part (0-based index)."""
        slots = [s for s in self.block_offsets if s.part_index == part_index]
        return slots[0].offset, slots[-1].offset + slots[-1].size

    def first_copy_slot(self, part_index: int) -> BlockSlot:
        for s in self.block_offsets:
            if s.part_index == part_index and s.copy_index == 0:
                return s
        raise IndexError(f"part index {part_index} out of range")


def build_model(factor: IrreducibleFactor, partition: PartitionData) -> ModelInstance:
    """Companion-block model: for each part (ascending) a companion matrix of
    p^part, repeated once per multiplicity.  Construction re-verifies the
    characteristic polynomial and the partition round trip."""
    p = factor.poly
    if not is_irreducible(p):
        raise NotIrreducible(f"model factor must be irreducible, got {p!r}")
    d = factor.degree
    blocks = []
    slots = []
    offset = 0
    for part_index, (part, mult) in enumerate(zip(partition.parts, partition.mults)):
        power = p**part
        for copy in range(mult):
            blocks.append(Matrix.companion(power))
            size = part * d
            slots.append(BlockSlot(part_index, copy, offset, size))
            offset += size
    model = Matrix.block_diagonal(blocks)
    expected_charpoly = p**partition.total
    if charpoly(model) != expected_charpoly:
        raise InternalError("model characteristic polynomial mismatch")
    probe = IrreducibleFactor(p, d, partition.total)
    roundtrip = extract_partition(model, probe)
    if roundtrip.partition != partition:
        raise InternalError(
            f"model round trip produced {roundtrip.partition}, wanted {partition}"
        )
    return ModelInstance(factor, partition, model, tuple(slots))


def idempotent_compression_dim(model: ModelInstance, i: int, j: int) -> int:
    """Dimension over the base field of e_j1 * A * e_i1, where e_i1 projects
    onto the first companion block of part i (1-based part indices).

    The contract under test is that this equals d * min(part_i, part_j); the
    value is measured, never assumed.
    """
    r = model.partition.num_parts
    if not (1 <= i <= r and 1 <= j <= r):
        raise IndexError(f"part indices must be in 1..{r}, got ({i}, {j})")
    si = model.first_copy_slot(i - 1)
    sj = model.first_copy_slot(j - 1)
    n = model.dimension
    compressed = []
    for vec in model.centralizer.vectors:
        block = []
        for row in range(sj.offset, sj.offset + sj.size):
            base = row * n
            block.extend(vec[base + si.offset : base + si.offset + si.size])
        compressed.append(block)
    basis = SubspaceBasis.from_spanning(
        model.model_matrix.field, compressed, sj.size * si.size
    )
    return basis.dim


def _matrices_from_basis(field: Field, basis: SubspaceBasis, n: int) -> list[Matrix]:
    return [Matrix.from_flat(field, v, n, n) for v in basis.vectors]


def radical_subspace(model: ModelInstance) -> SubspaceBasis:
    """Candidate radical: centralizer elements whose diagonal part-blocks map
    each part component into the image of p(model) on that component."""
    F = model.model_matrix.field
    n = model.dimension
    pm = model.factor.poly.eval_at_matrix(model.model_matrix)
    cokernels = []
    for part_index in range(model.partition.num_parts):
        lo, hi = model.part_range(part_index)
        block = pm.submatrix(lo, hi, lo, hi)
        cokernels.append((lo, hi, left_nullspace(block)))
    amb_basis = model.centralizer
    if amb_basis.dim == 0:
        raise InternalError("centralizer cannot be zero-dimensional")
    constraint_rows: list[list] = []
    # one constraint row per (part, cokernel functional, block column);
    # columns of the system are coefficients on the centralizer basis
    for lo, hi, coker in cokernels:
        width = hi - lo
        for func in coker.vectors:
            for col in range(width):
                row = []
                for vec in amb_basis.vectors:
                    s = F.zero
                    for v in range(width):
                        fv = func[v]
                        if fv:
                            entry = vec[(lo + v) * n + (lo + col)]
                            if entry:
                                s = F.add(s, F.mul(fv, entry))
                    row.append(s)
                constraint_rows.append(row)
    if not constraint_rows:
        return SubspaceBasis.from_spanning(F, list(amb_basis.vectors), n * n)
    system = Matrix._new(F, constraint_rows)
    _, coeff_kernel = rank_and_nullspace(system)
    members = []
    for coeffs in coeff_kernel.vectors:
        acc = [F.zero] * (n * n)
        for c, vec in zip(coeffs, amb_basis.vectors):
            if c:
                acc = F.row_addmul(acc, vec, c)
        members.append(acc)
    return SubspaceBasis.from_spanning(F, members, n * n)


@dataclass(frozen=True)
class RadicalCheckReport:
    """Outcome of the three structural certificates for the radical."""

    dim_algebra: int
    dim_radical: int
    quotient_dim: int
    expected_quotient_dim: int
    nilpotency_exponent_bound: int
    ideal_closure_ok: bool
    nilpotency_ok: bool
    quotient_dim_ok: bool
    sampled_products: int


def radical_checks(
    model: ModelInstance, *, product_samples: int = 500, seed: int = 0
) -> RadicalCheckReport:
    """Certify the radical candidate: two-sided ideal closure on all basis
    products, nilpotency within exponent largest_part * num_parts (shown
    exactly by the vanishing of iterated product spans, plus randomized
    direct products), and the semisimple quotient dimension."""
    F = model.model_matrix.field
    n = model.dimension
    d = model.factor.degree
    partition = model.partition
    algebra = model.centralizer
    radical = radical_subspace(model)
    alg_mats = _matrices_from_basis(F, algebra, n)
    rad_mats = _matrices_from_basis(F, radical, n)

    closure_ok = True
    for a in alg_mats:
        for r in rad_mats:
            if not radical.contains(a.mul(r).flatten()):
                closure_ok = False
                break
            if not radical.contains(r.mul(a).flatten()):
                closure_ok = False
                break
        if not closure_ok:
            break
    if not closure_ok:
        raise VerificationFailure("radical ideal closure failed (A*R or R*A)")

    bound = partition.largest_part * partition.num_parts
    # span of all products of exactly `length` radical basis elements; R is
    # nilpotent within the bound iff this hits zero by length == bound
    span_mats = rad_mats
    length = 1
    while span_mats and length < bound:
        products = [r.mul(s).flatten() for r in rad_mats for s in span_mats]
        span = SubspaceBasis.from_spanning(F, products, n * n)
        span_mats = _matrices_from_basis(F, span, n)
        length += 1
    nil_ok = not span_mats
    rng = random.Random(seed)
    sampled = 0
    if rad_mats:
        for _ in range(product_samples):
            acc = rad_mats[rng.randrange(len(rad_mats))]
            for _ in range(bound - 1):
                if acc.is_zero():
                    break
                acc = acc.mul(rad_mats[rng.randrange(len(rad_mats))])
            sampled += 1
            if not acc.is_zero():
                nil_ok = False
                break
    if not nil_ok:
        raise VerificationFailure(
            f"radical nilpotency failed within exponent {bound}"
        )

    expected_quotient = d * sum(m * m for m in partition.mults)
    quotient = algebra.dim - radical.dim
    quotient_ok = quotient == expected_quotient
    if not quotient_ok:
        raise VerificationFailure(
            f"radical quotient dimension {quotient}, expected {expected_quotient}"
        )
    return RadicalCheckReport(
        dim_algebra=algebra.dim,
        dim_radical=radical.dim,
        quotient_dim=quotient,
        expected_quotient_dim=expected_quotient,
        nilpotency_exponent_bound=bound,
        ideal_closure_ok=closure_ok,
        nilpotency_ok=nil_ok,
        quotient_dim_ok=quotient_ok,
        sampled_products=sampled,
    )


@dataclass
class VerificationReport:
    """Pass/fail per structural check for one (factor, partition) instance."""

    field_spec: str
    factor_text: str
    partition: PartitionData
    model_dimension: int
    centralizer_dim: int
    expected_centralizer_dim: int
    checks: dict[str, bool] = dataclass_field(default_factory=dict)
    failure_messages: tuple[str, ...] = ()

    @property
    def passed(self) -> bool:
        return all(self.checks.values())


def expected_centralizer_dimension(d: int, partition: PartitionData) -> int:
    parts, mults = partition.parts, partition.mults
    return d * sum(
        min(parts[i], parts[j]) * mults[i] * mults[j]
        for i in range(len(parts))
        for j in range(len(parts))
    )


def verify_instance(
    factor: IrreducibleFactor,
    partition: PartitionData,
    *,
    product_samples: int = 500,
    seed: int = 0,
) -> VerificationReport:
    """Run every oracle check for one instance; never raises on a failed
    check, recording outcomes instead (malformed inputs still raise)."""
    model = build_model(factor, partition)
    F = model.model_matrix.field
    d = factor.degree
    expected_dim = expected_centralizer_dimension(d, partition)
    report = VerificationReport(
        field_spec=F.spec_string(),
        factor_text=format_poly(factor.poly),
        partition=partition,
        model_dimension=model.dimension,
        centralizer_dim=model.centralizer.dim,
        expected_centralizer_dim=expected_dim,
    )
    failures: list[str] = []

    report.checks["centralizer_dimension"] = model.centralizer.dim == expected_dim
    if not report.checks["centralizer_dimension"]:
        failures.append(
            f"centralizer dimension {model.centralizer.dim} != {expected_dim}"
        )

    parts = partition.parts
    compressions_ok = True
    for i in range(1, partition.num_parts + 1):
        for j in range(1, partition.num_parts + 1):
            got = idempotent_compression_dim(model, i, j)
            want = d * min(parts[i - 1], parts[j - 1])
            if got != want:
                compressions_ok = False
                failures.append(
                    f"compression ({i},{j}) has dimension {got}, expected {want}"
                )
    report.checks["cartan_compressions"] = compressions_ok

    try:
        radical_checks(model, product_samples=product_samples, seed=seed)
        report.checks["radical_structure"] = True
    except VerificationFailure as exc:
        report.checks["radical_structure"] = False
        failures.append(str(exc))

    probe = IrreducibleFactor(factor.poly, factor.degree, partition.total)
    roundtrip = extract_partition(model.model_matrix, probe)
    report.checks["partition_round_trip"] = roundtrip.partition == partition
    if not report.checks["partition_round_trip"]:
        failures.append("extract_partition did not reproduce the partition")

    report.failure_messages = tuple(failures)
    return report


# -- random instance sampling (drives the CLI verify batch) ------------------


def random_irreducible(field: Field, degree: int, rng: random.Random) -> Poly:
    """Uniformly retried random monic irreducible of the given degree."""
    while True:
        if isinstance(field, PrimeField):
            coeffs = [rng.randrange(field.p) for _ in range(degree)] + [field.one]
        else:
            coeffs = [Fraction(rng.randint(-4, 4)) for _ in range(degree)] + [
                field.one
            ]
        cand = Poly(field, coeffs, validate=False)
        if is_irreducible(cand):
            return cand


def random_partition(total: int, rng: random.Random) -> PartitionData:
    remaining = total
    sizes: list[int] = []
    while remaining:
        k = rng.randint(1, remaining)
        sizes.append(k)
        remaining -= k
    counts: dict[int, int] = {}
    for k in sizes:
        counts[k] = counts.get(k, 0) + 1
    parts = tuple(sorted(counts))
    return PartitionData(parts, tuple(counts[k] for k in parts))


def sample_instance(
    field: Field, rng: random.Random, max_dim: int, max_ext_degree: int = 3
) -> tuple[IrreducibleFactor, PartitionData]:
    """Random (irreducible factor, partition) with model dimension <= max_dim."""
    if max_dim < 1:
        raise ValueError("max_dim must be at least 1")
    d = rng.randint(1, max(1, min(max_ext_degree, max_dim)))
    p = random_irreducible(field, d, rng)
    partition = random_partition(rng.randint(1, max_dim // d), rng)
    return IrreducibleFactor(p, d, partition.total), partition
