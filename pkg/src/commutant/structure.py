"""Reduction to primary components.

For each irreducible factor p of the characteristic polynomial, the sizes of
the generalized Jordan blocks form a partition.  It is read off from the
kernel dimensions of p(T)^k by second differences, which avoids computing
any canonical form or change of basis and works uniformly over Q and GF(p).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InternalError, NotAFactor
from .factorization import IrreducibleFactor, factor
from .linalg import Matrix, charpoly, rank_and_nullspace


@dataclass(frozen=True)
class PartitionData:
    """Distinct block sizes with multiplicities: parts strictly increasing."""

    parts: tuple[int, ...]
    mults: tuple[int, ...]

    def __post_init__(self):
        if not self.parts or len(self.parts) != len(self.mults):
            raise ValueError("partition needs matching nonempty parts and mults")
        if any(p <= 0 for p in self.parts) or any(m <= 0 for m in self.mults):
            raise ValueError("parts and multiplicities must be positive")
        if any(a >= b for a, b in zip(self.parts, self.parts[1:])):
            raise ValueError("parts must be strictly increasing")

    @property
    def num_parts(self) -> int:
        return len(self.parts)

    @property
    def total(self) -> int:
        """Sum of all block sizes with multiplicity."""
        return sum(p * m for p, m in zip(self.parts, self.mults))

    @property
    def largest_part(self) -> int:
        return self.parts[-1]

    def text(self) -> str:
        return ",".join(
            f"{p}^{m}" if m > 1 else str(p) for p, m in zip(self.parts, self.mults)
        )


@dataclass(frozen=True)
class PrimaryComponent:
    """One irreducible factor with its block partition and measured nullities.

    nullity_sequence holds dim ker p(T)^k over the base field for k = 0, 1,
    ..., recorded until it stabilizes; entries are divisible by deg(p) and
    the stabilized value is deg(p) * multiplicity.
    """

    factor: IrreducibleFactor
    partition: PartitionData
    nullity_sequence: tuple[int, ...]

    def __post_init__(self):
        if self.partition.total != self.factor.multiplicity:
            raise InternalError(
                "partition size disagrees with the factor multiplicity: "
                f"{self.partition.total} vs {self.factor.multiplicity}"
            )

    @property
    def dimension_over_base(self) -> int:
        """Dimension of the primary invariant subspace over the base field."""
        return self.factor.degree * self.partition.total


def extract_partition(T: Matrix, p: IrreducibleFactor) -> PrimaryComponent:
    """Block-size partition of the p-primary component of T.

    With n_k = nullity(p(T)^k) / deg(p), the number of blocks of size k is
    2*n_k - n_{k-1} - n_{k+1}.  The sequence is computed until it stabilizes,
    which happens at k <= multiplicity.
    """
    if not T.is_square:
        raise ValueError("partition extraction needs a square matrix")
    d = p.degree
    pt = p.poly.eval_at_matrix(T)
    raw = [0]
    power = pt
    while True:
        _, kernel = rank_and_nullspace(power)
        nullity = kernel.dim
        if nullity == raw[-1]:
            raw.append(nullity)
            break
        raw.append(nullity)
        power = power.mul(pt)
    if raw[1] == 0:
        raise NotAFactor(
            "polynomial does not divide the characteristic polynomial "
            f"(p(T) is invertible for p = {p.poly!r})"
        )
    reduced = []
    for nullity in raw:
        q, r = divmod(nullity, d)
        if r:
            raise InternalError(
                f"kernel dimension {nullity} is not divisible by deg(p) = {d}"
            )
        reduced.append(q)
    parts, mults = [], []
    for k in range(1, len(reduced) - 1):
        count = 2 * reduced[k] - reduced[k - 1] - reduced[k + 1]
        if count < 0:
            raise InternalError("nullity sequence is not concave")
        if count > 0:
            parts.append(k)
            mults.append(count)
    partition = PartitionData(tuple(parts), tuple(mults))
    if p.multiplicity != partition.total:
        raise InternalError(
            f"extracted partition sums to {partition.total}, but the factor "
            f"was declared with multiplicity {p.multiplicity}"
        )
    return PrimaryComponent(p, partition, tuple(raw))


def primary_decomposition(T: Matrix, seed: int = 0) -> list[PrimaryComponent]:
    """One PrimaryComponent per irreducible factor of charpoly(T), in the
    deterministic factor order."""
    cp = charpoly(T)
    components = [extract_partition(T, fac) for fac in factor(cp, seed=seed)]
    covered = sum(c.dimension_over_base for c in components)
    if covered != T.nrows:
        raise InternalError(
            f"primary components cover dimension {covered}, expected {T.nrows}"
        )
    return components
