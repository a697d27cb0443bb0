"""
Polynomial Representation Models
"""
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

from app.models.matrix import RationalMatrix
from app.utils.exceptions import ParseError

TensorKey = Tuple[int, ...]
SparseVector = Dict[TensorKey, object]


@dataclass(frozen=True)
class Signature:
    """nu_1 >= nu_2 >= ... >= nu_n >= 0"""
    values: Tuple[int, ...]

    def __post_init__(self):
        if not self.values:
            raise ParseError("signature must be nonempty")
        if any(isinstance(v, bool) or not isinstance(v, int) or v < 0 for v in self.values):
            raise ParseError(f"signature entries must be non-negative integers: {self.values}")
        if any(a < b for a, b in zip(self.values, self.values[1:])):
            raise ParseError(f"signature must be non-increasing: {self.values}")

    @property
    def n(self) -> int:
        return len(self.values)

    def padded(self, n: int) -> 'Signature':
        if self.n > n:
            raise ParseError(f"signature {self} is longer than n = {n}")
        return Signature(self.values + (0,) * (n - self.n))

    def factor_degrees(self) -> Tuple[int, ...]:
        """Exterior degree of every tensor factor: j repeated nu_j - nu_(j+1) times."""
        values = self.values + (0,)
        degrees: List[int] = []
        for j in range(1, self.n + 1):
            degrees.extend([j] * (values[j - 1] - values[j]))
        return tuple(degrees)

    def weight(self, m: Sequence[int]) -> int:
        """sum m_j nu_j"""
        return sum(a * b for a, b in zip(m, self.values))

    def to_dict(self):
        return list(self.values)

    def __str__(self):
        return ",".join(str(v) for v in self.values)


@dataclass(frozen=True, eq=False)
class RepSpace:
    """
    H_nu inside the tensor product of exterior powers.

    Rows are sparse vectors keyed by per-factor wedge indices, in reduced
    row echelon form; pivots[i] is the leading key of rows[i].
    """
    signature: Signature
    n: int
    factors: Tuple[int, ...]
    ambient_dim: int
    rows: Tuple[SparseVector, ...]
    pivots: Tuple[TensorKey, ...]
    highest_key: TensorKey = field(default=())

    @property
    def dim(self) -> int:
        return len(self.rows)

    def highest_vector(self) -> SparseVector:
        return {self.highest_key: Fraction(1)}

    def to_dict(self):
        return {
            'signature': self.signature.to_dict(),
            'n': self.n,
            'factors': list(self.factors),
            'ambient_dim': self.ambient_dim,
            'dim': self.dim,
        }


@dataclass(frozen=True)
class RepOperator:
    """Operator on H_nu in the stored basis"""
    signature: Signature
    matrix: RationalMatrix

    @property
    def dim(self) -> int:
        return self.matrix.rows

    def is_zero(self) -> bool:
        return self.matrix.is_zero()

    def to_dict(self):
        return {'signature': self.signature.to_dict(), 'dim': self.dim, 'matrix': self.matrix.to_dict()}


@dataclass(frozen=True)
class CompositeRep:
    """zeta = rho_nu(1) (+) ... (+) rho_nu(s)"""
    spaces: Tuple[RepSpace, ...]

    @property
    def signatures(self) -> Tuple[Signature, ...]:
        return tuple(s.signature for s in self.spaces)


@dataclass(frozen=True)
class BlockOperator:
    """Block-diagonal operator over a composite representation"""
    blocks: Tuple[RepOperator, ...]

    def is_zero(self) -> bool:
        return all(b.is_zero() for b in self.blocks)

    def to_dict(self):
        return {'blocks': [b.to_dict() for b in self.blocks]}
