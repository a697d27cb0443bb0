"""
Exterior Power Models
"""
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Dict, Tuple

from app.models.matrix import RationalMatrix
from app.utils.exceptions import DimensionMismatchError, ParseError

WedgeBasisIndex = Tuple[int, ...]


@lru_cache(maxsize=None)
def wedge_basis(n: int, k: int) -> Tuple[WedgeBasisIndex, ...]:
    """Index sets of Lambda^k(Q^n) in lexicographic order (0-based)."""
    return tuple(combinations(range(n), k))


@lru_cache(maxsize=None)
def wedge_position(n: int, k: int) -> Dict[WedgeBasisIndex, int]:
    return {index: i for i, index in enumerate(wedge_basis(n, k))}


def format_wedge(index: WedgeBasisIndex) -> str:
    if not index:
        return "1"
    return "^".join(f"e{i + 1}" for i in index)


@dataclass(frozen=True)
class ExteriorOperator:
    """Operator Lambda^k_in(Q^dim_in) -> Lambda^k_out(Q^dim_out)"""
    k_in: int
    k_out: int
    dim_in: int
    dim_out: int
    matrix: RationalMatrix

    def __post_init__(self):
        if self.matrix.shape != (comb(self.dim_out, self.k_out), comb(self.dim_in, self.k_in)):
            raise DimensionMismatchError(
                f"exterior operator {self.k_in}->{self.k_out} has matrix shape {self.matrix.shape}"
            )

    @classmethod
    def zero(cls, k_in: int, k_out: int, dim_in: int, dim_out: int) -> 'ExteriorOperator':
        return cls(k_in, k_out, dim_in, dim_out,
                   RationalMatrix.zeros(comb(dim_out, k_out), comb(dim_in, k_in)))

    def is_zero(self) -> bool:
        return self.matrix.is_zero()

    def __matmul__(self, other: 'ExteriorOperator') -> 'ExteriorOperator':
        if other.k_out != self.k_in or other.dim_out != self.dim_in:
            raise DimensionMismatchError(
                f"cannot compose degree {self.k_in}->{self.k_out} after {other.k_in}->{other.k_out}"
            )
        return ExteriorOperator(other.k_in, self.k_out, other.dim_in, self.dim_out,
                                self.matrix @ other.matrix)

    def scale(self, c) -> 'ExteriorOperator':
        return ExteriorOperator(self.k_in, self.k_out, self.dim_in, self.dim_out, self.matrix.scale(c))

    def to_dict(self):
        return {'k_in': self.k_in, 'k_out': self.k_out, 'matrix': self.matrix.to_dict()}

    @classmethod
    def from_dict(cls, data, dim_in: int, dim_out: int = None) -> 'ExteriorOperator':
        if not isinstance(data, dict) or not {'k_in', 'k_out', 'matrix'} <= set(data):
            raise ParseError("exterior operator must have k_in, k_out and matrix")
        dim_out = dim_in if dim_out is None else dim_out
        k_in, k_out = data['k_in'], data['k_out']
        matrix = RationalMatrix.from_dict(data['matrix'])
        return cls(k_in, k_out, dim_in, dim_out, matrix)


@dataclass(frozen=True)
class ExteriorFamily:
    """
    The operator lambda(S) on the full exterior algebra, one block per input degree.

    blocks[k] maps Lambda^k V to Lambda^(k + shift) W; degrees whose target
    falls outside [0, dim W] are omitted and act by zero.
    """
    dim_v: int
    dim_w: int
    shift: int
    blocks: Tuple[ExteriorOperator, ...]

    def block(self, k: int) -> ExteriorOperator:
        for b in self.blocks:
            if b.k_in == k:
                return b
        target = k + self.shift
        if 0 <= target <= self.dim_w:
            return ExteriorOperator.zero(k, target, self.dim_v, self.dim_w)
        raise DimensionMismatchError(f"degree {k} has no target degree in Lambda(Q^{self.dim_w})")

    def is_zero(self) -> bool:
        return all(b.is_zero() for b in self.blocks)

    def to_dict(self):
        return {'shift': self.shift, 'blocks': [b.to_dict() for b in self.blocks]}
