"""
Hinge Models
"""
from dataclasses import dataclass, field
from typing import Optional, Tuple

from app.models.exterior import ExteriorOperator
from app.models.relation import LinearRelation
from app.utils.exceptions import DimensionMismatchError, ParseError


@dataclass(frozen=True)
class OrbitLabel:
    """Composition alpha of n labelling a GL x GL orbit of hinges"""
    alpha: Tuple[int, ...]

    def __post_init__(self):
        if not self.alpha or any(not isinstance(a, int) or a < 1 for a in self.alpha):
            raise ParseError(f"orbit label must be a nonempty list of positive integers: {self.alpha}")

    @property
    def n(self) -> int:
        return sum(self.alpha)

    @property
    def length(self) -> int:
        return len(self.alpha)

    def partial_sums(self) -> Tuple[int, ...]:
        """u_1 = 0, u_2 = alpha_1, ..., u_(k+1) = n"""
        sums = [0]
        for a in self.alpha:
            sums.append(sums[-1] + a)
        return tuple(sums)

    def to_dict(self):
        return list(self.alpha)

    def __str__(self):
        return "(" + ",".join(str(a) for a in self.alpha) + ")"


@dataclass(frozen=True)
class Hinge:
    """A validated chain (P_1, ..., P_k) of relations V => V"""
    n: int
    terms: Tuple[LinearRelation, ...]

    @property
    def length(self) -> int:
        return len(self.terms)

    def label(self) -> OrbitLabel:
        return OrbitLabel(tuple(p.rank for p in self.terms))

    def to_dict(self):
        return {'n': self.n, 'terms': [p.to_dict() for p in self.terms]}

    @classmethod
    def parse_terms(cls, data) -> Tuple[int, Tuple[LinearRelation, ...]]:
        """Parse the hinge JSON without validating the axioms."""
        if not isinstance(data, dict) or 'terms' not in data:
            raise ParseError("hinge must be an object with a terms list")
        terms = tuple(LinearRelation.from_dict(t) for t in data['terms'])
        n = data.get('n', terms[0].dim_v if terms else None)
        if not isinstance(n, int):
            raise ParseError("hinge needs an integer n")
        for t in terms:
            if t.dim_v != n or t.dim_w != n:
                raise DimensionMismatchError(f"hinge term is not a relation Q^{n} => Q^{n}")
        return n, terms


@dataclass(frozen=True)
class WeakHinge:
    """Chain (R_1, ..., R_s) with Ker R_j >= Dom R_(j+1) and Im R_j <= Indef R_(j+1)"""
    n: int
    terms: Tuple[LinearRelation, ...]

    @property
    def length(self) -> int:
        return len(self.terms)

    def to_dict(self):
        return {'n': self.n, 'terms': [p.to_dict() for p in self.terms]}


@dataclass(frozen=True)
class CompletedHinge:
    """(Q_0, P_1, Q_1, ..., P_k, Q_k) with rank 0 relations Q_j = Ker P_j (+) Im P_j"""
    n: int
    hinge_terms: Tuple[LinearRelation, ...]
    rank_zero_terms: Tuple[LinearRelation, ...]

    def interleaved(self) -> Tuple[LinearRelation, ...]:
        out = [self.rank_zero_terms[0]]
        for p, q in zip(self.hinge_terms, self.rank_zero_terms[1:]):
            out.extend((p, q))
        return tuple(out)

    def to_dict(self):
        return {'n': self.n, 'terms': [p.to_dict() for p in self.interleaved()]}


@dataclass(frozen=True)
class GluedFamily:
    """
    Operators A_0..A_n, A_m acting on Lambda^m V.

    `base` is the weak hinge the family lies over when it is known.
    """
    n: int
    blocks: Tuple[ExteriorOperator, ...]
    base: Optional[WeakHinge] = field(default=None, compare=False)

    def __post_init__(self):
        if len(self.blocks) != self.n + 1:
            raise DimensionMismatchError(f"glued family needs {self.n + 1} blocks, got {len(self.blocks)}")
        for m, b in enumerate(self.blocks):
            if b.k_in != m or b.k_out != m or b.dim_in != self.n or b.dim_out != self.n:
                raise DimensionMismatchError(f"block {m} of a glued family must act on Lambda^{m}")

    def block(self, m: int) -> ExteriorOperator:
        return self.blocks[m]

    def is_nondegenerate(self) -> bool:
        return all(not b.is_zero() for b in self.blocks)

    def to_dict(self):
        return {'n': self.n, 'blocks': [b.to_dict() for b in self.blocks]}

    @classmethod
    def from_dict(cls, data) -> 'GluedFamily':
        if not isinstance(data, dict) or 'blocks' not in data:
            raise ParseError("glued family must be an object with a blocks list")
        n = data.get('n', len(data['blocks']) - 1)
        blocks = tuple(ExteriorOperator.from_dict(b, n) for b in data['blocks'])
        return cls(n, blocks)
