"""
Linear Relation Models
"""
from dataclasses import dataclass
from functools import cached_property
from typing import Tuple, Union

from app.models.matrix import RationalMatrix, Subspace, Vector, format_rational
from app.services.linalg_service import LinAlgService
from app.utils.exceptions import DimensionMismatchError, ParseError


@dataclass(frozen=True)
class LinearRelation:
    """
    A subspace P of V (+) W.

    The first dim_v coordinates of every basis row belong to V, the last
    dim_w to W. Attribute subspaces are computed once on first access.
    """
    dim_v: int
    dim_w: int
    space: Subspace

    def __post_init__(self):
        if self.space.ambient_dim != self.dim_v + self.dim_w:
            raise DimensionMismatchError(
                f"relation space lives in Q^{self.space.ambient_dim}, expected Q^{self.dim_v + self.dim_w}"
            )

    @property
    def dim(self) -> int:
        return self.space.dim

    @property
    def basis(self) -> Tuple[Vector, ...]:
        return self.space.vectors

    def _v_block(self) -> RationalMatrix:
        return self.space.basis.columns_slice(0, self.dim_v)

    def _w_block(self) -> RationalMatrix:
        return self.space.basis.columns_slice(self.dim_v, self.dim_v + self.dim_w)

    @cached_property
    def domain(self) -> Subspace:
        """Dom P: projection of P to V"""
        return LinAlgService.row_space(self._v_block())

    @cached_property
    def image(self) -> Subspace:
        """Im P: projection of P to W"""
        return LinAlgService.row_space(self._w_block())

    @cached_property
    def kernel(self) -> Subspace:
        """Ker P = {v : v (+) 0 in P}"""
        v_block = self._v_block()
        vectors = [
            LinAlgService.combine(x, v_block.entries, self.dim_v)
            for x in LinAlgService.left_kernel_vectors(self._w_block())
        ]
        return LinAlgService.span(vectors, self.dim_v)

    @cached_property
    def indefiniteness(self) -> Subspace:
        """Indef P = {w : 0 (+) w in P}"""
        w_block = self._w_block()
        vectors = [
            LinAlgService.combine(x, w_block.entries, self.dim_w)
            for x in LinAlgService.left_kernel_vectors(self._v_block())
        ]
        return LinAlgService.span(vectors, self.dim_w)

    @property
    def rank(self) -> int:
        return self.domain.dim - self.kernel.dim

    def is_graph(self) -> bool:
        """True when P is the graph of an operator V -> W"""
        return self.domain.is_full() and self.indefiniteness.is_zero()

    def to_dict(self):
        return {
            'dim_v': self.dim_v,
            'dim_w': self.dim_w,
            'basis': self.space.basis.to_dict(),
        }

    @classmethod
    def from_dict(cls, data) -> 'LinearRelation':
        if not isinstance(data, dict) or not {'dim_v', 'dim_w', 'basis'} <= set(data):
            raise ParseError("relation must be an object with dim_v, dim_w and basis")
        dim_v, dim_w = data['dim_v'], data['dim_w']
        if not isinstance(dim_v, int) or not isinstance(dim_w, int) or dim_v < 0 or dim_w < 0:
            raise ParseError("relation dimensions must be non-negative integers")
        rows = RationalMatrix.from_dict(data['basis'])
        if rows.rows and rows.cols != dim_v + dim_w:
            raise ParseError(f"relation basis rows must have length {dim_v + dim_w}")
        return cls(dim_v, dim_w, LinAlgService.span(rows.entries, dim_v + dim_w))

    def __str__(self):
        vectors = "; ".join(
            "(" + ", ".join(format_rational(x) for x in v[:self.dim_v]) + " | "
            + ", ".join(format_rational(x) for x in v[self.dim_v:]) + ")"
            for v in self.basis
        )
        return f"LinearRelation(Q^{self.dim_v} => Q^{self.dim_w}, dim={self.dim}, rk={self.rank}: {vectors})"


@dataclass(frozen=True)
class NullMorphism:
    """The formal null element of the relation category; never a subspace."""
    dim_v: int
    dim_w: int

    def to_dict(self):
        return {'null': True, 'dim_v': self.dim_v, 'dim_w': self.dim_w}

    def __str__(self):
        return f"null(Q^{self.dim_v} => Q^{self.dim_w})"


GaMorphism = Union[LinearRelation, NullMorphism]


def is_null(p: GaMorphism) -> bool:
    return isinstance(p, NullMorphism)


@dataclass(frozen=True)
class RelationCanonicalForm:
    """
    Adapted bases of a relation S.

    h spans Ker S, (h, g) spans Dom S and f completes it to V; F spans
    Indef S, (F, G) spans Im S and H completes it to W. S is spanned by
    0 (+) F_k, g_j (+) G_j and h_i (+) 0.
    """
    dim_v: int
    dim_w: int
    f: Tuple[Vector, ...]
    g: Tuple[Vector, ...]
    h: Tuple[Vector, ...]
    big_f: Tuple[Vector, ...]
    big_g: Tuple[Vector, ...]
    big_h: Tuple[Vector, ...]

    @property
    def basis_v(self) -> Tuple[Vector, ...]:
        return self.f + self.g + self.h

    @property
    def basis_w(self) -> Tuple[Vector, ...]:
        return self.big_f + self.big_g + self.big_h

    def counts(self) -> dict:
        return {
            'alpha': len(self.f), 'beta': len(self.g), 'gamma': len(self.h),
            'mu': len(self.big_f), 'nu': len(self.big_h),
        }

    def to_dict(self):
        def rows(vs):
            return [[format_rational(x) for x in v] for v in vs]
        return {
            'f': rows(self.f), 'g': rows(self.g), 'h': rows(self.h),
            'F': rows(self.big_f), 'G': rows(self.big_g), 'H': rows(self.big_h),
        }
