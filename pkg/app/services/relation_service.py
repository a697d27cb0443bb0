"""
Linear Relation Service
"""
import logging
from fractions import Fraction
from typing import Optional

from app.models.matrix import RationalMatrix, RationalLike, Subspace, to_rational
from app.models.relation import (
    GaMorphism, LinearRelation, NullMorphism, RelationCanonicalForm, is_null,
)
from app.services.linalg_service import LinAlgService
from app.utils.exceptions import DimensionMismatchError, InternalInvariantError, ValidationError

logger = logging.getLogger(__name__)


class RelationService:
    """Composition, attributes and canonical bases of linear relations"""

    # ------------------------------------------------------------------
    # Construction
    # ------------------------------------------------------------------

    @staticmethod
    def from_vectors(dim_v: int, dim_w: int, vectors) -> LinearRelation:
        return LinearRelation(dim_v, dim_w, LinAlgService.span(vectors, dim_v + dim_w))

    @staticmethod
    def graph(a: RationalMatrix) -> LinearRelation:
        """{v (+) Av}; a is dim_w x dim_v."""
        dim_v, dim_w = a.cols, a.rows
        vectors = []
        for j in range(dim_v):
            e = tuple(Fraction(int(i == j)) for i in range(dim_v))
            vectors.append(e + a.column(j))
        return RelationService.from_vectors(dim_v, dim_w, vectors)

    @staticmethod
    def rank_zero_relation(x: Subspace, y: Subspace) -> LinearRelation:
        """X (+) Y as a relation; its rank is 0."""
        dim_v, dim_w = x.ambient_dim, y.ambient_dim
        zero_v = (Fraction(0),) * dim_v
        zero_w = (Fraction(0),) * dim_w
        vectors = [v + zero_w for v in x.vectors] + [zero_v + w for w in y.vectors]
        return RelationService.from_vectors(dim_v, dim_w, vectors)

    @staticmethod
    def attributes(p: LinearRelation) -> dict:
        return {
            'ker': p.kernel,
            'im': p.image,
            'dom': p.domain,
            'indef': p.indefiniteness,
            'dim': p.dim,
            'rk': p.rank,
        }

    # ------------------------------------------------------------------
    # Category structure
    # ------------------------------------------------------------------

    @staticmethod
    def is_null_product(q: LinearRelation, p: LinearRelation) -> bool:
        """True when Im P + Dom Q != W or Indef P meets Ker Q."""
        if LinAlgService.subspace_sum(p.image, q.domain).dim != p.dim_w:
            return True
        return not LinAlgService.subspace_intersect(p.indefiniteness, q.kernel).is_zero()

    @staticmethod
    def relation_product(q: LinearRelation, p: LinearRelation) -> LinearRelation:
        """Set-theoretic product {v (+) y : v (+) w in P, w (+) y in Q}, no null check."""
        if p.dim_w != q.dim_v:
            raise DimensionMismatchError(
                f"cannot compose Q^{q.dim_v} => Q^{q.dim_w} after Q^{p.dim_v} => Q^{p.dim_w}"
            )
        dim_v, dim_mid, dim_y = p.dim_v, p.dim_w, q.dim_w
        # x P_W - y Q_V = 0 couples the two bases through W
        p_rows, q_rows = p.basis, q.basis
        coupling = RationalMatrix(
            p.dim + q.dim, dim_mid,
            tuple(r[dim_v:] for r in p_rows) + tuple(tuple(-x for x in r[:dim_mid]) for r in q_rows),
        )
        vectors = []
        for coeffs in LinAlgService.left_kernel_vectors(coupling):
            v = LinAlgService.combine(coeffs[:p.dim], [r[:dim_v] for r in p_rows], dim_v)
            y = LinAlgService.combine(coeffs[p.dim:], [r[dim_mid:] for r in q_rows], dim_y)
            vectors.append(v + y)
        return RelationService.from_vectors(dim_v, dim_y, vectors)

    @staticmethod
    def compose(q: GaMorphism, p: GaMorphism) -> GaMorphism:
        """q o p (p acts first); null when the transversality conditions fail."""
        if p.dim_w != q.dim_v:
            raise DimensionMismatchError(
                f"cannot compose Q^{q.dim_v} => Q^{q.dim_w} after Q^{p.dim_v} => Q^{p.dim_w}"
            )
        if is_null(p) or is_null(q):
            return NullMorphism(p.dim_v, q.dim_w)
        if RelationService.is_null_product(q, p):
            logger.debug("Relation product is null")
            return NullMorphism(p.dim_v, q.dim_w)
        product = RelationService.relation_product(q, p)
        if product.dim != q.dim + p.dim - p.dim_w:
            raise InternalInvariantError(
                f"non-null product has dim {product.dim}, expected {q.dim + p.dim - p.dim_w}"
            )
        return product

    @staticmethod
    def pseudoinverse(p: LinearRelation) -> LinearRelation:
        """Swap the V and W blocks."""
        vectors = [v[p.dim_v:] + v[:p.dim_v] for v in p.basis]
        return RelationService.from_vectors(p.dim_w, p.dim_v, vectors)

    @staticmethod
    def scale(c: RationalLike, p: GaMorphism) -> GaMorphism:
        """{v (+) c w : v (+) w in P}"""
        c = to_rational(c)
        if c == 0:
            raise ValidationError("relation scalar must be nonzero")
        if is_null(p) or c == 1:
            return p
        vectors = [v[:p.dim_v] + tuple(c * x for x in v[p.dim_v:]) for v in p.basis]
        return RelationService.from_vectors(p.dim_v, p.dim_w, vectors)

    @staticmethod
    def in_gamma(p: GaMorphism) -> bool:
        """True for relations V => V of dimension exactly dim V."""
        if is_null(p):
            return False
        if p.dim_v != p.dim_w:
            raise DimensionMismatchError("Gamma(V) membership needs dim V = dim W")
        return p.dim == p.dim_v

    @staticmethod
    def relation_ratio(p: LinearRelation, q: LinearRelation) -> Optional[Fraction]:
        """
        The scalar c with q = scale(c, p), or None.

        For rank 0 relations every c works and 1 is returned when p = q.
        """
        if (p.dim_v, p.dim_w) != (q.dim_v, q.dim_w):
            return None
        if p.rank == 0:
            return Fraction(1) if p == q else None
        form = RelationService.canonical_form(p)
        g, big_g = form.g[0], form.big_g[0]
        n = p.dim_v
        # a representative g (+) w in q, reduced against Indef q
        x = LinAlgService.solve_left(q.space.basis.columns_slice(0, n), g)
        if x is None:
            return None
        w = LinAlgService.combine(x, [r[n:] for r in q.basis], p.dim_w)
        w_reduced, _ = LinAlgService.reduce(q.indefiniteness, w)
        c = LinAlgService.proportionality(big_g, w_reduced)
        if c is None:
            return None
        return c if RelationService.scale(c, p) == q else None

    # ------------------------------------------------------------------
    # Canonical bases
    # ------------------------------------------------------------------

    @staticmethod
    def canonical_form(s: LinearRelation) -> RelationCanonicalForm:
        n, m = s.dim_v, s.dim_w
        ker, dom = s.kernel, s.domain
        h = ker.vectors
        g = tuple(LinAlgService.extend_basis(h, n, candidates=dom.vectors))
        f = tuple(LinAlgService.extend_basis(dom.vectors, n))

        indef = s.indefiniteness
        v_block = s.space.basis.columns_slice(0, n)
        big_g = []
        for gj in g:
            x = LinAlgService.solve_left(v_block, gj)
            if x is None:
                raise InternalInvariantError("domain vector has no partner in the relation")
            w = LinAlgService.combine(x, [r[n:] for r in s.basis], m)
            residual, _ = LinAlgService.reduce(indef, w)
            big_g.append(tuple(residual))
        big_f = indef.vectors
        big_h = tuple(LinAlgService.extend_basis(s.image.vectors, m))
        form = RelationCanonicalForm(n, m, f, g, h, big_f, tuple(big_g), big_h)
        logger.debug(f"Canonical form counts: {form.counts()}")
        return form

    @staticmethod
    def reconstruct(form: RelationCanonicalForm) -> LinearRelation:
        zero_v = (Fraction(0),) * form.dim_v
        zero_w = (Fraction(0),) * form.dim_w
        vectors = (
            [zero_v + big_f for big_f in form.big_f]
            + [gj + big_gj for gj, big_gj in zip(form.g, form.big_g)]
            + [hi + zero_w for hi in form.h]
        )
        return RelationService.from_vectors(form.dim_v, form.dim_w, vectors)
