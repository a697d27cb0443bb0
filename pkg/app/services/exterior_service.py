"""
Exterior Power Service
"""
import logging
from fractions import Fraction
from math import comb
from typing import Optional, Union

from app.models.exterior import ExteriorFamily, ExteriorOperator, wedge_basis, wedge_position
from app.models.matrix import RationalMatrix
from app.models.relation import GaMorphism, LinearRelation, is_null
from app.services.linalg_service import LinAlgService
from app.services.relation_service import RelationService
from app.utils.exceptions import DimensionMismatchError, ValidationError

logger = logging.getLogger(__name__)


class ExteriorService:
    """lambda_cha of matrices and the operator lambda(S) of linear relations"""

    @staticmethod
    def lambda_cha(a: RationalMatrix, k: int) -> ExteriorOperator:
        """Matrix of J x I minors of a in lexicographic wedge order."""
        if k < 0 or k > a.cols:
            raise ValidationError(f"exterior degree {k} outside [0, {a.cols}]")
        rows = wedge_basis(a.rows, k)
        cols = wedge_basis(a.cols, k)
        if k == 1:
            matrix = a
        else:
            matrix = RationalMatrix(len(rows), len(cols), tuple(
                tuple(LinAlgService.minor(a, r, c) for c in cols) for r in rows
            ))
        return ExteriorOperator(k, k, a.cols, a.rows, matrix)

    @staticmethod
    def _selection_operator(n: int, m: int, k: int, alpha: int, beta: int, mu: int) -> RationalMatrix:
        """Sends the adapted wedge f ^ g_I to F ^ G_I and every other adapted wedge to 0."""
        k_out = k + mu - alpha
        target_pos = wedge_position(m, k_out)
        source = wedge_basis(n, k)
        entries = [[Fraction(0)] * len(source) for _ in range(comb(m, k_out))]
        head = set(range(alpha))
        for col, wedge in enumerate(source):
            if not head <= set(wedge) or any(p >= alpha + beta for p in wedge):
                continue
            target = tuple(range(mu)) + tuple(mu + p - alpha for p in wedge if p >= alpha)
            entries[target_pos[target]][col] = Fraction(1)
        return RationalMatrix.from_rows(entries, len(source))

    @staticmethod
    def lambda_relation(s: GaMorphism) -> ExteriorFamily:
        """lambda(S) built from the canonical form; zero for null."""
        n, m = s.dim_v, s.dim_w
        if is_null(s):
            blocks = tuple(ExteriorOperator.zero(k, k, n, m) for k in range(min(n, m) + 1))
            return ExteriorFamily(n, m, 0, blocks)

        form = RelationService.canonical_form(s)
        alpha, beta, mu = len(form.f), len(form.g), len(form.big_f)
        shift = mu - alpha
        m_v_inverse = LinAlgService.inverse(RationalMatrix.from_columns(form.basis_v, n))
        n_w = RationalMatrix.from_columns(form.basis_w, m)

        blocks = []
        for k in range(n + 1):
            k_out = k + shift
            if k_out < 0 or k_out > m:
                continue
            selection = ExteriorService._selection_operator(n, m, k, alpha, beta, mu)
            if selection.is_zero():
                blocks.append(ExteriorOperator.zero(k, k_out, n, m))
                continue
            matrix = (
                ExteriorService.lambda_cha(n_w, k_out).matrix
                @ selection
                @ ExteriorService.lambda_cha(m_v_inverse, k).matrix
            )
            blocks.append(ExteriorOperator(k, k_out, n, m, matrix))
        logger.debug(f"lambda(S) built with shift {shift} over {len(blocks)} degrees")
        return ExteriorFamily(n, m, shift, tuple(blocks))

    @staticmethod
    def lambda_m(p: LinearRelation, m: int) -> ExteriorOperator:
        """Degree-m block of lambda(P) for P in Gamma(V)."""
        if not RelationService.in_gamma(p):
            raise ValidationError("lambda^m is defined for relations of dimension dim V")
        if m < 0 or m > p.dim_v:
            raise ValidationError(f"exterior degree {m} outside [0, {p.dim_v}]")
        return ExteriorService.lambda_relation(p).block(m)

    @staticmethod
    def support(p: LinearRelation) -> range:
        """Degrees m with lambda^m(P) != 0: dim Indef P <= m <= dim Im P."""
        return range(p.indefiniteness.dim, p.image.dim + 1)

    @staticmethod
    def compose_families(q: ExteriorFamily, p: ExteriorFamily) -> ExteriorFamily:
        """Degreewise lambda(Q) lambda(P)"""
        if p.dim_w != q.dim_v:
            raise DimensionMismatchError("exterior families do not compose")
        blocks = []
        for b in p.blocks:
            mid = b.k_out
            if 0 <= mid + q.shift <= q.dim_w:
                blocks.append(q.block(mid) @ b)
        return ExteriorFamily(p.dim_v, q.dim_w, p.shift + q.shift, tuple(blocks))

    @staticmethod
    def flatten(x: Union[ExteriorOperator, ExteriorFamily, RationalMatrix]):
        if isinstance(x, RationalMatrix):
            return [v for r in x.entries for v in r]
        if isinstance(x, ExteriorOperator):
            return ExteriorService.flatten(x.matrix)
        return [v for b in x.blocks for v in ExteriorService.flatten(b)]

    @staticmethod
    def proportionality_scalar(a, b) -> Optional[Fraction]:
        """The c with b = c a (operators, families or matrices), or None."""
        return LinAlgService.proportionality(ExteriorService.flatten(a), ExteriorService.flatten(b))
