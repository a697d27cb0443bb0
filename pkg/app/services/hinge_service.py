"""
Hinge Service
"""
import logging
from fractions import Fraction
from typing import Iterator, List, Sequence, Tuple

from app.config.constants import (
    AXIOM_DIMENSION, AXIOM_DOM_FIRST, AXIOM_IM_INDEF, AXIOM_IM_LAST,
    AXIOM_KER_DOM, AXIOM_LENGTH, AXIOM_RANK,
)
from app.models.exterior import ExteriorFamily, ExteriorOperator
from app.models.hinge import CompletedHinge, GluedFamily, Hinge, OrbitLabel, WeakHinge
from app.models.matrix import RationalMatrix, Subspace, Vector
from app.models.relation import LinearRelation
from app.services.exterior_service import ExteriorService
from app.services.linalg_service import LinAlgService
from app.services.relation_service import RelationService
from app.utils.exceptions import (
    DimensionMismatchError, HingeAxiomError, InternalInvariantError, SingularMatrixError,
    ValidationError,
)

logger = logging.getLogger(__name__)


class HingeService:
    """Hinges, their GL x GL orbits, weak hinge products and the gluing of lambda(P_j)"""

    # ------------------------------------------------------------------
    # Validation and construction
    # ------------------------------------------------------------------

    @staticmethod
    def validate_hinge(terms: Sequence[LinearRelation], n: int = None) -> Hinge:
        """Check every hinge axiom and return the Hinge; raises HingeAxiomError naming the first failure."""
        terms = tuple(terms)
        if not terms:
            raise HingeAxiomError(AXIOM_LENGTH, "a hinge needs at least one term")
        n = terms[0].dim_v if n is None else n

        for j, p in enumerate(terms, start=1):
            if p.dim_v != n or p.dim_w != n or p.dim != n:
                raise HingeAxiomError(AXIOM_DIMENSION, f"P_{j} is not an {n}-dimensional relation on Q^{n}", j)
        if not terms[0].domain.is_full():
            raise HingeAxiomError(AXIOM_DOM_FIRST, "Dom P_1 != V", 1)
        if not terms[-1].image.is_full():
            raise HingeAxiomError(AXIOM_IM_LAST, f"Im P_{len(terms)} != V", len(terms))
        for j, (p, q) in enumerate(zip(terms, terms[1:]), start=1):
            if p.kernel != q.domain:
                raise HingeAxiomError(AXIOM_KER_DOM, f"Ker P_{j} != Dom P_{j + 1}", j)
            if p.image != q.indefiniteness:
                raise HingeAxiomError(AXIOM_IM_INDEF, f"Im P_{j} != Indef P_{j + 1}", j)
        for j, p in enumerate(terms, start=1):
            if p.rank == 0:
                raise HingeAxiomError(AXIOM_RANK, f"rk P_{j} = 0", j)
        if len(terms) > n:
            raise HingeAxiomError(AXIOM_LENGTH, f"{len(terms)} terms exceed n = {n}")
        return Hinge(n, terms)

    @staticmethod
    def hinge_from_flags(
        y_flag: Sequence[Subspace],
        z_flag: Sequence[Subspace],
        pairs: Sequence[Sequence[Tuple[Vector, Vector]]],
    ) -> Hinge:
        """
        Build a hinge from flag data.

        y_flag = (Y_1, ..., Y_k) increasing to V, z_flag = (Z_1, ..., Z_k)
        decreasing to 0, with Y_0 = 0 and Z_0 = V. pairs[j-1] lists (y, z)
        with y in Y_j, z in Z_(j-1), encoding the invertible quotient map
        Y_j/Y_(j-1) -> Z_(j-1)/Z_j by y -> z.
        """
        k = len(y_flag)
        if k == 0 or len(z_flag) != k or len(pairs) != k:
            raise ValidationError("flag data needs k >= 1 Y-spaces, Z-spaces and pair lists")
        n = y_flag[0].ambient_dim
        ys = [LinAlgService.zero_subspace(n)] + list(y_flag)
        zs = [LinAlgService.full_subspace(n)] + list(z_flag)
        if not ys[-1].is_full() or not zs[-1].is_zero():
            raise ValidationError("Y-flag must end at V and Z-flag at 0")

        terms = []
        for j in range(1, k + 1):
            y_prev, y_cur, z_prev, z_cur = ys[j - 1], ys[j], zs[j - 1], zs[j]
            if not LinAlgService.is_subspace(y_prev, y_cur) or not LinAlgService.is_subspace(z_cur, z_prev):
                raise ValidationError(f"flags are not nested at step {j}")
            step = y_cur.dim - y_prev.dim
            if step != z_prev.dim - z_cur.dim or len(pairs[j - 1]) != step:
                raise ValidationError(f"quotient dimensions do not match at step {j}")
            pair_y = [tuple(y) for y, _ in pairs[j - 1]]
            pair_z = [tuple(z) for _, z in pairs[j - 1]]
            if not all(LinAlgService.contains(y_cur, y) for y in pair_y):
                raise ValidationError(f"map source vector outside Y_{j}")
            if not all(LinAlgService.contains(z_prev, z) for z in pair_z):
                raise ValidationError(f"map target vector outside Z_{j - 1}")
            if LinAlgService.span(y_prev.vectors + tuple(pair_y), n).dim != y_cur.dim:
                raise SingularMatrixError(f"map at step {j} is not defined on a basis of Y_{j}/Y_{j - 1}")
            if LinAlgService.span(z_cur.vectors + tuple(pair_z), n).dim != z_prev.dim:
                raise SingularMatrixError(f"map at step {j} is not invertible")
            zero = (Fraction(0),) * n
            vectors = (
                [zero + y for y in y_prev.vectors]
                + [z + zero for z in z_cur.vectors]
                + [z + y for y, z in zip(pair_y, pair_z)]
            )
            terms.append(RelationService.from_vectors(n, n, vectors))
        return HingeService.validate_hinge(terms, n)

    @staticmethod
    def canonical_hinge(label: OrbitLabel) -> Hinge:
        """P_j spanned by 0 (+) e_s (s <= u_j), e_t (+) e_t (u_j < t <= u_(j+1)), e_r (+) 0 (r > u_(j+1))"""
        n = label.n
        sums = label.partial_sums()
        zero = (Fraction(0),) * n

        def e(i):
            return tuple(Fraction(int(i == t)) for t in range(n))

        terms = []
        for j in range(label.length):
            lo, hi = sums[j], sums[j + 1]
            vectors = (
                [zero + e(s) for s in range(lo)]
                + [e(t) + e(t) for t in range(lo, hi)]
                + [e(r) + zero for r in range(hi, n)]
            )
            terms.append(RelationService.from_vectors(n, n, vectors))
        return Hinge(n, tuple(terms))

    @staticmethod
    def orbit_label(h: Hinge) -> OrbitLabel:
        return h.label()

    @staticmethod
    def act(g1: RationalMatrix, h: Hinge, g2: RationalMatrix) -> Hinge:
        """Termwise graph(g1) o P_j o graph(g2)"""
        for g in (g1, g2):
            if g.shape != (h.n, h.n):
                raise DimensionMismatchError(f"acting matrix must be {h.n}x{h.n}")
            if not LinAlgService.is_invertible(g):
                raise SingularMatrixError("acting matrix must be invertible")
        left, right = RelationService.graph(g1), RelationService.graph(g2)
        terms = tuple(RelationService.compose(left, RelationService.compose(p, right)) for p in h.terms)
        return Hinge(h.n, terms)

    # ------------------------------------------------------------------
    # Completed and weak hinges
    # ------------------------------------------------------------------

    @staticmethod
    def complete(h: Hinge) -> CompletedHinge:
        n = h.n
        rank_zero = [RelationService.rank_zero_relation(LinAlgService.full_subspace(n), LinAlgService.zero_subspace(n))]
        for p in h.terms:
            rank_zero.append(RelationService.rank_zero_relation(p.kernel, p.image))
        return CompletedHinge(n, h.terms, tuple(rank_zero))

    @staticmethod
    def from_completed(c: CompletedHinge) -> Hinge:
        return HingeService.validate_hinge(c.hinge_terms, c.n)

    @staticmethod
    def completed_as_weak(h: Hinge) -> WeakHinge:
        return WeakHinge(h.n, HingeService.complete(h).interleaved())

    @staticmethod
    def is_weak_hinge(terms: Sequence[LinearRelation], n: int = None) -> bool:
        if not terms:
            return False
        n = terms[0].dim_v if n is None else n
        if any(t.dim_v != n or t.dim_w != n or t.dim != n for t in terms):
            return False
        for r, s in zip(terms, terms[1:]):
            if not LinAlgService.is_subspace(s.domain, r.kernel):
                return False
            if not LinAlgService.is_subspace(r.image, s.indefiniteness):
                return False
        return True

    @staticmethod
    def weak_hinge(terms: Sequence[LinearRelation], n: int = None) -> WeakHinge:
        terms = tuple(terms)
        if not HingeService.is_weak_hinge(terms, n):
            raise ValidationError("relations do not form a weak hinge")
        return WeakHinge(terms[0].dim_v, terms)

    @staticmethod
    def weak_product(t: WeakHinge, r: WeakHinge) -> WeakHinge:
        """All non-null T_i R_j, ordered by dim Indef and deduplicated."""
        if t.n != r.n:
            raise DimensionMismatchError("weak hinges over different spaces")
        products: List[LinearRelation] = []
        for ti in t.terms:
            for rj in r.terms:
                p = RelationService.compose(ti, rj)
                if isinstance(p, LinearRelation) and p not in products:
                    products.append(p)
        if not products:
            raise InternalInvariantError("weak hinge product is empty")
        products.sort(key=lambda p: (p.indefiniteness.dim, p.image.dim))
        if not HingeService.is_weak_hinge(products, t.n):
            raise InternalInvariantError("product of weak hinges is not a weak hinge")
        logger.debug(f"Weak product of {t.length} x {r.length} terms has {len(products)} terms")
        return WeakHinge(t.n, tuple(products))

    @staticmethod
    def weak_lambda_m(r: WeakHinge, m: int) -> ExteriorOperator:
        """First nonzero lambda^m(R_j), or zero."""
        for term in r.terms:
            if m in ExteriorService.support(term):
                return ExteriorService.lambda_m(term, m)
        return ExteriorOperator.zero(m, m, r.n, r.n)

    # ------------------------------------------------------------------
    # lambda^m of a hinge
    # ------------------------------------------------------------------

    @staticmethod
    def nonzero_terms(h: Hinge, m: int) -> List[int]:
        """0-based indices j with lambda^m(P_j) != 0"""
        return [j for j, p in enumerate(h.terms) if m in ExteriorService.support(p)]

    @staticmethod
    def hinge_lambda_m(h: Hinge, m: int) -> ExteriorOperator:
        """
        The unique nonzero lambda^m(P_j), or the common rank 1 operator when
        two adjacent terms are nonzero (the one of the earlier term is returned).
        """
        if m < 0 or m > h.n:
            raise ValidationError(f"exterior degree {m} outside [0, {h.n}]")
        indices = HingeService.nonzero_terms(h, m)
        ops = [ExteriorService.lambda_m(h.terms[j], m) for j in indices]
        if any(op.is_zero() for op in ops):
            raise InternalInvariantError(f"lambda^{m} vanishes inside its support")
        if len(indices) == 1:
            return ops[0]
        if len(indices) == 2 and indices[1] == indices[0] + 1:
            for op in ops:
                if LinAlgService.rank(op.matrix) != 1:
                    raise InternalInvariantError(f"overlap operator in degree {m} is not rank 1")
            if ExteriorService.proportionality_scalar(ops[0], ops[1]) is None:
                raise InternalInvariantError(f"overlap operators in degree {m} are not proportional")
            earlier = h.terms[indices[0]]
            between = RelationService.rank_zero_relation(earlier.kernel, earlier.image)
            if ExteriorService.proportionality_scalar(ExteriorService.lambda_m(between, m), ops[0]) is None:
                raise InternalInvariantError(f"overlap operator in degree {m} is not lambda of Ker (+) Im")
            return ops[0]
        raise InternalInvariantError(f"degree {m} is supported by terms {indices}")

    # ------------------------------------------------------------------
    # Gluing
    # ------------------------------------------------------------------

    @staticmethod
    def _scale_family(family: ExteriorFamily, c: Fraction) -> ExteriorFamily:
        if c == 1:
            return family
        return ExteriorFamily(family.dim_v, family.dim_w, family.shift, tuple(b.scale(c) for b in family.blocks))

    @staticmethod
    def glued_lambdas(h: Hinge) -> List[ExteriorFamily]:
        """lambda(P_1) = lambda_cha(P_1) and every next lambda(P_(j+1)) scaled to agree on the overlap"""
        families = [ExteriorService.lambda_relation(h.terms[0])]
        for prev_term, term in zip(h.terms, h.terms[1:]):
            overlap = prev_term.image.dim
            family = ExteriorService.lambda_relation(term)
            c = ExteriorService.proportionality_scalar(family.block(overlap), families[-1].block(overlap))
            if c is None or c == 0:
                raise InternalInvariantError(f"gluing overlap in degree {overlap} is not proportional")
            families.append(HingeService._scale_family(family, c))
        return families

    @staticmethod
    def glue(h: Hinge) -> GluedFamily:
        families = HingeService.glued_lambdas(h)
        blocks = [None] * (h.n + 1)
        for term, family in zip(h.terms, families):
            for m in ExteriorService.support(term):
                if blocks[m] is None:
                    blocks[m] = family.block(m)
        if any(b is None for b in blocks):
            raise InternalInvariantError("hinge supports do not cover every degree")
        logger.debug(f"Glued hinge with label {h.label()}")
        return GluedFamily(h.n, tuple(blocks), base=HingeService.completed_as_weak(h))

    @staticmethod
    def identity_glued(n: int) -> GluedFamily:
        return HingeService.glue(HingeService.canonical_hinge(OrbitLabel((n,))))

    @staticmethod
    def glued_product(a: GluedFamily, b: GluedFamily) -> GluedFamily:
        """Degreewise A_m B_m; lies over the weak product of the bases when both are known."""
        if a.n != b.n:
            raise DimensionMismatchError("glued families over different spaces")
        blocks = tuple(x @ y for x, y in zip(a.blocks, b.blocks))
        base = None
        if a.base is not None and b.base is not None:
            base = HingeService.weak_product(a.base, b.base)
        return GluedFamily(a.n, blocks, base=base)

    @staticmethod
    def glued_lies_over(family: GluedFamily, weak: WeakHinge) -> bool:
        """Every A_m is a (possibly zero) multiple of lambda^m of the weak hinge."""
        for m, block in enumerate(family.blocks):
            reference = HingeService.weak_lambda_m(weak, m)
            if reference.is_zero():
                if not block.is_zero():
                    return False
            elif not block.is_zero() and ExteriorService.proportionality_scalar(reference, block) is None:
                return False
        return True

    @staticmethod
    def well_glued(family: GluedFamily, weak: WeakHinge) -> bool:
        """
        True when A_m = c_j lambda^m(R_j) with one nonzero c_j per term on its
        whole support, A_m = 0 off every support, and c_1 = 1 when R_1 is a graph.
        """
        covered = set()
        for j, term in enumerate(weak.terms):
            lam = ExteriorService.lambda_relation(term)
            scalars = set()
            for m in ExteriorService.support(term):
                covered.add(m)
                c = ExteriorService.proportionality_scalar(lam.block(m), family.block(m))
                if c is None or c == 0:
                    return False
                scalars.add(c)
            if len(scalars) > 1:
                return False
            if j == 0 and term.is_graph() and scalars != {Fraction(1)}:
                return False
        return all(family.block(m).is_zero() for m in range(family.n + 1) if m not in covered)

    # ------------------------------------------------------------------
    # Hinge* equivalence and orbit arithmetic
    # ------------------------------------------------------------------

    @staticmethod
    def hinge_star_equal(h1: Hinge, h2: Hinge) -> bool:
        """P_j = c_j P'_j termwise with nonzero c_j"""
        if h1.n != h2.n or h1.length != h2.length:
            return False
        return all(RelationService.relation_ratio(p, q) is not None for p, q in zip(h1.terms, h2.terms))

    @staticmethod
    def compositions(n: int) -> Iterator[OrbitLabel]:
        """All compositions of n, 2^(n-1) of them."""
        if n < 1:
            raise ValidationError("compositions need n >= 1")

        def build(rest):
            if rest == 0:
                yield ()
                return
            for first in range(1, rest + 1):
                for tail in build(rest - first):
                    yield (first,) + tail

        for alpha in build(n):
            yield OrbitLabel(alpha)

    @staticmethod
    def orbit_dimension(label: OrbitLabel) -> int:
        return label.n ** 2

    @staticmethod
    def projective_orbit_dimension(label: OrbitLabel) -> int:
        return label.n ** 2 - label.length

    @staticmethod
    def spike_dimension(label: OrbitLabel) -> int:
        """Orbit in Hinge*, plus one scalar per term, minus the one-parameter equivalence."""
        return HingeService.projective_orbit_dimension(label) + label.length - 1
