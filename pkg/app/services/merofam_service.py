"""
Meromorphic Family Service
"""
import logging
from fractions import Fraction
from itertools import combinations
from typing import List, Optional, Tuple

from app.config.constants import REPARAM_KINDS, REPARAM_POWER, REPARAM_SCALAR
from app.models.exterior import ExteriorOperator, wedge_basis
from app.models.hinge import CompletedHinge, GluedFamily, Hinge, OrbitLabel
from app.models.laurent import (
    INFINITY, ExponentData, Factorization, LaurentMatrix, LaurentPoly, ring_determinant,
)
from app.models.matrix import RationalMatrix, to_rational
from app.models.relation import LinearRelation
from app.services.hinge_service import HingeService
from app.services.linalg_service import LinAlgService
from app.services.relation_service import RelationService
from app.utils.exceptions import (
    InternalInvariantError, PrecisionExhaustedError, SingularMatrixError, ValidationError,
)

logger = logging.getLogger(__name__)


class MerofamService:
    """Exponents, factorization and Grassmannian limits of Laurent matrix curves"""

    def __init__(self, precision: Optional[int] = None, precision_bump: int = 5):
        # None means the precision is derived from each input curve
        self.precision = precision
        self.precision_bump = precision_bump

    # ------------------------------------------------------------------
    # Orders and exponents
    # ------------------------------------------------------------------

    @staticmethod
    def ord_poly(p: LaurentPoly) -> int:
        if p.is_zero():
            raise ValidationError("ord of the zero polynomial is undefined")
        return p.valuation

    @staticmethod
    def ord(gamma: LaurentMatrix) -> int:
        """Pole order: max over entries of -ord_poly; negative when gamma vanishes at 0."""
        entries = gamma.nonzero_entries()
        if not entries:
            raise ValidationError("ord of the zero matrix is undefined")
        return max(-p.valuation for p in entries)

    @staticmethod
    def minors_matrix(gamma: LaurentMatrix, j: int) -> LaurentMatrix:
        """lambda^j_cha(gamma) with Laurent polynomial minors."""
        rows = wedge_basis(gamma.rows, j)
        cols = wedge_basis(gamma.cols, j)
        zero, one = LaurentPoly.zero(), LaurentPoly.one()
        entries = tuple(
            tuple(
                ring_determinant([[gamma.entries[r][c] for c in col] for r in row], zero, one)
                for col in cols
            )
            for row in rows
        )
        return LaurentMatrix(len(rows), len(cols), entries)

    @staticmethod
    def check_invertible(gamma: LaurentMatrix) -> LaurentPoly:
        det = gamma.determinant()
        if det.is_zero():
            raise SingularMatrixError("the family has identically zero determinant")
        return det

    def exponents(self, gamma: LaurentMatrix) -> ExponentData:
        """m_j = ord(lambda^j gamma) - ord(lambda^(j-1) gamma)"""
        n = gamma.n
        self.check_invertible(gamma)
        orders = [0]
        for j in range(1, n + 1):
            orders.append(self.ord(self.minors_matrix(gamma, j)))
        m = tuple(orders[j] - orders[j - 1] for j in range(1, n + 1))
        if any(a < b for a, b in zip(m, m[1:])):
            raise InternalInvariantError(f"exponents {m} are not non-increasing")
        logger.debug(f"Exponents of a {n}x{n} family: {m}")
        return ExponentData.from_m(m)

    # ------------------------------------------------------------------
    # Factorization
    # ------------------------------------------------------------------

    def default_precision(self, gamma: LaurentMatrix, exps: ExponentData = None) -> int:
        exps = exps or self.exponents(gamma)
        span = gamma.max_exponent() - gamma.min_exponent()
        return (exps.m[0] - exps.m[-1]) + 1 + span

    @staticmethod
    def _eliminate(gamma: LaurentMatrix, m1: int, precision: int, required: int) -> Factorization:
        """Smith elimination of z^m1 gamma over power series mod z^precision."""
        n = gamma.n
        N = precision
        w = [[p.shift(m1).truncate(N) for p in row] for row in gamma.entries]
        a = [[LaurentPoly.constant(int(i == j)) for j in range(n)] for i in range(n)]
        b = [[LaurentPoly.constant(int(i == j)) for j in range(n)] for i in range(n)]
        valuations, units = [], []

        for s in range(n):
            best = None
            for i in range(s, n):
                for j in range(s, n):
                    v = w[i][j].valuation
                    if best is None or v < best[0]:
                        best = (v, i, j)
            v, pi, pj = best
            if v == INFINITY:
                raise PrecisionExhaustedError(required, f"pivot {s + 1} vanishes modulo z^{N}")
            # mirror swaps into a (columns) and b (rows)
            w[s], w[pi] = w[pi], w[s]
            for row in a:
                row[s], row[pi] = row[pi], row[s]
            for row in w:
                row[s], row[pj] = row[pj], row[s]
            b[s], b[pj] = b[pj], b[s]

            unit = w[s][s].shift(-v)
            unit_inverse = unit.inverse_series(N - v)
            for t in range(s + 1, n):
                if w[t][s].is_zero():
                    continue
                q = (w[t][s].shift(-v) * unit_inverse).truncate(N - v)
                w[t] = [(x - q * y).truncate(N) for x, y in zip(w[t], w[s])]
                for row in a:
                    row[s] = (row[s] + q * row[t]).truncate(N)
            for t in range(s + 1, n):
                if w[s][t].is_zero():
                    continue
                q = (w[s][t].shift(-v) * unit_inverse).truncate(N - v)
                for row in w:
                    row[t] = (row[t] - q * row[s]).truncate(N)
                b[s] = [(x + q * y).truncate(N) for x, y in zip(b[s], b[t])]
            logger.debug(f"Pivot {s + 1}: valuation {v} at ({pi}, {pj})")
            valuations.append(v)
            units.append(unit)

        valid_order = N - max(valuations)
        b = [[(units[s] * x).truncate(valid_order) for x in b[s]] for s in range(n)]
        a = [[x.truncate(valid_order) for x in row] for row in a]
        m = tuple(m1 - v for v in valuations)
        return Factorization(
            LaurentMatrix(n, n, tuple(tuple(r) for r in a)),
            LaurentMatrix(n, n, tuple(tuple(r) for r in b)),
            m, N, valid_order,
        )

    def factorize(self, gamma: LaurentMatrix, precision: int = None) -> Factorization:
        """gamma = a diag(z^-m) b, verified against a precision bump."""
        exps = self.exponents(gamma)
        required = self.default_precision(gamma, exps)
        N = precision or self.precision or required
        if N < 1:
            raise ValidationError("precision must be a positive integer")
        m1 = self.ord(gamma)
        try:
            result = self._eliminate(gamma, m1, N, required)
            bumped = self._eliminate(gamma, m1, N + self.precision_bump, required + self.precision_bump)
        except PrecisionExhaustedError:
            logger.warning(f"Precision {N} is too low for a family with exponents {exps.m}")
            raise
        if (result.m, result.a0(), result.b0()) != (bumped.m, bumped.a0(), bumped.b0()):
            logger.warning(f"Factorization at precision {N} disagrees with precision {N + self.precision_bump}")
            raise PrecisionExhaustedError(N + self.precision_bump, "factorization is not stable under a precision bump")
        if result.m != exps.m:
            raise InternalInvariantError(f"elimination exponents {result.m} differ from minor exponents {exps.m}")
        logger.info(f"Factorized {gamma.n}x{gamma.n} family at precision {N}")
        return result

    @staticmethod
    def reassemble(fac: Factorization) -> LaurentMatrix:
        return fac.a @ LaurentMatrix.diagonal_monomials([-x for x in fac.m]) @ fac.b

    def reassembly_matches(self, gamma: LaurentMatrix, fac: Factorization) -> bool:
        """a diag(z^-m) b agrees with gamma once both are shifted by z^m_1 and cut at valid_order."""
        m1 = fac.m[0]
        rebuilt = self.reassemble(fac)

        def cut(p):
            return p.shift(m1).truncate(fac.valid_order)

        return rebuilt.map_entries(cut) == gamma.map_entries(cut)

    # ------------------------------------------------------------------
    # Grassmannian limits
    # ------------------------------------------------------------------

    @staticmethod
    def _graph_columns(gamma: LaurentMatrix, k: int) -> List[List[LaurentPoly]]:
        """Columns of the 2n x n matrix [I ; z^k gamma]"""
        n = gamma.n
        return [
            [LaurentPoly.constant(int(i == j)) for i in range(n)] + [gamma.entries[i][j].shift(k) for i in range(n)]
            for j in range(n)
        ]

    def limit_relation(self, gamma: LaurentMatrix, k: int) -> LinearRelation:
        """lim_(z->0) z^k graph(gamma(z)) by lattice reduction of the graph columns."""
        n = gamma.n
        self.check_invertible(gamma)
        columns = self._graph_columns(gamma, k)
        step_cap = 0
        for j, col in enumerate(columns):
            o = min(p.valuation for p in col if not p.is_zero())
            columns[j] = [p.shift(-o) for p in col]
            step_cap -= o

        steps = 0
        while True:
            at_zero = RationalMatrix(2 * n, n, tuple(
                tuple(columns[j][i].coefficient(0) for j in range(n)) for i in range(2 * n)
            ))
            null = LinAlgService.kernel(at_zero)
            if null.is_zero():
                break
            if steps >= step_cap:
                raise InternalInvariantError(f"lattice reduction exceeded {step_cap} steps")
            x = null.vectors[0]
            r = max(j for j in range(n) if x[j] != 0)
            combined = [LaurentPoly.zero() for _ in range(2 * n)]
            for j in range(n):
                if x[j]:
                    combined = [acc + p * x[j] for acc, p in zip(combined, columns[j])]
            o = min(p.valuation for p in combined if not p.is_zero())
            columns[r] = [p.shift(-o) for p in combined]
            steps += 1
            logger.debug(f"Reduction step {steps}: column {r} divided by z^{o}")

        vectors = [tuple(p.coefficient(0) for p in col) for col in columns]
        return RelationService.from_vectors(n, n, vectors)

    def pluecker_limit(self, gamma: LaurentMatrix, k: int) -> Tuple[Fraction, ...]:
        """Lowest-order coefficients of the maximal minors of [I ; z^k gamma], normalized."""
        n = gamma.n
        columns = self._graph_columns(gamma, k)
        zero, one = LaurentPoly.zero(), LaurentPoly.one()
        minors = [
            ring_determinant([[columns[j][i] for j in range(n)] for i in rows], zero, one)
            for rows in combinations(range(2 * n), n)
        ]
        mu = min(p.valuation for p in minors if not p.is_zero())
        return LinAlgService.normalize_projective([p.coefficient(mu) for p in minors])

    def relation_sequence(self, gamma: LaurentMatrix, k_min: int, k_max: int) -> List[Tuple[int, LinearRelation]]:
        """R_k for k_min <= k <= k_max; outside [k_t, k_1] every R_k has rank 0."""
        if k_min > k_max:
            raise ValidationError("empty window for the relation sequence")
        return [(k, self.limit_relation(gamma, k)) for k in range(k_min, k_max + 1)]

    @staticmethod
    def is_split(r: LinearRelation) -> bool:
        """A sum of a horizontal and a vertical subspace, i.e. rank 0."""
        return r.rank == 0

    def limit_hinge(self, gamma: LaurentMatrix, cross_check: bool = True) -> Tuple[ExponentData, Hinge]:
        exps = self.exponents(gamma)
        terms = []
        for kj, aj in zip(exps.k, exps.alpha):
            p = self.limit_relation(gamma, kj)
            if p.rank != aj:
                raise InternalInvariantError(f"limit at k={kj} has rank {p.rank}, expected {aj}")
            terms.append(p)
        hinge = HingeService.validate_hinge(terms, gamma.n)
        if cross_check:
            fac = self.factorize(gamma)
            predicted = HingeService.act(fac.a0(), HingeService.canonical_hinge(OrbitLabel(exps.alpha)), fac.b0())
            if predicted != hinge:
                raise InternalInvariantError("limit hinge differs from a(0) P_alpha b(0)")
        logger.info(f"Limit hinge with orbit label {hinge.label()}")
        return exps, hinge

    def completed_limit(self, gamma: LaurentMatrix) -> CompletedHinge:
        _, hinge = self.limit_hinge(gamma, cross_check=False)
        return HingeService.complete(hinge)

    def limit_glued(self, gamma: LaurentMatrix, cross_check: bool = True) -> GluedFamily:
        """L^j = constant term of z^(m_1+...+m_j) lambda^j_cha(gamma)"""
        exps = self.exponents(gamma)
        n = gamma.n
        blocks = []
        for j in range(n + 1):
            minors = self.minors_matrix(gamma, j)
            matrix = minors.coefficient_matrix(-exps.partial_sum(j))
            if matrix.is_zero():
                raise InternalInvariantError(f"glued limit vanishes in degree {j}")
            blocks.append(ExteriorOperator(j, j, n, n, matrix))
        family = GluedFamily(n, tuple(blocks))
        if cross_check:
            _, hinge = self.limit_hinge(gamma, cross_check=False)
            glued = HingeService.glue(hinge)
            if glued != family:
                raise InternalInvariantError("direct glued limit differs from the glued limit hinge")
            family = glued
        return family

    # ------------------------------------------------------------------
    # Reparametrization
    # ------------------------------------------------------------------

    def formal_precision(self, gamma: LaurentMatrix) -> int:
        return self.precision or self.default_precision(gamma)

    def reparametrize(self, gamma: LaurentMatrix, kind: str, value, precision: int = None) -> LaurentMatrix:
        """
        Substitute into every entry.

        formal: value = [c_2, c_3, ...] for z -> z + c_2 z^2 + ..., truncated;
        power: value = p >= 1 for z -> z^p; scalar: value = c != 0 for z -> c z.
        """
        if kind not in REPARAM_KINDS:
            raise ValidationError(f"unknown reparametrization {kind!r}")
        if kind == REPARAM_POWER:
            if isinstance(value, bool) or not isinstance(value, int) or value < 1:
                raise ValidationError("power reparametrization needs an integer p >= 1")
            return gamma.map_entries(lambda p: p.power_substitute(value))
        if kind == REPARAM_SCALAR:
            c = to_rational(value)
            if c == 0:
                raise ValidationError("scalar reparametrization needs c != 0")
            return gamma.map_entries(lambda p: p.scale_variable(c))

        coefficients = [to_rational(c) for c in value]
        N = precision or self.formal_precision(gamma)
        result = self._formal_substitute(gamma, coefficients, N)
        bumped = self._formal_substitute(gamma, coefficients, N + self.precision_bump)
        if self.limit_hinge(result, cross_check=False) != self.limit_hinge(bumped, cross_check=False):
            logger.warning(f"Formal reparametrization at precision {N} disagrees with precision {N + self.precision_bump}")
            raise PrecisionExhaustedError(N + self.precision_bump, "reparametrized limit is not stable under a precision bump")
        return result

    @staticmethod
    def _formal_substitute(gamma: LaurentMatrix, coefficients, N: int) -> LaurentMatrix:
        """z -> z + c_2 z^2 + ..., every entry truncated N orders above the lowest exponent."""
        cut = gamma.min_exponent() + N
        w = LaurentPoly({i + 1: c for i, c in enumerate(coefficients)})
        one_plus_w = LaurentPoly.one() + w
        powers = {}

        def factor(e):
            if e not in powers:
                base = one_plus_w if e >= 0 else one_plus_w.inverse_series(N)
                powers[e] = (base ** abs(e)).truncate(N)
            return powers[e]

        def substitute(p: LaurentPoly) -> LaurentPoly:
            acc = LaurentPoly.zero()
            for e, c in p.coeffs.items():
                acc = acc + (factor(e) * c).shift(e)
            return acc.truncate(cut)

        result = gamma.map_entries(substitute)
        logger.debug(f"Formal reparametrization truncated at z^{cut}")
        return result

    # ------------------------------------------------------------------
    # Predicted transforms
    # ------------------------------------------------------------------

    @staticmethod
    def predict_scalar_hinge(h: Hinge, exps: ExponentData, c) -> Hinge:
        """Limit hinge of gamma(cz): P_j -> c^(-k_j) P_j"""
        c = to_rational(c)
        terms = tuple(RelationService.scale(c ** (-kj), p) for p, kj in zip(h.terms, exps.k))
        return Hinge(h.n, terms)

    @staticmethod
    def predict_scalar_glued(family: GluedFamily, exps: ExponentData, c) -> GluedFamily:
        """Glued limit of gamma(cz): L^j -> c^-(m_1+...+m_j) L^j"""
        c = to_rational(c)
        blocks = tuple(b.scale(c ** (-exps.partial_sum(j))) for j, b in enumerate(family.blocks))
        return GluedFamily(family.n, blocks)

    @staticmethod
    def predict_power(exps: ExponentData, p: int) -> ExponentData:
        return ExponentData.from_m([p * x for x in exps.m])
