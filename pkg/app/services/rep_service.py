"""
Polynomial Representation Service
"""
import logging
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import comb, prod
from typing import Dict, List, Sequence, Tuple

from app.models.exterior import wedge_basis, wedge_position
from app.models.hinge import GluedFamily
from app.models.laurent import LaurentMatrix, LaurentPoly
from app.models.matrix import RationalMatrix, to_rational
from app.models.rep import (
    BlockOperator, CompositeRep, RepOperator, RepSpace, Signature, SparseVector, TensorKey,
)
from app.services.exterior_service import ExteriorService
from app.services.hinge_service import HingeService
from app.utils.exceptions import (
    DimensionMismatchError, InternalInvariantError, ScaleLimitError, ValidationError,
)

logger = logging.getLogger(__name__)


@lru_cache(maxsize=None)
def _count_patterns(top: Tuple[int, ...]) -> int:
    if len(top) <= 1:
        return 1
    ranges = [range(top[i + 1], top[i] + 1) for i in range(len(top) - 1)]
    return sum(_count_patterns(row) for row in product(*ranges))


class RepService:
    """rho_nu as the cyclic span of the highest vector in a tensor product of exterior powers"""

    def __init__(self, merofam_service=None, ambient_cap: int = 20000):
        self.merofam = merofam_service
        self.ambient_cap = ambient_cap
        # (signature, n) -> RepSpace
        self._cache: Dict[Tuple[Tuple[int, ...], int], RepSpace] = {}

    # ------------------------------------------------------------------
    # Dimension oracles
    # ------------------------------------------------------------------

    @staticmethod
    def weyl_dimension(nu: Signature) -> int:
        """prod_(i<j) (nu_i - nu_j + j - i) / (j - i)"""
        n = nu.n
        numerator, denominator = 1, 1
        for i in range(n):
            for j in range(i + 1, n):
                numerator *= nu.values[i] - nu.values[j] + j - i
                denominator *= j - i
        return numerator // denominator

    @staticmethod
    def pattern_count(nu: Signature) -> int:
        """Gelfand-Tsetlin patterns with top row nu, i.e. semistandard tableaux with entries in 1..n."""
        return _count_patterns(nu.values)

    @staticmethod
    def ambient_dimension(nu: Signature, n: int) -> int:
        return prod(comb(n, j) for j in nu.padded(n).factor_degrees())

    # ------------------------------------------------------------------
    # Sparse tensor arithmetic
    # ------------------------------------------------------------------

    @staticmethod
    def _add_into(target: SparseVector, key: TensorKey, value):
        total = target.get(key)
        total = value if total is None else total + value
        if total:
            target[key] = total
        else:
            target.pop(key, None)

    @staticmethod
    def _unit_action(n: int, j: int, a: int, b: int) -> Dict[int, Tuple[int, int]]:
        """E_ab on Lambda^j: wedge position -> (new position, sign)"""
        basis, position = wedge_basis(n, j), wedge_position(n, j)
        action = {}
        for idx, wedge in enumerate(basis):
            if b not in wedge or a in wedge:
                continue
            between = sum(1 for t in wedge if min(a, b) < t < max(a, b))
            new = tuple(sorted(a if t == b else t for t in wedge))
            action[idx] = (position[new], -1 if between % 2 else 1)
        return action

    @staticmethod
    def _apply_unit(vector: SparseVector, factors: Sequence[int], actions: Dict[int, Dict]) -> SparseVector:
        """Leibniz rule over the tensor factors."""
        out: SparseVector = {}
        for key, c in vector.items():
            for f, j in enumerate(factors):
                hit = actions[j].get(key[f])
                if hit is None:
                    continue
                new_position, sign = hit
                new_key = key[:f] + (new_position,) + key[f + 1:]
                RepService._add_into(out, new_key, c * sign)
        return out

    @staticmethod
    def _apply_factors(vector: SparseVector, factors: Sequence[int], matrices: Dict[int, list]) -> SparseVector:
        """(X_1 (x) ... (x) X_F) vector, one tensor slot at a time; values may be Fractions or LaurentPolys."""
        columns = {}
        for j, matrix in matrices.items():
            columns[j] = [
                [(r, matrix[r][c]) for r in range(len(matrix)) if matrix[r][c]]
                for c in range(len(matrix[0]) if matrix else 0)
            ]
        current = vector
        for f, j in enumerate(factors):
            out: SparseVector = {}
            for key, c in current.items():
                for r, entry in columns[j][key[f]]:
                    RepService._add_into(out, key[:f] + (r,) + key[f + 1:], c * entry)
            current = out
        return current

    @staticmethod
    def _reduce(rows: Dict[TensorKey, SparseVector], vector: SparseVector) -> SparseVector:
        """Subtract echelon rows until the leading key is not a pivot."""
        vector = dict(vector)
        while vector:
            lead = min(vector)
            row = rows.get(lead)
            if row is None:
                break
            c = vector[lead]
            for key, value in row.items():
                RepService._add_into(vector, key, -c * value)
        return vector

    # ------------------------------------------------------------------
    # Building H_nu
    # ------------------------------------------------------------------

    def build_rep(self, nu: Signature, n: int = None) -> RepSpace:
        n = nu.n if n is None else n
        nu = nu.padded(n)
        cache_key = (nu.values, n)
        if cache_key in self._cache:
            return self._cache[cache_key]

        factors = nu.factor_degrees()
        ambient = self.ambient_dimension(nu, n)
        if ambient > self.ambient_cap:
            raise ScaleLimitError(f"signature {nu} needs {ambient} ambient coordinates (cap {self.ambient_cap})")

        actions = {
            (a, b): {j: self._unit_action(n, j, a, b) for j in set(factors)}
            for a in range(n) for b in range(n) if a != b
        }
        highest_key = (0,) * len(factors)
        rows: Dict[TensorKey, SparseVector] = {}
        queue: List[SparseVector] = [{highest_key: Fraction(1)}]
        while queue:
            residual = self._reduce(rows, queue.pop())
            if not residual:
                continue
            lead = min(residual)
            c = residual[lead]
            residual = {k: v / c for k, v in residual.items()}
            rows[lead] = residual
            for action in actions.values():
                image = self._apply_unit(residual, factors, action)
                if image:
                    queue.append(image)

        # Gauss-Jordan back substitution, largest pivot first
        pivots = sorted(rows)
        for p in reversed(pivots):
            for q in pivots:
                if q < p and p in rows[q]:
                    c = rows[q][p]
                    for key, value in rows[p].items():
                        self._add_into(rows[q], key, -c * value)

        expected = self.weyl_dimension(nu)
        if len(pivots) != expected:
            raise InternalInvariantError(f"H_{nu} has dimension {len(pivots)}, expected {expected}")
        rep = RepSpace(nu, n, factors, ambient, tuple(rows[p] for p in pivots), tuple(pivots), highest_key)
        self._cache[cache_key] = rep
        logger.info(f"Built H_{nu} for n={n}: dim {rep.dim} in {ambient} ambient coordinates")
        return rep

    # ------------------------------------------------------------------
    # Operators
    # ------------------------------------------------------------------

    def coordinates(self, rep: RepSpace, vector: SparseVector) -> list:
        """Coordinates in the stored basis; the vector must lie in H_nu."""
        coords = [vector.get(p, 0) for p in rep.pivots]
        residual = dict(vector)
        for c, row in zip(coords, rep.rows):
            if c:
                for key, value in row.items():
                    self._add_into(residual, key, -c * value)
        if residual:
            raise InternalInvariantError(f"vector leaves H_{rep.signature}")
        return coords

    def _operator_columns(self, rep: RepSpace, matrices: Dict[int, list]) -> List[list]:
        """Columns of the restricted operator (matrix[i][j] at row i, column j)."""
        columns = [self.coordinates(rep, self._apply_factors(row, rep.factors, matrices)) for row in rep.rows]
        return [[columns[j][i] for j in range(rep.dim)] for i in range(rep.dim)]

    def _to_operator(self, rep: RepSpace, entries: List[list]) -> RepOperator:
        return RepOperator(rep.signature, RationalMatrix.from_rows(
            [[Fraction(x) for x in row] for row in entries], rep.dim
        ))

    def rho_group(self, rep: RepSpace, g: RationalMatrix) -> RepOperator:
        if g.shape != (rep.n, rep.n):
            raise DimensionMismatchError(f"rho_{rep.signature} needs a {rep.n}x{rep.n} matrix")
        matrices = {j: ExteriorService.lambda_cha(g, j).matrix.to_lists() for j in set(rep.factors)}
        return self._to_operator(rep, self._operator_columns(rep, matrices))

    def rho_semigroup(self, rep: RepSpace, family: GluedFamily) -> RepOperator:
        """Restriction of the tensor product of the blocks A_j to H_nu."""
        if family.n != rep.n:
            raise DimensionMismatchError(f"glued family over Q^{family.n} for rho_{rep.signature} over Q^{rep.n}")
        matrices = {j: family.block(j).matrix.to_lists() for j in set(rep.factors)}
        return self._to_operator(rep, self._operator_columns(rep, matrices))

    def rho_laurent(self, rep: RepSpace, gamma: LaurentMatrix) -> List[List[LaurentPoly]]:
        """rho_nu(gamma(z)) with Laurent polynomial entries."""
        from app.services.merofam_service import MerofamService
        matrices = {
            j: [list(r) for r in MerofamService.minors_matrix(gamma, j).entries]
            for j in set(rep.factors)
        }
        entries = self._operator_columns(rep, matrices)
        return [[x if isinstance(x, LaurentPoly) else LaurentPoly.constant(x) for x in row] for row in entries]

    def rep_limit(self, rep: RepSpace, gamma: LaurentMatrix, cross_check: bool = True) -> RepOperator:
        """Constant term of z^(sum m_i nu_i) rho_nu(gamma(z))"""
        if self.merofam is None:
            raise ValidationError("representation limits need a meromorphic family service")
        if gamma.n != rep.n:
            raise DimensionMismatchError(f"a {gamma.n}x{gamma.n} curve for rho_{rep.signature} over Q^{rep.n}")
        exps = self.merofam.exponents(gamma)
        v = rep.signature.weight(exps.m)
        entries = [[p.coefficient(-v) for p in row] for row in self.rho_laurent(rep, gamma)]
        result = self._to_operator(rep, entries)
        if result.is_zero():
            raise InternalInvariantError(f"representation limit vanishes for nu={rep.signature}")
        if cross_check:
            _, hinge = self.merofam.limit_hinge(gamma, cross_check=False)
            other = self.rho_semigroup(rep, HingeService.glue(hinge))
            if other != result:
                raise InternalInvariantError("representation limit differs from rho of the glued limit hinge")
        logger.info(f"Representation limit for nu={rep.signature} at weight {v}")
        return result

    @staticmethod
    def predict_scalar_limit(op: RepOperator, exps, c) -> RepOperator:
        """Limit for gamma(cz): multiplied by c^-(sum m_j nu_j)"""
        c = to_rational(c)
        v = op.signature.weight(exps.m)
        return RepOperator(op.signature, op.matrix.scale(c ** (-v)))

    # ------------------------------------------------------------------
    # Reducible representations
    # ------------------------------------------------------------------

    def zeta_direct_sum(self, signatures: Sequence[Signature], n: int) -> CompositeRep:
        if not signatures:
            raise ValidationError("a composite representation needs at least one signature")
        return CompositeRep(tuple(self.build_rep(nu, n) for nu in signatures))

    def zeta_apply(self, zeta: CompositeRep, element) -> BlockOperator:
        """Block-diagonal zeta(g) for a matrix g or zeta(A) for a glued family A."""
        if isinstance(element, GluedFamily):
            return BlockOperator(tuple(self.rho_semigroup(rep, element) for rep in zeta.spaces))
        return BlockOperator(tuple(self.rho_group(rep, element) for rep in zeta.spaces))
