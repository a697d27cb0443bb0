"""
Sea Urchin Service
"""
import logging
from fractions import Fraction
from math import gcd
from typing import List, Optional, Sequence, Tuple

from app.models.hinge import OrbitLabel
from app.models.laurent import LaurentMatrix
from app.models.matrix import RationalMatrix
from app.models.rep import BlockOperator, RepOperator
from app.models.urchin import CompactificationSpec, Interior, Projection, Spike, UrchinPoint
from app.services.exterior_service import ExteriorService
from app.services.hinge_service import HingeService
from app.services.linalg_service import LinAlgService
from app.services.relation_service import RelationService
from app.utils.exceptions import InternalInvariantError, ValidationError

logger = logging.getLogger(__name__)


def _bezout(values: Sequence[int]) -> Tuple[int, List[int]]:
    """g = gcd(values) >= 0 and integers s with sum s_i values_i = g"""
    g, coeffs = 0, []
    for value in values:
        # extended Euclid on (g, value)
        old_r, r, old_s, s, old_t, t = g, value, 1, 0, 0, 1
        while r:
            q = old_r // r
            old_r, r = r, old_r - q * r
            old_s, s = s, old_s - q * s
            old_t, t = t, old_t - q * t
        if old_r < 0:
            old_r, old_s, old_t = -old_r, -old_s, -old_t
        coeffs = [c * old_s for c in coeffs] + [old_t]
        g = old_r
    return g, coeffs


def _integer_root(x: int, g: int) -> Optional[int]:
    """The non-negative integer r with r^g = x, if any."""
    if x < 0:
        return None
    lo, hi = 0, 1
    while hi ** g <= x:
        hi *= 2
    while lo < hi:
        mid = (lo + hi) // 2
        if mid ** g < x:
            lo = mid + 1
        else:
            hi = mid
    return lo if lo ** g == x else None


def rational_root(t: Fraction, g: int) -> Optional[Fraction]:
    """Some rational c with c^g = t, or None."""
    if g == 1:
        return t
    sign = 1
    if t < 0:
        if g % 2 == 0:
            return None
        sign, t = -1, -t
    p = _integer_root(t.numerator, g)
    q = _integer_root(t.denominator, g)
    if p is None or q is None:
        return None
    return sign * Fraction(p, q)


class UrchinService:
    """Points of the sea urchin and their images in projective compactifications"""

    def __init__(self, merofam_service, rep_service):
        self.merofam = merofam_service
        self.reps = rep_service

    # ------------------------------------------------------------------
    # Points
    # ------------------------------------------------------------------

    def curve_limit(self, gamma: LaurentMatrix) -> UrchinPoint:
        exps = self.merofam.exponents(gamma)
        if not any(exps.m):
            g = gamma.coefficient_matrix(0)
            if gamma.min_exponent() < 0 or not LinAlgService.is_invertible(g):
                raise InternalInvariantError("zero exponents but the family is not invertible at 0")
            logger.info("Curve limit is an interior point")
            return Interior(g)
        u = 0
        for value in exps.m:
            u = gcd(u, value)
        m = tuple(value // u for value in exps.m)
        _, hinge = self.merofam.limit_hinge(gamma)
        logger.info(f"Curve limit is a spike m={m} (gcd {u}), orbit {hinge.label()}")
        return Spike(m, hinge)

    @staticmethod
    def spike_scalar(p: Spike, q: Spike) -> Optional[Fraction]:
        """
        A rational c with q.P_j = c^k_j p.P_j for every j, or None.

        Ratios for k_j = 0 must be 1; the rest pin c^g for g = gcd of the
        nonzero k_j, which must then have a rational g-th root.
        """
        if p.m != q.m:
            raise ValidationError(f"spikes with different exponents {p.m} and {q.m}")
        if p.hinge.label() != q.hinge.label():
            return None
        ratios = []
        for a, b in zip(p.hinge.terms, q.hinge.terms):
            r = RelationService.relation_ratio(a, b)
            if r is None:
                return None
            ratios.append(r)
        k = p.k
        if any(kj == 0 and r != 1 for kj, r in zip(k, ratios)):
            return None
        pinned = [(kj, r) for kj, r in zip(k, ratios) if kj != 0]
        if not pinned:
            return Fraction(1)
        g, coeffs = _bezout([kj for kj, _ in pinned])
        t = Fraction(1)
        for s, (_, r) in zip(coeffs, pinned):
            t *= r ** s
        if any(t ** (kj // g) != r for kj, r in pinned):
            return None
        return rational_root(t, g)

    def spike_equal(self, p: UrchinPoint, q: UrchinPoint) -> bool:
        if not isinstance(p, Spike) or not isinstance(q, Spike):
            raise ValidationError("spike equality needs two spikes")
        return self.spike_scalar(p, q) is not None

    def urchin_equal(self, p: UrchinPoint, q: UrchinPoint) -> bool:
        if isinstance(p, Interior) and isinstance(q, Interior):
            return p.g == q.g
        if isinstance(p, Spike) and isinstance(q, Spike):
            return p.m == q.m and self.spike_equal(p, q)
        return False

    # ------------------------------------------------------------------
    # Projections
    # ------------------------------------------------------------------

    def _zeta(self, spec: CompactificationSpec, n: int):
        return self.reps.zeta_direct_sum(spec.signatures, n)

    def project(self, point: UrchinPoint, spec: CompactificationSpec) -> Projection:
        if isinstance(point, Interior):
            zeta = self._zeta(spec, point.g.rows)
            return Projection(spec, self.reps.zeta_apply(zeta, point.g), tuple(0 for _ in spec.signatures))

        zeta = self._zeta(spec, point.hinge.n)
        weights = tuple(rep.signature.weight(point.m) for rep in zeta.spaces)
        top = max(weights)
        family = HingeService.glue(point.hinge)
        blocks = []
        for rep, v in zip(zeta.spaces, weights):
            if v == top:
                blocks.append(self.reps.rho_semigroup(rep, family))
            else:
                blocks.append(RepOperator(rep.signature, RationalMatrix.zeros(rep.dim, rep.dim)))
        operator = BlockOperator(tuple(blocks))
        if operator.is_zero():
            raise InternalInvariantError(f"projection of a spike to {spec} vanishes")
        logger.info(f"Projected spike m={point.m} to {spec}: weights {weights}")
        return Projection(spec, operator, weights)

    def limit_of_zeta(self, gamma: LaurentMatrix, spec: CompactificationSpec) -> Projection:
        """Lowest-order coefficient of zeta(gamma(z)) computed directly, no hinge involved."""
        exps = self.merofam.exponents(gamma)
        zeta = self._zeta(spec, gamma.n)
        weights = tuple(rep.signature.weight(exps.m) for rep in zeta.spaces)
        top = max(weights)
        blocks = []
        for rep in zeta.spaces:
            entries = [[p.coefficient(-top) for p in row] for row in self.reps.rho_laurent(rep, gamma)]
            blocks.append(RepOperator(rep.signature, RationalMatrix.from_rows(entries, rep.dim)))
        return Projection(spec, BlockOperator(tuple(blocks)), weights)

    @staticmethod
    def _flatten(operator: BlockOperator) -> List[Fraction]:
        return [x for b in operator.blocks for x in ExteriorService.flatten(b.matrix)]

    @staticmethod
    def projectively_equal(a: Projection, b: Projection) -> bool:
        """Equal up to one nonzero scalar across all blocks."""
        if a.spec != b.spec:
            return False
        shapes_a = [blk.matrix.shape for blk in a.operator.blocks]
        shapes_b = [blk.matrix.shape for blk in b.operator.blocks]
        if shapes_a != shapes_b:
            return False
        return LinAlgService.proportionality(
            UrchinService._flatten(a.operator), UrchinService._flatten(b.operator)
        ) is not None

    def commutes(self, gamma: LaurentMatrix, spec: CompactificationSpec) -> bool:
        """project(curve_limit(gamma)) against the direct limit of zeta(gamma(z))"""
        return self.projectively_equal(self.project(self.curve_limit(gamma), spec), self.limit_of_zeta(gamma, spec))

    # ------------------------------------------------------------------
    # Separation
    # ------------------------------------------------------------------

    def separation_table(self, gamma1: LaurentMatrix, gamma2: LaurentMatrix,
                         specs: Sequence[CompactificationSpec]) -> dict:
        """Per-compactification separation flags; sampled evidence, never a proof of equality."""
        p1, p2 = self.curve_limit(gamma1), self.curve_limit(gamma2)
        same = self.urchin_equal(p1, p2)
        rows = []
        for spec in specs:
            separated = not self.projectively_equal(self.project(p1, spec), self.project(p2, spec))
            if same and separated:
                raise InternalInvariantError(f"equal urchin points separated by {spec}")
            rows.append({'signatures': spec.to_dict(), 'separated': separated})
        logger.info(f"Separation over {len(specs)} compactification(s): same urchin point = {same}")
        return {
            'same_urchin_point': same,
            'separated': any(r['separated'] for r in rows),
            'specs': rows,
            'points': [p1.to_dict(), p2.to_dict()],
        }

    def separate(self, gamma1: LaurentMatrix, gamma2: LaurentMatrix,
                 specs: Sequence[CompactificationSpec]) -> bool:
        return self.separation_table(gamma1, gamma2, specs)['separated']

    # ------------------------------------------------------------------
    # Bookkeeping
    # ------------------------------------------------------------------

    @staticmethod
    def spike_parameter_count(label: OrbitLabel) -> int:
        """n^2 - t for the projective hinge orbit, plus t term scalars, minus the equivalence."""
        return HingeService.spike_dimension(label)
