"""
Random Instance Service
"""
import logging
import random
from fractions import Fraction
from typing import List, Optional, Sequence

from app.models.hinge import GluedFamily, Hinge, OrbitLabel
from app.models.laurent import LaurentMatrix, LaurentPoly
from app.models.matrix import RationalMatrix
from app.models.relation import LinearRelation
from app.models.rep import Signature
from app.models.urchin import CompactificationSpec
from app.services.hinge_service import HingeService
from app.services.linalg_service import LinAlgService
from app.services.relation_service import RelationService

logger = logging.getLogger(__name__)


class SamplerService:
    """Reproducible random matrices, relations, hinges and Laurent curves"""

    def __init__(self, seed: Optional[int] = None, entry_range: int = 3):
        self.seed = seed
        self.rng = random.Random(seed)
        self.entry_range = entry_range

    def integer(self, low: int = None, high: int = None) -> int:
        low = -self.entry_range if low is None else low
        high = self.entry_range if high is None else high
        return self.rng.randint(low, high)

    def rational(self, allow_zero: bool = True) -> Fraction:
        while True:
            value = Fraction(self.integer(), self.rng.choice((1, 1, 1, 2, 3)))
            if allow_zero or value:
                return value

    # ------------------------------------------------------------------
    # Linear algebra
    # ------------------------------------------------------------------

    def matrix(self, rows: int, cols: int, density: float = 0.7) -> RationalMatrix:
        return RationalMatrix.from_rows([
            [self.rational() if self.rng.random() < density else 0 for _ in range(cols)]
            for _ in range(rows)
        ], cols)

    def invertible(self, n: int) -> RationalMatrix:
        while True:
            m = self.matrix(n, n, density=0.8)
            if LinAlgService.is_invertible(m):
                return m

    def relation(self, dim_v: int, dim_w: int, dim: Optional[int] = None) -> LinearRelation:
        """Random subspace of V (+) W; sparse rows so degenerate relations show up."""
        dim = self.rng.randint(0, dim_v + dim_w) if dim is None else dim
        while True:
            rows = self.matrix(dim, dim_v + dim_w, density=self.rng.choice((0.3, 0.5, 0.8))).entries
            p = RelationService.from_vectors(dim_v, dim_w, rows)
            if p.dim == dim:
                return p

    def gamma_relation(self, n: int) -> LinearRelation:
        return self.relation(n, n, n)

    # ------------------------------------------------------------------
    # Hinges
    # ------------------------------------------------------------------

    def composition(self, n: int) -> OrbitLabel:
        alpha, rest = [], n
        while rest:
            part = self.rng.randint(1, rest)
            alpha.append(part)
            rest -= part
        return OrbitLabel(tuple(alpha))

    def hinge(self, n: int, label: Optional[OrbitLabel] = None) -> Hinge:
        label = label or self.composition(n)
        return HingeService.act(self.invertible(n), HingeService.canonical_hinge(label), self.invertible(n))

    def glued(self, n: int) -> GluedFamily:
        return HingeService.glue(self.hinge(n))

    # ------------------------------------------------------------------
    # Curves
    # ------------------------------------------------------------------

    def exponent_vector(self, n: int, spread: int = 2) -> List[int]:
        return sorted((self.integer(-spread, spread) for _ in range(n)), reverse=True)

    def jet(self, n: int, degree: int = 1) -> LaurentMatrix:
        """a_0 + a_1 z + ... with a_0 invertible"""
        a0 = self.invertible(n)
        entries = []
        for i in range(n):
            row = []
            for j in range(n):
                coeffs = {0: a0[i, j]}
                for e in range(1, degree + 1):
                    coeffs[e] = self.rational() if self.rng.random() < 0.4 else 0
                row.append(LaurentPoly(coeffs))
            entries.append(tuple(row))
        return LaurentMatrix(n, n, tuple(entries))

    def framed_curve(self, n: int, m: Optional[Sequence[int]] = None, degree: int = 1) -> LaurentMatrix:
        """a(z) diag(z^-m) b(z) with random invertible jets a, b."""
        m = list(m) if m is not None else self.exponent_vector(n)
        return self.jet(n, degree) @ LaurentMatrix.diagonal_monomials([-x for x in m]) @ self.jet(n, degree)

    def laurent_curve(self, n: int, low: int = -3, high: int = 3) -> LaurentMatrix:
        """Entries with random exponents in [low, high]; resampled until det != 0."""
        while True:
            entries = []
            for _ in range(n):
                row = []
                for _ in range(n):
                    coeffs = {}
                    for _ in range(self.rng.randint(0, 2)):
                        coeffs[self.rng.randint(low, high)] = self.rational(allow_zero=False)
                    row.append(LaurentPoly(coeffs))
                entries.append(tuple(row))
            gamma = LaurentMatrix(n, n, tuple(entries))
            if not gamma.determinant().is_zero():
                return gamma

    def curve(self, n: int) -> LaurentMatrix:
        if self.rng.random() < 0.5:
            return self.framed_curve(n)
        return self.laurent_curve(n)

    # ------------------------------------------------------------------
    # Representations
    # ------------------------------------------------------------------

    def signature(self, n: int, top: int = 2) -> Signature:
        return Signature(tuple(sorted((self.rng.randint(0, top) for _ in range(n)), reverse=True)))

    def spec(self, n: int, count: Optional[int] = None, top: int = 2) -> CompactificationSpec:
        count = count or self.rng.randint(1, 2)
        signatures = []
        while len(signatures) < count:
            nu = self.signature(n, top)
            if any(nu.values) and nu not in signatures:
                signatures.append(nu)
        return CompactificationSpec(tuple(signatures))
