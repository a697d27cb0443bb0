"""
Property Selftest Service
"""
import logging
import time
from typing import Callable, Dict, List

from app.config.constants import REPARAM_FORMAL, REPARAM_POWER, REPARAM_SCALAR
from app.models.relation import is_null
from app.models.rep import Signature
from app.services.exterior_service import ExteriorService
from app.services.hinge_service import HingeService
from app.services.relation_service import RelationService
from app.services.sampler_service import SamplerService
from app.utils.exceptions import HingeLibError

logger = logging.getLogger(__name__)


class CheckFailed(Exception):
    """A sampled property did not hold."""


def _require(condition: bool, message: str):
    if not condition:
        raise CheckFailed(message)


def signatures_up_to(n: int, top: int) -> List[Signature]:
    """Every signature of length n with entries <= top, except zero."""
    out = []

    def build(prefix, limit):
        if len(prefix) == n:
            if any(prefix):
                out.append(Signature(tuple(prefix)))
            return
        for value in range(limit, -1, -1):
            build(prefix + [value], value)

    build([], top)
    return out


class SelftestService:
    """Runs the sampled property suite behind the selftest command"""

    def __init__(self, engine, sampler: SamplerService, samples: int):
        self.engine = engine
        self.sampler = sampler
        self.samples = samples

    # ------------------------------------------------------------------
    # Checks; each returns the number of cases it examined
    # ------------------------------------------------------------------

    def check_category_laws(self) -> int:
        s = self.sampler
        for _ in range(self.samples):
            dims = [s.integer(1, 4) for _ in range(4)]
            p = s.relation(dims[0], dims[1])
            q = s.relation(dims[1], dims[2])
            r = s.relation(dims[2], dims[3])
            left = RelationService.compose(r, RelationService.compose(q, p))
            right = RelationService.compose(RelationService.compose(r, q), p)
            _require(left == right, "composition is not associative")
            a = s.matrix(dims[1], dims[0])
            b = s.matrix(dims[2], dims[1])
            _require(
                RelationService.compose(RelationService.graph(b), RelationService.graph(a))
                == RelationService.graph(b @ a),
                "graph composition is not a homomorphism",
            )
        return self.samples

    def check_lambda_multiplicative(self) -> int:
        s = self.sampler
        for _ in range(self.samples):
            n = s.integer(1, 4)
            p, q = s.gamma_relation(n), s.gamma_relation(n)
            qp = RelationService.compose(q, p)
            product = ExteriorService.compose_families(
                ExteriorService.lambda_relation(q), ExteriorService.lambda_relation(p)
            )
            if is_null(qp):
                _require(product.is_zero(), "lambda(Q) lambda(P) is nonzero for a null product")
                continue
            c = ExteriorService.proportionality_scalar(ExteriorService.lambda_relation(qp), product)
            _require(c is not None and c != 0, "lambda(Q) lambda(P) is not a nonzero multiple of lambda(QP)")
        return self.samples

    def check_hinge_alternative(self) -> int:
        s = self.sampler
        for _ in range(self.samples):
            h = s.hinge(s.integer(1, 4))
            for m in range(h.n + 1):
                HingeService.hinge_lambda_m(h, m)
        return self.samples

    def check_semigroup(self) -> int:
        s = self.sampler
        for _ in range(self.samples):
            n = s.integer(1, 3)
            a, b = s.glued(n), s.glued(n)
            product = HingeService.glued_product(a, b)
            _require(product.base is not None, "glued product lost its weak hinge")
            _require(HingeService.glued_lies_over(product, product.base), "glued product is not over the weak product")
            _require(HingeService.well_glued(product, product.base), "glued product is not well glued")
            for m in range(n + 1):
                expected = HingeService.weak_lambda_m(a.base, m) @ HingeService.weak_lambda_m(b.base, m)
                _require(
                    ExteriorService.proportionality_scalar(HingeService.weak_lambda_m(product.base, m), expected)
                    is not None,
                    f"lambda^{m} is not multiplicative on the weak product",
                )
        return self.samples

    def check_exponents(self) -> int:
        s, merofam = self.sampler, self.engine.merofam
        for _ in range(self.samples):
            gamma = s.curve(s.integer(1, 4))
            exps = merofam.exponents(gamma)
            fac = merofam.factorize(gamma)
            _require(fac.m == exps.m, f"factorization exponents {fac.m} differ from {exps.m}")
            _require(merofam.reassembly_matches(gamma, fac), "factorization does not reassemble")
        return self.samples

    def check_limits(self) -> int:
        s, merofam = self.sampler, self.engine.merofam
        for _ in range(self.samples):
            gamma = s.curve(s.integer(1, 3))
            merofam.limit_hinge(gamma, cross_check=True)
            merofam.limit_glued(gamma, cross_check=True)
        return self.samples

    def check_rep_limits(self) -> int:
        s, reps = self.sampler, self.engine.reps
        cases = 0
        for _ in range(self.samples):
            n = s.integer(1, 3)
            gamma = s.curve(n)
            for nu in signatures_up_to(n, 3):
                reps.rep_limit(reps.build_rep(nu, n), gamma, cross_check=True)
                cases += 1
        return cases

    def check_rep_dimensions(self) -> int:
        reps = self.engine.reps
        cases = 0
        for n in range(1, 5):
            for nu in signatures_up_to(n, 4):
                rep = reps.build_rep(nu, n)
                expected = reps.pattern_count(nu)
                _require(rep.dim == expected, f"dim H_{nu} is {rep.dim}, {expected} tableaux")
                cases += 1
        return cases

    def check_urchin(self) -> int:
        s, merofam, urchin = self.sampler, self.engine.merofam, self.engine.urchin
        cases = 0
        for _ in range(max(1, self.samples // 5)):
            n = s.integer(1, 3)
            gamma = s.curve(n)
            point = urchin.curve_limit(gamma)
            variants = [
                merofam.reparametrize(gamma, REPARAM_FORMAL, [s.rational(), s.rational()]),
                merofam.reparametrize(gamma, REPARAM_POWER, s.integer(1, 3)),
                merofam.reparametrize(gamma, REPARAM_SCALAR, s.rational(allow_zero=False)),
            ]
            for other in variants:
                _require(urchin.urchin_equal(point, urchin.curve_limit(other)), "limit moved under reparametrization")
            for _ in range(5):
                spec = s.spec(n)
                _require(urchin.commutes(gamma, spec), f"projection to {spec} does not commute with the limit")
                cases += 1
        return cases

    def check_orbit_arithmetic(self) -> int:
        cases = 0
        for n in range(1, 11):
            _require(sum(1 for _ in HingeService.compositions(n)) == 2 ** (n - 1), f"composition count for n={n}")
            cases += 1
        for n in range(1, 7):
            for label in HingeService.compositions(n):
                _require(HingeService.spike_dimension(label) == n * n - 1, f"spike dimension for {label}")
                cases += 1
        return cases

    # ------------------------------------------------------------------
    # Runner
    # ------------------------------------------------------------------

    def checks(self) -> Dict[str, Callable[[], int]]:
        return {
            'category_laws': self.check_category_laws,
            'lambda_multiplicative': self.check_lambda_multiplicative,
            'hinge_alternative': self.check_hinge_alternative,
            'semigroup': self.check_semigroup,
            'exponents': self.check_exponents,
            'limits': self.check_limits,
            'rep_limits': self.check_rep_limits,
            'rep_dimensions': self.check_rep_dimensions,
            'urchin': self.check_urchin,
            'orbit_arithmetic': self.check_orbit_arithmetic,
        }

    def run(self, only: List[str] = None) -> List[dict]:
        rows = []
        for name, check in self.checks().items():
            if only and name not in only:
                continue
            start = time.perf_counter()
            try:
                cases, passed, detail = check(), True, ''
            except (CheckFailed, HingeLibError) as e:
                logger.error(f"Check {name} failed: {e}")
                cases, passed, detail = 0, False, f"{type(e).__name__}: {e}"
            elapsed = round(time.perf_counter() - start, 3)
            logger.info(f"Check {name}: {'passed' if passed else 'FAILED'} in {elapsed}s")
            rows.append({'check': name, 'passed': passed, 'cases': cases, 'seconds': elapsed, 'detail': detail})
        return rows
