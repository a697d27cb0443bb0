"""
Unit Tests for Laurent curves: exponents, factorization and limits
"""
from fractions import Fraction

import pytest

from app.config.constants import REPARAM_FORMAL, REPARAM_POWER, REPARAM_SCALAR
from app.models.hinge import OrbitLabel
from app.models.laurent import LaurentMatrix, LaurentPoly
from app.models.matrix import RationalMatrix
from app.services.hinge_service import HingeService
from app.services.linalg_service import LinAlgService
from app.services.merofam_service import MerofamService
from app.services.relation_service import RelationService
from app.utils.exceptions import PrecisionExhaustedError, SingularMatrixError, ValidationError
from oracles import laurent

E11 = RationalMatrix.from_rows([[1, 0], [0, 0]])
ONE = RationalMatrix.from_rows([[1]])


@pytest.fixture
def merofam():
    return MerofamService()


def test_laurent_arithmetic():
    """Test products, inverses and substitutions of Laurent polynomials"""
    z = LaurentPoly.monomial(1)
    assert (1 + z) * (1 - z) == 1 - z * z
    assert LaurentPoly({0: 1, 1: -1}).inverse_series(4) == LaurentPoly({0: 1, 1: 1, 2: 1, 3: 1})
    assert LaurentPoly({-1: 2, 2: 1}).scale_variable(Fraction(2)) == LaurentPoly({-1: 1, 2: 4})
    assert LaurentPoly({-1: 1}).power_substitute(3) == LaurentPoly.monomial(-3)
    assert LaurentPoly.zero().is_zero()
    assert LaurentPoly.from_pairs([[1, "1/2"], [1, "1/2"]]) == z


def test_exponents_of_diagonal_curve(merofam):
    """Test diag(1, z) has m = (0, -1)"""
    exps = merofam.exponents(LaurentMatrix.diagonal_monomials([0, 1]))
    assert exps.to_dict() == {'m': [0, -1], 'k': [0, -1], 'alpha': [1, 1]}


def test_exponents_of_framed_curves(merofam, sampler):
    """Test a(z) diag(z^-m) b(z) has exponents m"""
    for m in ([2, 0, 0], [1, 1, -1], [0, 0, 0], [3, 1, -2]):
        exps = merofam.exponents(sampler.framed_curve(3, m, degree=2))
        assert list(exps.m) == m
        assert sum(exps.alpha) == 3


def test_singular_curve_is_rejected(merofam):
    """Test identically singular curves have no exponents"""
    gamma = laurent([[{0: 1, 1: 1}, {0: 1, 1: 1}], [{0: 2}, {0: 2}]])
    with pytest.raises(SingularMatrixError):
        merofam.exponents(gamma)


def test_factorization_reassembles(merofam, sampler):
    """Test gamma = a diag(z^-m) b with invertible a(0) and b(0)"""
    for _ in range(8):
        gamma = sampler.curve(3)
        fac = merofam.factorize(gamma)
        assert fac.m == merofam.exponents(gamma).m
        assert merofam.reassembly_matches(gamma, fac)
        assert LinAlgService.is_invertible(fac.a0())
        assert LinAlgService.is_invertible(fac.b0())


def test_low_precision_reports_requirement(merofam):
    """Test a too small jet precision names a sufficient one"""
    gamma = LaurentMatrix.diagonal_monomials([0, 1])
    with pytest.raises(PrecisionExhaustedError) as info:
        merofam.factorize(gamma, precision=1)
    assert info.value.required == merofam.default_precision(gamma)
    merofam.factorize(gamma, precision=info.value.required)


def test_limit_hinge_of_diagonal_curve(merofam):
    """Test diag(1, z) converges to the canonical (1,1) hinge"""
    exps, hinge = merofam.limit_hinge(LaurentMatrix.diagonal_monomials([0, 1]))
    assert hinge == HingeService.canonical_hinge(OrbitLabel((1, 1)))
    assert hinge.terms[0] == RelationService.graph(E11)


def test_limit_hinge_of_swapped_curve(merofam):
    """Test diag(z, 1) converges to a different hinge with the same label"""
    _, hinge = merofam.limit_hinge(LaurentMatrix.diagonal_monomials([1, 0]))
    assert hinge.label().alpha == (1, 1)
    assert hinge.terms[0] == RelationService.graph(RationalMatrix.from_rows([[0, 0], [0, 1]]))


def test_limit_hinge_cross_checks(merofam, sampler):
    """Test the limit hinge equals a(0) P_alpha b(0) on sampled curves"""
    for _ in range(8):
        gamma = sampler.curve(sampler.integer(1, 3))
        exps, hinge = merofam.limit_hinge(gamma, cross_check=True)
        assert hinge.label().alpha == exps.alpha


def test_relations_outside_window_have_rank_zero(merofam):
    """Test z^k gamma degenerates for k above k_1 or below k_t"""
    gamma = LaurentMatrix.diagonal_monomials([0, 1])
    for k in (1, 2, -2, -3):
        assert merofam.is_split(merofam.limit_relation(gamma, k))
    for k in (0, -1):
        assert not merofam.is_split(merofam.limit_relation(gamma, k))


def test_limit_relation_matches_pluecker_limit(merofam, sampler):
    """Test lattice reduction against the limit of Pluecker coordinates"""
    for _ in range(6):
        gamma = sampler.laurent_curve(2)
        for k in merofam.exponents(gamma).k:
            relation = merofam.limit_relation(gamma, k)
            assert LinAlgService.pluecker(relation.space) == merofam.pluecker_limit(gamma, k)


def test_limit_glued_of_diagonal_curve(merofam):
    """Test the glued limit of diag(1, z)"""
    glued = merofam.limit_glued(LaurentMatrix.diagonal_monomials([0, 1]))
    assert [b.matrix for b in glued.blocks] == [ONE, E11, ONE]


def test_limit_glued_matches_glued_hinge(merofam, sampler):
    """Test the direct glued limit equals the glued limit hinge"""
    for _ in range(6):
        gamma = sampler.curve(3)
        direct = merofam.limit_glued(gamma, cross_check=False)
        _, hinge = merofam.limit_hinge(gamma, cross_check=False)
        assert direct == HingeService.glue(hinge)


def test_scalar_reparametrization(merofam, sampler):
    """Test gamma(cz) scales P_j by c^-k_j and L^j by c^-(m_1+...+m_j)"""
    c = Fraction(2)
    for _ in range(5):
        gamma = sampler.curve(2)
        exps, hinge = merofam.limit_hinge(gamma)
        moved = merofam.reparametrize(gamma, REPARAM_SCALAR, c)
        assert merofam.limit_hinge(moved)[1] == merofam.predict_scalar_hinge(hinge, exps, c)
        assert merofam.limit_glued(moved) == merofam.predict_scalar_glued(merofam.limit_glued(gamma), exps, c)


def test_power_reparametrization(merofam, sampler):
    """Test gamma(z^p) multiplies exponents by p and keeps the hinge"""
    for _ in range(5):
        gamma = sampler.curve(2)
        exps, hinge = merofam.limit_hinge(gamma)
        moved = merofam.reparametrize(gamma, REPARAM_POWER, 3)
        moved_exps, moved_hinge = merofam.limit_hinge(moved)
        assert moved_exps == merofam.predict_power(exps, 3)
        assert moved_hinge == hinge


def test_formal_reparametrization_precision(merofam, sampler):
    """Test the default truncation gives the limit of a longer truncation"""
    for _ in range(5):
        gamma = sampler.curve(3)
        N = merofam.formal_precision(gamma)
        assert N == merofam.default_precision(gamma)
        short = merofam.reparametrize(gamma, REPARAM_FORMAL, [2, "-1/3"], precision=N)
        longer = merofam.reparametrize(gamma, REPARAM_FORMAL, [2, "-1/3"], precision=N + merofam.precision_bump)
        assert merofam.limit_hinge(short) == merofam.limit_hinge(longer) == merofam.limit_hinge(gamma)


def test_formal_reparametrization(merofam, sampler):
    """Test z -> z + c_2 z^2 + c_3 z^3 keeps exponents and hinge"""
    for _ in range(5):
        gamma = sampler.framed_curve(2)
        exps, hinge = merofam.limit_hinge(gamma)
        moved = merofam.reparametrize(gamma, REPARAM_FORMAL, ["1/2", -1])
        moved_exps, moved_hinge = merofam.limit_hinge(moved)
        assert moved_exps == exps
        assert moved_hinge == hinge


def test_reparametrization_arguments(merofam):
    """Test invalid reparametrizations are rejected"""
    gamma = LaurentMatrix.identity(2)
    with pytest.raises(ValidationError):
        merofam.reparametrize(gamma, REPARAM_POWER, 0)
    with pytest.raises(ValidationError):
        merofam.reparametrize(gamma, REPARAM_SCALAR, 0)
    with pytest.raises(ValidationError):
        merofam.reparametrize(gamma, 'shift', 1)


def test_relation_window_matches_completed_hinge(merofam):
    """Test R_k runs through Q_0, P_1, Q_1, P_2, Q_2 as k decreases"""
    gamma = LaurentMatrix.diagonal_monomials([-1, 1])
    completed = merofam.completed_limit(gamma)
    q, p = completed.rank_zero_terms, completed.hinge_terms
    window = dict(merofam.relation_sequence(gamma, -3, 3))
    assert window[3] == window[2] == q[0]
    assert window[1] == p[0]
    assert window[0] == q[1]
    assert window[-1] == p[1]
    assert window[-2] == window[-3] == q[2]
    with pytest.raises(ValidationError):
        merofam.relation_sequence(gamma, 1, 0)
