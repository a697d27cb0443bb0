"""
Unit Tests for polynomial representations rho_nu
"""
from fractions import Fraction

import pytest

from app.config.constants import REPARAM_SCALAR
from app.models.laurent import LaurentMatrix
from app.models.matrix import RationalMatrix
from app.models.rep import Signature
from app.services.hinge_service import HingeService
from app.services.merofam_service import MerofamService
from app.services.relation_service import RelationService
from app.services.rep_service import RepService
from app.services.selftest_service import signatures_up_to
from app.utils.exceptions import DimensionMismatchError, ParseError, ScaleLimitError
from oracles import count_tableaux

E11 = RationalMatrix.from_rows([[1, 0], [0, 0]])


@pytest.fixture
def reps():
    return RepService(merofam_service=MerofamService())


ALL_SIGNATURES = [(nu, n) for n in range(1, 5) for nu in signatures_up_to(n, 4)]


@pytest.mark.parametrize("nu, n", ALL_SIGNATURES, ids=[f"{nu}-n{n}" for nu, n in ALL_SIGNATURES])
def test_dimension_matches_tableaux(reps, nu, n):
    """Test dim H_nu against a tableaux count, Gelfand-Tsetlin patterns and the Weyl formula"""
    rep = reps.build_rep(nu, n)
    assert rep.dim == count_tableaux(nu.values, n)
    assert rep.dim == reps.pattern_count(nu)
    assert rep.dim == reps.weyl_dimension(nu)


@pytest.mark.parametrize("values, n, expected", [((2, 1), 3, 8), ((1, 1), 3, 3), ((4, 4, 4, 4), 4, 1), ((2, 0, 0), 3, 6)])
def test_known_dimensions(reps, values, n, expected):
    """Test a few dimensions known by hand"""
    nu = Signature(values)
    assert count_tableaux(values, n) == expected
    assert reps.build_rep(nu, n).dim == expected


def test_symmetric_square_of_plane(reps):
    """Test nu = (2,0) over Q^2 is three dimensional"""
    assert reps.build_rep(Signature((2, 0))).dim == 3


def test_determinant_representation(reps, sampler):
    """Test nu = (1,1) acts by det"""
    rep = reps.build_rep(Signature((1, 1)))
    g = sampler.invertible(2)
    det = g[0, 0] * g[1, 1] - g[0, 1] * g[1, 0]
    assert reps.rho_group(rep, g).matrix == RationalMatrix.from_rows([[det]])


def test_standard_representation_is_identity_map(reps, sampler):
    """Test nu = (1,0) returns g itself"""
    g = sampler.matrix(2, 2)
    assert reps.rho_group(reps.build_rep(Signature((1, 0))), g).matrix == g


def test_rho_is_a_homomorphism(reps, sampler):
    """Test rho(gh) = rho(g) rho(h) and rho(1) = 1"""
    rep = reps.build_rep(Signature((2, 1, 0)))
    g, h = sampler.invertible(3), sampler.invertible(3)
    product = reps.rho_group(rep, g).matrix @ reps.rho_group(rep, h).matrix
    assert reps.rho_group(rep, g @ h).matrix == product
    assert reps.rho_group(rep, RationalMatrix.identity(3)).matrix == RationalMatrix.identity(rep.dim)


def test_semigroup_extends_group(reps, sampler):
    """Test rho of the glued graph hinge equals rho(g)"""
    g = sampler.invertible(3)
    glued = HingeService.glue(HingeService.validate_hinge([RelationService.graph(g)]))
    for values in ((1, 0, 0), (2, 1, 0), (1, 1, 1)):
        rep = reps.build_rep(Signature(values))
        assert reps.rho_semigroup(rep, glued) == reps.rho_group(rep, g)


def test_rep_limit_of_diagonal_curve(reps):
    """Test limits of diag(1, z) in the standard and determinant representations"""
    gamma = LaurentMatrix.diagonal_monomials([0, 1])
    assert reps.rep_limit(reps.build_rep(Signature((1, 0))), gamma).matrix == E11
    assert reps.rep_limit(reps.build_rep(Signature((1, 1))), gamma).matrix == RationalMatrix.from_rows([[1]])


def test_rep_limit_cross_checks(reps, sampler):
    """Test the direct limit equals rho of the glued limit hinge"""
    for _ in range(4):
        gamma = sampler.curve(2)
        for values in ((1, 0), (2, 0), (1, 1), (2, 1)):
            assert not reps.rep_limit(reps.build_rep(Signature(values)), gamma, cross_check=True).is_zero()


def test_rep_limit_under_scalar_reparametrization(reps, sampler):
    """Test gamma(cz) scales the limit by c^-(sum m_j nu_j)"""
    c = Fraction(3)
    merofam = reps.merofam
    for _ in range(3):
        gamma = sampler.curve(2)
        exps = merofam.exponents(gamma)
        rep = reps.build_rep(Signature((2, 1)))
        moved = merofam.reparametrize(gamma, REPARAM_SCALAR, c)
        expected = reps.predict_scalar_limit(reps.rep_limit(rep, gamma), exps, c)
        assert reps.rep_limit(rep, moved) == expected


def test_direct_sum(reps):
    """Test zeta = rho_(1,0) (+) rho_(1,1) on diag(2, 3)"""
    zeta = reps.zeta_direct_sum([Signature((1, 0)), Signature((1, 1))], 2)
    blocks = reps.zeta_apply(zeta, RationalMatrix.diagonal([2, 3])).blocks
    assert blocks[0].matrix == RationalMatrix.diagonal([2, 3])
    assert blocks[1].matrix == RationalMatrix.from_rows([[6]])


def test_signature_padding_and_validation():
    """Test signatures are non-increasing and pad with zeros"""
    assert Signature((2, 1)).padded(4).values == (2, 1, 0, 0)
    assert Signature((3, 1, 1)).factor_degrees() == (1, 1, 3)
    with pytest.raises(ParseError):
        Signature((1, 2))
    with pytest.raises(ParseError):
        Signature((2, 1, 0)).padded(2)


def test_ambient_cap():
    """Test oversized representations are refused"""
    with pytest.raises(ScaleLimitError):
        RepService(ambient_cap=5).build_rep(Signature((2, 0, 0)))


def test_curve_dimension_must_match(reps):
    """Test a curve over the wrong space is rejected"""
    rep = reps.build_rep(Signature((1, 0)))
    with pytest.raises(DimensionMismatchError):
        reps.rep_limit(rep, LaurentMatrix.identity(3))
