"""
Unit Tests for sea urchin points, projections and separation
"""
from fractions import Fraction

import pytest

from app.config.constants import REPARAM_SCALAR
from app.models.hinge import Hinge, OrbitLabel
from app.models.laurent import LaurentMatrix, LaurentPoly
from app.models.matrix import RationalMatrix
from app.models.rep import Signature
from app.models.urchin import CompactificationSpec, Interior, Spike
from app.services.hinge_service import HingeService
from app.services.relation_service import RelationService
from app.services.urchin_service import _bezout, rational_root
from app.utils.exceptions import ValidationError

E11 = RationalMatrix.from_rows([[1, 0], [0, 0]])


def _spec(*signatures):
    return CompactificationSpec(tuple(Signature(s) for s in signatures))


def _canonical(*alpha):
    return HingeService.canonical_hinge(OrbitLabel(tuple(alpha)))


def test_rational_roots():
    """Test exact g-th roots of rationals"""
    assert rational_root(Fraction(9, 4), 2) == Fraction(3, 2)
    assert rational_root(Fraction(-8, 27), 3) == Fraction(-2, 3)
    assert rational_root(Fraction(2), 2) is None
    assert rational_root(Fraction(-4), 2) is None


def test_bezout_coefficients():
    """Test sum s_i v_i = gcd"""
    for values in ([4, 6], [3, -5], [-2, -4, 6], [7]):
        g, coeffs = _bezout(values)
        assert g > 0
        assert all(v % g == 0 for v in values)
        assert sum(s * v for s, v in zip(coeffs, values)) == g


def test_constant_curve_is_interior(engine, sampler):
    """Test an invertible constant curve stays in GL_n"""
    g = sampler.invertible(2)
    point = engine.urchin.curve_limit(LaurentMatrix.from_rational(g))
    assert isinstance(point, Interior)
    assert point.g == g


def test_diagonal_curve_is_a_spike(engine):
    """Test diag(1/z, z) lands on the spike m = (1,-1)"""
    point = engine.urchin.curve_limit(LaurentMatrix.diagonal_monomials([-1, 1]))
    assert isinstance(point, Spike)
    assert point.m == (1, -1)
    assert point.k == (1, -1)
    assert point.hinge == _canonical(1, 1)


def test_faster_curve_reaches_same_point(engine):
    """Test diag(z^-2, z^2) and diag(z^-1, z) have the same limit"""
    slow = engine.urchin.curve_limit(LaurentMatrix.diagonal_monomials([-1, 1]))
    fast = engine.urchin.curve_limit(LaurentMatrix.diagonal_monomials([-2, 2]))
    assert fast.m == (1, -1)
    assert engine.urchin.urchin_equal(slow, fast)


def test_scalar_reparametrization_is_invisible(engine, sampler):
    """Test gamma and gamma(2z) are equal spikes"""
    for m in ([1, 0], [2, -1], [1, 1, -1]):
        gamma = sampler.framed_curve(len(m), m)
        moved = engine.merofam.reparametrize(gamma, REPARAM_SCALAR, 2)
        p, q = engine.urchin.curve_limit(gamma), engine.urchin.curve_limit(moved)
        assert engine.urchin.spike_equal(p, q)
        assert engine.urchin.spike_scalar(p, q) is not None


def test_scalar_factor_is_invisible(engine, sampler):
    """Test gamma(z) (1 + z) has the limit of gamma"""
    one_plus_z = LaurentPoly({0: 1, 1: 1})
    gamma = sampler.framed_curve(2, [1, -1])
    other = gamma.map_entries(lambda p: p * one_plus_z)
    assert engine.urchin.urchin_equal(engine.urchin.curve_limit(gamma), engine.urchin.curve_limit(other))


def test_spike_scalar_solves_for_c(engine):
    """Test (8 P_1, P_2 / 8) is the c = 8 translate of the canonical spike"""
    h = _canonical(1, 1)
    p = Spike((1, -1), h)
    eighth = Fraction(1, 8)
    q = Spike((1, -1), Hinge(2, (RelationService.scale(8, h.terms[0]), RelationService.scale(eighth, h.terms[1]))))
    assert engine.urchin.spike_scalar(p, q) == Fraction(8)
    wrong = Spike((1, -1), Hinge(2, (RelationService.scale(2, h.terms[0]), RelationService.scale(2, h.terms[1]))))
    assert engine.urchin.spike_scalar(p, wrong) is None
    assert not engine.urchin.spike_equal(p, wrong)


def test_zero_exponent_terms_are_rigid(engine):
    """Test terms with k_j = 0 cannot be rescaled"""
    h = _canonical(1, 1)
    p = Spike((1, 0), h)
    q = Spike((1, 0), Hinge(2, (h.terms[0], RelationService.scale(3, h.terms[1]))))
    assert engine.urchin.spike_scalar(p, q) is None
    assert engine.urchin.spike_scalar(p, p) == 1


def test_spike_validation():
    """Test spike exponents and hinge orbit must agree"""
    h = _canonical(1, 1)
    with pytest.raises(ValidationError):
        Spike((2, -2), h)
    with pytest.raises(ValidationError):
        Spike((0, 0), _canonical(2))
    with pytest.raises(ValidationError):
        Spike((-1, 1), h)
    with pytest.raises(ValidationError):
        Spike((1, -1), _canonical(2))


def test_spike_equality_needs_spikes(engine):
    """Test comparing an interior point as a spike is an error"""
    interior = Interior(RationalMatrix.identity(2))
    with pytest.raises(ValidationError):
        engine.urchin.spike_equal(interior, Spike((1, -1), _canonical(1, 1)))
    assert not engine.urchin.urchin_equal(interior, Spike((1, -1), _canonical(1, 1)))


def test_projection_zeroes_lower_weights(engine):
    """Test m = (1,-1) projects to (E11, 0) in rho_(1,0) (+) rho_(1,1)"""
    point = engine.urchin.curve_limit(LaurentMatrix.diagonal_monomials([-1, 1]))
    projection = engine.urchin.project(point, _spec((1, 0), (1, 1)))
    assert projection.weights == (1, 0)
    assert projection.top_weight == 1
    assert projection.zeroed() == (False, True)
    assert projection.operator.blocks[0].matrix == E11


def test_interior_projection(engine):
    """Test an interior point maps to zeta(g)"""
    projection = engine.urchin.project(Interior(RationalMatrix.diagonal([2, 3])), _spec((1, 0), (1, 1)))
    assert projection.weights == (0, 0)
    assert projection.operator.blocks[1].matrix == RationalMatrix.from_rows([[6]])


def test_projection_commutes_with_limit(engine, sampler):
    """Test project(lim gamma) = lim zeta(gamma) up to scalar"""
    for _ in range(4):
        n = sampler.integer(1, 3)
        gamma = sampler.curve(n)
        for _ in range(2):
            assert engine.urchin.commutes(gamma, sampler.spec(n))


def test_standard_representation_separates_swapped_curves(engine):
    """Test diag(1, z) and diag(z, 1) are told apart by rho_(1,0)"""
    table = engine.urchin.separation_table(
        LaurentMatrix.diagonal_monomials([0, 1]),
        LaurentMatrix.diagonal_monomials([1, 0]),
        [_spec((1, 0))],
    )
    assert table['same_urchin_point'] is False
    assert table['separated'] is True
    assert table['specs'] == [{'signatures': ['1,0'], 'separated': True}]


def test_equal_points_are_never_separated(engine, sampler):
    """Test gamma and gamma(3z) agree in every compactification"""
    gamma = sampler.framed_curve(2, [1, -1])
    moved = engine.merofam.reparametrize(gamma, REPARAM_SCALAR, 3)
    specs = [_spec((1, 0)), _spec((2, 0), (1, 1)), _spec((2, 1))]
    assert engine.urchin.separate(gamma, moved, specs) is False


def test_determinant_does_not_separate_swapped_curves(engine):
    """Test rho_(1,1) alone cannot see the difference"""
    assert not engine.urchin.separate(
        LaurentMatrix.diagonal_monomials([0, 1]),
        LaurentMatrix.diagonal_monomials([1, 0]),
        [_spec((1, 1))],
    )


@pytest.mark.parametrize("alpha", [(2,), (1, 1), (1, 2, 1)])
def test_spike_parameter_count(alpha):
    """Test every spike stratum has dimension n^2 - 1"""
    label = OrbitLabel(alpha)
    assert HingeService.spike_dimension(label) == label.n ** 2 - 1
