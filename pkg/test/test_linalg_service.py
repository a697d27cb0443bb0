"""
Unit Tests for exact linear algebra
"""
from fractions import Fraction

import pytest

from app.models.matrix import RationalMatrix, format_rational, to_rational
from app.services.linalg_service import LinAlgService
from app.utils.exceptions import ParseError, SingularMatrixError
from oracles import from_sympy, to_sympy


@pytest.mark.parametrize("shape", [(2, 3), (3, 3), (4, 2), (3, 5)])
def test_rref_matches_sympy(sampler, shape):
    """Test RREF and pivots against sympy"""
    for _ in range(5):
        m = sampler.matrix(*shape)
        reduced, pivots = LinAlgService.rref(m)
        expected, expected_pivots = to_sympy(m).rref()
        assert pivots == list(expected_pivots)
        assert reduced.to_lists() == [[from_sympy(x) for x in expected.row(i)] for i in range(m.rows)]
        assert LinAlgService.rank(m) == to_sympy(m).rank()


def test_determinant_and_inverse(sampler):
    """Test determinant against sympy and A A^-1 = I"""
    for n in range(1, 5):
        m = sampler.invertible(n)
        assert LinAlgService.determinant(m) == from_sympy(to_sympy(m).det())
        assert m @ LinAlgService.inverse(m) == RationalMatrix.identity(n)


def test_inverse_of_singular_matrix():
    """Test singular matrices are rejected"""
    m = RationalMatrix.from_rows([[1, 2], [2, 4]])
    assert LinAlgService.determinant(m) == 0
    with pytest.raises(SingularMatrixError):
        LinAlgService.inverse(m)


def test_kernel_dimension(sampler):
    """Test the kernel is annihilated and has the complementary dimension"""
    for _ in range(10):
        m = sampler.matrix(3, 4)
        null = LinAlgService.kernel(m)
        assert null.dim == 4 - LinAlgService.rank(m)
        for v in null.vectors:
            assert all(x == 0 for x in m.apply(v))


def test_sum_and_intersection_dimensions(sampler):
    """Test dim(A + B) + dim(A cap B) = dim A + dim B"""
    for _ in range(10):
        a = LinAlgService.row_space(sampler.matrix(2, 4))
        b = LinAlgService.row_space(sampler.matrix(2, 4))
        total = LinAlgService.subspace_sum(a, b)
        meet = LinAlgService.subspace_intersect(a, b)
        assert total.dim + meet.dim == a.dim + b.dim
        assert LinAlgService.is_subspace(meet, a)
        assert LinAlgService.is_subspace(meet, b)


def test_span_is_canonical():
    """Test two spanning sets of one subspace give equal subspaces"""
    one = LinAlgService.span([(1, 1, 0), (0, 1, 1)], 3)
    other = LinAlgService.span([(1, 2, 1), (1, 0, -1), (2, 2, 0)], 3)
    assert one == other
    assert one.dim == 2


def test_proportionality():
    """Test scalar detection between vectors"""
    a = [Fraction(1), Fraction(2), Fraction(0)]
    assert LinAlgService.proportionality(a, [Fraction(3), Fraction(6), Fraction(0)]) == 3
    assert LinAlgService.proportionality(a, [Fraction(3), Fraction(5), Fraction(0)]) is None
    assert LinAlgService.proportionality(a, [Fraction(0)] * 3) is None


def test_rational_parsing():
    """Test rational literals"""
    assert to_rational("3/4") == Fraction(3, 4)
    assert to_rational(-2) == Fraction(-2)
    assert format_rational(Fraction(-6, 4)) == "-3/2"
    with pytest.raises(ParseError):
        to_rational("x")
    with pytest.raises(ParseError):
        to_rational(0.5)


def test_small_reductions():
    """Test hand-computed reductions and kernels"""
    reduced, pivots = LinAlgService.rref(RationalMatrix.from_rows([[2, 4], [1, 2]]))
    assert reduced == RationalMatrix.from_rows([[1, 2], [0, 0]])
    assert pivots == [0]
    assert LinAlgService.rref(RationalMatrix.zeros(2, 2))[1] == []
    assert LinAlgService.kernel(RationalMatrix.from_rows([[1, 0], [0, 0]])).vectors == ((0, 1),)
    assert LinAlgService.kernel(RationalMatrix.from_rows([[1, 1]])).vectors == ((1, -1),)
    assert LinAlgService.kernel(RationalMatrix.from_rows([[2, 1], [1, 1]])).is_zero()


def test_small_sums_and_intersections():
    """Test coordinate lines in the plane"""
    e1 = LinAlgService.span([(1, 0)], 2)
    e2 = LinAlgService.span([(0, 1)], 2)
    diagonal = LinAlgService.span([(1, 1)], 2)
    assert LinAlgService.subspace_sum(e1, e2).is_full()
    assert LinAlgService.subspace_intersect(e1, diagonal).is_zero()
    assert LinAlgService.subspace_sum(e1, e1) == LinAlgService.subspace_intersect(e1, e1) == e1


def test_pluecker_coordinates(sampler):
    """Test Pluecker vectors identify subspaces"""
    plane = LinAlgService.coordinate_subspace(4, [0, 1])
    assert LinAlgService.pluecker(plane) == (1, 0, 0, 0, 0, 0)
    assert LinAlgService.pluecker(LinAlgService.span([(2, 2)], 2)) == (1, 1)
    for _ in range(10):
        a = LinAlgService.row_space(sampler.matrix(2, 4))
        b = LinAlgService.row_space(sampler.matrix(2, 4))
        assert (LinAlgService.pluecker(a) == LinAlgService.pluecker(b)) == (a == b)
