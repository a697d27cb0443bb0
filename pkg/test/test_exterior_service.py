"""
Unit Tests for exterior powers of matrices and relations
"""
from itertools import combinations

import pytest

from app.models.exterior import wedge_basis
from app.models.matrix import RationalMatrix
from app.models.relation import NullMorphism, is_null
from app.services.exterior_service import ExteriorService
from app.services.linalg_service import LinAlgService
from app.services.relation_service import RelationService
from app.utils.exceptions import ValidationError
from oracles import from_sympy, to_sympy


def test_wedge_basis_order():
    """Test lexicographic index sets"""
    assert wedge_basis(3, 2) == ((0, 1), (0, 2), (1, 2))
    assert wedge_basis(2, 0) == ((),)


def test_lambda_cha_entries_are_minors(sampler):
    """Test lambda^k entries against sympy minors"""
    a = sampler.matrix(3, 4)
    op = ExteriorService.lambda_cha(a, 2)
    big = to_sympy(a)
    for i, rows in enumerate(combinations(range(3), 2)):
        for j, cols in enumerate(combinations(range(4), 2)):
            assert op.matrix[i, j] == from_sympy(big.extract(list(rows), list(cols)).det())


def test_lambda_cha_extremes(sampler):
    """Test degree 0 is [1], degree 1 is A and degree n is det A"""
    a = sampler.matrix(3, 3)
    assert ExteriorService.lambda_cha(a, 0).matrix == RationalMatrix.from_rows([[1]])
    assert ExteriorService.lambda_cha(a, 1).matrix == a
    assert ExteriorService.lambda_cha(a, 3).matrix == RationalMatrix.from_rows([[LinAlgService.determinant(a)]])


def test_lambda_cha_is_multiplicative(sampler):
    """Test Cauchy-Binet: lambda^k(AB) = lambda^k(A) lambda^k(B)"""
    for _ in range(5):
        a, b = sampler.matrix(3, 3), sampler.matrix(3, 3)
        for k in range(4):
            left = ExteriorService.lambda_cha(a @ b, k)
            right = ExteriorService.lambda_cha(a, k) @ ExteriorService.lambda_cha(b, k)
            assert left.matrix == right.matrix


def test_lambda_cha_degree_out_of_range():
    """Test degrees beyond the source dimension are rejected"""
    with pytest.raises(ValidationError):
        ExteriorService.lambda_cha(RationalMatrix.identity(2), 3)


def test_lambda_of_graph_is_lambda_cha(sampler):
    """Test lambda(graph A) agrees with lambda_cha(A) in every degree"""
    for _ in range(5):
        a = sampler.matrix(3, 3)
        family = ExteriorService.lambda_relation(RelationService.graph(a))
        assert family.shift == 0
        for k in range(4):
            assert family.block(k).matrix == ExteriorService.lambda_cha(a, k).matrix


def test_lambda_of_kernel_relation():
    """Test lambda(V (+) 0) is 1 in degree 0 and zero elsewhere"""
    full, zero = LinAlgService.full_subspace(2), LinAlgService.zero_subspace(2)
    family = ExteriorService.lambda_relation(RelationService.rank_zero_relation(full, zero))
    assert family.block(0).matrix == RationalMatrix.from_rows([[1]])
    assert family.block(1).is_zero()
    assert family.block(2).is_zero()


def test_lambda_of_null_is_zero():
    """Test the null morphism has the zero operator"""
    assert ExteriorService.lambda_relation(NullMorphism(2, 2)).is_zero()


def test_support_matches_nonzero_blocks(sampler):
    """Test lambda^m(P) is nonzero exactly for dim Indef P <= m <= dim Im P"""
    for _ in range(15):
        p = sampler.gamma_relation(3)
        support = ExteriorService.support(p)
        for m in range(4):
            assert (not ExteriorService.lambda_m(p, m).is_zero()) == (m in support)


def test_lambda_is_projectively_multiplicative(sampler):
    """Test lambda(Q) lambda(P) is a nonzero multiple of lambda(QP) or zero for null QP"""
    for _ in range(20):
        p, q = sampler.gamma_relation(3), sampler.gamma_relation(3)
        qp = RelationService.compose(q, p)
        product = ExteriorService.compose_families(
            ExteriorService.lambda_relation(q), ExteriorService.lambda_relation(p)
        )
        if is_null(qp):
            assert product.is_zero()
        else:
            c = ExteriorService.proportionality_scalar(ExteriorService.lambda_relation(qp), product)
            assert c is not None and c != 0


def test_lambda_m_needs_gamma_relation():
    """Test lambda^m rejects relations of the wrong dimension"""
    p = RelationService.from_vectors(2, 2, [(1, 0, 0, 0)])
    with pytest.raises(ValidationError):
        ExteriorService.lambda_m(p, 1)
