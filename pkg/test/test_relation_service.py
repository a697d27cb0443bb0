"""
Unit Tests for linear relations
"""
from fractions import Fraction

import pytest

from app.models.matrix import RationalMatrix
from app.models.relation import LinearRelation, NullMorphism, is_null
from app.services.linalg_service import LinAlgService
from app.services.relation_service import RelationService
from app.utils.exceptions import DimensionMismatchError, ValidationError


def test_graph_attributes():
    """Test Dom, Ker, Im and Indef of a graph"""
    a = RationalMatrix.from_rows([[1, 2, 0], [2, 4, 0]])
    p = RelationService.graph(a)
    assert (p.dim_v, p.dim_w, p.dim) == (3, 2, 3)
    assert p.domain.is_full()
    assert p.indefiniteness.is_zero()
    assert p.kernel == LinAlgService.kernel(a)
    assert p.image == LinAlgService.column_space(a)
    assert p.rank == 1
    assert p.is_graph()


def test_rank_zero_relation():
    """Test X (+) Y has Ker = Dom = X and Indef = Im = Y"""
    x = LinAlgService.coordinate_subspace(3, [0])
    y = LinAlgService.coordinate_subspace(2, [1])
    p = RelationService.rank_zero_relation(x, y)
    assert p.rank == 0
    assert p.kernel == p.domain == x
    assert p.indefiniteness == p.image == y
    assert not p.is_graph()


def test_graph_composition(sampler):
    """Test graph(B) o graph(A) = graph(BA)"""
    for _ in range(10):
        a, b = sampler.matrix(3, 2), sampler.matrix(2, 3)
        product = RelationService.compose(RelationService.graph(b), RelationService.graph(a))
        assert product == RelationService.graph(b @ a)


def test_composition_is_associative(sampler):
    """Test (RQ)P = R(QP) including null products"""
    for _ in range(25):
        p, q, r = sampler.relation(2, 3), sampler.relation(3, 2), sampler.relation(2, 2)
        left = RelationService.compose(r, RelationService.compose(q, p))
        right = RelationService.compose(RelationService.compose(r, q), p)
        assert left == right


def test_null_when_indefiniteness_meets_kernel():
    """Test 0 (+) W followed by V (+) 0 is null"""
    zero, full = LinAlgService.zero_subspace(2), LinAlgService.full_subspace(2)
    p = RelationService.rank_zero_relation(zero, full)
    q = RelationService.rank_zero_relation(full, zero)
    assert RelationService.is_null_product(q, p)
    assert is_null(RelationService.compose(q, p))


def test_null_when_image_and_domain_miss():
    """Test Im P + Dom Q != W gives null"""
    p = RelationService.graph(RationalMatrix.zeros(2, 2))
    zero, full = LinAlgService.zero_subspace(2), LinAlgService.full_subspace(2)
    q = RelationService.rank_zero_relation(zero, full)
    assert is_null(RelationService.compose(q, p))


def test_non_null_product_dimension(sampler):
    """Test dim QP = dim Q + dim P - dim W for non-null products"""
    for _ in range(25):
        p, q = sampler.relation(3, 2), sampler.relation(2, 3)
        product = RelationService.compose(q, p)
        if not is_null(product):
            assert product.dim == q.dim + p.dim - 2


def test_product_with_zero_relation():
    """Test {0} composes to 0 (+) Indef Q and Ker P (+) 0"""
    p = LinearRelation(3, 4, LinAlgService.zero_subspace(7))
    q = LinearRelation(4, 1, LinAlgService.full_subspace(5))
    product = RelationService.compose(q, p)
    assert product == RelationService.rank_zero_relation(
        LinAlgService.zero_subspace(3), LinAlgService.full_subspace(1)
    )
    assert product.dim == 1

    p = LinearRelation(2, 2, LinAlgService.full_subspace(4))
    q = LinearRelation(2, 2, LinAlgService.zero_subspace(4))
    product = RelationService.compose(q, p)
    assert product == RelationService.rank_zero_relation(
        LinAlgService.full_subspace(2), LinAlgService.zero_subspace(2)
    )


def test_random_products_keep_dimension_formula(sampler):
    """Test products of sampled relations, degenerate ones included"""
    for _ in range(200):
        p, q = sampler.relation(3, 4), sampler.relation(4, 1)
        product = RelationService.compose(q, p)
        if not is_null(product):
            assert product.dim == q.dim + p.dim - 4


def test_null_absorbs():
    """Test null composed with anything is null"""
    p = RelationService.graph(RationalMatrix.identity(2))
    assert is_null(RelationService.compose(NullMorphism(2, 2), p))
    assert is_null(RelationService.compose(p, NullMorphism(2, 2)))


def test_composition_dimension_mismatch():
    """Test incompatible relations are rejected"""
    p = RelationService.graph(RationalMatrix.identity(2))
    q = RelationService.graph(RationalMatrix.identity(3))
    with pytest.raises(DimensionMismatchError):
        RelationService.compose(q, p)


def test_canonical_form_reconstructs(sampler):
    """Test the adapted bases span the relation they came from"""
    for _ in range(15):
        s = sampler.relation(3, 3)
        form = RelationService.canonical_form(s)
        assert len(form.h) == s.kernel.dim
        assert len(form.g) == s.rank
        assert len(form.big_f) == s.indefiniteness.dim
        assert RelationService.reconstruct(form) == s


def test_scale_and_ratio():
    """Test scaling the W part and recovering the scalar"""
    a = RationalMatrix.from_rows([[1, 1], [0, 2]])
    p = RelationService.graph(a)
    q = RelationService.scale(3, p)
    assert q == RelationService.graph(a.scale(3))
    assert RelationService.relation_ratio(p, q) == Fraction(3)
    other = RelationService.graph(RationalMatrix.from_rows([[1, 0], [0, 2]]))
    assert RelationService.relation_ratio(p, other) is None
    with pytest.raises(ValidationError):
        RelationService.scale(0, p)


def test_pseudoinverse_swaps_blocks():
    """Test the pseudoinverse of an invertible graph is the inverse graph"""
    a = RationalMatrix.from_rows([[2, 1], [1, 1]])
    inverse = RelationService.pseudoinverse(RelationService.graph(a))
    assert inverse == RelationService.graph(LinAlgService.inverse(a))
    assert RelationService.pseudoinverse(inverse) == RelationService.graph(a)


def test_relation_dict_round_trip():
    """Test relations survive serialization"""
    p = RelationService.graph(RationalMatrix.from_rows([["1/2", 0], [0, -1]]))
    assert LinearRelation.from_dict(p.to_dict()) == p
