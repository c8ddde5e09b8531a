import pytest
from hypothesis import given
from pydantic import ValidationError

from isodim.core.errors import DimensionMismatchError, FieldMismatchError
from isodim.core.matrix import identity
from isodim.spaces.space import (
    Space,
    contains,
    full_space,
    is_subspace_of,
    reduce_vector,
    space_equal,
    span_of,
    zero_space,
)
from isodim.utils.oracle import enumerate_vectors, oracle_span
from tests.utils.builders import mat, span, vec
from tests.utils.strategies import spec_and_vector_list


def test_span_examples(gf2, q):
    """Test canonical spans."""
    empty = span_of([], q, ambient_dim=2)
    assert empty.dim == 0
    assert empty == zero_space(q, 2)

    assert span(q, 3, [1, 0, 0], [0, 1, 0], [0, 0, 1]) == full_space(q, 3)

    s = span(gf2, 3, [1, 1, 0], [0, 1, 1], [1, 0, 1])
    assert s.dim == 2
    assert s.basis_vectors() == [vec(gf2, 1, 0, 1), vec(gf2, 0, 1, 1)]
    assert s.pivot_cols == (0, 1)


def test_span_needs_ambient_for_empty_list(q):
    """Test that the empty list needs an ambient dimension."""
    with pytest.raises(DimensionMismatchError):
        span_of([], q)


def test_span_rejects_ragged_lists(q):
    """Test vector length checks."""
    with pytest.raises(DimensionMismatchError):
        span_of([vec(q, 1, 2), vec(q, 1)], q)


def test_space_requires_canonical_basis(q):
    """Test that only reduced bases without zero rows are accepted."""
    with pytest.raises(ValidationError):
        Space(spec=q, ambient_dim=2, basis=mat(q, [[1, 1], [0, 2]]), pivot_cols=(0, 1))
    with pytest.raises(ValidationError):
        Space(spec=q, ambient_dim=2, basis=mat(q, [[1, 0], [0, 0]]), pivot_cols=(0,))
    with pytest.raises(ValidationError):
        Space(spec=q, ambient_dim=2, basis=identity(2, q), pivot_cols=(0,))
    assert Space(spec=q, ambient_dim=2, basis=identity(2, q), pivot_cols=(0, 1)) == full_space(q, 2)


def test_membership_examples(gf2, q):
    """Test membership."""
    assert contains(zero_space(q, 3), vec(q, 0, 0, 0))
    line = span(gf2, 2, [1, 1])
    assert not contains(line, vec(gf2, 1, 0))
    assert vec(gf2, 1, 1) in line


def test_membership_checks_shape_and_field(gf2, gf3):
    """Test that vectors must match the space."""
    with pytest.raises(DimensionMismatchError):
        contains(full_space(gf2, 2), vec(gf2, 1))
    with pytest.raises(FieldMismatchError):
        contains(full_space(gf2, 2), vec(gf3, 1, 1))


def test_subspace_and_equality(q):
    """Test inclusion and equality."""
    u = span(q, 3, [1, 0, 1])
    v = span(q, 3, [1, 0, 1], [0, 1, 0])
    assert is_subspace_of(u, v)
    assert not is_subspace_of(v, u)
    assert not space_equal(u, v)
    assert space_equal(v, span(q, 3, [1, 1, 1], [0, 1, 0]))


def test_subspace_checks_ambient(q):
    """Test that spaces in different ambient spaces do not compare."""
    with pytest.raises(DimensionMismatchError):
        is_subspace_of(full_space(q, 2), full_space(q, 3))


def test_reduce_vector_zeroes_pivots(q):
    """Test reduction against canonical rows."""
    u = span(q, 2, [1, 0])
    assert reduce_vector(u, vec(q, 3, 5)) == vec(q, 0, 5)


def test_str(gf3):
    """Test the readable description."""
    assert str(full_space(gf3, 2)) == "subspace of GF(3)^2 of dimension 2"


@given(spec_and_vector_list())
def test_canonical_form_is_stable(case):
    """Test that the span of a canonical basis is the same space."""
    spec, n, vectors = case
    s = span_of(vectors, spec, ambient_dim=n)
    assert span_of(s.basis_vectors(), spec, ambient_dim=n) == s
    assert all(contains(s, v) for v in vectors)


@pytest.mark.parametrize("p,n", [(2, 3), (3, 2)])
def test_membership_matches_enumeration(p, n):
    """Test membership against brute-force spans of every pair of vectors."""
    from isodim.core.field import FieldSpec
    spec = FieldSpec.gf(p)
    universe = list(enumerate_vectors(spec, n))
    for a in universe:
        for b in universe:
            s = span_of([a, b], spec)
            members = oracle_span([a, b], spec)
            assert frozenset(x for x in universe if contains(s, x)) == members
