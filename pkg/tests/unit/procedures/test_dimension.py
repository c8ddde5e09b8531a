import pytest
from hypothesis import given
from pydantic import ValidationError

from isodim.core.errors import (
    AlreadyInImageError,
    DimensionOrderError,
    MembershipError,
    NotInjectiveError,
    NotSubspaceError,
    NotSurjectiveError,
)
from isodim.core.matrix import Matrix, identity, rank
from isodim.maps.linear_map import (
    LinearMap,
    compose,
    embed_truncate,
    from_images,
    image,
    is_injective,
    is_isomorphism,
    is_surjective,
)
from isodim.procedures.classify import classify
from isodim.procedures.dimension import (
    FIRST_UNCAPTURED,
    GIVEN,
    SUBSPACE_ROW,
    RankNullity,
    are_isomorphic,
    build_injective_sequence,
    build_sequence_through,
    extend_injective,
    extend_injective_to_basis,
    extract_basis_from_surjective,
    injective_map_between,
    isomorphic_dimension,
    rank_nullity,
    surjective_map_between,
    trace_basis_extraction,
    trace_basis_extension,
)
from isodim.spaces.space import contains, full_space, span_of, zero_space
from tests.utils.builders import mat, span, vec
from tests.utils.strategies import spec_and_vector_list


def test_isomorphic_dimension_examples(gf2, q):
    """Test dimension witnesses."""
    witness = isomorphic_dimension(full_space(q, 3))
    assert witness.dim == 3
    assert witness.iso.columns == identity(3, q)

    empty = isomorphic_dimension(zero_space(q, 2))
    assert empty.dim == 0
    assert empty.iso.domain_dim == 0

    s = span(gf2, 3, [1, 1, 0], [0, 1, 1], [1, 0, 1])
    assert isomorphic_dimension(s).dim == 2
    assert is_isomorphism(isomorphic_dimension(s).iso)


def test_extend_injective_examples(gf2, q):
    """Test one-step extension of an injective map."""
    f = extend_injective(from_images([], q, ambient_dim=2), vec(q, 1, 0))
    assert f.domain_dim == 1 and is_injective(f)

    g = from_images([vec(gf2, 1, 1)], gf2)
    h = extend_injective(g, vec(gf2, 1, 0))
    assert is_isomorphism(h)
    assert compose(h, embed_truncate(1, 2, gf2)).columns == g.columns


def test_extend_injective_errors(gf2):
    """Test that each precondition failure is reported distinctly."""
    g = from_images([vec(gf2, 1, 1)], gf2)
    with pytest.raises(AlreadyInImageError):
        extend_injective(g, vec(gf2, 1, 1))
    with pytest.raises(NotInjectiveError):
        extend_injective(from_images([vec(gf2, 1, 1), vec(gf2, 1, 1)], gf2), vec(gf2, 1, 0))
    line = from_images([vec(gf2, 1, 1)], gf2, codomain=span(gf2, 2, [1, 1]))
    with pytest.raises(MembershipError):
        extend_injective(line, vec(gf2, 1, 0))


def test_injective_sequence_examples(gf2, q):
    """Test deterministic sequences into a space."""
    sequence = build_injective_sequence(full_space(q, 2))
    assert [step.vector for step in sequence.transcript] == [vec(q, 1, 0), vec(q, 0, 1)]
    assert all(step.reason == FIRST_UNCAPTURED for step in sequence.transcript)
    assert sequence.length == 3

    s = span(gf2, 3, [1, 0, 1], [0, 1, 1])
    sequence = build_injective_sequence(s)
    assert [step.vector for step in sequence.transcript] == [vec(gf2, 1, 0, 1), vec(gf2, 0, 1, 1)]
    assert is_isomorphism(sequence.final)

    assert build_injective_sequence(zero_space(q, 3)).length == 1


def test_injective_sequence_prefix_property(q):
    """Test f_{k+1} o p_k^{k+1} = f_k and strictly growing images."""
    sequence = build_injective_sequence(span(q, 4, [1, 2, 0, 1], [0, 1, 1, 1], [3, 0, 0, 1]))
    maps = sequence.maps()
    for k in range(sequence.length - 1):
        assert compose(maps[k + 1], embed_truncate(k, k + 1, q)).columns == maps[k].columns
        assert image(maps[k]).dim == k
        assert is_injective(maps[k + 1])


def test_injective_sequence_validation(q):
    """Test that a sequence must end in an isomorphism onto its target."""
    target = full_space(q, 2)
    with pytest.raises(ValidationError):
        type(build_injective_sequence(target))(
            target=target,
            columns=Matrix.from_rows(q, [[1], [0]]),
            transcript=(),
        )


def test_sequence_through_subspace(q):
    """Test that f_k has image exactly U when U's rows come first."""
    u = span(q, 2, [1, 1])
    sequence = build_sequence_through(u, full_space(q, 2))
    assert sequence.checkpoint == 1
    assert [step.vector for step in sequence.transcript] == [vec(q, 1, 1), vec(q, 1, 0)]
    assert [step.reason for step in sequence.transcript] == [SUBSPACE_ROW, FIRST_UNCAPTURED]
    assert image(sequence.map_at(1)) == u

    with pytest.raises(NotSubspaceError):
        build_sequence_through(full_space(q, 2), u)


def test_basis_extraction_examples(gf2, q):
    """Test deletion from surjective sets."""
    basis = [vec(q, 1, 0), vec(q, 0, 1)]
    assert extract_basis_from_surjective(basis, full_space(q, 2)) == [0, 1]

    trace = trace_basis_extraction([vec(gf2, 1, 0), vec(gf2, 0, 1), vec(gf2, 1, 1)], full_space(gf2, 2))
    assert trace.kept == (0, 1)
    assert len(trace.steps) == 1
    assert trace.steps[0].kernel_vector == vec(gf2, 1, 1, 1)
    assert trace.steps[0].dropped_index == 2

    trace = trace_basis_extraction([vec(q, 1, 0), vec(q, 2, 0), vec(q, 0, 1)], full_space(q, 2))
    assert trace.kept == (0, 2)
    assert trace.steps[0].kernel_vector == vec(q, -2, 1, 0)
    assert trace.steps[0].position == 1
    assert trace.steps[0].dropped_index == 1


def test_basis_extraction_drops_duplicates(gf2):
    """Test that repeated vectors are removed."""
    vectors = [vec(gf2, 1, 1), vec(gf2, 1, 1), vec(gf2, 0, 1)]
    assert extract_basis_from_surjective(vectors, full_space(gf2, 2)) == [0, 2]


def test_basis_extraction_requires_span(q):
    """Test that non-spanning input is rejected."""
    with pytest.raises(NotSurjectiveError):
        extract_basis_from_surjective([vec(q, 1, 0)], full_space(q, 2))


def test_basis_extension_examples(gf2, q):
    """Test extension of injective sets."""
    assert extend_injective_to_basis([vec(gf2, 1, 1)], full_space(gf2, 2)) == [vec(gf2, 1, 0)]
    assert extend_injective_to_basis([], full_space(q, 2)) == [vec(q, 1, 0), vec(q, 0, 1)]
    basis = [vec(q, 1, 2), vec(q, 3, 4)]
    assert extend_injective_to_basis(basis, full_space(q, 2)) == []

    sequence = trace_basis_extension([vec(gf2, 1, 1)], full_space(gf2, 2))
    assert [step.reason for step in sequence.transcript] == [GIVEN, FIRST_UNCAPTURED]


def test_basis_extension_errors(gf2):
    """Test that only injective sets inside V can be extended."""
    with pytest.raises(NotInjectiveError):
        extend_injective_to_basis([vec(gf2, 1, 1), vec(gf2, 1, 1)], full_space(gf2, 2))
    with pytest.raises(MembershipError):
        extend_injective_to_basis([vec(gf2, 1, 0)], span(gf2, 2, [1, 1]))


def test_rank_nullity_examples(gf2, q):
    """Test kernel, image and domain dimensions."""
    assert rank_nullity(LinearMap(spec=q, columns=identity(3, q))) == RankNullity(
        kernel_dim=0, image_dim=3, domain_dim=3
    )
    zero = rank_nullity(LinearMap(spec=q, columns=Matrix.zeros(q, 2, 2)))
    assert (zero.kernel_dim, zero.image_dim, zero.domain_dim) == (2, 0, 2)
    f = rank_nullity(LinearMap(spec=gf2, columns=mat(gf2, [[1, 1]])))
    assert (f.kernel_dim, f.image_dim, f.domain_dim) == (1, 1, 2)


def test_rank_nullity_record_checks_sum():
    """Test that an inconsistent record cannot be built."""
    with pytest.raises(ValidationError):
        RankNullity(kernel_dim=1, image_dim=1, domain_dim=3)


def test_maps_between_spaces(q):
    """Test existence of injective and surjective maps by dimension order."""
    u = span(q, 3, [1, 1, 0])
    v = span(q, 4, [1, 0, 0, 1], [0, 1, 0, 1])

    f = injective_map_between(u, v)
    assert f.domain_dim == 1
    assert is_injective(f)
    assert all(contains(v, column) for column in f.columns.column_vectors())

    g = surjective_map_between(v, u)
    assert g.domain_dim == 2
    assert is_surjective(g)

    with pytest.raises(DimensionOrderError) as exc_info:
        injective_map_between(v, u)
    assert (exc_info.value.source_dim, exc_info.value.target_dim) == (2, 1)
    with pytest.raises(DimensionOrderError):
        surjective_map_between(u, v)

    assert are_isomorphic(u, span(q, 2, [0, 5]))
    assert not are_isomorphic(u, v)


@given(spec_and_vector_list())
def test_dimension_routes_agree(case):
    """Test that the witness, the sequence length and rank give one number."""
    spec, n, vectors = case
    s = span_of(vectors, spec, ambient_dim=n)
    dim = isomorphic_dimension(s).dim
    assert dim == build_injective_sequence(s).length - 1
    if vectors:
        assert dim == rank(Matrix.from_rows(spec, vectors))


@given(spec_and_vector_list())
def test_extract_and_extend_give_bases(case):
    """Test that extraction and extension output isomorphic bases of size dim V."""
    spec, n, vectors = case
    s = span_of(vectors, spec, ambient_dim=n)
    kept = [vectors[i] for i in extract_basis_from_surjective(vectors, s)]
    assert len(kept) == s.dim
    assert classify(kept, s).basis

    full = full_space(spec, n)
    appended = extend_injective_to_basis(kept, full)
    assert len(appended) == n - len(kept)
    assert classify(kept + appended, full).basis
