"""Constructive dimension: witnesses, injective sequences, basis extraction and extension."""

import logging
from typing import List, Optional, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

from ..core.errors import (
    AlreadyInImageError,
    DimensionMismatchError,
    DimensionOrderError,
    MembershipError,
    NotInjectiveError,
    NotSubspaceError,
    NotSurjectiveError,
)
from ..core.field import FieldElement, _check_same
from ..core.matrix import Matrix, kernel_basis, rank
from ..core.vector import Vector, format_vector
from ..maps.linear_map import (
    LinearMap,
    compose,
    embed_truncate,
    from_images,
    image,
    is_injective,
    is_isomorphism,
    kernel,
    prefix_map,
)
from ..spaces.space import Space, contains, is_subspace_of, span_of

logger = logging.getLogger(__name__)

FIRST_UNCAPTURED = "first-uncaptured-basis-row"
SUBSPACE_ROW = "subspace-basis-row"
GIVEN = "given"


class TranscriptStep(BaseModel):
    """One column appended while building an injective sequence."""
    step: int = Field(ge=1)
    vector: Tuple[FieldElement, ...]
    reason: str

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)


class InjectiveSequence(BaseModel):
    """The chain f_0, ..., f_n of injective maps into ``target``.

    f_k is given by the first k columns, so f_{k+1} o p_k^{k+1} = f_k holds
    by construction. ``checkpoint``, when set, is a k whose image was
    prescribed (a subspace the chain passes through).
    """
    target: Space
    columns: Matrix
    transcript: Tuple[TranscriptStep, ...]
    checkpoint: Optional[int] = None

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    @model_validator(mode="after")
    def check_chain(self) -> "InjectiveSequence":
        if self.columns.rows != self.target.ambient_dim:
            raise DimensionMismatchError("Columns do not live in the ambient space of the target")
        if len(self.transcript) != self.columns.cols:
            raise ValueError("Transcript must have one step per column")
        # an injective final map makes every prefix injective
        if rank(self.columns) != self.columns.cols:
            raise ValueError("Sequence maps must be injective")
        if self.columns.cols != self.target.dim:
            raise ValueError("Final map must be an isomorphism onto the target")
        return self

    @property
    def length(self) -> int:
        """Number of maps f_0, ..., f_n."""
        return self.columns.cols + 1

    def map_at(self, k: int) -> LinearMap:
        return prefix_map(self.final, k)

    @property
    def final(self) -> LinearMap:
        return LinearMap(spec=self.target.spec, columns=self.columns, codomain=self.target)

    def maps(self) -> List[LinearMap]:
        return [self.map_at(k) for k in range(self.length)]


class DimensionWitness(BaseModel):
    """dim_I(V) = dim, certified by an isomorphism F^dim -> V."""
    dim: int = Field(ge=0)
    iso: LinearMap

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    @model_validator(mode="after")
    def check_witness(self) -> "DimensionWitness":
        if self.iso.codomain is None:
            raise ValueError("Witness must declare its codomain")
        if self.iso.domain_dim != self.dim:
            raise ValueError("Witness domain must be F^dim")
        if not is_isomorphism(self.iso):
            raise ValueError("Witness must be an isomorphism")
        return self


class RankNullity(BaseModel):
    kernel_dim: int = Field(ge=0)
    image_dim: int = Field(ge=0)
    domain_dim: int = Field(ge=0)

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="after")
    def check_sum(self) -> "RankNullity":
        if self.kernel_dim + self.image_dim != self.domain_dim:
            raise AssertionError(
                f"Rank-nullity violated: {self.kernel_dim} + {self.image_dim} != {self.domain_dim}"
            )
        return self


class ExtractionStep(BaseModel):
    """One deletion while extracting a basis from a surjective set."""
    step: int = Field(ge=1)
    kernel_vector: Tuple[FieldElement, ...]
    position: int = Field(ge=0)
    dropped_index: int = Field(ge=0)

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)


class BasisExtraction(BaseModel):
    kept: Tuple[int, ...]
    steps: Tuple[ExtractionStep, ...]

    model_config = ConfigDict(frozen=True)


def isomorphic_dimension(v: Space) -> DimensionWitness:
    """dim_I(V) with the witness sending e_j to the j-th canonical basis row."""
    iso = from_images(v.basis_vectors(), v.spec, codomain=v)
    return DimensionWitness(dim=v.dim, iso=iso)


def extend_injective(f: LinearMap, v: Vector) -> LinearMap:
    """Append ``v`` as a last column to an injective map that misses it.

    Raises:
        NotInjectiveError: If f is not injective
        MembershipError: If v is not in f's target
        AlreadyInImageError: If v is already in im(f)
    """
    if not is_injective(f):
        raise NotInjectiveError("Only injective maps can be extended")
    if not contains(f.target, v):
        raise MembershipError(f"({format_vector(v)}) is not in the target space")
    if contains(image(f), v):
        raise AlreadyInImageError(f"({format_vector(v)}) is already in the image")
    columns = f.columns.column_vectors() + [v]
    return from_images(columns, f.spec, codomain=f.codomain, ambient_dim=f.ambient_dim)


def _grow(f: LinearMap, candidates: Sequence[Vector], reason: str, transcript: List[TranscriptStep]) -> LinearMap:
    # a candidate captured by the image stays captured, so one ordered pass
    # always extends with the first uncaptured candidate
    for candidate in candidates:
        if contains(image(f), candidate):
            continue
        f = extend_injective(f, candidate)
        transcript.append(TranscriptStep(step=len(transcript) + 1, vector=candidate, reason=reason))
        logger.debug("f_%d: appended (%s) [%s]", f.domain_dim, format_vector(candidate), reason)
    return f


def build_injective_sequence(v: Space) -> InjectiveSequence:
    """f_0, ..., f_n ending in an isomorphism onto V, one canonical row per step."""
    transcript: List[TranscriptStep] = []
    f = _grow(from_images([], v.spec, codomain=v), v.basis_vectors(), FIRST_UNCAPTURED, transcript)
    return InjectiveSequence(target=v, columns=f.columns, transcript=tuple(transcript))


def build_sequence_through(u: Space, v: Space) -> InjectiveSequence:
    """An injective sequence into V whose map f_k has image exactly U, k = dim U.

    Raises:
        NotSubspaceError: If U is not a subspace of V
    """
    if not is_subspace_of(u, v):
        raise NotSubspaceError("U is not a subspace of V")
    transcript: List[TranscriptStep] = []
    f = from_images([], v.spec, codomain=v)
    f = _grow(f, u.basis_vectors(), SUBSPACE_ROW, transcript)
    f = _grow(f, v.basis_vectors(), FIRST_UNCAPTURED, transcript)
    return InjectiveSequence(target=v, columns=f.columns, transcript=tuple(transcript), checkpoint=u.dim)


def _check_lengths(vectors: Sequence[Vector], v: Space) -> None:
    for vec in vectors:
        if len(vec) != v.ambient_dim:
            raise DimensionMismatchError(f"Vector of length {len(vec)} in F^{v.ambient_dim}")
        for x in vec:
            _check_same(x.spec, v.spec)


def trace_basis_extraction(vectors: Sequence[Vector], v: Space) -> BasisExtraction:
    """Delete vectors from a surjective set until the induced map is injective.

    Each step takes the first kernel-basis vector of the current map and
    drops the input at its largest nonzero coordinate.

    Raises:
        NotSurjectiveError: If the vectors do not span V
    """
    _check_lengths(vectors, v)
    if span_of(vectors, v.spec, ambient_dim=v.ambient_dim) != v:
        raise NotSurjectiveError("Vectors do not span the space")
    current = list(range(len(vectors)))
    steps: List[ExtractionStep] = []
    while True:
        columns = Matrix.from_columns(v.spec, [vectors[i] for i in current], rows=v.ambient_dim)
        kernel_vectors = kernel_basis(columns)
        if not kernel_vectors:
            break
        x = kernel_vectors[0]
        position = max(i for i, c in enumerate(x) if c)
        dropped = current.pop(position)
        steps.append(ExtractionStep(
            step=len(steps) + 1,
            kernel_vector=x,
            position=position,
            dropped_index=dropped
        ))
        logger.debug("Dropped input %d using kernel vector (%s)", dropped, format_vector(x))
    if len(current) != v.dim:
        raise AssertionError(f"Extraction kept {len(current)} vectors for a space of dimension {v.dim}")
    return BasisExtraction(kept=tuple(current), steps=tuple(steps))


def extract_basis_from_surjective(vectors: Sequence[Vector], v: Space) -> List[int]:
    """Indices of a basis of V inside a spanning list, in their original order."""
    return list(trace_basis_extraction(vectors, v).kept)


def trace_basis_extension(vectors: Sequence[Vector], v: Space) -> InjectiveSequence:
    """Grow an injective set to an isomorphic basis of V.

    Raises:
        MembershipError: If a vector is not in V
        NotInjectiveError: If the vectors are not an injective set
    """
    _check_lengths(vectors, v)
    for vec in vectors:
        if not contains(v, vec):
            raise MembershipError(f"({format_vector(vec)}) is not in the space")
    f = from_images(vectors, v.spec, codomain=v)
    if not is_injective(f):
        raise NotInjectiveError("Vectors are not an injective set")
    transcript = [TranscriptStep(step=i + 1, vector=vec, reason=GIVEN) for i, vec in enumerate(vectors)]
    f = _grow(f, v.basis_vectors(), FIRST_UNCAPTURED, transcript)
    return InjectiveSequence(target=v, columns=f.columns, transcript=tuple(transcript))


def extend_injective_to_basis(vectors: Sequence[Vector], v: Space) -> List[Vector]:
    """The vectors appended to an injective set to make it an isomorphic basis."""
    sequence = trace_basis_extension(vectors, v)
    return sequence.columns.column_vectors()[len(vectors):]


def rank_nullity(f: LinearMap) -> RankNullity:
    return RankNullity(kernel_dim=kernel(f).dim, image_dim=image(f).dim, domain_dim=f.domain_dim)


def are_isomorphic(u: Space, v: Space) -> bool:
    _check_same(u.spec, v.spec)
    return u.dim == v.dim


def injective_map_between(u: Space, v: Space) -> LinearMap:
    """f_V o p_k^n : F^k -> V, with F^k standing for U through U's witness.

    Raises:
        DimensionOrderError: If dim U > dim V
    """
    _check_same(u.spec, v.spec)
    k, n = u.dim, v.dim
    if k > n:
        raise DimensionOrderError(f"No injective map from dimension {k} to dimension {n}", k, n)
    return compose(isomorphic_dimension(v).iso, embed_truncate(k, n, v.spec))


def surjective_map_between(u: Space, v: Space) -> LinearMap:
    """f_V o p_k^n : F^k -> V truncating, with F^k standing for U.

    Raises:
        DimensionOrderError: If dim U < dim V
    """
    _check_same(u.spec, v.spec)
    k, n = u.dim, v.dim
    if k < n:
        raise DimensionOrderError(f"No surjective map from dimension {k} to dimension {n}", k, n)
    return compose(isomorphic_dimension(v).iso, embed_truncate(k, n, v.spec))
