"""Subspaces of F^m in canonical (RREF row basis) form."""

from typing import List, Optional, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

from ..core.errors import DimensionMismatchError
from ..core.field import FieldSpec, _check_same
from ..core.matrix import Matrix, identity, rref
from ..core.vector import Vector, is_zero_vector


class Space(BaseModel):
    """A subspace of F^m, stored as the nonzero rows of an RREF matrix.

    Canonicity makes equality syntactic: two spaces are equal iff their
    basis matrices are entrywise equal.
    """
    spec: FieldSpec
    ambient_dim: int = Field(ge=0)
    basis: Matrix
    pivot_cols: Tuple[int, ...]

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    @model_validator(mode="after")
    def check_canonical(self) -> "Space":
        """Validate that the basis is reduced, has no zero rows and matches the pivots."""
        if self.basis.spec != self.spec:
            raise ValueError(f"Basis is over {self.basis.spec}, space over {self.spec}")
        if self.basis.cols != self.ambient_dim:
            raise ValueError("Basis rows must have length ambient_dim")
        result = rref(self.basis)
        if (
            result.rref != self.basis
            or result.rank != self.basis.rows
            or result.pivot_cols != self.pivot_cols
        ):
            raise ValueError("Basis must be in reduced row echelon form without zero rows")
        return self

    @property
    def dim(self) -> int:
        return self.basis.rows

    def basis_vectors(self) -> List[Vector]:
        return self.basis.row_vectors()

    def __contains__(self, v: object) -> bool:
        return contains(self, v)

    def __str__(self) -> str:
        return f"subspace of {self.spec}^{self.ambient_dim} of dimension {self.dim}"


def space_from_rows(a: Matrix) -> Space:
    """The row space of ``a`` in canonical form."""
    result = rref(a)
    rows = result.rref.entries[:result.rank]
    basis = Matrix._raw(a.spec, result.rank, a.cols, rows)
    return Space(spec=a.spec, ambient_dim=a.cols, basis=basis, pivot_cols=result.pivot_cols)


def span_of(vectors: Sequence[Vector], spec: FieldSpec, ambient_dim: Optional[int] = None) -> Space:
    """Span of a vector list; ``ambient_dim`` is required for the empty list.

    Raises:
        DimensionMismatchError: If vector lengths differ from each other or from ambient_dim
    """
    if ambient_dim is None:
        if not vectors:
            raise DimensionMismatchError("Ambient dimension required to span an empty list")
        ambient_dim = len(vectors[0])
    for v in vectors:
        if len(v) != ambient_dim:
            raise DimensionMismatchError(f"Vector of length {len(v)} in F^{ambient_dim}")
    return space_from_rows(Matrix(spec, len(vectors), ambient_dim, vectors))


def zero_space(spec: FieldSpec, ambient_dim: int) -> Space:
    return Space(spec=spec, ambient_dim=ambient_dim, basis=Matrix.zeros(spec, 0, ambient_dim), pivot_cols=())


def full_space(spec: FieldSpec, ambient_dim: int) -> Space:
    return Space(
        spec=spec,
        ambient_dim=ambient_dim,
        basis=identity(ambient_dim, spec),
        pivot_cols=tuple(range(ambient_dim))
    )


def _check_vector(s: Space, v: Sequence) -> None:
    if len(v) != s.ambient_dim:
        raise DimensionMismatchError(f"Vector of length {len(v)} tested against F^{s.ambient_dim}")
    for x in v:
        _check_same(x.spec, s.spec)


def check_compatible(u: Space, v: Space) -> None:
    _check_same(u.spec, v.spec)
    if u.ambient_dim != v.ambient_dim:
        raise DimensionMismatchError(f"Spaces live in F^{u.ambient_dim} and F^{v.ambient_dim}")


def reduce_vector(s: Space, v: Vector) -> Vector:
    """Subtract multiples of the canonical rows of ``s`` until every pivot coordinate of ``v`` is 0."""
    _check_vector(s, v)
    w = list(v)
    for i, p in enumerate(s.pivot_cols):
        c = w[p]
        if c:
            w = [x - c * y for x, y in zip(w, s.basis.row(i))]
    return tuple(w)


def contains(s: Space, v: Vector) -> bool:
    """Membership; equivalent to appending ``v`` to the basis leaving the rank unchanged."""
    return is_zero_vector(reduce_vector(s, v))


def is_subspace_of(u: Space, v: Space) -> bool:
    check_compatible(u, v)
    return all(contains(v, row) for row in u.basis_vectors())


def space_equal(u: Space, v: Space) -> bool:
    check_compatible(u, v)
    return u.basis == v.basis
