"""Injective sets, surjective sets and isomorphic bases of a space."""

from typing import Optional, Sequence

from pydantic import BaseModel, ConfigDict, model_validator

from ..core.errors import DimensionMismatchError, MembershipError
from ..core.field import FieldSpec
from ..core.matrix import Matrix, solve
from ..core.vector import Vector, format_vector
from ..maps.linear_map import from_images, is_injective, is_surjective
from ..spaces.space import Space, contains


class SetClassification(BaseModel):
    """How the map F^n -> V sending e_i to v_i behaves."""
    injective: bool
    surjective: bool
    basis: bool

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="after")
    def check_basis(self) -> "SetClassification":
        if self.basis != (self.injective and self.surjective):
            raise ValueError("basis must equal injective and surjective")
        return self

    @property
    def noninjective(self) -> bool:
        return not self.injective


def classify(vectors: Sequence[Vector], v: Space) -> SetClassification:
    """Classify a vector list (duplicates allowed) against the space V.

    Raises:
        MembershipError: If some vector is not in V
    """
    for vec in vectors:
        if len(vec) != v.ambient_dim:
            raise DimensionMismatchError(f"Vector of length {len(vec)} in F^{v.ambient_dim}")
        if not contains(v, vec):
            raise MembershipError(f"({format_vector(vec)}) is not in the space")
    f = from_images(vectors, v.spec, codomain=v)
    injective = is_injective(f)
    surjective = is_surjective(f)
    return SetClassification(injective=injective, surjective=surjective, basis=injective and surjective)


def linear_combination_of(target: Vector, vectors: Sequence[Vector], spec: FieldSpec) -> Optional[Vector]:
    """Coefficients x with x_1 v_1 + ... + x_n v_n = target, or None outside the span.

    Free coordinates are zeroed; every other solution differs from this one
    by a kernel vector of the induced map. For an injective set the answer
    is the unique representation.
    """
    columns = Matrix.from_columns(spec, vectors, rows=len(target))
    return solve(columns, target)


def unique_representation_check(vectors: Sequence[Vector], v: Space) -> bool:
    """True iff every vector of V is a unique linear combination of ``vectors``."""
    return classify(vectors, v).basis
