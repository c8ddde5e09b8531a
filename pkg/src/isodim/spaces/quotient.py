"""Quotient spaces V/U with canonical coset representatives.

A coset v + U is represented by its unique member with zeros at every pivot
column of U's canonical basis. The choice of representative is a convention
of this library; any other canonical choice would give the same quotient.
"""

import logging
from typing import Tuple

from pydantic import BaseModel, ConfigDict, model_validator

from ..core.errors import MembershipError, NotInjectiveError, NotSubspaceError
from ..core.field import FieldElement
from ..core.vector import Vector, format_vector
from ..maps.linear_map import (
    LinearMap,
    apply,
    from_images,
    image,
    is_injective,
    kernel,
    push_forward,
)
from .space import Space, check_compatible, contains, full_space, is_subspace_of, reduce_vector, span_of

logger = logging.getLogger(__name__)


class QuotientSpace(BaseModel):
    """V/U for a subspace U of V."""
    ambient: Space
    sub: Space

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    @model_validator(mode="after")
    def check_inclusion(self) -> "QuotientSpace":
        check_compatible(self.sub, self.ambient)
        if not is_subspace_of(self.sub, self.ambient):
            raise NotSubspaceError("U is not a subspace of V")
        return self

    @property
    def dim(self) -> int:
        return self.ambient.dim - self.sub.dim


class Coset(BaseModel):
    """The coset rep + U, identified by its canonical representative."""
    quotient: QuotientSpace
    rep: Tuple[FieldElement, ...]

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    @model_validator(mode="after")
    def check_canonical(self) -> "Coset":
        if not contains(self.quotient.ambient, self.rep):
            raise MembershipError("Representative is not in V")
        if any(self.rep[p] for p in self.quotient.sub.pivot_cols):
            raise ValueError("Representative must vanish at the pivot columns of U")
        return self


def coset_rep(q: QuotientSpace, v: Vector) -> Coset:
    """The coset v + U with its canonical representative.

    Raises:
        MembershipError: If v is not in V
    """
    if not contains(q.ambient, v):
        raise MembershipError(f"({format_vector(v)}) is not in V")
    return Coset(quotient=q, rep=reduce_vector(q.sub, v))


def quotient_dim(q: QuotientSpace) -> int:
    return q.dim


def representative_space(q: QuotientSpace) -> Space:
    """The subspace of V made of the canonical representatives."""
    reps = [reduce_vector(q.sub, row) for row in q.ambient.basis_vectors()]
    return span_of(reps, q.ambient.spec, ambient_dim=q.ambient.ambient_dim)


def quotient_iso(q: QuotientSpace) -> LinearMap:
    """Isomorphism from F^(dim V - dim U) onto the representative space.

    Coordinate t goes to the canonical basis row of the representative space
    with a 1 at its t-th pivot; no pivot of that space is a pivot of U. For
    V = F^n and U = p_k^n(F^k) this is (x_{k+1}, ..., x_n) -> (0, ..., 0, x_{k+1}, ..., x_n).
    """
    reps = representative_space(q)
    if reps.dim != q.dim:
        raise AssertionError(f"Representative space has dimension {reps.dim}, expected {q.dim}")
    return from_images(reps.basis_vectors(), q.ambient.spec, codomain=reps)


def quotient_coordinates(q: QuotientSpace, v: Vector) -> Vector:
    """Coordinates of the coset of v under ``quotient_iso(q)``."""
    rep = coset_rep(q, v).rep
    reps = representative_space(q)
    return tuple(rep[p] for p in reps.pivot_cols)


def kernel_quotient(f: LinearMap) -> QuotientSpace:
    """F^n / ker(f)."""
    return QuotientSpace(ambient=full_space(f.spec, f.domain_dim), sub=kernel(f))


def factor_map(f: LinearMap) -> LinearMap:
    """The induced isomorphism F^n/ker(f) -> im(f), read through ``quotient_iso``.

    Applying the result to ``quotient_coordinates(kernel_quotient(f), x)``
    gives f(x) for every x.
    """
    q = kernel_quotient(f)
    h = quotient_iso(q)
    columns = [apply(f, rep) for rep in h.columns.column_vectors()]
    logger.debug("Factor map of a %dx%d map has domain F^%d", f.ambient_dim, f.domain_dim, len(columns))
    return from_images(columns, f.spec, codomain=image(f))


def transport_quotient(f: LinearMap, q: QuotientSpace) -> QuotientSpace:
    """f(V)/f(U) for an injective f defined on the ambient space of V.

    Raises:
        NotInjectiveError: If f is not injective
    """
    if not is_injective(f):
        raise NotInjectiveError("Quotients are transported along injective maps only")
    return QuotientSpace(ambient=push_forward(f, q.ambient), sub=push_forward(f, q.sub))
