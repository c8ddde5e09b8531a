"""Linear maps F^n -> F^m determined by the images of the standard basis."""

from typing import Optional, Sequence

from pydantic import BaseModel, ConfigDict, Field, model_validator

from ..core.errors import DimensionMismatchError, MembershipError, NotInvertibleError
from ..core.field import FieldSpec, _check_same
from ..core.matrix import Matrix, identity, kernel_basis, matmul, rank, solve
from ..core.vector import Vector, format_vector, standard_basis_vector
from ..spaces.space import Space, check_compatible, contains, full_space, space_from_rows, span_of


class LinearMap(BaseModel):
    """A map F^n -> F^m whose j-th column is f(e_j).

    When ``codomain`` is set the map is read as F^n -> V for a subspace V of
    F^m; coordinates stay ambient and every column must lie in V.
    """
    spec: FieldSpec
    columns: Matrix
    codomain: Optional[Space] = None

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    @model_validator(mode="after")
    def check_columns(self) -> "LinearMap":
        _check_same(self.columns.spec, self.spec)
        if self.codomain is not None:
            _check_same(self.codomain.spec, self.spec)
            if self.codomain.ambient_dim != self.columns.rows:
                raise DimensionMismatchError(
                    f"Codomain lives in F^{self.codomain.ambient_dim}, columns in F^{self.columns.rows}"
                )
            for j, column in enumerate(self.columns.column_vectors()):
                if not contains(self.codomain, column):
                    raise MembershipError(f"f(e_{j}) = ({format_vector(column)}) is not in the codomain")
        return self

    @property
    def domain_dim(self) -> int:
        return self.columns.cols

    @property
    def ambient_dim(self) -> int:
        return self.columns.rows

    @property
    def target(self) -> Space:
        """The declared codomain, or all of F^m."""
        if self.codomain is not None:
            return self.codomain
        return full_space(self.spec, self.ambient_dim)


class EmbedTruncate(BaseModel):
    """The map p_i^j: zero-padding when i <= j, truncation when i >= j."""
    from_dim: int = Field(ge=0)
    to_dim: int = Field(ge=0)

    model_config = ConfigDict(frozen=True)

    def as_map(self, spec: FieldSpec) -> LinearMap:
        k = min(self.from_dim, self.to_dim)
        entries = [
            [spec.one if (r == c and r < k) else spec.zero for c in range(self.from_dim)]
            for r in range(self.to_dim)
        ]
        return LinearMap(spec=spec, columns=Matrix(spec, self.to_dim, self.from_dim, entries))


def from_images(
    vectors: Sequence[Vector],
    spec: FieldSpec,
    codomain: Optional[Space] = None,
    ambient_dim: Optional[int] = None
) -> LinearMap:
    """The unique linear map with f(e_j) = vectors[j].

    For an empty list the map is the one from F^0 = {0}; its ambient
    dimension comes from ``codomain`` or ``ambient_dim``.

    Raises:
        DimensionMismatchError: On inconsistent lengths
        MembershipError: If a vector lies outside ``codomain``
    """
    if codomain is not None:
        if ambient_dim is not None and ambient_dim != codomain.ambient_dim:
            raise DimensionMismatchError("ambient_dim disagrees with the codomain")
        ambient_dim = codomain.ambient_dim
    if ambient_dim is None:
        if not vectors:
            raise DimensionMismatchError("Ambient dimension required for a map from F^0")
        ambient_dim = len(vectors[0])
    columns = Matrix.from_columns(spec, vectors, rows=ambient_dim)
    return LinearMap(spec=spec, columns=columns, codomain=codomain)


def identity_map(n: int, spec: FieldSpec) -> LinearMap:
    return LinearMap(spec=spec, columns=identity(n, spec))


def embed_truncate(i: int, j: int, spec: FieldSpec) -> LinearMap:
    return EmbedTruncate(from_dim=i, to_dim=j).as_map(spec)


def apply(f: LinearMap, x: Vector) -> Vector:
    """f(x) = x_1 f(e_1) + ... + x_n f(e_n)."""
    return f.columns.apply(x)


def compose(g: LinearMap, f: LinearMap) -> LinearMap:
    """g o f, with the codomain of g."""
    _check_same(g.spec, f.spec)
    if f.ambient_dim != g.domain_dim:
        raise DimensionMismatchError(f"Cannot compose F^{g.domain_dim} -> ... with ... -> F^{f.ambient_dim}")
    return LinearMap(spec=f.spec, columns=matmul(g.columns, f.columns), codomain=g.codomain)


def prefix_map(f: LinearMap, k: int) -> LinearMap:
    """f o p_k^n: the map given by the first ``k`` columns of f."""
    return LinearMap(spec=f.spec, columns=f.columns.take_columns(k), codomain=f.codomain)


def kernel(f: LinearMap) -> Space:
    return span_of(kernel_basis(f.columns), f.spec, ambient_dim=f.domain_dim)


def image(f: LinearMap) -> Space:
    return space_from_rows(f.columns.transpose())


def push_forward(f: LinearMap, u: Space) -> Space:
    """f(U) for a subspace U of the domain."""
    check_compatible(u, full_space(f.spec, f.domain_dim))
    return span_of([apply(f, row) for row in u.basis_vectors()], f.spec, ambient_dim=f.ambient_dim)


def is_injective(f: LinearMap) -> bool:
    return rank(f.columns) == f.domain_dim


def is_surjective(f: LinearMap) -> bool:
    # columns lie in the target, so equal dimension means equal spaces
    return rank(f.columns) == f.target.dim


def is_isomorphism(f: LinearMap) -> bool:
    r = rank(f.columns)
    return r == f.domain_dim and r == f.target.dim


def inverse(f: LinearMap) -> LinearMap:
    """Inverse of an isomorphism F^n -> V.

    The result is a map F^m -> F^n that reads the pivot coordinates of V's
    canonical basis. It agrees with f^{-1} on V, and is the two-sided
    inverse when V is all of F^m.

    Raises:
        NotInvertibleError: If f is not an isomorphism onto its codomain
    """
    if not is_isomorphism(f):
        raise NotInvertibleError("Map is not an isomorphism onto its codomain")
    spec = f.spec
    target = f.target
    n = f.domain_dim
    # f = B M with B the canonical basis as columns and M the pivot rows of f
    coords = Matrix(spec, n, n, [f.columns.row(p) for p in target.pivot_cols])
    coords_inverse = [solve(coords, standard_basis_vector(spec, n, i)) for i in range(n)]
    zero_column = tuple(spec.zero for _ in range(n))
    pivot_position = {p: i for i, p in enumerate(target.pivot_cols)}
    columns = [
        coords_inverse[pivot_position[c]] if c in pivot_position else zero_column
        for c in range(f.ambient_dim)
    ]
    return LinearMap(spec=spec, columns=Matrix.from_columns(spec, columns, rows=n))
