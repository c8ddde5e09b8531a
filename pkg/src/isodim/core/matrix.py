"""Dense exact matrices, reduced row echelon form, kernels and solving."""

from typing import List, Optional, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, model_validator

from .errors import DimensionMismatchError
from .field import FieldElement, FieldSpec, Scalar, _check_same
from .vector import Vector, zero_vector


class Matrix:
    """Immutable m x n matrix over one field, stored row-major.

    ``rows == 0`` or ``cols == 0`` is allowed; such a matrix is the matrix of
    a map from or to F^0 = {0}.
    """

    __slots__ = ("_spec", "_rows", "_cols", "_entries")

    def __init__(self, spec: FieldSpec, rows: int, cols: int, entries: Sequence[Sequence[Scalar]]):
        if rows < 0 or cols < 0:
            raise DimensionMismatchError(f"Invalid shape {rows}x{cols}")
        if len(entries) != rows:
            raise DimensionMismatchError(f"Expected {rows} rows, got {len(entries)}")
        checked = []
        for i, row in enumerate(entries):
            if len(row) != cols:
                raise DimensionMismatchError(f"Row {i} has {len(row)} entries, expected {cols}")
            checked.append(tuple(spec.element(x) for x in row))
        self._spec = spec
        self._rows = rows
        self._cols = cols
        self._entries = tuple(checked)

    @classmethod
    def _raw(cls, spec: FieldSpec, rows: int, cols: int, entries: Tuple[Vector, ...]) -> "Matrix":
        matrix = object.__new__(cls)
        matrix._spec = spec
        matrix._rows = rows
        matrix._cols = cols
        matrix._entries = entries
        return matrix

    @classmethod
    def from_rows(cls, spec: FieldSpec, rows: Sequence[Sequence[Scalar]], cols: Optional[int] = None) -> "Matrix":
        """Build from row vectors; ``cols`` is required when ``rows`` is empty."""
        if cols is None:
            if not rows:
                raise DimensionMismatchError("Column count required for a matrix with no rows")
            cols = len(rows[0])
        return cls(spec, len(rows), cols, rows)

    @classmethod
    def from_columns(cls, spec: FieldSpec, columns: Sequence[Sequence[Scalar]], rows: Optional[int] = None) -> "Matrix":
        """Build from column vectors; ``rows`` is required when ``columns`` is empty."""
        if rows is None:
            if not columns:
                raise DimensionMismatchError("Row count required for a matrix with no columns")
            rows = len(columns[0])
        for j, column in enumerate(columns):
            if len(column) != rows:
                raise DimensionMismatchError(f"Column {j} has {len(column)} entries, expected {rows}")
        entries = [[columns[j][i] for j in range(len(columns))] for i in range(rows)]
        return cls(spec, rows, len(columns), entries)

    @classmethod
    def zeros(cls, spec: FieldSpec, rows: int, cols: int) -> "Matrix":
        return cls._raw(spec, rows, cols, tuple(zero_vector(spec, cols) for _ in range(rows)))

    @property
    def spec(self) -> FieldSpec:
        return self._spec

    @property
    def rows(self) -> int:
        return self._rows

    @property
    def cols(self) -> int:
        return self._cols

    @property
    def shape(self) -> Tuple[int, int]:
        return (self._rows, self._cols)

    @property
    def entries(self) -> Tuple[Vector, ...]:
        return self._entries

    def __getitem__(self, index: Tuple[int, int]) -> FieldElement:
        i, j = index
        return self._entries[i][j]

    def row(self, i: int) -> Vector:
        return self._entries[i]

    def column(self, j: int) -> Vector:
        return tuple(row[j] for row in self._entries)

    def row_vectors(self) -> List[Vector]:
        return list(self._entries)

    def column_vectors(self) -> List[Vector]:
        return [self.column(j) for j in range(self._cols)]

    def transpose(self) -> "Matrix":
        columns = tuple(self.column(j) for j in range(self._cols))
        return Matrix._raw(self._spec, self._cols, self._rows, columns)

    def apply(self, x: Sequence[FieldElement]) -> Vector:
        """Matrix-vector product."""
        if len(x) != self._cols:
            raise DimensionMismatchError(f"Vector of length {len(x)} for a {self._rows}x{self._cols} matrix")
        for xi in x:
            _check_same(xi.spec, self._spec)
        zero = self._spec.zero
        return tuple(sum((a * b for a, b in zip(row, x)), zero) for row in self._entries)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        return matmul(self, other)

    def with_column(self, column: Sequence[FieldElement]) -> "Matrix":
        if len(column) != self._rows:
            raise DimensionMismatchError(f"Column of length {len(column)} for {self._rows} rows")
        entries = tuple(row + (self._spec.element(c),) for row, c in zip(self._entries, column))
        return Matrix._raw(self._spec, self._rows, self._cols + 1, entries)

    def take_columns(self, k: int) -> "Matrix":
        """The first ``k`` columns."""
        if not 0 <= k <= self._cols:
            raise DimensionMismatchError(f"Cannot take {k} of {self._cols} columns")
        return Matrix._raw(self._spec, self._rows, k, tuple(row[:k] for row in self._entries))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return (
            self.shape == other.shape
            and self._spec == other._spec
            and self._entries == other._entries
        )

    def __hash__(self) -> int:
        return hash((self._spec.kind, self._spec.modulus, self.shape, self._entries))

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(x) for x in row) for row in self._entries)
        return f"Matrix({self._spec}, {self._rows}x{self._cols}, [{body}])"


class RrefResult(BaseModel):
    """Reduced row echelon form with its pivot columns."""
    rref: Matrix
    pivot_cols: Tuple[int, ...]
    rank: int

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    @model_validator(mode="after")
    def check_pivots(self) -> "RrefResult":
        if self.rank != len(self.pivot_cols):
            raise ValueError("rank must equal the number of pivot columns")
        if any(a >= b for a, b in zip(self.pivot_cols, self.pivot_cols[1:])):
            raise ValueError("pivot columns must be strictly increasing")
        if self.rank > min(self.rref.rows, self.rref.cols):
            raise ValueError("rank exceeds min(rows, cols)")
        return self


def rref(a: Matrix) -> RrefResult:
    """Gauss-Jordan elimination.

    The pivot of each column is the first nonzero entry at or below the
    current pivot row, so identical inputs always give identical outputs.
    """
    m, n = a.shape
    work = [list(row) for row in a.entries]
    pivots: List[int] = []
    r = 0
    for c in range(n):
        if r == m:
            break
        pivot_row = next((i for i in range(r, m) if work[i][c]), None)
        if pivot_row is None:
            continue
        work[r], work[pivot_row] = work[pivot_row], work[r]
        lead = work[r][c]
        if lead != 1:
            scale = lead.inverse()
            work[r] = [scale * x for x in work[r]]
        for i in range(m):
            factor = work[i][c]
            if i != r and factor:
                work[i] = [x - factor * y for x, y in zip(work[i], work[r])]
        pivots.append(c)
        r += 1
    reduced = Matrix._raw(a.spec, m, n, tuple(tuple(row) for row in work))
    return RrefResult(rref=reduced, pivot_cols=tuple(pivots), rank=len(pivots))


def rank(a: Matrix) -> int:
    return rref(a).rank


def kernel_basis(a: Matrix) -> List[Vector]:
    """One kernel vector per free column, in increasing free-column order.

    The vector for free column j has 1 at j, 0 at the other free columns and
    minus the reduced entry (i, j) at the i-th pivot column.
    """
    result = rref(a)
    reduced, pivots = result.rref, result.pivot_cols
    pivot_set = set(pivots)
    spec = a.spec
    basis = []
    for j in range(a.cols):
        if j in pivot_set:
            continue
        v = list(zero_vector(spec, a.cols))
        v[j] = spec.one
        for i, p in enumerate(pivots):
            v[p] = -reduced[i, j]
        basis.append(tuple(v))
    return basis


def identity(n: int, spec: FieldSpec) -> Matrix:
    zero, one = spec.zero, spec.one
    entries = tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n))
    return Matrix._raw(spec, n, n, entries)


def transpose(a: Matrix) -> Matrix:
    return a.transpose()


def matmul(a: Matrix, b: Matrix) -> Matrix:
    _check_same(a.spec, b.spec)
    if a.cols != b.rows:
        raise DimensionMismatchError(f"Cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}")
    zero = a.spec.zero
    b_columns = b.column_vectors()
    entries = tuple(
        tuple(sum((x * y for x, y in zip(row, column)), zero) for column in b_columns)
        for row in a.entries
    )
    return Matrix._raw(a.spec, a.rows, b.cols, entries)


def solve(a: Matrix, b: Sequence[FieldElement]) -> Optional[Vector]:
    """A particular solution of A x = b with free coordinates 0, or None.

    The full solution set is the returned vector plus the span of
    ``kernel_basis(a)``.
    """
    if len(b) != a.rows:
        raise DimensionMismatchError(f"Right-hand side of length {len(b)} for {a.rows} rows")
    result = rref(a.with_column(b))
    n = a.cols
    if result.pivot_cols and result.pivot_cols[-1] == n:
        return None
    x = list(zero_vector(a.spec, n))
    for i, p in enumerate(result.pivot_cols):
        x[p] = result.rref[i, n]
    return tuple(x)
