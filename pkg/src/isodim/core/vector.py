"""Coordinate vectors: tuples of field elements of one field."""

from typing import Iterable, Sequence, Tuple

from .errors import DimensionMismatchError, ParseError
from .field import FieldElement, FieldSpec, Scalar, format_scalar, parse_scalar

Vector = Tuple[FieldElement, ...]


def make_vector(spec: FieldSpec, values: Iterable[Scalar]) -> Vector:
    return tuple(spec.element(v) for v in values)


def zero_vector(spec: FieldSpec, n: int) -> Vector:
    zero = spec.zero
    return (zero,) * n


def standard_basis_vector(spec: FieldSpec, n: int, j: int) -> Vector:
    """e_j of F^n (0-based)."""
    if not 0 <= j < n:
        raise DimensionMismatchError(f"e_{j} does not exist in F^{n}")
    zero, one = spec.zero, spec.one
    return tuple(one if i == j else zero for i in range(n))


def _check_lengths(a: Sequence[FieldElement], b: Sequence[FieldElement]) -> None:
    if len(a) != len(b):
        raise DimensionMismatchError(f"Vector lengths differ: {len(a)} != {len(b)}")


def add_vectors(a: Vector, b: Vector) -> Vector:
    _check_lengths(a, b)
    return tuple(x + y for x, y in zip(a, b))


def sub_vectors(a: Vector, b: Vector) -> Vector:
    _check_lengths(a, b)
    return tuple(x - y for x, y in zip(a, b))


def scale_vector(c: FieldElement, a: Vector) -> Vector:
    return tuple(c * x for x in a)


def is_zero_vector(a: Vector) -> bool:
    return all(x.is_zero() for x in a)


def format_vector(a: Vector) -> str:
    return " ".join(format_scalar(x) for x in a)


def parse_vector_text(text: str, spec: FieldSpec) -> Vector:
    """Parse comma-separated scalars, e.g. ``"3,-1/2,0"``. Empty text is F^0's vector."""
    text = text.strip()
    if not text:
        return ()
    tokens = text.split(",")
    if any(not token.strip() for token in tokens):
        raise ParseError(f"Empty coordinate in vector {text!r}")
    return tuple(parse_scalar(token, spec) for token in tokens)
