"""Exact scalars over GF(p) and the rationals."""

import re
from fractions import Fraction
from functools import lru_cache
from typing import Literal, Optional, Union

from pydantic import BaseModel, ConfigDict, ValidationError, model_validator

from .errors import FieldDivisionError, FieldMismatchError, ParseError

Scalar = Union[int, Fraction, "FieldElement"]

_PRIME_SCALAR = re.compile(r"^[+-]?\d+$", re.ASCII)
_RATIONAL_SCALAR = re.compile(r"^([+-]?\d+)(?:/([+-]?\d+))?$", re.ASCII)
_GF_NAME = re.compile(r"^gf(?:\((\d+)\)|(\d+))$", re.IGNORECASE | re.ASCII)
_GF_HEADER = re.compile(r"^GF\((\d+)\)$", re.ASCII)


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class FieldSpec(BaseModel):
    """A prime field GF(p) or the rationals Q."""
    kind: Literal["prime", "rationals"]
    modulus: Optional[int] = None

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="after")
    def check_modulus(self) -> "FieldSpec":
        """Validate that the modulus is present iff the field is prime, and is prime."""
        if self.kind == "prime":
            if self.modulus is None:
                raise ValueError("GF(p) requires a modulus")
            if not _is_prime(self.modulus):
                raise ValueError(f"GF({self.modulus}) is not a field: modulus is not prime")
        elif self.modulus is not None:
            raise ValueError("Q takes no modulus")
        return self

    @classmethod
    def gf(cls, p: int) -> "FieldSpec":
        return _prime_field(p)

    @classmethod
    def rationals(cls) -> "FieldSpec":
        return _RATIONALS

    @property
    def is_prime_field(self) -> bool:
        return self.kind == "prime"

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    def element(self, value: Scalar) -> "FieldElement":
        """Build an element of this field from an int, Fraction or element."""
        if isinstance(value, FieldElement):
            _check_same(value.spec, self)
            return value
        return FieldElement(self, value)

    def __str__(self) -> str:
        return f"GF({self.modulus})" if self.is_prime_field else "Q"


@lru_cache(maxsize=None)
def _prime_field(p: int) -> FieldSpec:
    return FieldSpec(kind="prime", modulus=p)


_RATIONALS = FieldSpec(kind="rationals")


def _check_same(a: FieldSpec, b: FieldSpec) -> None:
    if a is not b and a != b:
        raise FieldMismatchError(f"Cannot combine elements of {a} and {b}")


class FieldElement:
    """Immutable exact scalar.

    Prime-field values are stored as a reduced residue in [0, p); rational
    values as a normalized ``Fraction`` (positive denominator, zero is 0/1).
    """

    __slots__ = ("_spec", "_value")

    def __init__(self, spec: FieldSpec, value: Union[int, Fraction]):
        if isinstance(value, bool) or not isinstance(value, (int, Fraction)):
            raise TypeError(f"Cannot build a field element from {type(value).__name__}")
        self._spec = spec
        if spec.is_prime_field:
            p = spec.modulus
            if isinstance(value, Fraction):
                if value.denominator % p == 0:
                    raise FieldDivisionError(f"Denominator {value.denominator} vanishes in {spec}")
                value = value.numerator * pow(value.denominator, -1, p)
            self._value = value % p
        else:
            self._value = Fraction(value)

    @classmethod
    def _raw(cls, spec: FieldSpec, value: Union[int, Fraction]) -> "FieldElement":
        # value must already be normalized
        element = object.__new__(cls)
        element._spec = spec
        element._value = value
        return element

    @property
    def spec(self) -> FieldSpec:
        return self._spec

    @property
    def value(self) -> Union[int, Fraction]:
        return self._value

    @property
    def residue(self) -> int:
        if not self._spec.is_prime_field:
            raise AttributeError("Rational elements have no residue")
        return self._value

    @property
    def numerator(self) -> int:
        return self._value if self._spec.is_prime_field else self._value.numerator

    @property
    def denominator(self) -> int:
        return 1 if self._spec.is_prime_field else self._value.denominator

    def is_zero(self) -> bool:
        return self._value == 0

    def _coerce(self, other: object) -> Optional["FieldElement"]:
        if isinstance(other, FieldElement):
            _check_same(self._spec, other._spec)
            return other
        if isinstance(other, int) and not isinstance(other, bool):
            return FieldElement(self._spec, other)
        return None

    def _wrap(self, value: Union[int, Fraction]) -> "FieldElement":
        if self._spec.is_prime_field:
            return FieldElement._raw(self._spec, value % self._spec.modulus)
        return FieldElement._raw(self._spec, value)

    def __add__(self, other: object) -> "FieldElement":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._wrap(self._value + o._value)

    __radd__ = __add__

    def __sub__(self, other: object) -> "FieldElement":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._wrap(self._value - o._value)

    def __rsub__(self, other: object) -> "FieldElement":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._wrap(o._value - self._value)

    def __mul__(self, other: object) -> "FieldElement":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._wrap(self._value * o._value)

    __rmul__ = __mul__

    def __neg__(self) -> "FieldElement":
        return self._wrap(-self._value)

    def inverse(self) -> "FieldElement":
        if self._value == 0:
            raise FieldDivisionError(f"0 has no inverse in {self._spec}")
        if self._spec.is_prime_field:
            return FieldElement._raw(self._spec, pow(self._value, -1, self._spec.modulus))
        return FieldElement._raw(self._spec, 1 / self._value)

    def __truediv__(self, other: object) -> "FieldElement":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other: object) -> "FieldElement":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __eq__(self, other: object) -> bool:
        if isinstance(other, FieldElement):
            return (self._spec is other._spec or self._spec == other._spec) and self._value == other._value
        if isinstance(other, int) and not isinstance(other, bool):
            return self == FieldElement(self._spec, other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self._spec.kind, self._spec.modulus, self._value))

    def __bool__(self) -> bool:
        return self._value != 0

    def __repr__(self) -> str:
        return f"FieldElement({self._spec}, {format_scalar(self)})"

    def __str__(self) -> str:
        return format_scalar(self)


def add(a: FieldElement, b: FieldElement) -> FieldElement:
    return a + b


def sub(a: FieldElement, b: FieldElement) -> FieldElement:
    return a - b


def mul(a: FieldElement, b: FieldElement) -> FieldElement:
    return a * b


def neg(a: FieldElement) -> FieldElement:
    return -a


def inv(a: FieldElement) -> FieldElement:
    return a.inverse()


def div(a: FieldElement, b: FieldElement) -> FieldElement:
    return a / b


def format_scalar(a: FieldElement) -> str:
    """Canonical text: bare residue, "n" or "n/d" with d > 0."""
    if a.spec.is_prime_field:
        return str(a.value)
    if a.value.denominator == 1:
        return str(a.value.numerator)
    return f"{a.value.numerator}/{a.value.denominator}"


def parse_scalar(text: str, spec: FieldSpec) -> FieldElement:
    """Parse a scalar in the canonical grammar of ``spec``.

    Raises:
        ParseError: If the text is malformed
        FieldDivisionError: If a rational has denominator 0
    """
    text = text.strip()
    if spec.is_prime_field:
        if not _PRIME_SCALAR.match(text):
            raise ParseError(f"Invalid {spec} scalar: {text!r}")
        return FieldElement(spec, int(text))

    match = _RATIONAL_SCALAR.match(text)
    if not match:
        raise ParseError(f"Invalid rational scalar: {text!r}")
    numerator = int(match.group(1))
    denominator = int(match.group(2)) if match.group(2) is not None else 1
    if denominator == 0:
        raise FieldDivisionError(f"Zero denominator in {text!r}")
    return FieldElement(spec, Fraction(numerator, denominator))


def parse_field_spec(text: str, strict: bool = False) -> FieldSpec:
    """Parse "GF(p)", "gfP" or "Q" into a FieldSpec.

    With ``strict`` only the file header spellings "GF(p)" and "Q" are accepted.
    """
    text = text.strip()
    if text == "Q" or (text == "q" and not strict):
        return FieldSpec.rationals()
    match = (_GF_HEADER if strict else _GF_NAME).match(text)
    if not match:
        raise ParseError(f"Unknown field: {text!r}")
    try:
        return FieldSpec.gf(int(next(g for g in match.groups() if g is not None)))
    except ValidationError as e:
        raise ParseError(f"Invalid field {text!r}: modulus is not prime") from e
