"""Brute-force enumeration oracle over small prime fields.

Everything here works on plain integer residues with explicit loops and
sets. Nothing is row reduced, so the answers are independent of the
elimination code they are used to check.
"""

import itertools
import logging
from typing import Dict, FrozenSet, Iterator, List, Optional, Sequence, Set, Tuple

from pydantic import BaseModel, ConfigDict, Field

from ..core.errors import BudgetExceededError, OracleInconsistencyError, UnsupportedFieldError
from ..core.field import FieldElement, FieldSpec
from ..core.vector import Vector
from ..maps.linear_map import LinearMap
from ..procedures.classify import SetClassification
from ..spaces.space import Space

logger = logging.getLogger(__name__)

Residues = Tuple[int, ...]


class EnumerationBudget(BaseModel):
    """Cap on the number of points a single oracle call may enumerate."""
    max_points: int = Field(default=1_000_000, gt=0)

    model_config = ConfigDict(frozen=True)

    def check(self, p: int, n: int) -> None:
        """Raise unless p^n points fit in the budget."""
        points = p ** n
        if points > self.max_points:
            raise BudgetExceededError(
                f"Enumerating {p}^{n} = {points} points exceeds the budget of {self.max_points}",
                points,
                self.max_points
            )


_DEFAULT_BUDGET = EnumerationBudget()


def _modulus(spec: FieldSpec) -> int:
    if not spec.is_prime_field:
        raise UnsupportedFieldError(f"Cannot enumerate the infinite field {spec}")
    return spec.modulus


def _residues(v: Sequence[FieldElement]) -> Residues:
    return tuple(x.residue for x in v)


def _lift(spec: FieldSpec, v: Residues) -> Vector:
    return tuple(FieldElement._raw(spec, x) for x in v)


def _all_tuples(p: int, n: int, budget: EnumerationBudget) -> Iterator[Residues]:
    budget.check(p, n)
    return itertools.product(range(p), repeat=n)


def _combine(p: int, m: int, coefficients: Residues, columns: List[Residues]) -> Residues:
    out = [0] * m
    for c, column in zip(coefficients, columns):
        if c:
            for i in range(m):
                out[i] = (out[i] + c * column[i]) % p
    return tuple(out)


def _outputs(p: int, m: int, columns: List[Residues], budget: EnumerationBudget) -> Iterator[Tuple[Residues, Residues]]:
    for coefficients in _all_tuples(p, len(columns), budget):
        yield coefficients, _combine(p, m, coefficients, columns)


def _map_columns(f: LinearMap) -> List[Residues]:
    return [_residues(column) for column in f.columns.column_vectors()]


def _residue_span(p: int, m: int, vectors: Sequence[Vector], budget: EnumerationBudget) -> Set[Residues]:
    columns = [_residues(v) for v in vectors]
    return {out for _, out in _outputs(p, m, columns, budget)}


def enumerate_vectors(spec: FieldSpec, n: int, budget: Optional[EnumerationBudget] = None) -> Iterator[Vector]:
    """All p^n vectors of GF(p)^n in lexicographic order.

    Raises:
        UnsupportedFieldError: For Q
        BudgetExceededError: If p^n is over budget
    """
    p = _modulus(spec)
    for v in _all_tuples(p, n, budget or _DEFAULT_BUDGET):
        yield _lift(spec, v)


def oracle_injective(f: LinearMap, budget: Optional[EnumerationBudget] = None) -> bool:
    """True iff no two inputs of F^n share an output."""
    p = _modulus(f.spec)
    seen: Set[Residues] = set()
    for _, out in _outputs(p, f.ambient_dim, _map_columns(f), budget or _DEFAULT_BUDGET):
        if out in seen:
            return False
        seen.add(out)
    return True


def oracle_image(f: LinearMap, budget: Optional[EnumerationBudget] = None) -> FrozenSet[Vector]:
    p = _modulus(f.spec)
    outputs = {out for _, out in _outputs(p, f.ambient_dim, _map_columns(f), budget or _DEFAULT_BUDGET)}
    return frozenset(_lift(f.spec, v) for v in outputs)


def oracle_kernel(f: LinearMap, budget: Optional[EnumerationBudget] = None) -> FrozenSet[Vector]:
    p = _modulus(f.spec)
    zero = (0,) * f.ambient_dim
    inputs = {x for x, out in _outputs(p, f.ambient_dim, _map_columns(f), budget or _DEFAULT_BUDGET) if out == zero}
    return frozenset(_lift(f.spec, x) for x in inputs)


def oracle_span(
    vectors: Sequence[Vector],
    spec: FieldSpec,
    ambient_dim: Optional[int] = None,
    budget: Optional[EnumerationBudget] = None
) -> FrozenSet[Vector]:
    """Every linear combination of ``vectors``, one coefficient tuple at a time."""
    p = _modulus(spec)
    if ambient_dim is None:
        if not vectors:
            raise ValueError("ambient_dim is required for an empty list")
        ambient_dim = len(vectors[0])
    return frozenset(_lift(spec, v) for v in _residue_span(p, ambient_dim, vectors, budget or _DEFAULT_BUDGET))


def _log(p: int, size: int) -> int:
    d = 0
    while size % p == 0:
        size //= p
        d += 1
    if size != 1:
        raise OracleInconsistencyError(f"Span cardinality is not a power of {p}")
    return d


def oracle_dimension(
    vectors: Sequence[Vector],
    spec: FieldSpec,
    ambient_dim: Optional[int] = None,
    budget: Optional[EnumerationBudget] = None
) -> int:
    """log_p of the span's cardinality.

    Raises:
        OracleInconsistencyError: If the cardinality is not a power of p
    """
    p = _modulus(spec)
    return _log(p, len(oracle_span(vectors, spec, ambient_dim, budget)))


def _members(v: Space, budget: EnumerationBudget) -> Set[Residues]:
    return _residue_span(_modulus(v.spec), v.ambient_dim, v.basis_vectors(), budget)


def oracle_surjective(f: LinearMap, budget: Optional[EnumerationBudget] = None) -> bool:
    """True iff every member of f's target is hit."""
    budget = budget or _DEFAULT_BUDGET
    p = _modulus(f.spec)
    hit = {out for _, out in _outputs(p, f.ambient_dim, _map_columns(f), budget)}
    return hit == _members(f.target, budget)


def oracle_representation_counts(
    vectors: Sequence[Vector],
    v: Space,
    budget: Optional[EnumerationBudget] = None
) -> Dict[Vector, int]:
    """How many coefficient tuples produce each member of V."""
    budget = budget or _DEFAULT_BUDGET
    p = _modulus(v.spec)
    counts = {member: 0 for member in _members(v, budget)}
    columns = [_residues(vec) for vec in vectors]
    for _, out in _outputs(p, v.ambient_dim, columns, budget):
        if out not in counts:
            raise OracleInconsistencyError("A combination of the vectors escapes the space")
        counts[out] += 1
    return {_lift(v.spec, member): count for member, count in counts.items()}


def oracle_classify(
    vectors: Sequence[Vector],
    v: Space,
    budget: Optional[EnumerationBudget] = None
) -> SetClassification:
    """Classify a vector list by counting representations of every member of V."""
    counts = oracle_representation_counts(vectors, v, budget)
    injective = all(count <= 1 for count in counts.values())
    surjective = all(count >= 1 for count in counts.values())
    logger.debug("Oracle classified %d vectors over %d members", len(vectors), len(counts))
    return SetClassification(injective=injective, surjective=surjective, basis=injective and surjective)
