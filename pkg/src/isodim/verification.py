"""Property suites behind ``isodim verify``.

Every suite checks one family of claims, either exhaustively over a small
prime field or on seeded random cases over each configured field. A case
that raises is counted as a violation. Suites draw from their own
``random.Random`` seeded with the run seed and the suite name, so each
suite is reproducible on its own and the report does not depend on which
other suites ran.
"""

import itertools
import logging
import random
from fractions import Fraction
from typing import Callable, Dict, Iterator, List, Optional, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

from .core.config import OracleConfig, VerifyConfig
from .core.errors import BudgetExceededError, DimensionOrderError, IsodimError
from .core.field import FieldElement, FieldSpec, parse_field_spec
from .core.matrix import Matrix, identity, kernel_basis, rank
from .core.vector import Vector, add_vectors, is_zero_vector, scale_vector, sub_vectors, zero_vector
from .maps.linear_map import (
    LinearMap,
    apply,
    compose,
    embed_truncate,
    from_images,
    image,
    inverse,
    is_injective,
    is_isomorphism,
    is_surjective,
    kernel,
    push_forward,
)
from .procedures.classify import classify
from .procedures.dimension import (
    are_isomorphic,
    build_injective_sequence,
    extend_injective_to_basis,
    injective_map_between,
    isomorphic_dimension,
    rank_nullity,
    surjective_map_between,
    trace_basis_extraction,
)
from .spaces.quotient import (
    QuotientSpace,
    coset_rep,
    factor_map,
    kernel_quotient,
    quotient_coordinates,
    quotient_dim,
    quotient_iso,
    transport_quotient,
)
from .spaces.space import Space, contains, full_space, is_subspace_of, space_equal, span_of
from .utils.metrics import SuiteMetricsCollector
from .utils.oracle import (
    EnumerationBudget,
    enumerate_vectors,
    oracle_classify,
    oracle_dimension,
    oracle_image,
    oracle_injective,
    oracle_kernel,
    oracle_surjective,
)

logger = logging.getLogger(__name__)

AXIOM_PRIMES = (2, 3, 5, 7)
ORACLE_SHAPES = ((2, 2), (2, 3), (3, 2))
EXHAUSTIVE_AMBIENT = 3
EXHAUSTIVE_SPAN_SIZE = 4
EXHAUSTIVE_LIST_SIZE = 3
FACTOR_MAP_LIMIT = 4096


class SuiteResult(BaseModel):
    name: str
    claim: str
    cases: int = Field(ge=0)
    violations: int = Field(ge=0)
    passed: bool

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="after")
    def check_passed(self) -> "SuiteResult":
        if self.passed != (self.violations == 0):
            raise ValueError("A suite passes iff it has no violations")
        if self.violations > self.cases:
            raise ValueError("More violations than cases")
        return self


class VerificationReport(BaseModel):
    results: Tuple[SuiteResult, ...]
    passed: bool

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="after")
    def check_passed(self) -> "VerificationReport":
        if self.passed != all(r.passed for r in self.results):
            raise ValueError("A report passes iff every suite passes")
        return self

    @property
    def summary(self) -> str:
        return f"{sum(r.passed for r in self.results)}/{len(self.results)}"


class _Run:
    """State shared by the suites of one verification run."""

    def __init__(self, config: VerifyConfig, oracle: OracleConfig, metrics: SuiteMetricsCollector):
        self.config = config
        self.metrics = metrics
        self.budget = EnumerationBudget(max_points=oracle.max_points)
        self.exhaustive_spec = FieldSpec.gf(config.exhaustive_modulus)
        self.random_specs = [parse_field_spec(name) for name in config.random_fields]

    @property
    def trials(self) -> int:
        return self.config.trials

    @property
    def half_trials(self) -> int:
        return (self.config.trials + 1) // 2

    @property
    def exhaustive_ambient(self) -> int:
        return min(EXHAUSTIVE_AMBIENT, self.config.max_dim)

    def rng(self, name: str) -> random.Random:
        return random.Random(f"{self.config.seed}:{name}")

    def fits(self, p: int, n: int) -> bool:
        try:
            self.budget.check(p, n)
        except BudgetExceededError as e:
            logger.warning("Skipping exhaustive cases: %s", e)
            return False
        return True

    def check(self, name: str, prop: Callable[[], bool], detail: str) -> None:
        """Evaluate one case and record it."""
        try:
            ok = bool(prop())
        except (IsodimError, AssertionError, ValueError, ZeroDivisionError) as e:
            logger.debug("%s raised on %s: %s", name, detail, e)
            ok = False
            detail = f"{detail}: {type(e).__name__}: {e}"
        self.metrics.record_case(name, ok, detail)


# Case generators

def _random_scalar(rng: random.Random, spec: FieldSpec) -> FieldElement:
    if spec.is_prime_field:
        return FieldElement(spec, rng.randrange(spec.modulus))
    return FieldElement(spec, Fraction(rng.randint(-3, 3), rng.randint(1, 3)))


def _random_vector(rng: random.Random, spec: FieldSpec, n: int) -> Vector:
    return tuple(_random_scalar(rng, spec) for _ in range(n))


def _combination(rng: random.Random, spec: FieldSpec, vectors: Sequence[Vector], n: int) -> Vector:
    out = zero_vector(spec, n)
    for v in vectors:
        out = add_vectors(out, scale_vector(_random_scalar(rng, spec), v))
    return out


def _random_list(rng: random.Random, spec: FieldSpec, n: int, size: int) -> List[Vector]:
    """``size`` vectors of F^n drawn from the span of a random number of seeds."""
    seeds = [_random_vector(rng, spec, n) for _ in range(rng.randint(0, min(size, n)))]
    return [_combination(rng, spec, seeds, n) for _ in range(size)]


def _random_space(rng: random.Random, spec: FieldSpec, n: int, max_size: int) -> Space:
    return span_of(_random_list(rng, spec, n, rng.randint(0, max_size)), spec, ambient_dim=n)


def _random_member(rng: random.Random, v: Space) -> Vector:
    return _combination(rng, v.spec, v.basis_vectors(), v.ambient_dim)


def _random_matrix(rng: random.Random, spec: FieldSpec, m: int, n: int) -> Matrix:
    return Matrix.from_columns(spec, _random_list(rng, spec, m, n), rows=m)


def _random_injective(rng: random.Random, spec: FieldSpec, n: int, m: int) -> LinearMap:
    for _ in range(50):
        f = LinearMap(spec=spec, columns=Matrix.from_columns(
            spec, [_random_vector(rng, spec, m) for _ in range(n)], rows=m
        ))
        if is_injective(f):
            return f
    return embed_truncate(n, m, spec)


def _all_matrices(run: _Run, spec: FieldSpec, m: int, n: int) -> Iterator[Matrix]:
    p = spec.modulus
    if not run.fits(p, m * n):
        return
    for values in itertools.product(range(p), repeat=m * n):
        yield Matrix(spec, m, n, [values[i * n:(i + 1) * n] for i in range(m)])


def _all_subspaces(run: _Run, spec: FieldSpec, n: int) -> List[Space]:
    nonzero = [v for v in enumerate_vectors(spec, n, run.budget) if not is_zero_vector(v)]
    found: Dict[Matrix, Space] = {}
    for size in range(n + 1):
        for vectors in itertools.combinations(nonzero, size):
            s = span_of(vectors, spec, ambient_dim=n)
            found.setdefault(s.basis, s)
    return list(found.values())


def _raises_order(call: Callable[[], object]) -> bool:
    try:
        call()
    except DimensionOrderError:
        return True
    return False


# Suites

def _axioms_hold(a: FieldElement, b: FieldElement, c: FieldElement) -> bool:
    spec = a.spec
    zero, one = spec.zero, spec.one
    ok = (
        (a + b) + c == a + (b + c)
        and (a * b) * c == a * (b * c)
        and a + b == b + a
        and a * b == b * a
        and a * (b + c) == a * b + a * c
        and a + zero == a
        and a * one == a
        and a + (-a) == zero
        and (a - b) + b == a
        and spec.element(a.value) == a
    )
    if a:
        ok = ok and a * a.inverse() == one and (b / a) * a == b
    return ok


def _field_axioms(run: _Run, name: str) -> None:
    for p in AXIOM_PRIMES:
        spec = FieldSpec.gf(p)
        elements = [FieldElement(spec, x) for x in range(p)]
        for a, b, c in itertools.product(elements, repeat=3):
            run.check(name, lambda: _axioms_hold(a, b, c), f"{spec} ({a}, {b}, {c})")
    rng = run.rng(name)
    for spec in run.random_specs:
        for _ in range(run.trials):
            a, b, c = (_random_scalar(rng, spec) for _ in range(3))
            run.check(name, lambda: _axioms_hold(a, b, c), f"{spec} ({a}, {b}, {c})")


def _wide_maps(run: _Run, name: str) -> None:
    spec = run.exhaustive_spec

    def has_kernel_witness(a: Matrix) -> bool:
        basis = kernel_basis(a)
        f = LinearMap(spec=spec, columns=a)
        return bool(basis) and is_zero_vector(a.apply(basis[0])) and not is_injective(f)

    for m in range(run.config.max_dim + 1):
        for n in range(m + 1, run.config.max_dim + 1):
            for a in _all_matrices(run, spec, m, n):
                run.check(name, lambda: has_kernel_witness(a), f"{spec} {a!r}")


def _injective_surjective(run: _Run, name: str) -> None:
    spec = run.exhaustive_spec

    def agree(a: Matrix) -> bool:
        n = a.cols
        f = LinearMap(spec=spec, columns=a)
        iso = is_isomorphism(f)
        if not is_injective(f) == is_surjective(f) == iso == (rank(a) == n):
            return False
        if iso:
            g = inverse(f)
            return compose(g, f).columns == identity(n, spec) and compose(f, g).columns == identity(n, spec)
        return True

    for n in range(run.config.max_dim + 1):
        for a in _all_matrices(run, spec, n, n):
            run.check(name, lambda: agree(a), f"{spec} {a!r}")


def _composition_closure(run: _Run, name: str) -> None:
    rng = run.rng(name)
    top = run.config.max_ambient

    def closed(f: LinearMap, g: LinearMap, x: Vector) -> bool:
        h = compose(g, f)
        if apply(h, x) != apply(g, apply(f, x)):
            return False
        if is_injective(f) and is_injective(g) and not is_injective(h):
            return False
        if is_surjective(f) and is_surjective(g) and not is_surjective(h):
            return False
        return not (is_isomorphism(f) and is_isomorphism(g)) or is_isomorphism(h)

    for spec in run.random_specs:
        for _ in range(run.trials):
            dims = [rng.randint(0, top) for _ in range(3)]
            mode = rng.choice(("injective", "surjective", "any"))
            if mode == "injective":
                dims.sort()
            elif mode == "surjective":
                dims.sort(reverse=True)
            n, m, k = dims
            f = LinearMap(spec=spec, columns=Matrix.from_columns(
                spec, [_random_vector(rng, spec, m) for _ in range(n)], rows=m
            ))
            g = LinearMap(spec=spec, columns=Matrix.from_columns(
                spec, [_random_vector(rng, spec, k) for _ in range(m)], rows=k
            ))
            x = _random_vector(rng, spec, n)
            run.check(name, lambda: closed(f, g, x), f"{spec} {f.columns!r} then {g.columns!r}")


def _rank_nullity(run: _Run, name: str) -> None:
    rng = run.rng(name)
    top = run.config.max_random_dim

    def holds(f: LinearMap) -> bool:
        result = rank_nullity(f)
        return (
            result.kernel_dim == len(kernel_basis(f.columns))
            and all(is_zero_vector(apply(f, x)) for x in kernel(f).basis_vectors())
        )

    for spec in run.random_specs:
        for _ in range(run.trials):
            m, n = rng.randint(0, top), rng.randint(0, top)
            f = LinearMap(spec=spec, columns=_random_matrix(rng, spec, m, n))
            run.check(name, lambda: holds(f), f"{spec} {f.columns!r}")


def _routes_agree(vectors: Sequence[Vector], spec: FieldSpec, n: int) -> bool:
    v = span_of(vectors, spec, ambient_dim=n)
    routes = {
        isomorphic_dimension(v).dim,
        build_injective_sequence(v).length - 1,
        rank(Matrix.from_rows(spec, vectors, cols=n)),
    }
    return len(routes) == 1


def _dimension_routes(run: _Run, name: str) -> None:
    spec = run.exhaustive_spec
    n = run.exhaustive_ambient
    nonzero = [v for v in enumerate_vectors(spec, n, run.budget) if not is_zero_vector(v)]
    for size in range(EXHAUSTIVE_SPAN_SIZE + 1):
        for vectors in itertools.combinations(nonzero, size):
            run.check(name, lambda: _routes_agree(vectors, spec, n), f"{spec} span of {vectors!r}")

    rng = run.rng(name)
    for spec in run.random_specs:
        for _ in range(run.half_trials):
            n = rng.randint(0, run.config.max_ambient)
            vectors = _random_list(rng, spec, n, rng.randint(0, run.config.max_set_size))
            run.check(name, lambda: _routes_agree(vectors, spec, n), f"{spec} span of {vectors!r}")


def _basis_extraction(run: _Run, name: str) -> None:
    rng = run.rng(name)

    def extracted(vectors: List[Vector], spec: FieldSpec, n: int) -> bool:
        v = span_of(vectors, spec, ambient_dim=n)
        result = trace_basis_extraction(vectors, v)
        kept = [vectors[i] for i in result.kept]
        kept_span = span_of(kept, spec, ambient_dim=n)
        dropped = [vec for i, vec in enumerate(vectors) if i not in result.kept]
        return (
            len(kept) == v.dim
            and classify(kept, v).basis
            and all(contains(kept_span, vec) for vec in dropped)
            and len(result.steps) == len(dropped)
        )

    for spec in run.random_specs:
        for _ in range(run.half_trials):
            n = rng.randint(1, run.config.max_ambient)
            vectors = _random_list(rng, spec, n, rng.randint(1, run.config.max_set_size))
            run.check(name, lambda: extracted(vectors, spec, n), f"{spec} {vectors!r}")


def _basis_extension(run: _Run, name: str) -> None:
    rng = run.rng(name)

    def extended(given: List[Vector], v: Space) -> bool:
        appended = extend_injective_to_basis(given, v)
        return len(appended) == v.dim - len(given) and classify(given + appended, v).basis

    for spec in run.random_specs:
        for _ in range(run.half_trials):
            n = rng.randint(0, run.config.max_ambient)
            v = _random_space(rng, spec, n, run.config.max_set_size)
            given: List[Vector] = []
            wanted = rng.randint(0, v.dim)
            for _ in range(2 * v.dim):
                if len(given) == wanted:
                    break
                candidate = _random_member(rng, v)
                if is_injective(from_images(given + [candidate], spec, ambient_dim=n)):
                    given.append(candidate)
            run.check(name, lambda: extended(given, v), f"{spec} {given!r} in {v.basis!r}")


def _quotients(run: _Run, name: str) -> None:
    spec = run.exhaustive_spec
    for n in range(run.exhaustive_ambient + 1):
        vectors = list(enumerate_vectors(spec, n, run.budget))
        subspaces = _all_subspaces(run, spec, n)
        for v in subspaces:
            members = [x for x in vectors if contains(v, x)]
            for u in subspaces:
                if not is_subspace_of(u, v):
                    continue

                def well_defined() -> bool:
                    q = QuotientSpace(ambient=v, sub=u)
                    if quotient_dim(q) != v.dim - u.dim or not is_isomorphism(quotient_iso(q)):
                        return False
                    reps = {x: coset_rep(q, x).rep for x in members}
                    return all(
                        (reps[x] == reps[y]) == contains(u, sub_vectors(x, y))
                        for x in members
                        for y in members
                    )

                run.check(name, well_defined, f"{spec} {v.basis!r} / {u.basis!r}")

    def factors(f: LinearMap) -> bool:
        h = factor_map(f)
        q = kernel_quotient(f)
        return is_isomorphism(h) and all(
            apply(h, quotient_coordinates(q, x)) == apply(f, x)
            for x in enumerate_vectors(spec, f.domain_dim, run.budget)
        )

    p = spec.modulus
    for m in range(run.exhaustive_ambient + 1):
        for n in range(run.exhaustive_ambient + 1):
            if p ** (m * n) > FACTOR_MAP_LIMIT:
                continue
            for a in _all_matrices(run, spec, m, n):
                f = LinearMap(spec=spec, columns=a)
                run.check(name, lambda: factors(f), f"{spec} factor map of {a!r}")


def _bounds_hold(vectors: Sequence[Vector], v: Space) -> bool:
    c = classify(vectors, v)
    size = len(vectors)
    if c.surjective and size < v.dim:
        return False
    if c.injective and size > v.dim:
        return False
    return not (size == v.dim and (c.injective or c.surjective)) or c.basis


def _size_bounds(run: _Run, name: str) -> None:
    spec = run.exhaustive_spec
    for n in range(1, run.exhaustive_ambient + 1):
        vectors = list(enumerate_vectors(spec, n, run.budget))
        full = full_space(spec, n)
        for size in range(EXHAUSTIVE_LIST_SIZE + 1):
            for chosen in itertools.product(vectors, repeat=size):
                run.check(
                    name,
                    lambda: _bounds_hold(chosen, full) and _bounds_hold(chosen, span_of(chosen, spec, ambient_dim=n)),
                    f"{spec} {chosen!r}"
                )

    rng = run.rng(name)
    for spec in run.random_specs:
        for _ in range(run.half_trials):
            n = rng.randint(0, run.config.max_ambient)
            chosen = _random_list(rng, spec, n, rng.randint(0, run.config.max_set_size))
            run.check(
                name,
                lambda: _bounds_hold(chosen, full_space(spec, n))
                and _bounds_hold(chosen, span_of(chosen, spec, ambient_dim=n)),
                f"{spec} {chosen!r}"
            )


def _existence_by_dimension(run: _Run, name: str) -> None:
    rng = run.rng(name)

    def exists(u: Space, v: Space, sample: LinearMap) -> bool:
        if are_isomorphic(u, v) != (u.dim == v.dim):
            return False
        if u.dim <= v.dim:
            f = injective_map_between(u, v)
            if not (is_injective(f) and f.codomain == v and f.domain_dim == u.dim):
                return False
        elif not _raises_order(lambda: injective_map_between(u, v)) or is_injective(sample):
            return False
        if u.dim >= v.dim:
            g = surjective_map_between(u, v)
            return is_surjective(g) and g.domain_dim == u.dim
        return _raises_order(lambda: surjective_map_between(u, v)) and not is_surjective(sample)

    for spec in run.random_specs:
        for _ in range(run.half_trials):
            n = rng.randint(0, run.config.max_ambient)
            u = _random_space(rng, spec, n, run.config.max_set_size)
            v = _random_space(rng, spec, n, run.config.max_set_size)
            # an arbitrary map F^(dim U) -> V
            sample = from_images([_random_member(rng, v) for _ in range(u.dim)], spec, codomain=v)
            run.check(name, lambda: exists(u, v, sample), f"{spec} {u.basis!r} and {v.basis!r}")


def _subspace_equality(run: _Run, name: str) -> None:
    rng = run.rng(name)

    def ordered(u: Space, v: Space) -> bool:
        equal = space_equal(u, v)
        return (
            is_subspace_of(u, v)
            and u.dim <= v.dim
            and (u.dim != v.dim or equal)
            and (equal or u.dim < v.dim)
        )

    for spec in run.random_specs:
        for _ in range(run.half_trials):
            n = rng.randint(0, run.config.max_ambient)
            v = _random_space(rng, spec, n, run.config.max_set_size)
            members = [_random_member(rng, v) for _ in range(rng.randint(0, v.dim + 1))]
            u = span_of(members, spec, ambient_dim=n)
            run.check(name, lambda: ordered(u, v), f"{spec} {u.basis!r} in {v.basis!r}")


def _quotient_transport(run: _Run, name: str) -> None:
    rng = run.rng(name)

    def transported(f: LinearMap, q: QuotientSpace, x: Vector) -> bool:
        t = transport_quotient(f, q)
        return (
            t.dim == q.dim
            and push_forward(f, q.ambient).dim == q.ambient.dim
            and contains(t.sub, apply(f, x)) == contains(q.sub, x)
        )

    for spec in run.random_specs:
        for _ in range(run.half_trials):
            n = rng.randint(0, run.config.max_ambient)
            m = rng.randint(n, run.config.max_ambient + 2)
            f = _random_injective(rng, spec, n, m)
            v = _random_space(rng, spec, n, run.config.max_set_size)
            u = span_of([_random_member(rng, v) for _ in range(rng.randint(0, v.dim))], spec, ambient_dim=n)
            q = QuotientSpace(ambient=v, sub=u)
            x = _random_member(rng, v)
            run.check(name, lambda: transported(f, q, x), f"{spec} {f.columns!r} on {v.basis!r} / {u.basis!r}")


def _oracle_equivalence(run: _Run, name: str) -> None:
    def agrees(vectors: Sequence[Vector], spec: FieldSpec, n: int, universe: List[Vector]) -> bool:
        budget = run.budget
        full = full_space(spec, n)
        span = span_of(vectors, spec, ambient_dim=n)
        f = from_images(vectors, spec, ambient_dim=n)
        domain = list(enumerate_vectors(spec, len(vectors), budget))
        return (
            classify(vectors, full) == oracle_classify(vectors, full, budget)
            and classify(vectors, span) == oracle_classify(vectors, span, budget)
            and oracle_image(f, budget) == frozenset(x for x in universe if contains(image(f), x))
            and oracle_kernel(f, budget) == frozenset(x for x in domain if contains(kernel(f), x))
            and oracle_dimension(vectors, spec, n, budget) == isomorphic_dimension(span).dim
            and oracle_injective(f, budget) == is_injective(f)
            and oracle_surjective(f, budget) == is_surjective(f)
        )

    for p, n in ORACLE_SHAPES:
        spec = FieldSpec.gf(p)
        universe = list(enumerate_vectors(spec, n, run.budget))
        for size in range(EXHAUSTIVE_LIST_SIZE + 1):
            for vectors in itertools.product(universe, repeat=size):
                run.check(name, lambda: agrees(vectors, spec, n, universe), f"{spec}^{n} {vectors!r}")


_SUITES: List[Tuple[str, str, Callable[[_Run, str], None]]] = [
    ("field-axioms", "GF(p) and Q satisfy the field axioms", _field_axioms),
    ("wide-maps-exhaustive", "every map F^n -> F^m with n > m has a nonzero kernel vector", _wide_maps),
    ("injective-surjective-exhaustive", "a square map is injective iff surjective iff invertible", _injective_surjective),
    ("composition-closure", "composites of injective, surjective and bijective maps stay so", _composition_closure),
    ("rank-nullity", "dim ker f + dim im f = dim of the domain", _rank_nullity),
    ("dimension-routes", "witness, injective sequence and rank give one dimension", _dimension_routes),
    ("basis-extraction", "extraction from a spanning list keeps a basis", _basis_extraction),
    ("basis-extension", "extension of an injective list reaches a basis", _basis_extension),
    ("quotients", "cosets are well defined and the factor map is an isomorphism", _quotients),
    ("size-bounds", "surjective lists have at least dim V vectors, injective lists at most", _size_bounds),
    ("existence-by-dimension", "injective and surjective maps exist exactly as dimensions allow", _existence_by_dimension),
    ("subspace-equality", "a subspace of equal dimension is the whole space", _subspace_equality),
    ("quotient-transport", "injective maps carry V/U to a quotient of the same dimension", _quotient_transport),
    ("oracle-equivalence", "classification, image, kernel and dimension match brute force", _oracle_equivalence),
]

SUITE_NAMES = tuple(name for name, _, _ in _SUITES)


def run_verification(
    config: VerifyConfig,
    oracle: Optional[OracleConfig] = None,
    names: Optional[Sequence[str]] = None
) -> VerificationReport:
    """Run the selected suites (all by default) in their fixed order.

    Raises:
        ValueError: If a requested suite does not exist
    """
    if names is not None:
        unknown = sorted(set(names) - set(SUITE_NAMES))
        if unknown:
            raise ValueError(f"Unknown suites: {', '.join(unknown)}")
    selected = [suite for suite in _SUITES if names is None or suite[0] in names]

    metrics = SuiteMetricsCollector()
    run = _Run(config, oracle or OracleConfig(), metrics)
    results = []
    for name, claim, suite in selected:
        metrics.start_suite(name)
        suite(run, name)
        elapsed = metrics.finish_suite(name)
        cases = metrics.case_counts.get(name, 0)
        violations = metrics.violation_counts.get(name, 0)
        logger.info("%s: %d cases, %d violations in %.2fs", name, cases, violations, elapsed)
        for example in metrics.examples.get(name, []):
            logger.warning("%s violated: %s", name, example)
        results.append(SuiteResult(
            name=name,
            claim=claim,
            cases=cases,
            violations=violations,
            passed=violations == 0
        ))

    totals = metrics.get_metrics()
    logger.info(
        "Verification finished: %d cases, %d violations, %.2fs",
        totals["total_cases"],
        totals["total_violations"],
        totals["total_elapsed"]
    )
    return VerificationReport(results=tuple(results), passed=all(r.passed for r in results))
