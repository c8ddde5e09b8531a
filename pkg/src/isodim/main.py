"""Command-line front end.

Results go to stdout and are deterministic; diagnostics and ``-v`` logging
go to stderr. Exit codes: 0 success, 1 domain error, 2 parse or usage error.
"""

import argparse
import logging
import sys
from typing import Callable, Dict, List, Optional, Sequence, TextIO

from pydantic import ValidationError

from .core.config import CliSettings, VerifyConfig
from .core.errors import FieldDivisionError, IsodimError, ParseError
from .core.field import FieldSpec, _check_same
from .core.matrix import Matrix, kernel_basis, rank, rref
from .core.vector import Vector, format_vector, parse_vector_text
from .io.matrix_file import format_matrix_file, load_matrix_file
from .maps.linear_map import LinearMap, image
from .procedures.classify import classify
from .procedures.dimension import (
    build_injective_sequence,
    build_sequence_through,
    extend_injective_to_basis,
    isomorphic_dimension,
    rank_nullity,
    trace_basis_extraction,
)
from .spaces.quotient import QuotientSpace, coset_rep
from .spaces.space import Space, space_from_rows
from .verification import run_verification

logger = logging.getLogger(__name__)

Handler = Callable[[argparse.Namespace, CliSettings], List[str]]


def _load_space(path: str) -> Space:
    """The span of the rows of a matrix file."""
    return space_from_rows(load_matrix_file(path).matrix)


def _load_vectors(path: str, space: Space) -> List[Vector]:
    loaded = load_matrix_file(path)
    _check_same(loaded.spec, space.spec)
    return loaded.matrix.row_vectors()


def _flag(value: bool) -> str:
    return "true" if value else "false"


def _indices(values: Sequence[int]) -> str:
    return "".join(f" {i}" for i in values)


def _matrix_lines(spec: FieldSpec, matrix: Matrix) -> List[str]:
    return format_matrix_file(spec, matrix).splitlines()


def _cmd_rref(args: argparse.Namespace, settings: CliSettings) -> List[str]:
    loaded = load_matrix_file(args.file)
    result = rref(loaded.matrix)
    return [f"# rank {result.rank}", f"# pivots{_indices(result.pivot_cols)}"] + _matrix_lines(loaded.spec, result.rref)


def _cmd_rank(args: argparse.Namespace, settings: CliSettings) -> List[str]:
    return [f"rank {rank(load_matrix_file(args.file).matrix)}"]


def _cmd_kernel(args: argparse.Namespace, settings: CliSettings) -> List[str]:
    loaded = load_matrix_file(args.file)
    basis = kernel_basis(loaded.matrix)
    rows = Matrix.from_rows(loaded.spec, basis, cols=loaded.matrix.cols)
    return [f"# dim {len(basis)}"] + _matrix_lines(loaded.spec, rows)


def _cmd_image(args: argparse.Namespace, settings: CliSettings) -> List[str]:
    loaded = load_matrix_file(args.file)
    im = image(LinearMap(spec=loaded.spec, columns=loaded.matrix))
    return [f"# dim {im.dim}"] + _matrix_lines(loaded.spec, im.basis)


def _cmd_dim(args: argparse.Namespace, settings: CliSettings) -> List[str]:
    witness = isomorphic_dimension(_load_space(args.file))
    lines = [f"dim {witness.dim}"]
    for j, column in enumerate(witness.iso.columns.column_vectors()):
        lines.append(f"column {j}: {format_vector(column)}")
    return lines


def _cmd_classify(args: argparse.Namespace, settings: CliSettings) -> List[str]:
    space = _load_space(args.space)
    vectors = _load_vectors(args.file, space)
    result = classify(vectors, space)
    return [
        f"size {len(vectors)}",
        f"dim {space.dim}",
        f"injective {_flag(result.injective)}",
        f"surjective {_flag(result.surjective)}",
        f"basis {_flag(result.basis)}",
    ]


def _cmd_extract_basis(args: argparse.Namespace, settings: CliSettings) -> List[str]:
    space = _load_space(args.space)
    result = trace_basis_extraction(_load_vectors(args.file, space), space)
    lines = [
        f"step {step.step}: kernel vector {format_vector(step.kernel_vector)}, drop index {step.dropped_index}"
        for step in result.steps
    ]
    lines.append(f"kept{_indices(result.kept)}")
    return lines


def _cmd_extend_basis(args: argparse.Namespace, settings: CliSettings) -> List[str]:
    space = _load_space(args.space)
    appended = extend_injective_to_basis(_load_vectors(args.file, space), space)
    lines = [f"append {format_vector(v)}" for v in appended]
    lines.append(f"appended {len(appended)}")
    return lines


def _cmd_quotient_dim(args: argparse.Namespace, settings: CliSettings) -> List[str]:
    q = QuotientSpace(ambient=_load_space(args.vfile), sub=_load_space(args.ufile))
    return [f"ambient {q.ambient.dim} sub {q.sub.dim} quotient {q.dim}"]


def _cmd_coset_rep(args: argparse.Namespace, settings: CliSettings) -> List[str]:
    q = QuotientSpace(ambient=_load_space(args.vfile), sub=_load_space(args.ufile))
    try:
        v = parse_vector_text(args.vector, q.ambient.spec)
    except FieldDivisionError as e:
        raise ParseError(str(e)) from e
    return [f"rep {format_vector(coset_rep(q, v).rep)}"]


def _cmd_rank_nullity(args: argparse.Namespace, settings: CliSettings) -> List[str]:
    loaded = load_matrix_file(args.file)
    result = rank_nullity(LinearMap(spec=loaded.spec, columns=loaded.matrix))
    return [f"kernel {result.kernel_dim} image {result.image_dim} domain {result.domain_dim}"]


def _cmd_sequence(args: argparse.Namespace, settings: CliSettings) -> List[str]:
    space = _load_space(args.file)
    if args.through:
        sequence = build_sequence_through(_load_space(args.through), space)
    else:
        sequence = build_injective_sequence(space)
    lines = [
        f"step {step.step}: append {format_vector(step.vector)} ({step.reason})"
        for step in sequence.transcript
    ]
    lines.append(f"length {sequence.length}")
    return lines


def _cmd_verify(args: argparse.Namespace, settings: CliSettings) -> List[str]:
    report = run_verification(settings.verify, settings.oracle)
    lines = [
        f"{'PASS' if r.passed else 'FAIL'} {r.name} cases={r.cases} violations={r.violations}"
        for r in report.results
    ]
    lines.append(f"summary {report.summary}")
    args.failed = not report.passed
    return lines


COMMANDS: Dict[str, Handler] = {
    "rref": _cmd_rref,
    "rank": _cmd_rank,
    "kernel": _cmd_kernel,
    "image": _cmd_image,
    "dim": _cmd_dim,
    "classify": _cmd_classify,
    "extract-basis": _cmd_extract_basis,
    "extend-basis": _cmd_extend_basis,
    "quotient-dim": _cmd_quotient_dim,
    "coset-rep": _cmd_coset_rep,
    "rank-nullity": _cmd_rank_nullity,
    "sequence": _cmd_sequence,
    "verify": _cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="isodim", description="Exact linear algebra through isomorphic dimension.")
    parser.add_argument("-v", "--verbose", action="store_true", help="log construction steps to stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    for name, help_text in (
        ("rref", "reduced row echelon form"),
        ("rank", "rank of a matrix"),
        ("kernel", "kernel basis of the map given by the columns"),
        ("image", "canonical basis of the column space"),
        ("dim", "dimension and witness of the span of the rows"),
        ("rank-nullity", "kernel, image and domain dimensions"),
    ):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("file")

    for name, help_text in (
        ("classify", "classify the rows of FILE as a vector list in a space"),
        ("extract-basis", "extract a basis from spanning rows"),
        ("extend-basis", "extend injective rows to a basis"),
    ):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("file")
        p.add_argument("--space", required=True, help="file whose rows span the space")

    p = sub.add_parser("quotient-dim", help="dimension of V/U")
    p.add_argument("vfile")
    p.add_argument("ufile")

    p = sub.add_parser("coset-rep", help="canonical representative of v + U")
    p.add_argument("vfile")
    p.add_argument("ufile")
    p.add_argument("--vector", required=True, help="comma-separated scalars")

    p = sub.add_parser("sequence", help="injective sequence ending in an isomorphism")
    p.add_argument("file")
    p.add_argument("--through", help="file whose rows span a subspace the sequence passes through")

    defaults = VerifyConfig()
    p = sub.add_parser("verify", help="run the property suites")
    p.add_argument("--field", choices=("gf2", "gf3"), default=defaults.field)
    p.add_argument("--max-dim", type=int, default=defaults.max_dim)
    p.add_argument("--seed", type=int, default=defaults.seed)
    p.add_argument("--trials", type=int, default=defaults.trials)
    return parser


def _settings_for(args: argparse.Namespace) -> CliSettings:
    values = {"log_level": "DEBUG" if args.verbose else "WARNING"}
    if args.command == "verify":
        values["verify"] = VerifyConfig(
            field=args.field,
            max_dim=args.max_dim,
            seed=args.seed,
            trials=args.trials
        )
    return CliSettings(**values)


def run(argv: Optional[Sequence[str]] = None, out: Optional[TextIO] = None, err: Optional[TextIO] = None) -> int:
    """Run one command and return its exit code."""
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2

    try:
        settings = _settings_for(args)
    except ValidationError as e:
        print(f"error: invalid options: {e}", file=err)
        return 2

    handler = logging.StreamHandler(err)
    handler.setFormatter(logging.Formatter("%(levelname)s %(name)s: %(message)s"))
    package_logger = logging.getLogger("isodim")
    previous_level = package_logger.level
    package_logger.addHandler(handler)
    package_logger.setLevel(settings.log_level)
    try:
        logger.debug("Running %s", args.command)
        lines = COMMANDS[args.command](args, settings)
    except IsodimError as e:
        print(f"error: {e}", file=err)
        return e.exit_code
    finally:
        package_logger.removeHandler(handler)
        package_logger.setLevel(previous_level)

    for line in lines:
        print(line, file=out)
    return 1 if getattr(args, "failed", False) else 0


def main() -> None:
    sys.exit(run())
