"""Text format shared by matrices, spaces and vector lists.

    # comment
    field GF(p) | field Q
    matrix R C
    R lines of C whitespace-separated scalars

Blank lines and lines starting with "#" are ignored anywhere. A matrix with
C = 0 has no data lines.
"""

import re
from pathlib import Path
from typing import List, Tuple, Union

from pydantic import BaseModel, ConfigDict, model_validator

from ..core.errors import FieldDivisionError, MatrixFileError, ParseError
from ..core.field import FieldSpec, format_scalar, parse_field_spec, parse_scalar
from ..core.matrix import Matrix

_COUNT = re.compile(r"\d+", re.ASCII)


class MatrixFile(BaseModel):
    spec: FieldSpec
    matrix: Matrix

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    @model_validator(mode="after")
    def check_field(self) -> "MatrixFile":
        if self.matrix.spec != self.spec:
            raise ValueError(f"Matrix is over {self.matrix.spec}, file declares {self.spec}")
        return self


def _content_lines(text: str) -> List[Tuple[int, str]]:
    lines = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        lines.append((number, line))
    return lines


def _parse_header(lines: List[Tuple[int, str]]) -> Tuple[FieldSpec, int, int]:
    if len(lines) < 2:
        raise ParseError("Expected 'field' and 'matrix' header lines")

    number, line = lines[0]
    parts = line.split(None, 1)
    if len(parts) != 2 or parts[0] != "field":
        raise ParseError(f"Expected 'field GF(p)' or 'field Q', got {line!r}", line=number)
    try:
        spec = parse_field_spec(parts[1], strict=True)
    except ParseError as e:
        raise ParseError(str(e), line=number) from e

    number, line = lines[1]
    parts = line.split()
    if len(parts) != 3 or parts[0] != "matrix" or not all(_COUNT.fullmatch(p) for p in parts[1:]):
        raise ParseError(f"Expected 'matrix R C', got {line!r}", line=number)
    return spec, int(parts[1]), int(parts[2])


def parse_matrix_text(text: str) -> MatrixFile:
    """Parse matrix file text.

    Raises:
        ParseError: With the offending line number where there is one
    """
    lines = _content_lines(text)
    spec, rows, cols = _parse_header(lines)
    data = lines[2:]
    expected = rows if cols > 0 else 0
    if len(data) != expected:
        where = data[expected][0] if len(data) > expected else None
        raise ParseError(f"Expected {expected} data lines, found {len(data)}", line=where)

    entries = []
    for number, line in data:
        tokens = line.split()
        if len(tokens) != cols:
            raise ParseError(f"Expected {cols} scalars, found {len(tokens)}", line=number)
        try:
            entries.append([parse_scalar(token, spec) for token in tokens])
        except (ParseError, FieldDivisionError) as e:
            raise ParseError(str(e), line=number) from e
    if cols == 0:
        entries = [[] for _ in range(rows)]
    return MatrixFile(spec=spec, matrix=Matrix(spec, rows, cols, entries))


def load_matrix_file(path: Union[str, Path]) -> MatrixFile:
    """Read and parse a matrix file.

    Raises:
        MatrixFileError: If the file cannot be read
        ParseError: If its content is malformed
    """
    try:
        text = Path(path).read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as e:
        raise MatrixFileError(f"Failed to read matrix file {path}: {e}")
    return parse_matrix_text(text)


def format_matrix_file(spec: FieldSpec, matrix: Matrix) -> str:
    """Canonical text of a matrix; parsing it back gives an equal matrix."""
    lines = [f"field {spec}", f"matrix {matrix.rows} {matrix.cols}"]
    if matrix.cols > 0:
        lines.extend(" ".join(format_scalar(x) for x in row) for row in matrix.entries)
    return "\n".join(lines) + "\n"
