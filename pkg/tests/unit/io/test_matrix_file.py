from fractions import Fraction

import pytest
from hypothesis import given, settings
from pydantic import ValidationError

from isodim.core.errors import MatrixFileError, ParseError
from isodim.core.field import FieldSpec
from isodim.core.matrix import Matrix, identity
from isodim.io.matrix_file import MatrixFile, format_matrix_file, load_matrix_file, parse_matrix_text
from tests.utils.builders import mat
from tests.utils.strategies import spec_and_matrix


def test_parse_basic(q):
    """Test a plain rational matrix."""
    parsed = parse_matrix_text("field Q\nmatrix 2 2\n1 0\n0 1\n")
    assert parsed.spec == q
    assert parsed.matrix == identity(2, q)


def test_parse_comments_and_blank_lines(gf5):
    """Test that comments and blank lines are skipped anywhere."""
    text = "# header comment\n\nfield GF(5)\n# shape\nmatrix 1 3\n\n  7 -1 4  \n# trailing\n"
    parsed = parse_matrix_text(text)
    assert parsed.matrix == mat(gf5, [[2, 4, 4]])


def test_parse_rationals(q):
    """Test that scalars are stored canonically."""
    parsed = parse_matrix_text("field Q\nmatrix 1 2\n2/-4 +6/3\n")
    assert parsed.matrix == mat(q, [[Fraction(-1, 2), 2]])


def test_parse_empty_shapes(q):
    """Test matrices with no rows or no columns."""
    assert parse_matrix_text("field Q\nmatrix 0 3\n").matrix == Matrix.zeros(q, 0, 3)
    assert parse_matrix_text("field Q\nmatrix 2 0\n").matrix == Matrix.zeros(q, 2, 0)


@pytest.mark.parametrize("text,line", [
    ("matrix 1 1\n1\n", 1),
    ("field GF(4)\nmatrix 1 1\n1\n", 1),
    ("field Q\nmatrix x 1\n1\n", 2),
    ("field Q\nmatrix 1\n1\n", 2),
    ("field Q\nmatrix 2 2\n1 2\n3\n", 4),
    ("field Q\n\nmatrix 1 2\n1 1.5\n", 4),
    ("field GF(3)\nmatrix 1 1\n1/3\n", 3),
    ("field Q\nmatrix 1 1\n1\n2\n", 4),
    ("field Q\nmatrix \u00b2 2\n1 0\n0 1\n", 2),
    ("field Q\nmatrix 1 \u0663\n1 0 1\n", 2),
    ("field GF(7\nmatrix 1 1\n1\n", 1),
    ("field gf7\nmatrix 1 1\n1\n", 1),
    ("field q\nmatrix 1 1\n1\n", 1),
    ("field GF(5)\nmatrix 1 1\n\u0663\n", 3),
])
def test_parse_errors_carry_line_numbers(text, line):
    """Test that malformed input reports the offending line."""
    with pytest.raises(ParseError) as exc_info:
        parse_matrix_text(text)
    assert exc_info.value.line == line
    assert str(exc_info.value).startswith(f"line {line}:")


def test_parse_missing_rows():
    """Test that too few data lines are reported without a line number."""
    with pytest.raises(ParseError) as exc_info:
        parse_matrix_text("field Q\nmatrix 3 1\n1\n")
    assert exc_info.value.line is None


def test_parse_needs_header():
    """Test that an empty file is rejected."""
    with pytest.raises(ParseError):
        parse_matrix_text("# nothing here\n")


def test_zero_denominator_is_parse_error():
    """Test that k/0 in a file is reported as a parse error."""
    with pytest.raises(ParseError) as exc_info:
        parse_matrix_text("field Q\nmatrix 1 1\n1/0\n")
    assert exc_info.value.line == 3


def test_matrix_file_checks_field(gf2, gf3):
    """Test that the matrix must be over the declared field."""
    with pytest.raises(ValidationError):
        MatrixFile(spec=gf2, matrix=identity(2, gf3))


def test_format_examples(gf2, q):
    """Test canonical formatting."""
    assert format_matrix_file(gf2, mat(gf2, [[1, 0], [1, 1]])) == "field GF(2)\nmatrix 2 2\n1 0\n1 1\n"
    assert format_matrix_file(q, mat(q, [[Fraction(6, 4)]])) == "field Q\nmatrix 1 1\n3/2\n"
    assert format_matrix_file(q, Matrix.zeros(q, 3, 0)) == "field Q\nmatrix 3 0\n"


def test_load_matrix_file(write_file, gf7):
    """Test reading from disk."""
    path = write_file("m.txt", "field GF(7)\nmatrix 1 2\n8 -1\n")
    assert load_matrix_file(path).matrix == mat(gf7, [[1, 6]])


def test_load_missing_file(tmp_path):
    """Test that unreadable files become matrix file errors."""
    with pytest.raises(MatrixFileError) as exc_info:
        load_matrix_file(tmp_path / "missing.txt")
    assert "Failed to read matrix file" in str(exc_info.value)


@settings(max_examples=1000)
@given(spec_and_matrix())
def test_format_parse_round_trip(case):
    """Test that formatted text parses back to an equal matrix."""
    spec, a = case
    parsed = parse_matrix_text(format_matrix_file(spec, a))
    assert parsed.spec == spec
    assert parsed.matrix == a
