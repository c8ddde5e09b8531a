import pytest
from pathlib import Path
from typing import Callable

from isodim.core.field import FieldSpec


@pytest.fixture
def gf2() -> FieldSpec:
    return FieldSpec.gf(2)


@pytest.fixture
def gf3() -> FieldSpec:
    return FieldSpec.gf(3)


@pytest.fixture
def gf5() -> FieldSpec:
    return FieldSpec.gf(5)


@pytest.fixture
def gf7() -> FieldSpec:
    return FieldSpec.gf(7)


@pytest.fixture
def q() -> FieldSpec:
    return FieldSpec.rationals()


@pytest.fixture
def write_file(tmp_path: Path) -> Callable[[str, str], str]:
    """Write text to a file under tmp_path and return its path."""
    def _write(name: str, text: str) -> str:
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return str(path)
    return _write
