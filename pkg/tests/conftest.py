import shutil
from collections.abc import Generator
from pathlib import Path

import pytest

from lefschetz._config import lefschetz_config
from lefschetz._conventions import default_conventions_path


@pytest.fixture
def conventions_copy(tmp_path: Path) -> Path:
    """A writable copy of the shipped conventions file."""
    path = tmp_path / "conventions.toml"
    shutil.copy(default_conventions_path(), path)
    return path


@pytest.fixture
def _quiet() -> Generator[None, None, None]:
    with lefschetz_config.set(quiet=True):
        yield
