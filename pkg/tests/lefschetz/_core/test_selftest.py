from pathlib import Path

import pytest

from lefschetz._config import lefschetz_config
from lefschetz._conventions import read_conventions
from lefschetz._core.selftest import CHECKS, rederive, run_selftest


class TestChecks:
    @pytest.mark.parametrize(
        ("name", "check"), CHECKS, ids=[name for name, _ in CHECKS]
    )
    def test_passes(self, name: str, check):
        assert check()


@pytest.mark.usefixtures("_quiet")
class TestRunSelftest:
    def test_passes(self):
        assert run_selftest()

    def test_broken_conventions_fail(self, conventions_copy: Path):
        # Arrange
        conventions_copy.write_text("[block_pass]\n")

        # Act
        with lefschetz_config.set(conventions_path=conventions_copy):
            passed = run_selftest()

        # Assert
        assert not passed


@pytest.mark.usefixtures("_quiet")
class TestRederive:
    def test_writes_the_frozen_conventions(self, tmp_path: Path):
        # Arrange
        path = tmp_path / "conventions.toml"

        # Act
        conventions = rederive(path)

        # Assert
        written = read_conventions(path)
        frozen = read_conventions()
        assert written.meyer.global_sign == frozen.meyer.global_sign == -1
        assert written.block_pass.model_dump(
            exclude={"derived_on"}
        ) == frozen.block_pass.model_dump(exclude={"derived_on"})
        assert conventions.meyer.transcript

    def test_defaults_to_the_config_path(self, conventions_copy: Path):
        with lefschetz_config.set(conventions_path=conventions_copy):
            rederive()
        assert read_conventions(conventions_copy).meyer.separating_local == -1
