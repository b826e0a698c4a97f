from pathlib import Path

import pytest

from lefschetz._config import JOBS_ENV_VAR, LefschetzConfig, lefschetz_config


class TestSet:
    def test_restores(self, tmp_path: Path):
        # Arrange
        before = lefschetz_config.model_copy()

        # Act
        with lefschetz_config.set(quiet=True, jobs=3, conventions_path=tmp_path):
            inside = lefschetz_config.model_copy()

        # Assert
        assert inside.quiet
        assert inside.jobs == 3
        assert inside.conventions_path == tmp_path
        assert lefschetz_config == before

    def test_none_keeps_the_value(self):
        with lefschetz_config.set(quiet=True), lefschetz_config.set(quiet=None):
            assert lefschetz_config.quiet

    def test_restores_after_error(self):
        with pytest.raises(RuntimeError), lefschetz_config.set(jobs=5):
            raise RuntimeError
        assert lefschetz_config.jobs == 1


class TestWorkerCount:
    def test_explicit(self):
        config = LefschetzConfig(quiet=False, jobs=4, conventions_path=None)
        assert config.worker_count() == 4

    def test_auto_reads_environment(self, monkeypatch: pytest.MonkeyPatch):
        monkeypatch.setenv(JOBS_ENV_VAR, "6")
        config = LefschetzConfig(quiet=False, jobs=0, conventions_path=None)
        assert config.worker_count() == 6

    def test_auto_ignores_garbage(self, monkeypatch: pytest.MonkeyPatch):
        monkeypatch.setenv(JOBS_ENV_VAR, "many")
        config = LefschetzConfig(quiet=False, jobs=0, conventions_path=None)
        assert config.worker_count() >= 1
