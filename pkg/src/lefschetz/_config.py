import os
from collections.abc import Generator
from contextlib import contextmanager
from pathlib import Path

import typer
from pydantic import BaseModel

JOBS_ENV_VAR = "LEFSCHETZ_JOBS"


class LefschetzConfig(BaseModel):
    """Global-state for command options which affect low level behaviour."""

    quiet: bool
    jobs: int
    conventions_path: Path | None

    @contextmanager
    def set(
        self,
        *,
        quiet: bool | None = None,
        jobs: int | None = None,
        conventions_path: Path | None = None,
    ) -> Generator[None, None, None]:
        """Temporarily change command options."""
        old_quiet = self.quiet
        old_jobs = self.jobs
        old_conventions_path = self.conventions_path

        if quiet is None:
            quiet = old_quiet
        if jobs is None:
            jobs = old_jobs
        if conventions_path is None:
            conventions_path = old_conventions_path

        self.quiet = quiet
        self.jobs = jobs
        self.conventions_path = conventions_path
        try:
            yield
        finally:
            self.quiet = old_quiet
            self.jobs = old_jobs
            self.conventions_path = old_conventions_path

    def worker_count(self) -> int:
        """The number of workers for grid jobs; 0 means 'auto'."""
        if self.jobs > 0:
            return self.jobs

        env = os.environ.get(JOBS_ENV_VAR)
        if env is not None and env.isdigit() and int(env) > 0:
            return int(env)
        return os.cpu_count() or 1


_QUIET_DEFAULT = False
_JOBS_DEFAULT = 1

lefschetz_config = LefschetzConfig(
    quiet=_QUIET_DEFAULT, jobs=_JOBS_DEFAULT, conventions_path=None
)


def _parse_jobs(value: str) -> int:
    if value == "auto":
        return 0
    if not value.isdigit() or int(value) < 1:
        msg = "Expected a positive integer or 'auto'."
        raise typer.BadParameter(msg)
    return int(value)


quiet_opt = typer.Option(_QUIET_DEFAULT, "--quiet", help="Suppress output")
jobs_opt = typer.Option(
    str(_JOBS_DEFAULT),
    "--jobs",
    help=f"Worker count for grid jobs, or 'auto' to read ${JOBS_ENV_VAR}.",
    parser=_parse_jobs,
)
config_opt = typer.Option(
    None, "--config", help="Alternative conventions TOML file.", dir_okay=False
)
