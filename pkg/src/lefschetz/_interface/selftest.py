import sys
from pathlib import Path

import typer

from lefschetz._config import config_opt, lefschetz_config, quiet_opt
from lefschetz._core.selftest import rederive, run_selftest
from lefschetz._interface.run import EXIT_VERIFICATION_FAILED, run_command


def selftest(
    rederive_: bool = typer.Option(
        False,
        "--rederive",
        help="Search the convention spaces again and write a conventions file.",
    ),
    out: Path | None = typer.Option(
        None, "--out", help="Where --rederive writes the conventions.", dir_okay=False
    ),
    quiet: bool = quiet_opt,
    config: Path | None = config_opt,
) -> None:
    with lefschetz_config.set(quiet=quiet, conventions_path=config):
        if rederive_:
            run_command(rederive, out)
            return
        if not run_command(run_selftest):
            sys.exit(EXIT_VERIFICATION_FAILED)
