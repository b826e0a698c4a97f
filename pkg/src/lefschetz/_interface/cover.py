from pathlib import Path

import typer

from lefschetz._config import lefschetz_config, quiet_opt
from lefschetz._core.cover import dump_default_script, replay_cover
from lefschetz._core.doubling import doubling_report, family_report
from lefschetz._interface.run import run_command
from lefschetz.errors import ParameterError


def cover(
    g: int = typer.Option(..., "--g", help="Genus of the pencil."),
    h: int = typer.Option(..., "--h", help="Genus of the summands Z_h and H_h."),
    i: int = typer.Option(..., "--i", help="Number of upper unchainings."),
    script: Path | None = typer.Option(
        None, "--script", help="TOML move script to replay instead of the default."
    ),
    log: Path | None = typer.Option(
        None, "--log", help="Write the JSON-lines audit log here instead of stdout."
    ),
    dump_script: bool = typer.Option(
        False, "--dump-script", help="Print the default move script as TOML and stop."
    ),
    quiet: bool = quiet_opt,
) -> None:
    with lefschetz_config.set(quiet=quiet):
        if dump_script:
            run_command(dump_default_script, g, h, i)
        else:
            run_command(replay_cover, g, h, i, script_path=script, log_path=log)


def _doubling(
    g: int | None,
    b: int | None,
    iterate: int,
    family: tuple[int | None, int | None, int | None],
    count: int,
) -> None:
    family_h, family_q, family_r = family
    if family_h is not None:
        if family_q is None:
            msg = "The family mode needs --family-q."
            raise ParameterError(msg)
        family_report(family_h, family_q, family_r or 0, count)
        return
    if g is None or b is None:
        msg = "Give --g and --b, or --family-h and --family-q."
        raise ParameterError(msg)
    doubling_report(g, b, iterate)


def doubling(
    g: int | None = typer.Option(None, "--g", help="Genus of the pencil."),
    b: int | None = typer.Option(None, "--b", help="Number of base points."),
    iterate: int = typer.Option(1, "--iterate", help="Number of doublings."),
    family_h: int | None = typer.Option(
        None, "--family-h", help="Fiber genus h of the family Z_h(q) #_f H_h(r)."
    ),
    family_q: int | None = typer.Option(None, "--family-q", help="Copies of Z_h."),
    family_r: int | None = typer.Option(None, "--family-r", help="Copies of H_h."),
    count: int = typer.Option(10, "--count", help="Family members to list."),
    quiet: bool = quiet_opt,
) -> None:
    with lefschetz_config.set(quiet=quiet):
        run_command(
            _doubling, g, b, iterate, (family_h, family_q, family_r), count
        )
