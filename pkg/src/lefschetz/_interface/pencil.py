"""Commands on single pencils and grids of them: gen, invariants and classify."""

from pathlib import Path

import typer

from lefschetz._config import config_opt, jobs_opt, lefschetz_config, quiet_opt
from lefschetz._core.generate import generate
from lefschetz._core.invariants import (
    ReportFormat,
    classify_report,
    grid_params,
    invariants_report,
)
from lefschetz._factorization.params import pencil_spec
from lefschetz._interface.run import run_command
from lefschetz.errors import ParameterError

g_opt = typer.Option(None, "--g", help="Genus of the pencil.")
h_opt = typer.Option(None, "--h", help="Genus of the summands Z_h and H_h.")
i_opt = typer.Option(None, "--i", help="Number of upper unchainings.")
grid_opt = typer.Option(
    None, "--grid-max", help="Every valid (g, h, i) with h < g <= this value."
)
format_opt = typer.Option("json", "--format", help="Report format: json or csv.")
audit_opt = typer.Option(
    False, "--audit", help="Check each record against its factorization."
)
out_opt = typer.Option(None, "--out", help="Write here instead of stdout.")


def _params(
    g: int | None, h: int | None, i: int | None, grid_max: int | None
) -> list[tuple[int, int, int]]:
    if grid_max is not None:
        if g is not None or h is not None or i is not None:
            msg = "Give either --grid-max or all of --g, --h and --i, not both."
            raise ParameterError(msg)
        return grid_params(grid_max)
    if g is None or h is None or i is None:
        msg = "Give all of --g, --h and --i, or --grid-max."
        raise ParameterError(msg)
    pencil_spec(g, h, i)
    return [(g, h, i)]


def gen(
    g: int = typer.Option(..., "--g", help="Genus of the pencil."),
    h: int = typer.Option(..., "--h", help="Genus of the summands Z_h and H_h."),
    i: int = typer.Option(..., "--i", help="Number of upper unchainings."),
    capped: bool = typer.Option(
        False, "--capped", help="Cap the boundary components with disks."
    ),
    out: Path | None = out_opt,
    quiet: bool = quiet_opt,
    config: Path | None = config_opt,
) -> None:
    with lefschetz_config.set(quiet=quiet, conventions_path=config):
        run_command(generate, g, h, i, capped=capped, out=out)


def _report(
    g: int | None,
    h: int | None,
    i: int | None,
    grid_max: int | None,
    fmt: str,
    *,
    audit: bool,
    out: Path | None,
) -> None:
    if fmt not in ("json", "csv"):
        msg = f"Unknown report format '{fmt}'; use json or csv."
        raise ParameterError(msg)
    report_format: ReportFormat = "csv" if fmt == "csv" else "json"
    params = _params(g, h, i, grid_max)
    invariants_report(params, fmt=report_format, audit=audit, out=out)


def invariants(
    g: int | None = g_opt,
    h: int | None = h_opt,
    i: int | None = i_opt,
    grid_max: int | None = grid_opt,
    fmt: str = format_opt,
    audit: bool = audit_opt,
    out: Path | None = out_opt,
    jobs: int = jobs_opt,
    quiet: bool = quiet_opt,
    config: Path | None = config_opt,
) -> None:
    with lefschetz_config.set(quiet=quiet, jobs=jobs, conventions_path=config):
        run_command(_report, g, h, i, grid_max, fmt, audit=audit, out=out)


def classify(
    g: int | None = g_opt,
    h: int | None = h_opt,
    i: int | None = i_opt,
    grid_max: int | None = grid_opt,
    fmt: str = format_opt,
    audit: bool = audit_opt,
    out: Path | None = out_opt,
    jobs: int = jobs_opt,
    quiet: bool = quiet_opt,
    config: Path | None = config_opt,
) -> None:
    with lefschetz_config.set(quiet=quiet, jobs=jobs, conventions_path=config):
        if grid_max is None and g is not None and h is not None and i is not None:
            run_command(classify_report, g, h, i)
        else:
            run_command(_report, g, h, i, grid_max, fmt, audit=audit, out=out)
