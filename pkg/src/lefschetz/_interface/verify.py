import sys
from pathlib import Path

import typer

from lefschetz._config import config_opt, lefschetz_config, quiet_opt
from lefschetz._core.certificate import Certificate
from lefschetz._core.verify import (
    verify_block_pass_identity,
    verify_hyperelliptic_split,
    verify_pencil_projection,
    verify_reversing,
    verify_unchain,
)
from lefschetz._interface.run import EXIT_VERIFICATION_FAILED, run_command

app = typer.Typer(help="Check identities exactly and write certificates.")

g_opt = typer.Option(..., "--g", help="Genus of the pencil.")
h_opt = typer.Option(..., "--h", help="Genus of the summands Z_h and H_h.")
i_opt = typer.Option(..., "--i", help="Number of upper unchainings.")
out_opt = typer.Option(
    None, "--out", help="Write the certificate here instead of stdout.", dir_okay=False
)
full_opt = typer.Option(
    False, "--full", help="Embed the normal form in the certificate."
)


def _exit_on_failure(certificate: Certificate) -> None:
    if not certificate.verified:
        sys.exit(EXIT_VERIFICATION_FAILED)


@app.command(help="The block-pass identity T U ... = Δ² in B_{2g+2}.")
def thm31(
    g: int = g_opt,
    h: int = h_opt,
    out: Path | None = out_opt,
    full: bool = full_opt,
    quiet: bool = quiet_opt,
    config: Path | None = config_opt,
) -> None:
    with lefschetz_config.set(quiet=quiet, conventions_path=config):
        certificate = run_command(verify_block_pass_identity, g, h, out=out, full=full)
    _exit_on_failure(certificate)


@app.command(help="The capped pencil word projects to Δ².")
def eq1(
    g: int = g_opt,
    h: int = h_opt,
    i: int = i_opt,
    out: Path | None = out_opt,
    full: bool = full_opt,
    quiet: bool = quiet_opt,
    config: Path | None = config_opt,
) -> None:
    with lefschetz_config.set(quiet=quiet, conventions_path=config):
        certificate = run_command(
            verify_pencil_projection, g, h, i, out=out, full=full
        )
    _exit_on_failure(certificate)


@app.command(help="(σ1⋯σm)^{m+1} = (σm⋯σ1)^{m+1} in B_{m+1}.")
def reversing(
    m: int = typer.Option(..., "--m", help="Number of generators."),
    out: Path | None = out_opt,
    full: bool = full_opt,
    quiet: bool = quiet_opt,
) -> None:
    with lefschetz_config.set(quiet=quiet):
        certificate = run_command(verify_reversing, m, out=out, full=full)
    _exit_on_failure(certificate)


@app.command(help="Unchaining the genus g relation gives the pencil word.")
def unchain(
    g: int = g_opt,
    h: int = h_opt,
    i: int = i_opt,
    out: Path | None = out_opt,
    full: bool = full_opt,
    quiet: bool = quiet_opt,
    config: Path | None = config_opt,
) -> None:
    with lefschetz_config.set(quiet=quiet, conventions_path=config):
        certificate = run_command(verify_unchain, g, h, i, out=out, full=full)
    _exit_on_failure(certificate)


@app.command(
    name="lemma21-sp",
    help="The hyperelliptic relator power and its split form act alike on H_1.",
)
def lemma21_sp(
    h: int = h_opt,
    n: int = typer.Option(..., "--n", help="Exponent, at least 1."),
    out: Path | None = out_opt,
    full: bool = full_opt,
    quiet: bool = quiet_opt,
) -> None:
    with lefschetz_config.set(quiet=quiet):
        certificate = run_command(verify_hyperelliptic_split, h, n, out=out, full=full)
    _exit_on_failure(certificate)
