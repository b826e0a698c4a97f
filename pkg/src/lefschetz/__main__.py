import sys

import typer

import lefschetz._interface.verify
from lefschetz._interface.cover import cover, doubling
from lefschetz._interface.pencil import classify, gen, invariants
from lefschetz._interface.selftest import selftest

try:
    from lefschetz._version import __version__
except ImportError:
    __version__ = None

app = typer.Typer(
    help=(
        "Construct, verify and classify monodromy factorizations of Lefschetz "
        "pencils with exact braid and symplectic arithmetic."
    )
)
app.add_typer(lefschetz._interface.verify.app, name="verify")

app.command(help="Write the monodromy factorization of X'_{g,h}[i] as JSON.")(gen)
app.command(help="Report e, σ, base points, spin and diffeomorphism type.")(
    invariants
)
app.command(help="Classify X'_{g,h}[i] as a fiber sum of Z_h and H_h.")(classify)
app.command(help="Replay the branched cover proof with a per-move audit.")(cover)
app.command(help="Degree-doubling orbits and base points of pencil families.")(
    doubling
)
app.command(help="Run the acceptance checks at desk scale.")(selftest)


@app.command(help="Display the version of lefschetz.")
def version() -> None:
    if __version__ is not None:
        print(__version__)
    else:
        sys.exit(1)


if __name__ == "__main__":
    app(prog_name="lefschetz")


__all__ = ["app"]
