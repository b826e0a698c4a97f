"""Status lines on stderr; stdout carries only the JSON, CSV and JSON-lines output."""

from pathlib import Path

from rich.console import Console

from lefschetz._config import lefschetz_config

console = Console(stderr=True, soft_wrap=True)


def tick_print(msg: str | Exception) -> None:
    msg = str(msg)

    if not lefschetz_config.quiet:
        console.print(f"✔ {msg}", style="green")


def box_print(msg: str | Exception) -> None:
    msg = str(msg)

    if not lefschetz_config.quiet:
        console.print(f"☐ {msg}", style="red")


def info_print(msg: str | Exception) -> None:
    msg = str(msg)

    if not lefschetz_config.quiet:
        console.print(f"ℹ {msg}", style="blue")  # noqa: RUF001


def err_print(msg: str | Exception) -> None:
    msg = str(msg)

    if not lefschetz_config.quiet:
        console.print(f"✗ {msg}", style="red")


def write_output(text: str, out: Path | None = None, *, what: str = "output") -> None:
    """Write machine-readable text to a file, or undecorated to stdout.

    Data is never silenced by --quiet and never passes through rich markup.
    """
    if out is None:
        print(text, flush=True)
        return

    out.write_text(text + "\n")
    tick_print(f"Wrote the {what} to '{out}'.")
