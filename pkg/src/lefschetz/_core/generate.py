from pathlib import Path

from lefschetz._braid.blockpass import verified_block_pass_braids
from lefschetz._console import info_print, tick_print, write_output
from lefschetz._factorization.params import RANGE_NOTES, pencil_spec
from lefschetz._factorization.pencil import build_pencil_word
from lefschetz._factorization.serialize import dumps
from lefschetz._factorization.surgery import cap_boundary


def generate(
    g: int, h: int, i: int, *, capped: bool = False, out: Path | None = None
) -> None:
    """Write the monodromy factorization of X'_{g,h}[i] as JSON."""
    spec = pencil_spec(g, h, i)
    for note in RANGE_NOTES:
        info_print(note)

    f = build_pencil_word(g, h, i, verified_block_pass_braids(g, h))
    if capped:
        f = cap_boundary(f)

    write_output(dumps(f), out, what="factorization")
    tick_print(
        f"X'_{{{g},{h}}}[{i}]: {len(f)} letters, {spec.base_points} base points."
    )
