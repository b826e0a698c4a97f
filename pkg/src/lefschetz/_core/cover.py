from pathlib import Path

from lefschetz._console import tick_print, write_output
from lefschetz._cover.script import (
    MoveScript,
    default_script,
    dumps_script,
    iter_proof_script,
    read_script,
)
from lefschetz._invariants.classify import classify


def replay_cover(
    g: int,
    h: int,
    i: int,
    *,
    script_path: Path | None = None,
    log_path: Path | None = None,
) -> None:
    """Stream the audit log of a replay, to stdout or to a JSON-lines file."""
    script: MoveScript | None = None
    if script_path is not None:
        script = read_script(script_path)

    lines: list[str] = []
    try:
        for record in iter_proof_script(g, h, i, script):
            line = record.to_json_line()
            lines.append(line)
            if log_path is None:
                write_output(line)
    finally:
        if log_path is not None:
            log_path.write_text("".join(line + "\n" for line in lines))

    target = classify(g, h, i).canonical
    tick_print(f"All {len(lines)} audits pass; the replay ends at {target}.")


def dump_default_script(g: int, h: int, i: int) -> None:
    write_output(dumps_script(default_script(g, h, i)).rstrip("\n"))
