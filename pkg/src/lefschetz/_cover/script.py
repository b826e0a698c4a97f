"""Move scripts replaying the classification of the pencils, with audit logs.

A script is a TOML list of moves::

    [[move]]
    kind = "blow_down"
    repeat = 2

Replaying it from init_state(g, h, i) produces one audit record per move, written as
JSON lines with the fields step, move, R, S, T, base, e_cover, sigma_cover and ok.
"""

import json
import tomllib
from collections.abc import Iterator
from pathlib import Path

import tomlkit
from pydantic import BaseModel, ConfigDict, PositiveInt, ValidationError

from lefschetz._cover.errors import (
    AuditMismatchError,
    MoveNotApplicableError,
    MoveScriptDecodeError,
)
from lefschetz._cover.moves import SECTION_HANDLE, MoveKind, apply_move, check_audit
from lefschetz._cover.state import CoverState, init_state
from lefschetz._factorization.params import pencil_spec
from lefschetz._invariants.classify import classify


class ScriptedMove(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    kind: MoveKind
    repeat: PositiveInt = 1


class MoveScript(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    move: tuple[ScriptedMove, ...] = ()

    def expanded(self) -> Iterator[MoveKind]:
        for scripted in self.move:
            for _ in range(scripted.repeat):
                yield scripted.kind


class AuditRecord(BaseModel):
    model_config = ConfigDict(frozen=True)

    step: int
    move: str
    R: int
    S: int
    T: int
    base: tuple[int, int]
    e_cover: int
    sigma_cover: int
    ok: bool

    def to_json_line(self) -> str:
        return json.dumps(self.model_dump(mode="json"), separators=(",", ":"))


def _record(step: int, move: str, s: CoverState, *, ok: bool = True) -> AuditRecord:
    r, s_, t = s.rst
    return AuditRecord(
        step=step,
        move=move,
        R=r,
        S=s_,
        T=t,
        base=(s.hirzebruch_index, s.blowups),
        e_cover=s.e_cover,
        sigma_cover=s.sigma_cover,
        ok=ok,
    )


def default_script(g: int, h: int, i: int) -> MoveScript:
    """The moves of the classification proof for X'_{g,h}[i].

    Blow down both lifts of every red meridian, apply the Isotopy Lemma p-1 times,
    move the remaining 2r disks over, cancel the trivial bands against the caps, and
    slide the section handle p times over the 0-framed handle.
    """
    spec = pencil_spec(g, h, i)
    moves = [ScriptedMove(kind="blow_down", repeat=spec.base_points)]
    if spec.p > 1:
        moves.append(ScriptedMove(kind="isotopy_lemma_step", repeat=spec.p - 1))
    if spec.r > 0:
        moves.append(ScriptedMove(kind="two_handle_band_dive"))
        moves.append(ScriptedMove(kind="disk_cancel", repeat=2 * spec.r))
    moves.append(ScriptedMove(kind="cancel_trivial_bands", repeat=spec.m))
    moves.append(ScriptedMove(kind="handle_slide", repeat=spec.p))
    return MoveScript(move=tuple(moves))


def read_script(path: Path) -> MoveScript:
    try:
        with path.open("rb") as f:
            data = tomllib.load(f)
    except (OSError, tomllib.TOMLDecodeError) as err:
        msg = f"Failed to read the move script '{path}': {err}"
        raise MoveScriptDecodeError(msg) from None

    try:
        return MoveScript.model_validate(data)
    except ValidationError as err:
        msg = f"Invalid move script '{path}': {err}"
        raise MoveScriptDecodeError(msg) from None


def dumps_script(script: MoveScript) -> str:
    doc = tomlkit.document()
    moves = tomlkit.aot()
    for scripted in script.move:
        table = tomlkit.table()
        table.add("kind", scripted.kind)
        table.add("repeat", scripted.repeat)
        moves.append(table)
    doc.add("move", moves)
    return tomlkit.dumps(doc)


def iter_proof_script(
    g: int, h: int, i: int, script: MoveScript | None = None
) -> Iterator[AuditRecord]:
    """Replay a script, yielding an audit record per move.

    A failing move yields a record with ok=False and then raises with its step.
    """
    if script is None:
        script = default_script(g, h, i)

    s = init_state(g, h, i)
    check_audit(s, "init")
    yield _record(0, "init", s)

    for step, kind in enumerate(script.expanded(), start=1):
        try:
            s = apply_move(s, kind)
        except (AuditMismatchError, MoveNotApplicableError) as err:
            yield _record(step, kind, s, ok=False)
            msg = f"Step {step} ({kind}) failed: {err}"
            raise type(err)(msg) from None
        yield _record(step, kind, s)

    check_endpoint(s)


def check_endpoint(s: CoverState) -> None:
    """The final state must be the cover of Z_h(q) #_f H_h(r) with its framing."""
    classification = classify(s.g, s.h, s.i)
    spec = classification.spec
    problems = []
    if (s.e_cover, s.sigma_cover) != classification.invariants:
        problems.append(
            f"(e, σ) = {(s.e_cover, s.sigma_cover)} instead of "
            f"{classification.invariants} for {classification.canonical}"
        )
    if s.branch.disks != spec.k or s.branch.caps != spec.k:
        problems.append(
            f"{s.branch.disks} disks and {s.branch.caps} caps instead of {spec.k}"
        )
    if s.branch.trivial_bands or s.branch.long_bands:
        problems.append("bands are left to cancel")
    if s.blowups or s.detached:
        problems.append("exceptional spheres are left")
    framing = s.handle(SECTION_HANDLE).framing
    if framing != -spec.chain_repeats:
        problems.append(
            f"the section handle has framing {framing} instead of "
            f"{-spec.chain_repeats}"
        )
    if problems:
        msg = "The replay does not end at the expected cover: " + "; ".join(problems)
        raise AuditMismatchError(msg)


def run_proof_script(
    g: int, h: int, i: int, script: MoveScript | None = None
) -> list[AuditRecord]:
    return list(iter_proof_script(g, h, i, script))
