"""Invariant records of the pencils and their JSON and CSV reports."""

import csv
import io
import json
from collections.abc import Iterable, Iterator

from pydantic import BaseModel, ConfigDict

from lefschetz._factorization.params import pencil_params, pencil_spec
from lefschetz._factorization.pencil import build_pencil_word
from lefschetz._factorization.projection import projects_to_full_twist
from lefschetz._factorization.surgery import cap_boundary
from lefschetz._invariants.classify import classify
from lefschetz._invariants.closed_form import closed_form_invariants, euler_from_word
from lefschetz._invariants.errors import InvariantAuditError, InvariantParameterError
from lefschetz._invariants.spin import spin_from_canonical, spin_predicate

FIELDS = (
    "g",
    "h",
    "i",
    "p",
    "r",
    "e",
    "sigma",
    "base_points",
    "nodal_fibers",
    "spin",
    "diffeo_type",
)


class InvariantRecord(BaseModel):
    model_config = ConfigDict(frozen=True)

    g: int
    h: int
    i: int
    p: int
    r: int
    e: int
    sigma: int
    base_points: int
    nodal_fibers: int
    spin: bool
    diffeo_type: str


def _audit(g: int, h: int, i: int, e: int) -> None:
    spec = pencil_spec(g, h, i)
    capped = cap_boundary(build_pencil_word(g, h, i))
    if len(capped) != spec.nodal_fibers:
        msg = (
            f"The pencil word of X'_{{{g},{h}}}[{i}] has {len(capped)} letters, "
            f"expected {spec.nodal_fibers}."
        )
        raise InvariantAuditError(msg)

    from_word = euler_from_word(capped, spec.base_points)
    if from_word != e:
        msg = (
            f"Counting twists gives e = {from_word} for X'_{{{g},{h}}}[{i}], but the "
            f"closed form gives {e}."
        )
        raise InvariantAuditError(msg)

    if not projects_to_full_twist(capped):
        msg = f"The capped word of X'_{{{g},{h}}}[{i}] does not project to Δ²."
        raise InvariantAuditError(msg)


def build_record(g: int, h: int, i: int, *, audit: bool = False) -> InvariantRecord:
    """Collect the invariants of X'_{g,h}[i].

    With audit=True the pencil word is built and checked against the closed forms:
    its letter count, the Euler characteristic from counting twists, and its
    projection to the full twist.
    """
    spec = pencil_spec(g, h, i)
    e, sigma = closed_form_invariants(g, h, i)
    classification = classify(g, h, i)
    if classification.case == "product":
        spin = spin_from_canonical(classification.canonical)
    else:
        spin = spin_predicate(g, h, i)

    if audit:
        _audit(g, h, i, e)

    return InvariantRecord(
        g=g,
        h=h,
        i=i,
        p=spec.p,
        r=spec.r,
        e=e,
        sigma=sigma,
        base_points=spec.base_points,
        nodal_fibers=spec.nodal_fibers,
        spin=spin,
        diffeo_type=str(classification.canonical),
    )


def grid(g_max: int) -> Iterator[tuple[int, int, int]]:
    """Every valid (g, h, i) with 1 <= h < g <= g_max, in lexicographic order."""
    if g_max < 2:
        msg = f"A grid needs g_max >= 2, got {g_max}."
        raise InvariantParameterError(msg)
    for g in range(2, g_max + 1):
        for h in range(1, g):
            p, _ = pencil_params(g, h)
            for i in range(2 * p):
                yield g, h, i


def records_to_json(records: Iterable[InvariantRecord]) -> str:
    return json.dumps(
        [record.model_dump(mode="json") for record in records], indent=2
    )


def records_to_csv(records: Iterable[InvariantRecord]) -> str:
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=FIELDS, lineterminator="\n")
    writer.writeheader()
    for record in records:
        writer.writerow(record.model_dump(mode="json"))
    return buffer.getvalue()
