"""Invariant reports for single pencils and for grids, optionally in parallel."""

from collections.abc import Iterable
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import Literal

from lefschetz._config import lefschetz_config
from lefschetz._console import info_print, tick_print, write_output
from lefschetz._invariants.classify import classify
from lefschetz._invariants.record import (
    InvariantRecord,
    build_record,
    grid,
    records_to_csv,
    records_to_json,
)
from lefschetz._invariants.spin import spin_explanation

ReportFormat = Literal["json", "csv"]

Job = tuple[int, int, int, bool, Path | None]


def _record_job(job: Job) -> InvariantRecord:
    g, h, i, audit, conventions_path = job
    # workers may not share the parent's configuration
    with lefschetz_config.set(conventions_path=conventions_path):
        return build_record(g, h, i, audit=audit)


def compute_records(
    params: Iterable[tuple[int, int, int]], *, audit: bool = False
) -> list[InvariantRecord]:
    """Records in the order of params, computed with the configured worker count."""
    jobs: list[Job] = [
        (g, h, i, audit, lefschetz_config.conventions_path) for g, h, i in params
    ]
    workers = lefschetz_config.worker_count()
    if workers == 1 or len(jobs) < 2:
        return [_record_job(job) for job in jobs]

    with ProcessPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(_record_job, jobs))


def render(records: list[InvariantRecord], fmt: ReportFormat) -> str:
    if fmt == "csv":
        return records_to_csv(records).rstrip("\n")
    return records_to_json(records)


def invariants_report(
    params: list[tuple[int, int, int]],
    *,
    fmt: ReportFormat = "json",
    audit: bool = False,
    out: Path | None = None,
) -> list[InvariantRecord]:
    records = compute_records(params, audit=audit)
    if audit:
        tick_print(f"Audited {len(records)} pencils against their factorizations.")
    write_output(render(records, fmt), out, what="report")
    return records


def grid_params(g_max: int) -> list[tuple[int, int, int]]:
    return list(grid(g_max))


def classify_report(g: int, h: int, i: int) -> str:
    """Print the diffeomorphism type of X'_{g,h}[i] and return its canonical name."""
    classification = classify(g, h, i)
    canonical = classification.canonical
    e, sigma = classification.invariants

    write_output(str(canonical))
    if classification.raw != canonical:
        info_print(f"Before trading Z_{h}(2) for H_{h}({h + 1}): {classification.raw}")
    rational = canonical.rational_surface()
    if rational is not None:
        info_print(f"{canonical} is the rational surface {rational}.")
    info_print(f"e = {e}, σ = {sigma}.")
    info_print(spin_explanation(g, h, i))
    return str(canonical)
