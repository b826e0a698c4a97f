"""Moves on branched cover presentations and their effect on the ledger.

Isotopies of the branch surface and handle slides do not change the cover. Blowing
down a -1 sphere of the cover changes (e, sigma) by (-1, +1); the two lifts of a red
meridian are blown down one after the other, and the second one also removes the
meridian from the base.
"""

from collections.abc import Callable
from typing import Literal

from lefschetz._cover.errors import AuditMismatchError, MoveNotApplicableError
from lefschetz._cover.state import BranchSurface, CoverState

MoveKind = Literal[
    "band_dive",
    "two_handle_band_dive",
    "band_slide",
    "disk_cancel",
    "isotopy_lemma_step",
    "cancel_trivial_bands",
    "handle_slide",
    "blow_down",
]

EXPECTED_DELTA: dict[str, tuple[int, int]] = {
    "band_dive": (0, 0),
    "two_handle_band_dive": (0, 0),
    "band_slide": (0, 0),
    "disk_cancel": (0, 0),
    "isotopy_lemma_step": (0, 0),
    "cancel_trivial_bands": (0, 0),
    "handle_slide": (0, 0),
    "blow_down": (-1, 1),
}

# the 0-framed handle that the section handle slides over, and the section handle
FIBER_HANDLE = 0
SECTION_HANDLE = 1


def _refuse(s: CoverState, kind: str, reason: str) -> MoveNotApplicableError:
    r, s_, t = s.rst
    msg = f"Cannot apply {kind} to Σ({r}, {s_}, {t}): {reason}."
    return MoveNotApplicableError(msg)


def _with_branch(s: CoverState, **changes: int) -> CoverState:
    branch: BranchSurface = s.branch.model_copy(update=changes)
    return s.model_copy(update={"branch": branch})


def _band_dive(s: CoverState) -> CoverState:
    if s.branch.bands == 0:
        raise _refuse(s, "band_dive", "the branch surface has no bands")
    return s


def _two_handle_band_dive(s: CoverState) -> CoverState:
    if s.branch.long_bands == 0:
        raise _refuse(s, "two_handle_band_dive", "no long bands are left")
    return _with_branch(s, linking=s.branch.linking + 1)


def _band_slide(s: CoverState) -> CoverState:
    if s.branch.long_bands < 2:
        raise _refuse(s, "band_slide", "fewer than two long bands are left")
    return s


def _disk_cancel(s: CoverState) -> CoverState:
    """A disk absorbs the ends of two long bands, leaving one trivial band."""
    if s.branch.long_bands < 2:
        raise _refuse(s, "disk_cancel", "fewer than two long bands are left")
    if s.branch.disks <= s.branch.block_length:
        raise _refuse(s, "disk_cancel", "only the disks of the upper block are left")
    return _with_branch(
        s,
        disks=s.branch.disks - 1,
        long_bands=s.branch.long_bands - 2,
        trivial_bands=s.branch.trivial_bands + 1,
    )


def _cancel_trivial_bands(s: CoverState) -> CoverState:
    if s.branch.trivial_bands == 0 or s.branch.caps == 0:
        raise _refuse(s, "cancel_trivial_bands", "no trivial band meets a cap disk")
    return _with_branch(
        s,
        trivial_bands=s.branch.trivial_bands - 1,
        caps=s.branch.caps - 1,
    )


def _handle_slide(s: CoverState) -> CoverState:
    """Slide the section handle over the 0-framed handle it links once."""
    if any(handle.meridian_of == SECTION_HANDLE for handle in s.handles):
        raise _refuse(s, "handle_slide", "the section handle still has -1 meridians")
    fiber = s.handle(FIBER_HANDLE)
    handles = tuple(
        handle.model_copy(update={"framing": handle.framing + fiber.framing - 2})
        if handle.label == SECTION_HANDLE
        else handle
        for handle in s.handles
    )
    return s.model_copy(update={"handles": handles})


def _blow_down(s: CoverState) -> CoverState:
    red = [handle for handle in s.handles if handle.color == "red"]
    if s.blowups == 0 or not red:
        raise _refuse(s, "blow_down", "there is no exceptional sphere left")
    if s.detached == 0:
        return s.model_copy(update={"detached": 1})

    meridian = red[0]
    handles = tuple(
        handle.model_copy(update={"framing": handle.framing + 1})
        if handle.label == meridian.meridian_of
        else handle
        for handle in s.handles
        if handle.label != meridian.label
    )
    return s.model_copy(
        update={"handles": handles, "blowups": s.blowups - 1, "detached": 0}
    )


def isotopy_lemma_step(s: CoverState) -> CoverState:
    """Sigma(R, S, T) is isotopic to Sigma(R-k, S+1, T+k) when R >= 2k.

    One 2-handle band dive links the block once more, then k rounds of a band slide,
    a band dive and a disk cancellation move k disks over.
    """
    k = s.branch.block_length
    if s.branch.disks < 2 * k:
        raise _refuse(s, "isotopy_lemma_step", f"R < 2k = {2 * k}")
    s = apply_move(s, "two_handle_band_dive")
    for _ in range(k):
        s = apply_move(s, "band_slide")
        s = apply_move(s, "band_dive")
        s = apply_move(s, "disk_cancel")
    return s


_PRIMITIVES: dict[str, Callable[[CoverState], CoverState]] = {
    "band_dive": _band_dive,
    "two_handle_band_dive": _two_handle_band_dive,
    "band_slide": _band_slide,
    "disk_cancel": _disk_cancel,
    "isotopy_lemma_step": isotopy_lemma_step,
    "cancel_trivial_bands": _cancel_trivial_bands,
    "handle_slide": _handle_slide,
    "blow_down": _blow_down,
}


def check_audit(s: CoverState, kind: str = "state") -> None:
    ledger = s.ledger()
    if ledger != (s.e_cover, s.sigma_cover):
        msg = (
            f"After {kind}, the ledger gives (e, σ) = {ledger} but the audited "
            f"values are {(s.e_cover, s.sigma_cover)}."
        )
        raise AuditMismatchError(msg)


def apply_move(s: CoverState, kind: MoveKind) -> CoverState:
    """Apply one move, shift the audited invariants by its expected delta and check."""
    moved = _PRIMITIVES[kind](s)
    de, dsigma = EXPECTED_DELTA[kind]
    moved = moved.model_copy(
        update={
            "e_cover": s.e_cover + de,
            "sigma_cover": s.sigma_cover + dsigma,
        }
    )
    check_audit(moved, kind)
    return moved
