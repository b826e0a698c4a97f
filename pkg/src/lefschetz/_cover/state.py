"""Branched double covers of blown-up Hirzebruch surfaces, kept as a ledger.

The branch surface B is not stored as a diagram. It is recorded by its disks, cap
disks and bands, so e(B) = disks + caps - bands, and by B² as explicit data. For a
double cover X of a base Y branched over B,

    e(X) = 2 e(Y) - e(B),    sigma(X) = 2 sigma(Y) - B²/2.

A state also carries audited invariants (e, sigma) of the cover. Every move updates the
counts and the audited values separately; the two must keep agreeing.
"""

from typing import Literal

from pydantic import BaseModel, ConfigDict

from lefschetz._cover.errors import BranchClassError
from lefschetz._factorization.params import pencil_spec
from lefschetz._invariants.closed_form import closed_form_invariants

Color = Literal["black", "blue", "red"]


class Handle(BaseModel):
    """A 2-handle of the base; red handles are -1-framed meridians of another one."""

    model_config = ConfigDict(frozen=True)

    label: int
    framing: int
    color: Color = "black"
    links_branch: bool = False
    meridian_of: int | None = None


class BranchSurface(BaseModel):
    """Sigma(R, S, T) with its boxed chain bands and the long bands still to cancel."""

    model_config = ConfigDict(frozen=True)

    disks: int
    caps: int
    long_bands: int
    block_length: int
    chain_boxes: int
    remainder: int
    chain_bands: int
    linking: int = 0
    trivial_bands: int = 0
    square: int

    @property
    def boxed_bands(self) -> int:
        """Each box is a chain of bands on 2h+2 disks, repeated as the box says."""
        k, r = self.block_length, self.remainder
        return self.chain_bands * (k * self.chain_boxes + 4 * r)

    @property
    def bands(self) -> int:
        return self.long_bands + self.boxed_bands + self.trivial_bands

    @property
    def euler(self) -> int:
        return self.disks + self.caps - self.bands


class CoverState(BaseModel):
    model_config = ConfigDict(frozen=True)

    g: int
    h: int
    i: int
    hirzebruch_index: int
    blowups: int
    branch: BranchSurface
    handles: tuple[Handle, ...]
    e_cover: int
    sigma_cover: int
    # spheres of the cover blown down whose partner sheet is still in place
    detached: int = 0

    @property
    def base_euler(self) -> int:
        return 4 + self.blowups

    @property
    def base_signature(self) -> int:
        # sigma(F_1) = 0
        return -self.blowups

    @property
    def rst(self) -> tuple[int, int, int]:
        return self.branch.disks, self.branch.linking, self.branch.trivial_bands

    def ledger(self) -> tuple[int, int]:
        """(e, sigma) of the cover computed from the base and the branch data."""
        e = 2 * self.base_euler - self.branch.euler - self.detached
        sigma = 2 * self.base_signature - self.branch.square // 2 + self.detached
        return e, sigma

    def handle(self, label: int) -> Handle:
        return next(handle for handle in self.handles if handle.label == label)


def branch_class_solve(
    cover: tuple[int, int], base: tuple[int, int]
) -> tuple[int, int]:
    """(B², e(B)) of the branch surface of a double cover with the given invariants."""
    e_cover, sigma_cover = cover
    e_base, sigma_base = base
    square = 4 * sigma_base - 2 * sigma_cover
    euler = 2 * e_base - e_cover
    if square % 2 or euler % 2:
        msg = (
            f"A cover with (e, σ) = {cover} over a base with {base} needs a branch "
            f"surface with B² = {square} and e(B) = {euler}, which is not possible "
            "for a closed oriented surface."
        )
        raise BranchClassError(msg)
    return square, euler


def _initial_handles(i: int) -> tuple[Handle, ...]:
    handles = [
        Handle(label=0, framing=0, links_branch=True),
        Handle(label=1, framing=0, links_branch=True),
        Handle(label=2, framing=-1, color="blue"),
    ]
    handles += [
        Handle(label=3 + j, framing=-1, color="red", meridian_of=1)
        for j in range(i + 1)
    ]
    return tuple(handles)


def init_state(g: int, h: int, i: int) -> CoverState:
    """The cover of F_1 # (i+1) CP̄² that is X'_{g,h}[i] blown up 2(i+1) times."""
    spec = pencil_spec(g, h, i)
    e, sigma = closed_form_invariants(g, h, i)
    e_cover = e + spec.base_points
    sigma_cover = sigma - spec.base_points

    blowups = i + 1
    square, _ = branch_class_solve((e_cover, sigma_cover), (4 + blowups, -blowups))
    branch = BranchSurface(
        disks=2 * g + 2,
        caps=2 * g + 2,
        long_bands=2 * spec.m,
        block_length=spec.k,
        chain_boxes=spec.chain_repeats,
        remainder=spec.r,
        chain_bands=2 * h + 1,
        square=square,
    )
    return CoverState(
        g=g,
        h=h,
        i=i,
        hirzebruch_index=1,
        blowups=blowups,
        branch=branch,
        handles=_initial_handles(i),
        e_cover=e_cover,
        sigma_cover=sigma_cover,
    )
