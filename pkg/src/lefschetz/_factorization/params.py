from typing import Self

from pydantic import BaseModel, ConfigDict, model_validator

from lefschetz._factorization.errors import PencilParameterError

# Ranges stated differently in different places of the source material; the stricter
# r < h+1 and the closed range for i are the ones implemented.
RANGE_NOTES = (
    "r is taken in 0 <= r < h+1; a looser statement 0 <= r < g+1 also circulates "
    "and is not used.",
    "i is allowed in the closed range 0 <= i <= 2p-1; i = 2p-1 classifies as H_h(r) "
    "or, when r = 0, as a product with S^2.",
)


def pencil_params(g: int, h: int) -> tuple[int, int]:
    """(p, r) with 2g+2 = p(2h+2) + 2r and 0 <= r < h+1."""
    if not 1 <= h < g:
        msg = f"Pencils need 1 <= h < g, got g={g}, h={h}."
        raise PencilParameterError(msg)
    p, r = divmod(g + 1, h + 1)
    return p, r


class PencilSpec(BaseModel):
    """Parameters of the pencil X'_{g,h}[i]."""

    model_config = ConfigDict(frozen=True)

    g: int
    h: int
    i: int
    p: int
    r: int

    @model_validator(mode="after")
    def _check_ranges(self) -> Self:
        if not 1 <= self.h < self.g:
            msg = f"Pencils need 1 <= h < g, got g={self.g}, h={self.h}."
            raise PencilParameterError(msg)
        if 2 * self.g + 2 != self.p * (2 * self.h + 2) + 2 * self.r:
            msg = (
                f"2g+2 = p(2h+2) + 2r fails for g={self.g}, h={self.h}, "
                f"p={self.p}, r={self.r}."
            )
            raise PencilParameterError(msg)
        if self.p <= 0 or not 0 <= self.r < self.h + 1:
            msg = f"Need p > 0 and 0 <= r < h+1, got p={self.p}, r={self.r}."
            raise PencilParameterError(msg)
        if not 0 <= self.i <= 2 * self.p - 1:
            msg = (
                f"Need 0 <= i <= 2p-1 = {2 * self.p - 1} for g={self.g}, h={self.h}, "
                f"got i={self.i}."
            )
            raise PencilParameterError(msg)
        return self

    @property
    def k(self) -> int:
        """Strands in the upper block."""
        return 2 * self.h + 2

    @property
    def m(self) -> int:
        """Strands in the lower block."""
        return 2 * self.g - 2 * self.h

    @property
    def base_points(self) -> int:
        return 2 * (self.i + 1)

    @property
    def chain_repeats(self) -> int:
        """Copies of the odd chain relator left after the unchainings."""
        return 2 * self.p - 1 - self.i

    @property
    def nodal_fibers(self) -> int:
        return (
            2 * self.m
            + 2 * (self.i + 1)
            + (2 * self.h + 1) * (self.k * self.chain_repeats + 4 * self.r)
        )


def pencil_spec(g: int, h: int, i: int) -> PencilSpec:
    p, r = pencil_params(g, h)
    return PencilSpec(g=g, h=h, i=i, p=p, r=r)
