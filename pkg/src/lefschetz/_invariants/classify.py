"""Diffeomorphism types of the pencils X'_{g,h}[i] as fiber sums of Z_h and H_h.

Fiber-summing two genus h fibrations adds signatures and subtracts 2(2-2h) from the
sum of Euler characteristics. Z_h(2) and H_h(h+1) are isomorphic fibrations, which is
how copies of Z_h are traded for copies of H_h in the canonical form.
"""

from typing import Literal

from pydantic import BaseModel, ConfigDict

from lefschetz._factorization.params import PencilSpec, pencil_spec
from lefschetz._invariants.closed_form import (
    closed_form_invariants,
    euler_hyperelliptic,
    euler_z,
    signature_hyperelliptic,
    signature_z,
)
from lefschetz._invariants.errors import (
    ClassificationMismatchError,
    InvariantParameterError,
)

Case = Literal["fiber_sum", "hyperelliptic", "product"]


def fiber_sum_invariants(pieces: list[tuple[int, int]], h: int) -> tuple[int, int]:
    """(e, sigma) of the fiber sum of genus h fibrations with the given invariants."""
    if not pieces:
        msg = "A fiber sum needs at least one summand."
        raise InvariantParameterError(msg)
    e = sum(piece[0] for piece in pieces) - 2 * (len(pieces) - 1) * (2 - 2 * h)
    sigma = sum(piece[1] for piece in pieces)
    return e, sigma


class DiffeoType(BaseModel):
    """Z_h(z_copies) #_f H_h(h_copies), or the product Sigma_h x S^2."""

    model_config = ConfigDict(frozen=True)

    h: int
    z_copies: int = 0
    h_copies: int = 0
    product: bool = False

    def __str__(self) -> str:
        if self.product:
            return f"Σ_{self.h} × S²"
        parts = []
        if self.z_copies:
            parts.append(f"Z_{self.h}({self.z_copies})")
        if self.h_copies:
            parts.append(f"H_{self.h}({self.h_copies})")
        return " #_f ".join(parts)

    def invariants(self) -> tuple[int, int]:
        if self.product:
            return 4 - 4 * self.h, 0
        pieces = [(euler_z(self.h), signature_z(self.h))] * self.z_copies
        pieces += [
            (euler_hyperelliptic(self.h), signature_hyperelliptic(self.h))
        ] * self.h_copies
        return fiber_sum_invariants(pieces, self.h)

    def canonical(self) -> "DiffeoType":
        """Trade Z_h(2) for H_h(h+1) until at most one copy of Z_h is left."""
        if self.product:
            return self
        pairs, odd = divmod(self.z_copies, 2)
        return DiffeoType(
            h=self.h, z_copies=odd, h_copies=pairs * (self.h + 1) + self.h_copies
        )

    def rational_surface(self) -> str | None:
        # H_h(1) is the blow-up of CP^2 at 4h+5 points
        if not self.product and self.z_copies == 0 and self.h_copies == 1:
            return f"CP² # {4 * self.h + 5}CP̄²"
        return None


class Classification(BaseModel):
    model_config = ConfigDict(frozen=True)

    spec: PencilSpec
    case: Case
    raw: DiffeoType
    canonical: DiffeoType

    @property
    def invariants(self) -> tuple[int, int]:
        return self.canonical.invariants()


def _raw_type(spec: PencilSpec) -> tuple[Case, DiffeoType]:
    q = spec.chain_repeats
    if q > 0:
        return "fiber_sum", DiffeoType(h=spec.h, z_copies=q, h_copies=spec.r)
    if spec.r > 0:
        return "hyperelliptic", DiffeoType(h=spec.h, h_copies=spec.r)
    return "product", DiffeoType(h=spec.h, product=True)


def classify(g: int, h: int, i: int) -> Classification:
    """Classify X'_{g,h}[i] and check the answer against the closed forms.

    For i < 2p-1 the pencil is Z_h(2p-1-i) #_f H_h(r); for i = 2p-1 it is H_h(r) when
    r > 0 and Sigma_h x S^2 when r = 0.
    """
    spec = pencil_spec(g, h, i)
    case, raw = _raw_type(spec)
    result = Classification(spec=spec, case=case, raw=raw, canonical=raw.canonical())

    expected = closed_form_invariants(g, h, i)
    for label, form in (("raw", raw), ("canonical", result.canonical)):
        if form.invariants() != expected:
            msg = (
                f"The {label} classification {form} of X'_{{{g},{h}}}[{i}] has "
                f"(e, σ) = {form.invariants()}, but the closed forms give {expected}."
            )
            raise ClassificationMismatchError(msg)
    return result
