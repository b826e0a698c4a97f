"""Closed formulas for Euler characteristics and signatures."""

from lefschetz._factorization.curves import TwistFactorization
from lefschetz._factorization.params import pencil_spec
from lefschetz._invariants.errors import InvariantParameterError


def euler_z(h: int) -> int:
    """e(Z_h), the odd chain fibration."""
    return 2 * (2 * h * h + h + 3)


def signature_z(h: int) -> int:
    return -2 * (h + 1) ** 2


def euler_hyperelliptic(h: int) -> int:
    """e(H_h), the hyperelliptic fibration."""
    return 4 * (h + 2)


def signature_hyperelliptic(h: int) -> int:
    return -4 * (h + 1)


def closed_form_invariants(g: int, h: int, i: int) -> tuple[int, int]:
    """(e, sigma) of the pencil X'_{g,h}[i]."""
    pencil_spec(g, h, i)
    e = (
        4
        - 4 * h
        + 2 * (2 * h + 1) * (2 * g + 2)
        - (i + 1) * (2 * h + 1) * (2 * h + 2)
    )
    sigma = -(2 * h + 2) * (2 * g + 2) + 2 * (i + 1) * (h + 1) ** 2
    return e, sigma


def euler_from_word(f: TwistFactorization, base_points: int = 0) -> int:
    """e = 4 - 4g + N - b for a genus g factorization with N twists and b base points.

    The twists each add a 2-handle to the fibration over the sphere, and every base
    point removes one blow-up.
    """
    if base_points < 0:
        msg = f"The number of base points must be nonnegative, got {base_points}."
        raise InvariantParameterError(msg)
    return 4 - 4 * f.ambient.genus + len(f) - base_points
