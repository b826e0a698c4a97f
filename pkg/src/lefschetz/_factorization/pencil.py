"""Monodromy factorizations of the pencils X'_{g,h}[i] and the relation behind them."""

from lefschetz._braid.blockpass import BlockPassBraids, block_pass_braids
from lefschetz._factorization.curves import (
    BlockLoop,
    CurveSymbol,
    DerivedBand,
    SurfaceSignature,
    TwistFactorization,
    boundary_curve,
    word_over,
)
from lefschetz._factorization.params import PencilSpec, pencil_params, pencil_spec
from lefschetz._factorization.relations import chain_curves


def _block_pass_curves(
    ambient: SurfaceSignature, braids: BlockPassBraids
) -> list[CurveSymbol]:
    """d_1 ... d_m followed by e_m ... e_1, lifting T and U letter by letter."""
    m = len(braids.t_factors)
    d = [
        CurveSymbol(
            name=f"d{j}", ambient=ambient, kind=DerivedBand(word=braids.tau(j))
        )
        for j in range(1, m + 1)
    ]
    e = [
        CurveSymbol(
            name=f"e{j}", ambient=ambient, kind=DerivedBand(word=braids.upsilon(j))
        )
        for j in range(m, 0, -1)
    ]
    return d + e


def _chain_tail(ambient: SurfaceSignature, h: int, r: int) -> list[CurveSymbol]:
    """(t_c1 ... t_c_{2h+1})^{2r} (t_c_{2h+1} ... t_c1)^{2r}; empty when r = 0."""
    forward = chain_curves(ambient, 1, 2 * h + 1)
    backward = chain_curves(ambient, 1, 2 * h + 1, reversed_=True)
    return forward * (2 * r) + backward * (2 * r)


def build_block_pass_relation(
    g: int, h: int, braids: BlockPassBraids | None = None
) -> TwistFactorization:
    """The relation on Sigma_g^2 that the pencils are obtained from by unchaining.

    D E (t_c1 ... t_c_{2h+1})^{(2h+2)(2p-1)} (t_c_{2h+3} ... t_c_{2g+1})^{2g-2h}
    (t_c1 ... t_c_{2h+1})^{2r} (t_c_{2h+1} ... t_c1)^{2r} = t_delta t_delta'
    """
    p, r = pencil_params(g, h)
    if braids is None:
        braids = block_pass_braids(g, h)
    k, m = 2 * h + 2, 2 * g - 2 * h
    ambient = SurfaceSignature(genus=g, boundary=2)

    curves = _block_pass_curves(ambient, braids)
    curves += chain_curves(ambient, 1, 2 * h + 1) * (k * (2 * p - 1))
    curves += chain_curves(ambient, 2 * h + 3, 2 * g + 1) * m
    curves += _chain_tail(ambient, h, r)
    return word_over(
        ambient,
        curves,
        target="boundary_multitwist",
        target_curves=(
            boundary_curve(ambient, 1, "delta"),
            boundary_curve(ambient, 2, "delta'"),
        ),
    )


def block_loop_pair(
    ambient: SurfaceSignature, name: str, first: int, last: int
) -> tuple[CurveSymbol, CurveSymbol]:
    """The two lifts of a loop around branch points first..last."""
    return (
        CurveSymbol(
            name=name, ambient=ambient, kind=BlockLoop(first=first, last=last, sheet=0)
        ),
        CurveSymbol(
            name=f"{name}'",
            ambient=ambient,
            kind=BlockLoop(first=first, last=last, sheet=1),
        ),
    )


def _x_curves(
    ambient: SurfaceSignature, spec: PencilSpec
) -> tuple[list[CurveSymbol], list[CurveSymbol]]:
    # x_1 encloses the lower block; every other x_k encloses the upper one
    n = 2 * spec.g + 2
    x, x_prime = [], []
    for j in range(spec.i + 1, 0, -1):
        first, last = (spec.k + 1, n) if j == 1 else (1, spec.k)
        curve, partner = block_loop_pair(ambient, f"x{j}", first, last)
        x.append(curve)
        x_prime.append(partner)
    return x, x_prime


def build_pencil_word(
    g: int, h: int, i: int, braids: BlockPassBraids | None = None
) -> TwistFactorization:
    """The monodromy of X'_{g,h}[i] on Sigma_g with 2(i+1) boundary components.

    D E (t_x_{i+1} ... t_x_1)(t_x'_{i+1} ... t_x'_1)
    (t_c1 ... t_c_{2h+1})^{(2h+2)(2p-1-i)} (t_c1 ... t_c_{2h+1})^{2r}
    (t_c_{2h+1} ... t_c1)^{2r}, equal to the product of the boundary twists.
    """
    spec = pencil_spec(g, h, i)
    if braids is None:
        braids = block_pass_braids(g, h)
    ambient = SurfaceSignature(genus=g, boundary=spec.base_points)

    x, x_prime = _x_curves(ambient, spec)
    curves = _block_pass_curves(ambient, braids) + x + x_prime
    curves += chain_curves(ambient, 1, 2 * h + 1) * (spec.k * spec.chain_repeats)
    curves += _chain_tail(ambient, h, spec.r)
    return word_over(
        ambient,
        curves,
        target="boundary_multitwist",
        target_curves=tuple(
            boundary_curve(ambient, component, f"delta{component}")
            for component in range(1, spec.base_points + 1)
        ),
    )
