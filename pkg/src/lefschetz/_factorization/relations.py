"""Relators in mapping class groups, written over chain curves."""

from typing import Literal

from lefschetz._braid.word import BraidWord
from lefschetz._factorization.curves import (
    CurveSymbol,
    DerivedBand,
    SurfaceSignature,
    TwistFactorization,
    boundary_curve,
    chain_curve,
    word_over,
)
from lefschetz._factorization.errors import RelationParameterError

RelationKind = Literal[
    "odd_chain", "hyperelliptic", "hyperelliptic_split_form", "even_chain", "lantern"
]


def _check_genus(h: int) -> None:
    if h < 1:
        msg = f"Relators need genus h >= 1, got h={h}."
        raise RelationParameterError(msg)


def _check_exponent(n: int) -> None:
    if n < 1:
        msg = f"Exponents must be positive, got {n}."
        raise RelationParameterError(msg)


def chain_curves(
    ambient: SurfaceSignature, first: int, last: int, *, reversed_: bool = False
) -> list[CurveSymbol]:
    indices = list(range(first, last + 1))
    if reversed_:
        indices.reverse()
    return [chain_curve(ambient, index) for index in indices]


def odd_chain(h: int) -> TwistFactorization:
    """(t_c1 ... t_c_{2h+1})^{2h+2} = 1 on the closed surface of genus h."""
    _check_genus(h)
    ambient = SurfaceSignature(genus=h)
    return word_over(ambient, chain_curves(ambient, 1, 2 * h + 1) * (2 * h + 2))


def hyperelliptic_power(h: int, n: int) -> TwistFactorization:
    """(t_c1 ... t_c_{2h+1} t_c_{2h+1} ... t_c1)^n; a relator when n is even."""
    _check_genus(h)
    _check_exponent(n)
    ambient = SurfaceSignature(genus=h)
    palindrome = chain_curves(ambient, 1, 2 * h + 1) + chain_curves(
        ambient, 1, 2 * h + 1, reversed_=True
    )
    return word_over(ambient, palindrome * n)


def hyperelliptic(h: int) -> TwistFactorization:
    return hyperelliptic_power(h, 2)


def chain_split(h: int, n: int) -> TwistFactorization:
    """(t_c1 ... t_c_{2h+1})^n (t_c_{2h+1} ... t_c1)^n.

    It has the same image in the mapping class group as `hyperelliptic_power(h, n)`
    for every n >= 1.
    """
    _check_genus(h)
    _check_exponent(n)
    ambient = SurfaceSignature(genus=h)
    forward = chain_curves(ambient, 1, 2 * h + 1)
    backward = chain_curves(ambient, 1, 2 * h + 1, reversed_=True)
    return word_over(ambient, forward * n + backward * n)


def hyperelliptic_split_form(h: int, r: int) -> TwistFactorization:
    """The hyperelliptic relator H_h(r) rewritten as chain^{2r} reversed-chain^{2r}."""
    return chain_split(h, 2 * r)


def even_chain(h: int) -> TwistFactorization:
    """(t_c1 ... t_c_{2h})^{4h+2} = t_delta on the genus h surface with one boundary."""
    _check_genus(h)
    ambient = SurfaceSignature(genus=h, boundary=1)
    return word_over(
        ambient,
        chain_curves(ambient, 1, 2 * h) * (4 * h + 2),
        target="boundary_multitwist",
        target_curves=(boundary_curve(ambient, 1, "delta"),),
    )


def lantern() -> TwistFactorization:
    """t_x t_z t_y = t_delta1 t_delta2 t_delta3 t_delta4 on the four-holed sphere.

    The sphere is a disk with three holes; x, y and z enclose holes {1,2}, {2,3} and
    {1,3}, and their downstairs images are the corresponding pure braid generators.
    """
    ambient = SurfaceSignature(genus=0, boundary=4)

    def band(name: str, letters: tuple[int, ...]) -> CurveSymbol:
        return CurveSymbol(
            name=name,
            ambient=ambient,
            kind=DerivedBand(word=BraidWord(strands=3, letters=letters)),
        )

    x = band("x", (1, 1))
    z = band("z", (2, 1, 1, -2))
    y = band("y", (2, 2))
    boundary = tuple(
        boundary_curve(ambient, component, f"delta{component}")
        for component in range(1, 5)
    )
    return word_over(
        ambient, [x, z, y], target="boundary_multitwist", target_curves=boundary
    )


def build_relation(kind: RelationKind, h: int = 1, r: int = 1) -> TwistFactorization:
    match kind:
        case "odd_chain":
            return odd_chain(h)
        case "hyperelliptic":
            return hyperelliptic(h)
        case "hyperelliptic_split_form":
            return hyperelliptic_split_form(h, r)
        case "even_chain":
            return even_chain(h)
        case "lantern":
            return lantern()
