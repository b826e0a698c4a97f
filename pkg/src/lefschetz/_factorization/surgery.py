"""Surgeries on factorizations: unchaining, fiber sums and capping."""

import re

from lefschetz._factorization.curves import (
    BlockLoop,
    ChainCurve,
    Letter,
    TwistFactorization,
)
from lefschetz._factorization.errors import (
    AmbientMismatchError,
    RelationParameterError,
    SubwordMismatchError,
)
from lefschetz._factorization.params import pencil_spec
from lefschetz._factorization.pencil import block_loop_pair, build_block_pass_relation

_NUMBERED_LOOP = re.compile(r"^(?P<stem>[a-z]+)\d+(?P<prime>'?)$")


def _chain_index(letter: Letter) -> int | None:
    if letter.power == 1 and isinstance(letter.curve.kind, ChainCurve):
        return letter.curve.kind.index
    return None


def _matches_chain_power(
    f: TwistFactorization, at: int, first: int, length: int
) -> bool:
    size = length * (length + 1)
    if at < 0 or at + size > len(f.letters):
        return False
    return all(
        _chain_index(f.letters[at + offset]) == first + offset % length
        for offset in range(size)
    )


def find_chain_power(f: TwistFactorization, first: int, length: int) -> int | None:
    """The first position of (t_c_first ... t_c_{first+length-1})^{length+1}."""
    for at in range(len(f.letters)):
        if _matches_chain_power(f, at, first, length):
            return at
    return None


def unchain_substitute(
    f: TwistFactorization,
    at: int,
    length: int,
    name: str = "a",
) -> TwistFactorization:
    """Replace a full odd chain relator starting at letter `at` by two block loops.

    The subword must be (t_c_s ... t_c_{s+length-1})^{length+1} with `length` odd; it
    is replaced by t_a t_a', the lifts of the loop around branch points s..s+length.
    Downstairs both sides are the full twist on those points.
    """
    if length % 2 == 0 or length < 1:
        msg = f"Unchaining needs an odd chain of curves, got length {length}."
        raise SubwordMismatchError(msg)

    first = _chain_index(f.letters[at]) if 0 <= at < len(f.letters) else None
    if first is None or not _matches_chain_power(f, at, first, length):
        msg = (
            f"No odd chain relator of length {length} starts at letter {at} of this "
            "factorization."
        )
        raise SubwordMismatchError(msg)

    loop, partner = block_loop_pair(f.ambient, name, first, first + length)
    size = length * (length + 1)
    letters = (
        f.letters[:at]
        + (Letter(curve=loop), Letter(curve=partner))
        + f.letters[at + size :]
    )
    return f.model_copy(update={"letters": letters})


def unchaining_path(g: int, h: int, i: int) -> TwistFactorization:
    """Reach the pencil relation on Sigma_g^2 from the block-pass relation.

    One unchaining of the lower chain gives the pair b, b'; i unchainings of upper
    chain relators give i copies of a, a'.
    """
    spec = pencil_spec(g, h, i)
    f = build_block_pass_relation(g, h)

    lower_length = spec.m - 1
    at = find_chain_power(f, 2 * h + 3, lower_length)
    if at is None:
        msg = "The block-pass relation has no lower chain relator."
        raise SubwordMismatchError(msg)
    f = unchain_substitute(f, at, lower_length, "b")

    for _ in range(i):
        at = find_chain_power(f, 1, 2 * h + 1)
        if at is None:
            msg = "Ran out of upper chain relators while unchaining."
            raise SubwordMismatchError(msg)
        f = unchain_substitute(f, at, 2 * h + 1, "a")
    return f


def _check_closed(f: TwistFactorization) -> None:
    if f.ambient.boundary > 0:
        msg = (
            f"Fiber sums need a closed fiber, got {f.ambient}; cap the boundary first."
        )
        raise AmbientMismatchError(msg)


def fiber_sum(f1: TwistFactorization, f2: TwistFactorization) -> TwistFactorization:
    """Concatenate two relators on the same closed surface."""
    _check_closed(f1)
    _check_closed(f2)
    if f1.ambient != f2.ambient or f1.target != f2.target:
        msg = (
            f"Cannot fiber sum a factorization on {f1.ambient} ({f1.target}) with one "
            f"on {f2.ambient} ({f2.target})."
        )
        raise AmbientMismatchError(msg)
    return f1.model_copy(update={"letters": f1.letters + f2.letters})


def repeat(f: TwistFactorization, copies: int) -> TwistFactorization:
    """The fiber sum of `copies` copies of f."""
    _check_closed(f)
    if copies < 0:
        msg = f"Cannot fiber sum a negative number ({copies}) of copies."
        raise RelationParameterError(msg)
    return f.model_copy(update={"letters": f.letters * copies})


def _capped_name(name: str) -> str:
    match = _NUMBERED_LOOP.match(name)
    if match is None:
        return name
    return match["stem"] + match["prime"]


def cap_boundary(f: TwistFactorization) -> TwistFactorization:
    """Glue disks to every boundary component.

    The boundary twists become trivial, so the target is the identity, and the numbered
    block loops x_k, x'_k become the common curves x and x'. Each loop keeps the branch
    points it encloses.
    """
    if f.ambient.boundary == 0:
        return f

    capped = f.ambient.capped()
    renamed = {}
    letters = []
    for letter in f.letters:
        curve = letter.curve
        if curve.key not in renamed:
            update: dict[str, object] = {"ambient": capped}
            if isinstance(curve.kind, BlockLoop):
                update["name"] = _capped_name(curve.name)
            renamed[curve.key] = curve.model_copy(update=update)
        letters.append(letter.model_copy(update={"curve": renamed[curve.key]}))

    return TwistFactorization(
        ambient=capped, letters=tuple(letters), target="identity", target_curves=()
    )
