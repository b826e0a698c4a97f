"""Named braid words: half twists, full twists and chain powers."""

from typing import Literal

from lefschetz._braid.errors import GeneratorRangeError
from lefschetz._braid.garside import delta_letters
from lefschetz._braid.word import BraidWord, power

StandardKind = Literal["delta", "full_twist", "chain", "block_full_twist"]


def _check_block(strands: int, size: int, start: int) -> None:
    if size < 1 or start < 1 or start + size - 1 > strands:
        msg = (
            f"A block of {size} strands starting at strand {start} does not fit in "
            f"B_{strands}."
        )
        raise GeneratorRangeError(msg)


def delta(strands: int) -> BraidWord:
    """The positive half twist Delta."""
    return BraidWord(strands=strands, letters=delta_letters(strands))


def full_twist(strands: int) -> BraidWord:
    return power(delta(strands), 2)


def chain(
    strands: int,
    size: int,
    count: int = 1,
    *,
    reversed_: bool = False,
    start: int = 1,
) -> BraidWord:
    """(sigma_start ... sigma_{start+size-2})^count on a block of `size` strands.

    With `reversed_`, the generators within each repetition run downwards. A negative
    count gives the inverse power.
    """
    _check_block(strands, size, start)

    generators = list(range(start, start + size - 1))
    if reversed_:
        generators.reverse()
    word = BraidWord(strands=strands, letters=tuple(generators))
    return power(word, count)


def block_full_twist(strands: int, size: int, start: int = 1) -> BraidWord:
    """The full twist on `size` consecutive strands, built from the half twist.

    This is a different word from the chain power (sigma_1 ... sigma_{k-1})^k, so
    comparing the two is a genuine check.
    """
    _check_block(strands, size, start)

    offset = start - 1
    letters = tuple(letter + offset for letter in delta_letters(size))
    half = BraidWord(strands=strands, letters=letters)
    return power(half, 2)


def standard_word(
    kind: StandardKind,
    strands: int,
    *,
    size: int | None = None,
    count: int = 1,
    reversed_: bool = False,
    start: int = 1,
) -> BraidWord:
    match kind:
        case "delta":
            return delta(strands)
        case "full_twist":
            return full_twist(strands)
        case "chain":
            return chain(
                strands,
                strands if size is None else size,
                count,
                reversed_=reversed_,
                start=start,
            )
        case "block_full_twist":
            return block_full_twist(strands, strands if size is None else size, start)
