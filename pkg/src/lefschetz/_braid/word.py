"""Braid words over the Artin generators.

A letter +i stands for sigma_i and -i for its inverse. Words are read left to right and
the leftmost letter acts first, so composition is concatenation.
"""

import json
from collections.abc import Iterable, Sequence
from typing import Any, Self

from pydantic import (
    BaseModel,
    ConfigDict,
    PositiveInt,
    field_validator,
    model_validator,
)

from lefschetz._braid.errors import GeneratorRangeError, StrandMismatchError


def free_reduce(letters: Iterable[int]) -> tuple[int, ...]:
    stack: list[int] = []
    for letter in letters:
        if stack and stack[-1] == -letter:
            stack.pop()
        else:
            stack.append(letter)
    return tuple(stack)


class BraidWord(BaseModel):
    """An element of the braid group B_n given as a freely reduced word."""

    model_config = ConfigDict(frozen=True)

    strands: PositiveInt
    letters: tuple[int, ...] = ()

    @field_validator("letters", mode="after")
    @classmethod
    def _reduce(cls, letters: tuple[int, ...]) -> tuple[int, ...]:
        return free_reduce(letters)

    @model_validator(mode="after")
    def _check_range(self) -> Self:
        for letter in self.letters:
            if letter == 0 or abs(letter) >= self.strands:
                msg = (
                    f"Generator {letter} is out of range for {self.strands} strands; "
                    f"expected 1 <= |i| <= {self.strands - 1}."
                )
                raise GeneratorRangeError(msg)
        return self

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        return compose(self, other)

    def __pow__(self, exponent: int) -> "BraidWord":
        return power(self, exponent)

    def to_json_dict(self) -> dict[str, Any]:
        return {"strands": self.strands, "letters": list(self.letters)}

    @classmethod
    def from_json_dict(cls, data: dict[str, Any]) -> "BraidWord":
        return cls(strands=data["strands"], letters=tuple(data["letters"]))

    def canonical_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True, separators=(",", ":"))


def identity(strands: int) -> BraidWord:
    return BraidWord(strands=strands)


def _check_strands(a: BraidWord, b: BraidWord) -> None:
    if a.strands != b.strands:
        msg = f"Cannot combine braids on {a.strands} and {b.strands} strands."
        raise StrandMismatchError(msg)


def compose(*words: BraidWord) -> BraidWord:
    """Concatenate words; the leftmost word acts first."""
    if not words:
        msg = "compose() needs at least one braid word."
        raise ValueError(msg)

    first = words[0]
    letters: list[int] = []
    for word in words:
        _check_strands(first, word)
        letters.extend(word.letters)
    return BraidWord(strands=first.strands, letters=tuple(letters))


def invert(a: BraidWord) -> BraidWord:
    return BraidWord(
        strands=a.strands, letters=tuple(-letter for letter in reversed(a.letters))
    )


def power(a: BraidWord, exponent: int) -> BraidWord:
    base = a if exponent >= 0 else invert(a)
    return BraidWord(strands=a.strands, letters=base.letters * abs(exponent))


def from_generators(strands: int, letters: Sequence[int]) -> BraidWord:
    return BraidWord(strands=strands, letters=tuple(letters))


def shift(a: BraidWord, offset: int, strands: int | None = None) -> BraidWord:
    """Move a word to generators i + offset, optionally on more strands."""
    if strands is None:
        strands = a.strands + offset
    letters = tuple(
        letter + offset if letter > 0 else letter - offset for letter in a.letters
    )
    return BraidWord(strands=strands, letters=letters)


def exponent_sum(a: BraidWord) -> int:
    return sum(1 if letter > 0 else -1 for letter in a.letters)


def permutation(a: BraidWord) -> tuple[int, ...]:
    """Where each strand ends up: entry j is the final position of the strand at j.

    Positions are 0-based.
    """
    # at[pos] is the strand currently at position pos
    at = list(range(a.strands))
    for letter in a.letters:
        i = abs(letter)
        at[i - 1], at[i] = at[i], at[i - 1]

    final = [0] * a.strands
    for pos, strand in enumerate(at):
        final[strand] = pos
    return tuple(final)
