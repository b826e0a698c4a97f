"""Ordered factorizations of braids and the Hurwitz action on them."""

from collections import deque
from typing import Literal

from pydantic import BaseModel, ConfigDict, model_validator

from lefschetz._braid.errors import HurwitzPositionError, StrandMismatchError
from lefschetz._braid.garside import GarsideNormalForm, normal_form
from lefschetz._braid.word import BraidWord, compose, identity, invert

Direction = Literal["left", "right"]
_DIRECTIONS: tuple[Direction, ...] = ("left", "right")


class FactoredBraid(BaseModel):
    model_config = ConfigDict(frozen=True)

    strands: int
    factors: tuple[BraidWord, ...] = ()

    @model_validator(mode="after")
    def _check_strands(self) -> "FactoredBraid":
        for factor in self.factors:
            if factor.strands != self.strands:
                msg = (
                    f"Factor on {factor.strands} strands in a factorization on "
                    f"{self.strands} strands."
                )
                raise StrandMismatchError(msg)
        return self

    def __len__(self) -> int:
        return len(self.factors)


def product(f: FactoredBraid) -> BraidWord:
    if not f.factors:
        return identity(f.strands)
    return compose(*f.factors)


def hurwitz_move(
    f: FactoredBraid, position: int, direction: Direction
) -> FactoredBraid:
    """Swap the factors at `position` and `position + 1` (1-based), conjugating one.

    left:  (a, b) -> (a b a^-1, a)
    right: (a, b) -> (b, b^-1 a b)

    The two directions are inverse to each other and both fix the product.
    """
    if not 1 <= position < len(f.factors):
        msg = (
            f"Hurwitz position {position} is out of range; expected 1 <= position <= "
            f"{len(f.factors) - 1}."
        )
        raise HurwitzPositionError(msg)

    factors = list(f.factors)
    a, b = factors[position - 1], factors[position]
    if direction == "left":
        factors[position - 1 : position + 1] = [compose(a, b, invert(a)), a]
    else:
        factors[position - 1 : position + 1] = [b, compose(invert(b), a, b)]
    return FactoredBraid(strands=f.strands, factors=tuple(factors))


def _key(f: FactoredBraid) -> tuple[GarsideNormalForm, ...]:
    return tuple(normal_form(factor) for factor in f.factors)


def hurwitz_orbit(f: FactoredBraid, max_size: int = 1000) -> list[FactoredBraid]:
    """Breadth-first enumeration of factorizations Hurwitz equivalent to `f`.

    Factorizations are identified when their factors have the same normal forms. The
    search stops once `max_size` distinct factorizations have been found, so the result
    is only the whole orbit when it is shorter than that.
    """
    seen = {_key(f)}
    found = [f]
    queue = deque([f])
    while queue and len(found) < max_size:
        current = queue.popleft()
        for position in range(1, len(current.factors)):
            for direction in _DIRECTIONS:
                neighbour = hurwitz_move(current, position, direction)
                key = _key(neighbour)
                if key in seen:
                    continue
                seen.add(key)
                found.append(neighbour)
                queue.append(neighbour)
                if len(found) >= max_size:
                    return found
    return found
