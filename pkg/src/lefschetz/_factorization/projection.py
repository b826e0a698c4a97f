from collections import Counter

from lefschetz._braid.garside import equals
from lefschetz._braid.standard import full_twist
from lefschetz._braid.word import BraidWord, compose, identity, invert
from lefschetz._factorization.curves import BlockLoop, TwistFactorization
from lefschetz._factorization.errors import PairingError


def _check_pairs(f: TwistFactorization) -> None:
    sheets: Counter[tuple[int, int, int]] = Counter()
    for letter in f.letters:
        kind = letter.curve.kind
        if isinstance(kind, BlockLoop):
            sheets[(kind.first, kind.last, kind.sheet)] += letter.power

    for first, last in sorted({(first, last) for first, last, _ in sheets}):
        on_first, on_second = sheets[(first, last, 0)], sheets[(first, last, 1)]
        if on_first != on_second:
            msg = (
                f"Loops around branch points {first}..{last} appear {on_first} times "
                f"on one sheet and {on_second} times on the other; each twist must "
                "come with its partner."
            )
            raise PairingError(msg)


def project_to_braid(f: TwistFactorization, strands: int | None = None) -> BraidWord:
    """The braid covered by the factorization under the hyperelliptic quotient.

    Each pair of block-loop twists (x, x') covers a single full twist on the points
    they enclose.
    """
    if strands is None:
        strands = f.downstairs_strands
    _check_pairs(f)

    images: list[BraidWord] = []
    for letter in f.letters:
        image = letter.curve.downstairs(strands)
        if image is None:
            continue
        images.append(image if letter.power == 1 else invert(image))

    if not images:
        return identity(strands)
    return compose(*images)


def projects_to_full_twist(f: TwistFactorization) -> bool:
    projected = project_to_braid(f)
    return equals(projected, full_twist(projected.strands))
