from collections import Counter
from fractions import Fraction

from lefschetz._factorization.curves import TwistFactorization
from lefschetz._invariants.errors import (
    MissingAnnotationError,
    NonIntegralSignatureError,
)


def endo_fraction(f: TwistFactorization) -> Fraction:
    """-(g+1)/(2g+1) n + sum_h' (4h'(g-h')/(2g+1) - 1) s_h', evaluated exactly.

    n counts nonseparating twists and s_h' separating twists that cut off genus h'.
    """
    g = f.ambient.genus
    counts: Counter[str | int] = Counter()
    for letter in f.letters:
        separation = letter.curve.separation
        if separation is None:
            msg = (
                f"Curve {letter.curve.name} has no separating type; annotate it or "
                "use annotate_all() to assume one for every letter."
            )
            raise MissingAnnotationError(msg)
        counts[separation] += letter.power

    total = Fraction(-(g + 1), 2 * g + 1) * counts.pop("nonseparating", 0)
    for genus_split, count in counts.items():
        split = int(genus_split)
        total += (Fraction(4 * split * (g - split), 2 * g + 1) - 1) * count
    return total


def sigma_endo_hyperelliptic(f: TwistFactorization) -> int:
    value = endo_fraction(f)
    if value.denominator != 1:
        msg = (
            f"The hyperelliptic signature formula gives {value}, which is not an "
            "integer; the separating types do not fit a hyperelliptic fibration."
        )
        raise NonIntegralSignatureError(msg)
    return int(value)
