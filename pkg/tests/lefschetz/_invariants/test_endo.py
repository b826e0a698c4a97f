from fractions import Fraction

import pytest

from lefschetz._braid.word import BraidWord
from lefschetz._factorization.curves import (
    CurveSymbol,
    DerivedBand,
    SurfaceSignature,
    annotate_all,
    word_over,
)
from lefschetz._factorization.pencil import build_pencil_word
from lefschetz._factorization.relations import hyperelliptic, odd_chain
from lefschetz._factorization.surgery import cap_boundary, fiber_sum, repeat
from lefschetz._invariants.errors import (
    MissingAnnotationError,
    NonIntegralSignatureError,
)
from lefschetz._invariants.endo import endo_fraction, sigma_endo_hyperelliptic


def _band(ambient: SurfaceSignature, name: str, separation=None) -> CurveSymbol:
    return CurveSymbol(
        name=name,
        ambient=ambient,
        kind=DerivedBand(word=BraidWord(strands=6, letters=(1, 1))),
        separation=separation,
    )


class TestEndoFraction:
    def test_separating_letter(self):
        # Arrange
        ambient = SurfaceSignature(genus=2)
        f = word_over(ambient, [_band(ambient, "s", separation=1)])

        # Act
        value = endo_fraction(f)

        # Assert
        assert value == Fraction(-1, 5)

    def test_missing_annotation(self):
        ambient = SurfaceSignature(genus=2)
        f = word_over(ambient, [_band(ambient, "s")])
        with pytest.raises(MissingAnnotationError, match="annotate_all"):
            endo_fraction(f)

    def test_all_nonseparating_capped_pencil(self):
        f = annotate_all(cap_boundary(build_pencil_word(3, 1, 0)))
        assert endo_fraction(f) == Fraction(-184, 7)


class TestSigmaEndoHyperelliptic:
    @pytest.mark.parametrize(
        ("f", "expected"),
        [
            (odd_chain(1), -8),
            (odd_chain(2), -18),
            (odd_chain(3), -32),
            (hyperelliptic(2), -12),
            (hyperelliptic(3), -16),
        ],
    )
    def test_relators(self, f, expected: int):
        assert sigma_endo_hyperelliptic(f) == expected

    def test_fiber_sums_add(self):
        f = fiber_sum(odd_chain(2), hyperelliptic(2))
        assert sigma_endo_hyperelliptic(f) == -30
        assert sigma_endo_hyperelliptic(repeat(hyperelliptic(2), 3)) == -36

    def test_non_integral(self):
        f = annotate_all(cap_boundary(build_pencil_word(3, 1, 0)))
        with pytest.raises(NonIntegralSignatureError, match="-184/7"):
            sigma_endo_hyperelliptic(f)
