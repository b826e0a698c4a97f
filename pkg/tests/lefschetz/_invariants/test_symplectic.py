import numpy as np
import pytest

from lefschetz._braid.word import BraidWord
from lefschetz._factorization.curves import (
    CurveSymbol,
    DerivedBand,
    Letter,
    SurfaceSignature,
    chain_curve,
)
from lefschetz._factorization.relations import (
    chain_split,
    hyperelliptic,
    hyperelliptic_power,
    odd_chain,
)
from lefschetz._invariants.errors import MissingHomologyError
from lefschetz._invariants.symplectic import (
    letter_image,
    omega,
    sp_identity,
    sp_image,
    standard_form,
    transvection,
)


class TestOmega:
    def test_basis(self):
        a1, b1 = np.array([1, 0]), np.array([0, 1])
        assert omega(a1, b1) == 1
        assert omega(b1, a1) == -1

    def test_consecutive_chain_curves(self):
        ambient = SurfaceSignature(genus=3)
        for index in range(1, 7):
            x = np.array(chain_curve(ambient, index).homology_class)
            y = np.array(chain_curve(ambient, index + 1).homology_class)
            assert omega(x, y) == 1

    def test_standard_form_is_antisymmetric(self):
        j = standard_form(2)
        assert np.array_equal(j.T, -j)


class TestTransvection:
    def test_is_symplectic(self):
        for gamma in [(1, 0, 0, 0), (-1, 1, 0, 1), (0, 0, 2, -1)]:
            assert transvection(gamma).is_symplectic()

    def test_inverse(self):
        t = transvection((1, -1, 0, 1))
        assert (t @ t.inverse()).is_identity()
        assert transvection((1, -1, 0, 1), -1) == t.inverse()

    def test_action_on_meridian(self):
        # the twist about a_1 sends b_1 to b_1 - a_1
        t = transvection((1, 0))
        assert list(t.matrix @ np.array([0, 1], dtype=object)) == [-1, 1]


class TestSpImage:
    @pytest.mark.parametrize("h", [1, 2, 3])
    def test_relators_act_trivially(self, h: int):
        assert sp_image(odd_chain(h)).is_identity()
        assert sp_image(hyperelliptic(h)).is_identity()

    def test_hyperelliptic_involution(self):
        assert sp_image(hyperelliptic_power(2, 1)).is_minus_identity()

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    @pytest.mark.parametrize("h", [1, 2, 3])
    def test_hyperelliptic_split_acts_alike(self, h: int, n: int):
        assert sp_image(hyperelliptic_power(h, n)) == sp_image(chain_split(h, n))

    @pytest.mark.parametrize("h", [1, 2, 3])
    def test_odd_powers_act_as_minus_identity(self, h: int):
        assert sp_image(chain_split(h, 3)).is_minus_identity()

    def test_empty_word(self):
        f = odd_chain(1).model_copy(update={"letters": ()})
        assert sp_image(f) == sp_identity(1)


class TestLetterImage:
    def test_missing_homology(self):
        curve = CurveSymbol(
            name="d1",
            ambient=SurfaceSignature(genus=1),
            kind=DerivedBand(word=BraidWord(strands=4, letters=(1,))),
        )
        with pytest.raises(MissingHomologyError, match="d1"):
            letter_image(Letter(curve=curve))
