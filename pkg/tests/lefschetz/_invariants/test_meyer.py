import pytest

from lefschetz._conventions import MeyerCalibration
from lefschetz._factorization.surgery import fiber_sum, repeat
from lefschetz._factorization.relations import (
    hyperelliptic,
    hyperelliptic_power,
    odd_chain,
)
from lefschetz._invariants.errors import MissingAnnotationError, NonRelatorError
from lefschetz._invariants.meyer import (
    ANCHOR_SIGNATURES,
    calibrate,
    cocycle_sum,
    meyer_cocycle,
    sigma_meyer,
)
from lefschetz._invariants.symplectic import sp_identity, transvection


class TestMeyerCocycle:
    def test_identity(self):
        assert meyer_cocycle(sp_identity(2), sp_identity(2)) == 0

    def test_with_identity_factor(self):
        t = transvection((1, 0, 0, 0))
        assert meyer_cocycle(sp_identity(2), t) == 0
        assert meyer_cocycle(t, sp_identity(2)) == 0


class TestSigmaMeyer:
    @pytest.mark.parametrize(
        ("f", "expected"),
        [
            (odd_chain(1), -8),
            (odd_chain(2), -18),
            (hyperelliptic(1), -8),
            (hyperelliptic(2), -12),
            (odd_chain(3), -32),
            (hyperelliptic(3), -16),
        ],
        ids=["Z_1", "Z_2", "H_1", "H_2", "Z_3", "H_3"],
    )
    def test_known_signatures(self, f, expected: int):
        assert sigma_meyer(f) == expected

    def test_not_a_relator(self):
        with pytest.raises(NonRelatorError):
            sigma_meyer(hyperelliptic_power(1, 1))

    def test_missing_annotation(self):
        # Arrange
        f = odd_chain(1)
        bare = f.letters[0].curve.model_copy(update={"separation": None})
        letters = (f.letters[0].model_copy(update={"curve": bare}), *f.letters[1:])

        # Act, Assert
        with pytest.raises(MissingAnnotationError, match="c1"):
            sigma_meyer(f.model_copy(update={"letters": letters}))

    def test_opposite_sign_negates_the_cocycle_term(self):
        f = odd_chain(1)
        flipped = MeyerCalibration(global_sign=1, separating_local=0)
        assert sigma_meyer(f, flipped) == -cocycle_sum(f)


class TestAdditivity:
    @pytest.mark.parametrize(
        ("f", "expected"),
        [
            (fiber_sum(odd_chain(1), hyperelliptic(1)), -16),
            (fiber_sum(odd_chain(2), hyperelliptic(2)), -30),
            (repeat(hyperelliptic(2), 3), -36),
        ],
        ids=["Z_1 + H_1", "Z_2 + H_2", "3 H_2"],
    )
    def test_fiber_sums_add(self, f, expected: int):
        assert sigma_meyer(f) == expected

    def test_zero_copies(self):
        assert sigma_meyer(repeat(hyperelliptic(2), 0)) == 0


class TestCalibrate:
    def test_default_space(self):
        # Act
        calibration = calibrate()

        # Assert
        assert calibration.global_sign == -1
        assert calibration.separating_local == -1
        assert len(calibration.transcript) == 6

    def test_transcript_marks_ambiguity(self):
        transcript = calibrate().transcript
        accepted = [line for line in transcript if "accepted" in line]
        assert len(accepted) == 3
        assert sum("no separating letter" in line for line in accepted) == 2

    def test_anchor_values(self):
        assert ANCHOR_SIGNATURES == {"H_1": -8, "Z_1": -8, "Z_2": -18}
