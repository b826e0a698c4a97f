import pytest

from lefschetz._factorization.errors import PencilParameterError
from lefschetz._factorization.pencil import build_pencil_word
from lefschetz._factorization.relations import hyperelliptic, odd_chain
from lefschetz._factorization.surgery import cap_boundary
from lefschetz._invariants.closed_form import (
    closed_form_invariants,
    euler_from_word,
    euler_hyperelliptic,
    euler_z,
    signature_hyperelliptic,
    signature_z,
)
from lefschetz._invariants.errors import InvariantParameterError


class TestBuildingBlocks:
    def test_elliptic_surface(self):
        # Z_1 and H_1 are both E(1)
        assert (euler_z(1), signature_z(1)) == (12, -8)
        assert (euler_hyperelliptic(1), signature_hyperelliptic(1)) == (12, -8)

    def test_genus_two(self):
        assert (euler_z(2), signature_z(2)) == (26, -18)
        assert (euler_hyperelliptic(2), signature_hyperelliptic(2)) == (16, -12)


class TestClosedFormInvariants:
    @pytest.mark.parametrize(
        ("g", "h", "i", "expected"),
        [
            (4, 1, 0, (48, -32)),
            (3, 1, 3, (0, 0)),
            (4, 1, 3, (12, -8)),
            (17, 2, 7, (116, -72)),
        ],
    )
    def test_values(self, g: int, h: int, i: int, expected: tuple[int, int]):
        assert closed_form_invariants(g, h, i) == expected

    def test_out_of_range(self):
        with pytest.raises(PencilParameterError):
            closed_form_invariants(3, 1, 4)


class TestEulerFromWord:
    def test_closed_relators(self):
        assert euler_from_word(odd_chain(1)) == euler_z(1)
        assert euler_from_word(odd_chain(2)) == euler_z(2)
        assert euler_from_word(hyperelliptic(2)) == euler_hyperelliptic(2)

    @pytest.mark.parametrize(("g", "h", "i"), [(3, 1, 0), (4, 1, 2), (5, 2, 1)])
    def test_agrees_with_closed_form(self, g: int, h: int, i: int):
        # Arrange
        f = cap_boundary(build_pencil_word(g, h, i))

        # Act
        e = euler_from_word(f, base_points=2 * (i + 1))

        # Assert
        assert e == closed_form_invariants(g, h, i)[0]

    def test_negative_base_points(self):
        with pytest.raises(InvariantParameterError, match="nonnegative"):
            euler_from_word(odd_chain(1), -1)
