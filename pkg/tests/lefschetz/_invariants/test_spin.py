import pytest

from lefschetz._invariants.classify import DiffeoType
from lefschetz._invariants.errors import SpinHypothesisError
from lefschetz._invariants.record import grid
from lefschetz._invariants.spin import (
    spin_explanation,
    spin_from_canonical,
    spin_predicate,
)


class TestSpinFromCanonical:
    def test_product(self):
        assert spin_from_canonical(DiffeoType(h=2, product=True))

    def test_even_count_odd_genus(self):
        assert spin_from_canonical(DiffeoType(h=1, h_copies=2))
        assert spin_from_canonical(DiffeoType(h=3, z_copies=1, h_copies=1))

    def test_odd_count(self):
        assert not spin_from_canonical(DiffeoType(h=1, h_copies=3))

    def test_even_genus(self):
        assert not spin_from_canonical(DiffeoType(h=2, h_copies=6))

    def test_uses_canonical_form(self):
        # Z_1(2) is H_1(2)
        assert spin_from_canonical(DiffeoType(h=1, z_copies=2))


class TestSpinPredicate:
    @pytest.mark.parametrize(
        ("g", "h", "i", "expected"),
        [
            (3, 1, 0, False),
            (3, 1, 1, True),
            (4, 1, 0, True),
            (4, 1, 1, False),
            (17, 2, 7, False),
        ],
    )
    def test_values(self, g: int, h: int, i: int, expected: bool):
        assert spin_predicate(g, h, i) is expected

    def test_product_is_outside_the_criterion(self):
        with pytest.raises(SpinHypothesisError, match="product"):
            spin_predicate(3, 1, 3)

    def test_grid_passes_the_audits(self):
        for g, h, i in grid(12):
            try:
                spin_predicate(g, h, i)
            except SpinHypothesisError:
                continue


class TestSpinExplanation:
    def test_even_h(self):
        assert spin_explanation(4, 2, 0) == "h = 2 is even; not spin."

    def test_parity_mismatch(self):
        assert "different parity" in spin_explanation(3, 1, 0)

    def test_spin(self):
        assert spin_explanation(3, 1, 1).endswith("spin.")
        assert "same parity" in spin_explanation(3, 1, 1)

    def test_product(self):
        assert "product" in spin_explanation(3, 1, 3)
