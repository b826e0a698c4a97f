import pytest

from lefschetz._factorization.errors import PencilParameterError
from lefschetz._factorization.params import PencilSpec, pencil_params, pencil_spec


class TestPencilParams:
    @pytest.mark.parametrize(
        ("g", "h", "expected"),
        [(17, 2, (6, 0)), (3, 1, (2, 0)), (4, 1, (2, 1)), (5, 3, (1, 2))],
    )
    def test_values(self, g: int, h: int, expected: tuple[int, int]):
        assert pencil_params(g, h) == expected

    @pytest.mark.parametrize(("g", "h"), [(3, 3), (3, 4), (3, 0)])
    def test_out_of_range(self, g: int, h: int):
        with pytest.raises(PencilParameterError):
            pencil_params(g, h)

    def test_decomposition(self):
        for g in range(2, 12):
            for h in range(1, g):
                p, r = pencil_params(g, h)
                assert 2 * g + 2 == p * (2 * h + 2) + 2 * r
                assert 0 <= r < h + 1


class TestPencilSpec:
    def test_counts(self):
        # Act
        spec = pencil_spec(17, 2, 7)

        # Assert
        assert spec.k == 6
        assert spec.m == 30
        assert spec.base_points == 16
        assert spec.chain_repeats == 4
        assert spec.nodal_fibers == 196

    def test_small_pencil(self):
        assert pencil_spec(3, 1, 0).nodal_fibers == 46

    def test_last_allowed_i(self):
        spec = pencil_spec(3, 1, 3)
        assert spec.chain_repeats == 0
        assert spec.nodal_fibers == 16

    def test_i_too_large(self):
        with pytest.raises(PencilParameterError, match="2p-1 = 3"):
            pencil_spec(3, 1, 4)

    def test_negative_i(self):
        with pytest.raises(PencilParameterError):
            pencil_spec(3, 1, -1)

    def test_inconsistent_decomposition(self):
        with pytest.raises(PencilParameterError, match="2g\\+2"):
            PencilSpec(g=4, h=1, i=0, p=2, r=0)

    def test_r_out_of_range(self):
        # 2*5+2 = 1*4 + 2*4 but r = 4 is not below h+1
        with pytest.raises(PencilParameterError, match="0 <= r < h\\+1"):
            PencilSpec(g=5, h=1, i=0, p=1, r=4)
