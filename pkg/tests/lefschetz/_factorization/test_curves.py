import pytest

from lefschetz._braid.standard import block_full_twist
from lefschetz._braid.word import BraidWord
from lefschetz._factorization.curves import (
    BlockLoop,
    ChainCurve,
    CurveSymbol,
    DerivedBand,
    SurfaceSignature,
    annotate_all,
    boundary_curve,
    chain_curve,
    chain_homology,
    word_over,
)
from lefschetz._factorization.errors import (
    AmbientMismatchError,
    CurveDataError,
    MissingDownstairsImageError,
)


class TestSurfaceSignature:
    def test_str(self):
        assert str(SurfaceSignature(genus=2)) == "Sigma_2"
        assert str(SurfaceSignature(genus=3, boundary=2)) == "Sigma_3^2"

    def test_capped(self):
        assert SurfaceSignature(genus=3, boundary=4).capped() == SurfaceSignature(
            genus=3
        )

    def test_branch_points(self):
        assert SurfaceSignature(genus=4).branch_points == 10


class TestChainHomology:
    def test_genus_one(self):
        assert chain_homology(1, 1) == (1, 0)
        assert chain_homology(1, 2) == (0, 1)
        assert chain_homology(1, 3) == (-1, 0)

    def test_genus_two_middle(self):
        assert chain_homology(2, 3) == (-1, 1, 0, 0)
        assert chain_homology(2, 4) == (0, 0, 0, 1)
        assert chain_homology(2, 5) == (0, -1, 0, 0)


class TestCurveSymbol:
    def test_chain_index_too_large(self):
        with pytest.raises(CurveDataError, match="c4"):
            CurveSymbol(
                name="c4",
                ambient=SurfaceSignature(genus=1),
                kind=ChainCurve(index=4),
            )

    def test_block_loop_needs_even_size(self):
        with pytest.raises(CurveDataError, match="even number"):
            CurveSymbol(
                name="x",
                ambient=SurfaceSignature(genus=2),
                kind=BlockLoop(first=1, last=3),
            )

    def test_homology_length(self):
        with pytest.raises(CurveDataError, match="expected 4"):
            CurveSymbol(
                name="c1",
                ambient=SurfaceSignature(genus=2),
                kind=ChainCurve(index=1),
                homology_class=(1, 0),
            )

    def test_block_loop_key_keeps_points(self):
        curve = CurveSymbol(
            name="x",
            ambient=SurfaceSignature(genus=2),
            kind=BlockLoop(first=3, last=6),
        )
        assert curve.key == "x[3-6]"

    class TestDownstairs:
        def test_chain(self):
            curve = chain_curve(SurfaceSignature(genus=2), 3)
            assert curve.downstairs(6) == BraidWord(strands=6, letters=(3,))

        def test_block_loop(self):
            # Arrange
            ambient = SurfaceSignature(genus=2)
            first = CurveSymbol(
                name="x", ambient=ambient, kind=BlockLoop(first=3, last=6)
            )
            second = CurveSymbol(
                name="x'", ambient=ambient, kind=BlockLoop(first=3, last=6, sheet=1)
            )

            # Act, Assert
            assert first.downstairs(6) == block_full_twist(6, 4, 3)
            assert second.downstairs(6) is None

        def test_derived_band(self):
            word = BraidWord(strands=4, letters=(1, 2, -1))
            curve = CurveSymbol(
                name="d1",
                ambient=SurfaceSignature(genus=1),
                kind=DerivedBand(word=word),
            )
            assert curve.downstairs(4) == word

        def test_boundary(self):
            curve = boundary_curve(SurfaceSignature(genus=1, boundary=1), 1, "delta")
            with pytest.raises(MissingDownstairsImageError):
                curve.downstairs(4)


class TestTwistFactorization:
    def test_ambient_mismatch(self):
        ambient = SurfaceSignature(genus=2)
        other = chain_curve(SurfaceSignature(genus=2, boundary=1), 1)
        with pytest.raises(AmbientMismatchError, match="Sigma_2\\^1"):
            word_over(ambient, [other])

    def test_curves_in_order_of_appearance(self):
        ambient = SurfaceSignature(genus=1)
        c1, c2 = chain_curve(ambient, 1), chain_curve(ambient, 2)
        f = word_over(ambient, [c2, c1, c2])
        assert list(f.curves()) == ["c2", "c1"]
        assert len(f) == 3
        assert f.is_positive

    def test_downstairs_strands_grows_with_bands(self):
        ambient = SurfaceSignature(genus=0, boundary=4)
        band = CurveSymbol(
            name="x",
            ambient=ambient,
            kind=DerivedBand(word=BraidWord(strands=3, letters=(1, 1))),
        )
        assert word_over(ambient, [band]).downstairs_strands == 3


class TestAnnotateAll:
    def test_keeps_existing_annotations(self):
        # Arrange
        ambient = SurfaceSignature(genus=2)
        separating = CurveSymbol(
            name="s",
            ambient=ambient,
            kind=DerivedBand(word=BraidWord(strands=6, letters=(1, 1))),
            separation=1,
        )
        bare = CurveSymbol(
            name="b",
            ambient=ambient,
            kind=DerivedBand(word=BraidWord(strands=6, letters=(2,))),
        )

        # Act
        f = annotate_all(word_over(ambient, [separating, bare]))

        # Assert
        assert [letter.curve.separation for letter in f.letters] == [
            1,
            "nonseparating",
        ]
