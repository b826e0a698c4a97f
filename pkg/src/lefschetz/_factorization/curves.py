"""Named curves on surfaces and positive Dehn-twist words over them.

Every curve is symmetric under the hyperelliptic involution and records its image in
the braid group of the quotient sphere: chain curves c_i cover the arc between branch
points i and i+1, block loops cover a round circle around consecutive branch points,
and derived bands carry an explicit braid word.
"""

from typing import Annotated, Literal, Self

from pydantic import (
    BaseModel,
    ConfigDict,
    Field,
    NonNegativeInt,
    PositiveInt,
    model_validator,
)

from lefschetz._braid.standard import block_full_twist
from lefschetz._braid.word import BraidWord, from_generators
from lefschetz._factorization.errors import (
    AmbientMismatchError,
    CurveDataError,
    MissingDownstairsImageError,
)

Separation = Literal["nonseparating"] | PositiveInt
Target = Literal["identity", "boundary_multitwist"]


class SurfaceSignature(BaseModel):
    model_config = ConfigDict(frozen=True)

    genus: NonNegativeInt
    boundary: NonNegativeInt = 0
    marked: NonNegativeInt = 0

    @property
    def branch_points(self) -> int:
        return 2 * self.genus + 2

    def capped(self) -> "SurfaceSignature":
        return self.model_copy(update={"boundary": 0})

    def __str__(self) -> str:
        text = f"Sigma_{self.genus}"
        if self.boundary:
            text += f"^{self.boundary}"
        if self.marked:
            text += f" with {self.marked} marked points"
        return text


class ChainCurve(BaseModel):
    model_config = ConfigDict(frozen=True)

    kind: Literal["chain"] = "chain"
    index: PositiveInt


class DerivedBand(BaseModel):
    model_config = ConfigDict(frozen=True)

    kind: Literal["derived_band"] = "derived_band"
    word: BraidWord


class BlockLoop(BaseModel):
    """A curve enclosing the consecutive branch points first..last.

    Such a curve lifts to two curves, one on each sheet; only sheet 0 carries the
    downstairs full twist, so the two sheets must appear in equal numbers.
    """

    model_config = ConfigDict(frozen=True)

    kind: Literal["block_loop"] = "block_loop"
    first: PositiveInt
    last: PositiveInt
    sheet: Literal[0, 1] = 0

    @property
    def size(self) -> int:
        return self.last - self.first + 1


class BoundaryParallel(BaseModel):
    model_config = ConfigDict(frozen=True)

    kind: Literal["boundary_parallel"] = "boundary_parallel"
    component: PositiveInt


CurveKind = Annotated[
    ChainCurve | DerivedBand | BlockLoop | BoundaryParallel,
    Field(discriminator="kind"),
]


def chain_homology(genus: int, index: int) -> tuple[int, ...]:
    """The class of c_index in the basis (a_1..a_g, b_1..b_g).

    c_1 = a_1, c_{2j} = b_j, c_{2j+1} = a_{j+1} - a_j and c_{2g+1} = -a_g, so that
    consecutive chain curves meet with intersection number +1.
    """
    vector = [0] * (2 * genus)
    if index == 1:
        vector[0] = 1
    elif index % 2 == 0:
        vector[genus + index // 2 - 1] = 1
    elif index == 2 * genus + 1:
        vector[genus - 1] = -1
    else:
        j = (index - 1) // 2
        vector[j] = 1
        vector[j - 1] = -1
    return tuple(vector)


class CurveSymbol(BaseModel):
    model_config = ConfigDict(frozen=True)

    name: str
    ambient: SurfaceSignature
    kind: CurveKind
    homology_class: tuple[int, ...] | None = None
    separation: Separation | None = None

    @model_validator(mode="after")
    def _check_kind(self) -> Self:
        g = self.ambient.genus
        match self.kind:
            case ChainCurve(index=index) if index > 2 * g + 1:
                msg = f"Chain curve c{index} does not exist on {self.ambient}."
                raise CurveDataError(msg)
            case BlockLoop(first=first, last=last) if (
                last < first or last > 2 * g + 2 or (last - first + 1) % 2
            ):
                msg = (
                    f"Block loop {self.name} around points {first}..{last} must "
                    f"enclose an even number of the {2 * g + 2} branch points."
                )
                raise CurveDataError(msg)
            case _:
                pass

        if self.homology_class is not None and len(self.homology_class) != 2 * g:
            msg = (
                f"Homology class of {self.name} has length "
                f"{len(self.homology_class)}, expected {2 * g}."
            )
            raise CurveDataError(msg)
        return self

    @property
    def key(self) -> str:
        """A name that is unique within a factorization.

        Block loops keep their enclosed points in the key, since capping gives loops
        around different blocks the same name.
        """
        if isinstance(self.kind, BlockLoop):
            return f"{self.name}[{self.kind.first}-{self.kind.last}]"
        return self.name

    def downstairs(self, strands: int) -> BraidWord | None:
        """The braid this curve's twist covers, or None for the second sheet."""
        match self.kind:
            case ChainCurve(index=index):
                return from_generators(strands, [index])
            case DerivedBand(word=word):
                return word
            case BlockLoop(first=first, sheet=0) as loop:
                return block_full_twist(strands, loop.size, first)
            case BlockLoop():
                return None
            case BoundaryParallel():
                msg = f"Boundary-parallel curve {self.name} has no image downstairs."
                raise MissingDownstairsImageError(msg)

    def on(self, ambient: SurfaceSignature) -> "CurveSymbol":
        return self.model_copy(update={"ambient": ambient})


def chain_curve(ambient: SurfaceSignature, index: int) -> CurveSymbol:
    return CurveSymbol(
        name=f"c{index}",
        ambient=ambient,
        kind=ChainCurve(index=index),
        homology_class=chain_homology(ambient.genus, index),
        separation="nonseparating",
    )


def boundary_curve(ambient: SurfaceSignature, component: int, name: str) -> CurveSymbol:
    return CurveSymbol(
        name=name,
        ambient=ambient,
        kind=BoundaryParallel(component=component),
        homology_class=(0,) * (2 * ambient.genus),
    )


class Letter(BaseModel):
    model_config = ConfigDict(frozen=True)

    curve: CurveSymbol
    power: Literal[1, -1] = 1


class TwistFactorization(BaseModel):
    """A word in Dehn twists, declared equal to the identity or to boundary twists."""

    model_config = ConfigDict(frozen=True)

    ambient: SurfaceSignature
    letters: tuple[Letter, ...] = ()
    target: Target = "identity"
    target_curves: tuple[CurveSymbol, ...] = ()

    @model_validator(mode="after")
    def _check_ambient(self) -> Self:
        for curve in (letter.curve for letter in self.letters):
            if curve.ambient != self.ambient:
                msg = (
                    f"Curve {curve.name} lives on {curve.ambient}, not on the "
                    f"factorization's surface {self.ambient}."
                )
                raise AmbientMismatchError(msg)
        return self

    def __len__(self) -> int:
        return len(self.letters)

    @property
    def is_positive(self) -> bool:
        return all(letter.power == 1 for letter in self.letters)

    def curves(self) -> dict[str, CurveSymbol]:
        """Distinct curves by key, in order of first appearance."""
        found: dict[str, CurveSymbol] = {}
        for curve in (letter.curve for letter in self.letters):
            found.setdefault(curve.key, curve)
        for curve in self.target_curves:
            found.setdefault(curve.key, curve)
        return found

    @property
    def downstairs_strands(self) -> int:
        strands = self.ambient.branch_points
        for curve in self.curves().values():
            if isinstance(curve.kind, DerivedBand):
                strands = max(strands, curve.kind.word.strands)
        return strands


def word_over(
    ambient: SurfaceSignature,
    curves: list[CurveSymbol],
    target: Target = "identity",
    target_curves: tuple[CurveSymbol, ...] = (),
) -> TwistFactorization:
    return TwistFactorization(
        ambient=ambient,
        letters=tuple(Letter(curve=curve) for curve in curves),
        target=target,
        target_curves=target_curves,
    )


def annotate_all(
    f: TwistFactorization, separation: Separation = "nonseparating"
) -> TwistFactorization:
    """Mark every unannotated letter with the same separation type."""
    letters = tuple(
        letter
        if letter.curve.separation is not None
        else letter.model_copy(
            update={"curve": letter.curve.model_copy(update={"separation": separation})}
        )
        for letter in f.letters
    )
    return f.model_copy(update={"letters": letters})
