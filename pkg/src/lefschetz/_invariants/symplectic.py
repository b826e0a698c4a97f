"""The action of Dehn twists on first homology.

Homology of the genus g surface uses the basis (a_1..a_g, b_1..b_g) with intersection
form omega(x, y) = x^T J y, J = [[0, I], [-I, 0]]. A right-handed twist about gamma acts
as the transvection x -> x + omega(x, gamma) gamma.
"""

import numpy as np
from pydantic import BaseModel, ConfigDict

from lefschetz._factorization.curves import Letter, TwistFactorization
from lefschetz._invariants.errors import MissingHomologyError


def identity_matrix(size: int) -> np.ndarray:
    matrix = np.zeros((size, size), dtype=object)
    for k in range(size):
        matrix[k, k] = 1
    return matrix


def standard_form(genus: int) -> np.ndarray:
    j = np.zeros((2 * genus, 2 * genus), dtype=object)
    for k in range(genus):
        j[k, genus + k] = 1
        j[genus + k, k] = -1
    return j


def omega(x: np.ndarray, y: np.ndarray) -> int:
    genus = len(x) // 2
    return int(x @ standard_form(genus) @ y)


class SpElement(BaseModel):
    """An integer 2g x 2g matrix preserving omega."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    matrix: np.ndarray

    @property
    def genus(self) -> int:
        return self.matrix.shape[0] // 2

    def __matmul__(self, other: "SpElement") -> "SpElement":
        return SpElement(matrix=self.matrix @ other.matrix)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SpElement):
            return NotImplemented
        return bool(np.array_equal(self.matrix, other.matrix))

    def __hash__(self) -> int:
        return hash(tuple(int(entry) for entry in self.matrix.flat))

    def inverse(self) -> "SpElement":
        # M^-1 = J^-1 M^T J = -J M^T J
        j = standard_form(self.genus)
        return SpElement(matrix=-(j @ self.matrix.T @ j))

    def is_symplectic(self) -> bool:
        j = standard_form(self.genus)
        return bool(np.array_equal(self.matrix.T @ j @ self.matrix, j))

    def is_identity(self) -> bool:
        return bool(np.array_equal(self.matrix, identity_matrix(2 * self.genus)))

    def is_minus_identity(self) -> bool:
        return bool(np.array_equal(self.matrix, -identity_matrix(2 * self.genus)))


def sp_identity(genus: int) -> SpElement:
    return SpElement(matrix=identity_matrix(2 * genus))


def transvection(gamma: tuple[int, ...], power: int = 1) -> SpElement:
    """I - power * gamma gamma^T J, the twist about gamma or its inverse."""
    genus = len(gamma) // 2
    column = np.array(gamma, dtype=object).reshape(-1, 1)
    outer = column @ column.T @ standard_form(genus)
    return SpElement(matrix=identity_matrix(2 * genus) - power * outer)


def letter_image(letter: Letter) -> SpElement:
    curve = letter.curve
    if curve.homology_class is None:
        msg = (
            f"Curve {curve.name} has no homology class, so its twist has no "
            "symplectic image."
        )
        raise MissingHomologyError(msg)
    return transvection(curve.homology_class, letter.power)


def letter_images(f: TwistFactorization) -> list[SpElement]:
    return [letter_image(letter) for letter in f.letters]


def sp_image(f: TwistFactorization) -> SpElement:
    """T_last ... T_first, since the first twist acts first on column vectors."""
    result = sp_identity(f.ambient.genus)
    for image in letter_images(f):
        result = image @ result
    return result
