"""Signatures of Lefschetz fibrations from the Meyer cocycle.

For symplectic A and B, the cocycle tau(A, B) is the signature of the symmetric form

    ((x1, y1), (x2, y2)) -> omega(x1 + y1, (I - B) y2)

on V = {(x, y) : (A^-1 - I) x + (B - I) y = 0}. A relator word t_1 ... t_N over curves
with homology classes gives a fibration over the sphere whose signature is

    sigma = sum of local terms - s * sum_{j < N} tau(P_j, T_{j+1}),

with P_j the image of the first j twists and s a global sign fixed once by calibration.
"""

from collections.abc import Iterable

import numpy as np

from lefschetz._config import lefschetz_config
from lefschetz._conventions import MeyerCalibration, read_conventions
from lefschetz._factorization.curves import TwistFactorization
from lefschetz._factorization.relations import hyperelliptic, odd_chain
from lefschetz._invariants.errors import (
    CalibrationError,
    MissingAnnotationError,
    NonRelatorError,
)
from lefschetz._invariants.inertia import kernel, signature
from lefschetz._invariants.symplectic import (
    SpElement,
    identity_matrix,
    letter_images,
    sp_image,
    standard_form,
)


def meyer_cocycle(a: SpElement, b: SpElement) -> int:
    genus = a.genus
    size = 2 * genus
    one = identity_matrix(size)
    j = standard_form(genus)

    constraint = np.hstack((a.inverse().matrix - one, b.matrix - one))
    basis = kernel(constraint)
    if basis.shape[1] == 0:
        return 0

    block = j @ (one - b.matrix)
    zero = np.zeros((size, size), dtype=object)
    gram = np.vstack((np.hstack((zero, block)), np.hstack((zero, block))))
    form = basis.T @ gram @ basis
    return signature((form + form.T) / 2)


def cocycle_sum(f: TwistFactorization) -> int:
    """sum_{j < N} tau(P_j, T_{j+1}) over the prefixes of the word."""
    images = letter_images(f)
    if not images:
        return 0

    total = 0
    prefix = images[0]
    for image in images[1:]:
        total += meyer_cocycle(prefix, image)
        prefix = image @ prefix
    return total


def _check_relator(f: TwistFactorization) -> None:
    if not sp_image(f).is_identity():
        msg = (
            "The word does not act trivially on homology, so it is not the monodromy "
            "of a fibration over the sphere."
        )
        raise NonRelatorError(msg)


def _separating_count(f: TwistFactorization) -> int:
    count = 0
    for letter in f.letters:
        separation = letter.curve.separation
        if separation is None:
            msg = (
                f"Curve {letter.curve.name} is not annotated as separating or "
                "nonseparating."
            )
            raise MissingAnnotationError(msg)
        if separation != "nonseparating":
            count += letter.power
    return count


def sigma_meyer(
    f: TwistFactorization, calibration: MeyerCalibration | None = None
) -> int:
    if calibration is None:
        calibration = read_conventions(lefschetz_config.conventions_path).meyer

    local = calibration.separating_local * _separating_count(f)
    _check_relator(f)
    return local - calibration.global_sign * cocycle_sum(f)


ANCHOR_SIGNATURES: dict[str, int] = {"H_1": -8, "Z_1": -8, "Z_2": -18}


def _anchor_words() -> dict[str, TwistFactorization]:
    return {"H_1": hyperelliptic(1), "Z_1": odd_chain(1), "Z_2": odd_chain(2)}


def calibrate(
    global_signs: Iterable[int] = (-1, 1),
    separating_locals: Iterable[int] = (-1, 0, 1),
) -> MeyerCalibration:
    """Pick the sign conventions that reproduce the anchor signatures.

    Every candidate is tried and recorded in the transcript; the first accepted one is
    returned. Anchors without separating letters cannot tell the local terms apart,
    which the transcript notes.
    """
    words = _anchor_words()
    raw = {name: cocycle_sum(word) for name, word in words.items()}
    separating = {name: _separating_count(word) for name, word in words.items()}

    chosen: MeyerCalibration | None = None
    transcript: list[str] = []
    for global_sign in global_signs:
        for separating_local in separating_locals:
            values = {
                name: separating_local * separating[name] - global_sign * raw[name]
                for name in words
            }
            accepted = values == ANCHOR_SIGNATURES
            line = f"global_sign={global_sign} separating_local={separating_local}: "
            line += " ".join(f"{name}={value}" for name, value in values.items())
            line += " accepted" if accepted else " rejected"
            if accepted and chosen is not None:
                line += " (anchors carry no separating letter)"
            transcript.append(line)
            if accepted and chosen is None:
                chosen = MeyerCalibration.model_validate(
                    {"global_sign": global_sign, "separating_local": separating_local}
                )

    if chosen is None:
        msg = "No sign convention reproduces the anchor signatures: " + "; ".join(
            transcript
        )
        raise CalibrationError(msg)
    return chosen.model_copy(update={"transcript": transcript})
