"""Exact linear algebra over the rationals on numpy object arrays."""

from fractions import Fraction

import numpy as np


def to_fractions(matrix: np.ndarray) -> np.ndarray:
    return np.array(
        [[Fraction(entry) for entry in row] for row in matrix], dtype=object
    ).reshape(matrix.shape)


def kernel(matrix: np.ndarray) -> np.ndarray:
    """A basis of the null space, as the columns of a Fraction matrix."""
    reduced = to_fractions(matrix)
    rows, cols = reduced.shape

    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        pivot = next((i for i in range(r, rows) if reduced[i, c] != 0), None)
        if pivot is None:
            continue
        if pivot != r:
            reduced[[r, pivot]] = reduced[[pivot, r]]
        reduced[r, :] /= reduced[r, c]
        for i in range(rows):
            if i != r and reduced[i, c] != 0:
                reduced[i, :] -= reduced[i, c] * reduced[r, :]
        pivots.append(c)
        r += 1

    free = [c for c in range(cols) if c not in pivots]
    basis = np.zeros((cols, len(free)), dtype=object)
    basis[:, :] = Fraction(0)
    for k, f in enumerate(free):
        basis[f, k] = Fraction(1)
        for i, c in enumerate(pivots):
            basis[c, k] = -reduced[i, f]
    return basis


def inertia(symmetric: np.ndarray) -> tuple[int, int, int]:
    """(positive, negative, zero) counts of a rational symmetric matrix.

    Symmetric row-and-column elimination is a congruence, so by Sylvester's law the
    signs of the pivots give the inertia. A zero diagonal with a nonzero off-diagonal
    entry is repaired by adding one basis vector to the other first.
    """
    a = to_fractions(symmetric)
    n = a.shape[0]
    active = list(range(n))
    positive = negative = 0

    while active:
        pivot = next((i for i in active if a[i, i] != 0), None)
        if pivot is None:
            pair = next(
                ((i, j) for i in active for j in active if i != j and a[i, j] != 0),
                None,
            )
            if pair is None:
                break
            i, j = pair
            a[i, :] += a[j, :]
            a[:, i] += a[:, j]
            continue

        d = a[pivot, pivot]
        if d > 0:
            positive += 1
        else:
            negative += 1
        active.remove(pivot)
        for j in active:
            factor = a[j, pivot] / d
            if factor:
                a[j, :] -= factor * a[pivot, :]
                a[:, j] -= factor * a[:, pivot]

    return positive, negative, n - positive - negative


def signature(symmetric: np.ndarray) -> int:
    positive, negative, _ = inertia(symmetric)
    return positive - negative
