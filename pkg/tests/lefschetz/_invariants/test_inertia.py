from fractions import Fraction

import numpy as np

from lefschetz._invariants.inertia import inertia, kernel, signature, to_fractions


class TestToFractions:
    def test_entries(self):
        converted = to_fractions(np.array([[1, 2], [3, 4]]))
        assert converted.dtype == object
        assert all(isinstance(entry, Fraction) for entry in converted.flat)


class TestKernel:
    def test_line(self):
        # Act
        basis = kernel(np.array([[1, 1]], dtype=object))

        # Assert
        assert basis.shape == (2, 1)
        assert list(basis[:, 0]) == [Fraction(-1), Fraction(1)]

    def test_full_rank(self):
        assert kernel(np.array([[1, 0], [0, 2]], dtype=object)).shape == (2, 0)

    def test_vectors_are_in_the_kernel(self):
        matrix = np.array([[1, 2, 3, 4], [2, 4, 7, 9]], dtype=object)
        basis = kernel(matrix)
        assert basis.shape == (4, 2)
        assert all(entry == 0 for entry in (matrix @ basis).flat)


class TestInertia:
    def test_diagonal(self):
        assert inertia(np.diag([3, -1, 0])) == (1, 1, 1)

    def test_zero_diagonal(self):
        # the hyperbolic plane
        assert inertia(np.array([[0, 1], [1, 0]])) == (1, 1, 0)

    def test_rational_entries(self):
        half = Fraction(1, 2)
        form = np.array([[half, half], [half, half]], dtype=object)
        assert inertia(form) == (1, 0, 1)

    def test_signature(self):
        form = np.array([[2, 1, 0], [1, 2, 0], [0, 0, -5]])
        assert signature(form) == 1

    def test_zero_matrix(self):
        assert inertia(np.zeros((3, 3), dtype=object)) == (0, 0, 3)
