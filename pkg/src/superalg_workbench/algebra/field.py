"""Prime-Field Linear Algebra

Description:
    Exact dense linear algebra over the prime field F_p. Matrices are numpy int64 arrays whose
    entries are kept reduced to [0, p). Row reduction pivots deterministically: the leftmost
    pivot column first, and inside a column the smallest row index.

    The products formed here stay far below the int64 range (p <= 13, dimensions of a few
    thousand), so a reduction after every matrix product suffices.

Authors:
    - superalg-workbench contributors

Copyright (c) 2026 superalg-workbench contributors

SPDX-License-Identifier: MIT
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

logger = logging.getLogger(__name__)


class PrimeFieldError(Exception):
    """Raised for invalid characteristics or division by zero."""


class SingularMatrixError(PrimeFieldError):
    """Raised when an inverse of a singular matrix is requested."""


def is_prime(number: int) -> bool:
    """Trial division, sufficient for the small characteristics used here."""
    if number < 2:
        return False
    divisor = 2
    while divisor * divisor <= number:
        if number % divisor == 0:
            return False
        divisor += 1
    return True


@dataclass(frozen=True)
class SolveResult:
    """Affine solution set of A·X = B.

    Args:
        consistent: False if the system has no solution.
        particular: one solution X (cols(A) x cols(B)), None if inconsistent.
        kernel: basis of the kernel of A as columns (cols(A) x k).
        certificate: for an inconsistent system a row vector y with y·A = 0 and y·B != 0.
    """

    consistent: bool
    particular: Optional[np.ndarray]
    kernel: np.ndarray
    certificate: Optional[np.ndarray] = None


@dataclass(frozen=True)
class PrimeField:
    """The prime field F_p for an odd prime p."""

    p: int

    def __post_init__(self):
        if not isinstance(self.p, (int, np.integer)) or not is_prime(int(self.p)):
            raise PrimeFieldError(f"p must be prime, got {self.p}")
        if int(self.p) == 2:
            raise PrimeFieldError("p must be an odd prime")

    # ---- scalars -----------------------------------------------------------------------------

    def scalar(self, value: int) -> int:
        return int(value) % self.p

    def inv(self, value: int) -> int:
        value = int(value) % self.p
        if value == 0:
            raise PrimeFieldError("Division by zero in F_p")
        return pow(value, self.p - 2, self.p)

    def half(self, value: int = 1) -> int:
        """value/2 in F_p."""
        return (int(value) * self.inv(2)) % self.p

    def sign(self, exponent: int) -> int:
        return 1 if exponent % 2 == 0 else self.p - 1

    def power(self, value: int, exponent: int) -> int:
        value = int(value) % self.p
        if exponent < 0:
            return pow(self.inv(value), -exponent, self.p)
        return pow(value, exponent, self.p)

    def elements(self) -> range:
        return range(self.p)

    # ---- matrices ----------------------------------------------------------------------------

    def reduce(self, array) -> np.ndarray:
        return np.asarray(array, dtype=np.int64) % self.p

    def zeros(self, rows: int, cols: int) -> np.ndarray:
        return np.zeros((rows, cols), dtype=np.int64)

    def identity(self, size: int) -> np.ndarray:
        return np.eye(size, dtype=np.int64)

    def matmul(self, left: np.ndarray, right: np.ndarray) -> np.ndarray:
        return (left @ right) % self.p

    def chain(self, matrices: Sequence[np.ndarray]) -> np.ndarray:
        """Product of the given matrices, left to right."""
        result = matrices[0]
        for matrix in matrices[1:]:
            result = (result @ matrix) % self.p
        return result

    def matpow(self, matrix: np.ndarray, exponent: int) -> np.ndarray:
        result = self.identity(matrix.shape[0])
        base = self.reduce(matrix)
        while exponent > 0:
            if exponent & 1:
                result = (result @ base) % self.p
            base = (base @ base) % self.p
            exponent >>= 1
        return result

    def is_zero(self, matrix: np.ndarray) -> bool:
        return not np.any(self.reduce(matrix))

    def rref(self, matrix: np.ndarray) -> tuple[np.ndarray, list[int]]:
        """Reduced row echelon form and pivot columns."""
        reduced = self.reduce(matrix).copy()
        if reduced.ndim != 2:
            raise PrimeFieldError(f"Expected a matrix, got shape {reduced.shape}")
        rows, cols = reduced.shape
        pivots: list[int] = []
        row = 0
        for col in range(cols):
            if row == rows:
                break
            candidates = np.nonzero(reduced[row:, col])[0]
            if candidates.size == 0:
                continue
            pivot_row = row + int(candidates[0])
            if pivot_row != row:
                reduced[[row, pivot_row]] = reduced[[pivot_row, row]]
            reduced[row] = (reduced[row] * self.inv(reduced[row, col])) % self.p
            column = reduced[:, col].copy()
            column[row] = 0
            targets = np.nonzero(column)[0]
            if targets.size:
                reduced[targets] = (
                    reduced[targets] - np.outer(column[targets], reduced[row])
                ) % self.p
            pivots.append(col)
            row += 1
        return reduced, pivots

    def rank(self, matrix: np.ndarray) -> int:
        matrix = np.asarray(matrix)
        if matrix.size == 0:
            return 0
        return len(self.rref(matrix)[1])

    def nullspace(self, matrix: np.ndarray) -> np.ndarray:
        """Basis of {v : A v = 0} as columns."""
        matrix = np.asarray(matrix)
        cols = matrix.shape[1]
        if matrix.shape[0] == 0:
            return self.identity(cols)
        reduced, pivots = self.rref(matrix)
        free = [col for col in range(cols) if col not in set(pivots)]
        basis = self.zeros(cols, len(free))
        for index, free_col in enumerate(free):
            basis[free_col, index] = 1
            for row, pivot_col in enumerate(pivots):
                basis[pivot_col, index] = (-reduced[row, free_col]) % self.p
        return basis

    def left_nullspace(self, matrix: np.ndarray) -> np.ndarray:
        """Basis of {y : y A = 0} as rows."""
        return self.nullspace(np.asarray(matrix).T).T

    def column_basis(self, matrix: np.ndarray) -> np.ndarray:
        """Independent columns of A spanning its column space (a subset of the columns)."""
        matrix = self.reduce(matrix)
        if matrix.size == 0:
            return self.zeros(matrix.shape[0], 0)
        _, pivots = self.rref(matrix)
        return matrix[:, pivots]

    def row_space(self, matrix: np.ndarray) -> np.ndarray:
        """Non-zero rows of the RREF of A."""
        matrix = np.asarray(matrix)
        if matrix.size == 0:
            return self.zeros(0, matrix.shape[1])
        reduced, pivots = self.rref(matrix)
        return reduced[: len(pivots)]

    def restrict_kernel(self, kernel: np.ndarray, constraint: np.ndarray) -> np.ndarray:
        """Restricts a kernel basis K (columns) to the vectors additionally killed by C."""
        if kernel.shape[1] == 0:
            return kernel
        return (kernel @ self.nullspace((constraint @ kernel) % self.p)) % self.p

    def solve(self, matrix: np.ndarray, rhs: np.ndarray) -> SolveResult:
        """Solves A·X = B, returns particular solution and kernel or an inconsistency witness."""
        matrix = self.reduce(matrix)
        rhs = self.reduce(rhs)
        if rhs.ndim == 1:
            rhs = rhs.reshape(-1, 1)
        if matrix.shape[0] != rhs.shape[0]:
            raise PrimeFieldError(
                f"Row mismatch in solve: {matrix.shape[0]} rows vs {rhs.shape[0]} rows"
            )
        cols = matrix.shape[1]
        kernel = self.nullspace(matrix)
        reduced, pivots = self.rref(np.hstack([matrix, rhs]))
        if any(pivot >= cols for pivot in pivots):
            certificate = None
            for row_vector in self.left_nullspace(matrix):
                if np.any((row_vector @ rhs) % self.p):
                    certificate = row_vector
                    break
            logger.debug("Inconsistent system of shape %s", matrix.shape)
            return SolveResult(False, None, kernel, certificate)
        particular = self.zeros(cols, rhs.shape[1])
        for row, pivot_col in enumerate(pivots):
            particular[pivot_col] = reduced[row, cols:]
        return SolveResult(True, particular, kernel)

    def inverse(self, matrix: np.ndarray) -> np.ndarray:
        matrix = self.reduce(matrix)
        size = matrix.shape[0]
        if matrix.shape != (size, size):
            raise SingularMatrixError(f"Non-square matrix of shape {matrix.shape}")
        reduced, pivots = self.rref(np.hstack([matrix, self.identity(size)]))
        if pivots[:size] != list(range(size)):
            raise SingularMatrixError("Matrix is singular over F_%d" % self.p)
        return reduced[:, size:]

    def is_invertible(self, matrix: np.ndarray) -> bool:
        return matrix.shape[0] == matrix.shape[1] and self.rank(matrix) == matrix.shape[0]

    def coordinates(self, basis: np.ndarray, vectors: np.ndarray) -> np.ndarray:
        """Coordinates of the columns of `vectors` in the column basis `basis`.

        The columns of `basis` must be independent and span the columns of `vectors`.
        """
        if basis.shape[1] == 0:
            return self.zeros(0, vectors.shape[1])
        selector = self.independent_rows(basis)
        return (self.inverse(basis[selector]) @ vectors[selector]) % self.p

    def independent_rows(self, basis: np.ndarray) -> list[int]:
        """Row indices on which the column basis restricts to an invertible square matrix."""
        return self.rref(basis.T)[1]

    def random_matrix(self, rng: np.random.Generator, rows: int, cols: int) -> np.ndarray:
        return rng.integers(0, self.p, size=(rows, cols), dtype=np.int64)


class EchelonBasis:
    """Incrementally grown subspace of F_p^n, kept in reduced row echelon form."""

    def __init__(self, field: PrimeField, size: int):
        self.field = field
        self.size = size
        self._rows = field.zeros(0, size)
        self._pivots: list[int] = []

    @property
    def rank(self) -> int:
        return len(self._pivots)

    def reduce(self, vector: np.ndarray) -> np.ndarray:
        vector = self.field.reduce(vector)
        if not self._pivots:
            return vector
        return (vector - vector[self._pivots] @ self._rows) % self.field.p

    def contains(self, vector: np.ndarray) -> bool:
        return not np.any(self.reduce(vector))

    def add(self, vector: np.ndarray) -> bool:
        """Adds the vector, returns False if it already lies in the span."""
        residue = self.reduce(vector)
        nonzero = np.nonzero(residue)[0]
        if nonzero.size == 0:
            return False
        pivot = int(nonzero[0])
        residue = (residue * self.field.inv(residue[pivot])) % self.field.p
        if self._pivots:
            column = self._rows[:, pivot].copy()
            self._rows = (self._rows - np.outer(column, residue)) % self.field.p
        self._rows = np.vstack([self._rows, residue])
        self._pivots.append(pivot)
        return True
