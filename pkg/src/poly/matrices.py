"""
Matrices of polynomials: Jacobians, determinants and minors
"""

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from sympy.polys.matrices import DomainMatrix
from sympy.polys.polyerrors import DomainError, ExactQuotientFailed
from sympy.polys.rings import PolyElement, PolyRing

from .arith import partial_derivative


@dataclass(frozen=True, eq=False)
class PolyMatrix:
    """
    A t×s matrix over a polynomial ring, stored row-major.

    Read as a map R^s → R^t: column j is the image of the j-th basis vector.
    """

    ring: PolyRing
    rows: tuple[tuple[PolyElement, ...], ...]
    ncols: int

    @classmethod
    def from_rows(cls, ring: PolyRing, rows: Sequence[Sequence[PolyElement]], ncols: int | None = None) -> "PolyMatrix":
        rows = tuple(tuple(row) for row in rows)
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        if any(len(row) != ncols for row in rows):
            raise ValueError("ragged polynomial matrix")
        return cls(ring, rows, ncols)

    @classmethod
    def from_columns(cls, ring: PolyRing, columns: Sequence[Sequence[PolyElement]], nrows: int) -> "PolyMatrix":
        rows = tuple(tuple(col[i] for col in columns) for i in range(nrows))
        return cls(ring, rows, len(columns))

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def entry(self, i: int, j: int) -> PolyElement:
        return self.rows[i][j]

    def column(self, j: int) -> tuple[PolyElement, ...]:
        return tuple(row[j] for row in self.rows)

    @property
    def columns(self) -> list[tuple[PolyElement, ...]]:
        return [self.column(j) for j in range(self.ncols)]

    def transpose(self) -> "PolyMatrix":
        return PolyMatrix.from_columns(self.ring, self.rows, self.ncols)

    def apply(self, vector: Sequence[PolyElement]) -> tuple[PolyElement, ...]:
        """Matrix times column vector"""
        out = []
        for row in self.rows:
            acc = self.ring.zero
            for a, v in zip(row, vector):
                if a and v:
                    acc = acc + a * v
            out.append(acc)
        return tuple(out)

    def __matmul__(self, other: "PolyMatrix") -> "PolyMatrix":
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch in matrix product")
        columns = [self.apply(other.column(j)) for j in range(other.ncols)]
        return PolyMatrix.from_columns(self.ring, columns, self.nrows)

    def is_zero(self) -> bool:
        return all(not a for row in self.rows for a in row)

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "PolyMatrix":
        return PolyMatrix.from_rows(self.ring, [[self.rows[i][j] for j in cols] for i in rows], len(cols))


def jacobian_matrix(relations: Sequence[PolyElement], ring: PolyRing) -> PolyMatrix:
    """
    Entry (i, j) = ∂f_i/∂X_j; one row per relation, one column per variable.
    """
    rows = [[partial_derivative(f, j) for j in range(ring.ngens)] for f in relations]
    return PolyMatrix.from_rows(ring, rows, ring.ngens)


def determinant_cofactor(matrix: PolyMatrix) -> PolyElement:
    """Laplace expansion along the first row, skipping zero entries"""
    n = matrix.nrows
    if n == 0:
        return matrix.ring.one
    if n == 1:
        return matrix.rows[0][0]
    total = matrix.ring.zero
    for j, a in enumerate(matrix.rows[0]):
        if not a:
            continue
        minor = matrix.submatrix(range(1, n), [c for c in range(n) if c != j])
        term = a * determinant_cofactor(minor)
        total = total - term if j % 2 else total + term
    return total


def determinant_bareiss(matrix: PolyMatrix) -> PolyElement:
    """Fraction-free elimination through sympy's DomainMatrix over K[X]"""
    n = matrix.nrows
    if n == 0:
        return matrix.ring.one
    domain = matrix.ring.to_domain()
    dm = DomainMatrix([list(row) for row in matrix.rows], (n, n), domain)
    return matrix.ring(dm.det())


def determinant(matrix: PolyMatrix, method: str = "bareiss") -> PolyElement:
    """
    Exact determinant of a square polynomial matrix.

    Args:
        matrix: Square PolyMatrix
        method: "bareiss" (falls back to cofactor expansion) or "cofactor"
    """
    if matrix.nrows != matrix.ncols:
        raise ValueError("determinant of a non-square matrix")
    if method == "cofactor":
        return determinant_cofactor(matrix)
    try:
        return determinant_bareiss(matrix)
    except (DomainError, ExactQuotientFailed, NotImplementedError):
        return determinant_cofactor(matrix)


def minors(matrix: PolyMatrix, h: int, method: str = "bareiss") -> list[PolyElement]:
    """
    All h×h minors, rows and columns in lexicographic order of index sets.

    Zeros and duplicates are kept.

    Raises:
        ValueError: h outside 1..min(rows, cols)
    """
    if h < 1 or h > min(matrix.nrows, matrix.ncols):
        raise ValueError(f"minor size {h} out of range for a {matrix.nrows}x{matrix.ncols} matrix")
    out = []
    for rows in combinations(range(matrix.nrows), h):
        for cols in combinations(range(matrix.ncols), h):
            out.append(determinant(matrix.submatrix(rows, cols), method))
    return out
