"""Exact dense matrices over a field (Q or Q(X)).

Entries are duck-typed field elements; everything a matrix needs from
them is +, -, *, / and comparison with 0.  Elimination is ordinary
division-based Gaussian elimination (the fields here are cheap to divide
in), and characteristic polynomials come from the Faddeev-LeVerrier
recursion, which stays inside the base field.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .poly import Poly


class SingularMatrixError(ZeroDivisionError):
    pass


class Matrix:
    """Immutable row-major matrix with exact field entries."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries: Iterable[Iterable]):
        rows = tuple(tuple(row) for row in entries)
        if not rows or not rows[0]:
            raise ValueError("matrix needs at least one row and one column")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise ValueError("ragged matrix rows")
        object.__setattr__(self, "rows", len(rows))
        object.__setattr__(self, "cols", width)
        object.__setattr__(self, "entries", rows)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    @classmethod
    def identity(cls, n: int, one=Fraction(1)) -> "Matrix":
        zero = one * 0
        return cls([[one if i == j else zero for j in range(n)] for i in range(n)])

    @classmethod
    def zero(cls, rows: int, cols: int, zero=Fraction(0)) -> "Matrix":
        return cls([[zero] * cols for _ in range(rows)])

    def __getitem__(self, ij: tuple[int, int]):
        i, j = ij
        return self.entries[i][j]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Matrix)
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash(("Matrix", self.entries))

    def __repr__(self):
        body = "; ".join(", ".join(str(e) for e in row) for row in self.entries)
        return f"Matrix[{body}]"

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def one(self):
        """A multiplicative unit of the entry field, derived from an entry."""
        for row in self.entries:
            for e in row:
                if e != 0:
                    return e / e
        return Fraction(1)

    def zero_entry(self):
        return self.entries[0][0] * 0

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other: "Matrix") -> "Matrix":
        self._same_shape(other)
        return Matrix(
            [a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.entries, other.entries)
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._same_shape(other)
        return Matrix(
            [a - b for a, b in zip(ra, rb)] for ra, rb in zip(self.entries, other.entries)
        )

    def __neg__(self) -> "Matrix":
        return Matrix([-a for a in row] for row in self.entries)

    def scale(self, c) -> "Matrix":
        return Matrix([c * a for a in row] for row in self.entries)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        bt = other.transpose().entries
        out = []
        for row in self.entries:
            out_row = []
            for col in bt:
                acc = row[0] * col[0]
                for a, b in zip(row[1:], col[1:]):
                    acc = acc + a * b
                out_row.append(acc)
            out.append(out_row)
        return Matrix(out)

    def __mul__(self, other):
        if isinstance(other, Matrix):
            return self.__matmul__(other)
        return self.scale(other)

    __rmul__ = scale

    def transpose(self) -> "Matrix":
        return Matrix(zip(*self.entries))

    def trace(self):
        self._require_square()
        acc = self.entries[0][0]
        for i in range(1, self.rows):
            acc = acc + self.entries[i][i]
        return acc

    def column(self, j: int) -> tuple:
        return tuple(row[j] for row in self.entries)

    def hstack(self, other: "Matrix") -> "Matrix":
        if self.rows != other.rows:
            raise ValueError("hstack needs equal row counts")
        return Matrix(ra + rb for ra, rb in zip(self.entries, other.entries))

    def submatrix(self, row_indices: Sequence[int], col_indices: Sequence[int]) -> "Matrix":
        return Matrix(
            [self.entries[i][j] for j in col_indices] for i in row_indices
        )

    def max_degree(self) -> int:
        """Largest RatFunc degree among entries; 0 for plain rationals."""
        deg = 0
        for row in self.entries:
            for e in row:
                d = getattr(e, "degree", 0)
                if isinstance(d, int) and d > deg:
                    deg = d
        return deg

    # -- elimination ------------------------------------------------------

    def rref(self) -> tuple["Matrix", list[int]]:
        """Reduced row echelon form and the pivot column indices."""
        m = [list(row) for row in self.entries]
        pivots: list[int] = []
        r = 0
        for c in range(self.cols):
            pivot_row = next((i for i in range(r, self.rows) if m[i][c] != 0), None)
            if pivot_row is None:
                continue
            m[r], m[pivot_row] = m[pivot_row], m[r]
            inv = self.one() / m[r][c]
            m[r] = [inv * e for e in m[r]]
            for i in range(self.rows):
                if i != r and m[i][c] != 0:
                    f = m[i][c]
                    m[i] = [a - f * b for a, b in zip(m[i], m[r])]
            pivots.append(c)
            r += 1
            if r == self.rows:
                break
        return Matrix(m), pivots

    def rank(self) -> int:
        return len(self.rref()[1])

    def det(self):
        self._require_square()
        m = [list(row) for row in self.entries]
        n = self.rows
        det = self.one()
        for c in range(n):
            pivot_row = next((i for i in range(c, n) if m[i][c] != 0), None)
            if pivot_row is None:
                return self.zero_entry()
            if pivot_row != c:
                m[c], m[pivot_row] = m[pivot_row], m[c]
                det = -det
            det = det * m[c][c]
            inv = self.one() / m[c][c]
            for i in range(c + 1, n):
                if m[i][c] != 0:
                    f = m[i][c] * inv
                    m[i] = [a - f * b for a, b in zip(m[i], m[c])]
        return det

    def inverse(self) -> "Matrix":
        self._require_square()
        n = self.rows
        aug = self.hstack(Matrix.identity(n, self.one()))
        reduced, pivots = aug.rref()
        if pivots[:n] != list(range(n)):
            raise SingularMatrixError("matrix is not invertible")
        return Matrix(row[n:] for row in reduced.entries)

    def kernel_basis(self) -> list[tuple]:
        """Basis vectors (as tuples) of the right null space."""
        reduced, pivots = self.rref()
        one = self.one()
        zero = self.zero_entry()
        free = [c for c in range(self.cols) if c not in pivots]
        basis = []
        for fc in free:
            v = [zero] * self.cols
            v[fc] = one
            for r, pc in enumerate(pivots):
                v[pc] = -reduced.entries[r][fc]
            basis.append(tuple(v))
        return basis

    def solve_columns(self, rhs: "Matrix") -> "Matrix":
        """Solve self @ Y = rhs for square invertible self."""
        return self.inverse() @ rhs

    def char_poly(self) -> Poly:
        """Monic characteristic polynomial det(T*I - A), lowest degree first.

        Faddeev-LeVerrier recursion: M_1 = I, c_{n-1} = -tr(A);
        M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k)/k.
        """
        self._require_square()
        n = self.rows
        one = self.one()
        coeffs = [one * 0] * (n + 1)
        coeffs[n] = one
        m = Matrix.identity(n, one)
        for k in range(1, n + 1):
            am = self @ m
            c = am.trace() * Fraction(-1, k)
            coeffs[n - k] = c
            if k < n:
                m = am + Matrix.identity(n, one).scale(c)
        return Poly(coeffs)

    # -- helpers ----------------------------------------------------------

    def _same_shape(self, other: "Matrix"):
        if self.rows != other.rows or self.cols != other.cols:
            raise ValueError("shape mismatch")

    def _require_square(self):
        if not self.is_square:
            raise ValueError("square matrix required")

    def map(self, fn: Callable) -> "Matrix":
        return Matrix([fn(e) for e in row] for row in self.entries)
