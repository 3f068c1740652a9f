"""Exact integer matrices and Smith normal form.

Matrices are immutable and carry arbitrary-precision entries; there is no
silent overflow anywhere in the pipeline.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import backend
from .errors import ShapeMismatch


class IntMatrix:
    """An immutable rows x cols matrix of Python ints."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, rows: int, cols: int, data):
        data = tuple(tuple(int(x) for x in row) for row in data)
        if len(data) != rows or any(len(row) != cols for row in data):
            raise ShapeMismatch(f"expected {rows}x{cols} data")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "data", data)

    def __setattr__(self, name, value):
        raise AttributeError("IntMatrix is immutable")

    @classmethod
    def from_rows(cls, data) -> "IntMatrix":
        data = [list(row) for row in data]
        rows = len(data)
        cols = len(data[0]) if data else 0
        return cls(rows, cols, data)

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(n, n, [[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zero(cls, rows: int, cols: int) -> "IntMatrix":
        return cls(rows, cols, [[0] * cols for _ in range(rows)])

    @classmethod
    def diagonal(cls, rows: int, cols: int, diag) -> "IntMatrix":
        m = [[0] * cols for _ in range(rows)]
        for i, d in enumerate(diag):
            m[i][i] = d
        return cls(rows, cols, m)

    @classmethod
    def column(cls, entries) -> "IntMatrix":
        return cls(len(entries), 1, [[x] for x in entries])

    def __eq__(self, other):
        return (
            isinstance(other, IntMatrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and self.data == other.data
        )

    def __hash__(self):
        return hash((self.rows, self.cols, self.data))

    def __repr__(self):
        return f"IntMatrix({self.rows}x{self.cols}, {list(map(list, self.data))})"

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ShapeMismatch(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        ot = list(zip(*other.data)) if other.data else [()] * other.cols
        out = []
        for row in self.data:
            out.append(
                [sum(a * b for a, b in zip(row, col)) for col in ot]
                if ot and self.cols
                else [0] * other.cols
            )
        return IntMatrix(self.rows, other.cols, out)

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        if self.rows != other.rows or self.cols != other.cols:
            raise ShapeMismatch("matrix addition shape mismatch")
        return IntMatrix(
            self.rows,
            self.cols,
            [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.data, other.data)],
        )

    def __sub__(self, other: "IntMatrix") -> "IntMatrix":
        if self.rows != other.rows or self.cols != other.cols:
            raise ShapeMismatch("matrix subtraction shape mismatch")
        return IntMatrix(
            self.rows,
            self.cols,
            [[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(self.data, other.data)],
        )

    def scale(self, c: int) -> "IntMatrix":
        return IntMatrix(self.rows, self.cols, [[c * x for x in row] for row in self.data])

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.data for x in row)

    def column_vec(self, j: int):
        return tuple(row[j] for row in self.data)

    def hstack(self, other: "IntMatrix") -> "IntMatrix":
        if self.rows != other.rows:
            raise ShapeMismatch("hstack row mismatch")
        return IntMatrix(
            self.rows,
            self.cols + other.cols,
            [list(r1) + list(r2) for r1, r2 in zip(self.data, other.data)],
        )

    def take_rows(self, indices) -> "IntMatrix":
        idx = list(indices)
        return IntMatrix(len(idx), self.cols, [self.data[i] for i in idx])

    def take_cols(self, indices) -> "IntMatrix":
        idx = list(indices)
        return IntMatrix(self.rows, len(idx), [[row[j] for j in idx] for row in self.data])

    def apply(self, vec):
        """Matrix-vector product as a tuple."""
        if len(vec) != self.cols:
            raise ShapeMismatch("vector length mismatch")
        return tuple(sum(a * b for a, b in zip(row, vec)) for row in self.data)


@dataclass(frozen=True)
class SnfResult:
    """U @ M @ V == D with U, V unimodular and D a Smith form."""

    U: IntMatrix
    D: IntMatrix
    V: IntMatrix

    @property
    def diagonal(self):
        n = min(self.D.rows, self.D.cols)
        return tuple(self.D.data[i][i] for i in range(n))

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diagonal if d != 0)


def snf(m: IntMatrix) -> SnfResult:
    """Smith normal form with recorded unimodular transforms.

    Deterministic: the pivot rule (smallest nonzero |entry|, row-major ties)
    is fixed, so U and V are reproducible run to run and across backends.
    """
    u, d, v = backend.snf_triple(m.data, m.rows, m.cols)
    return SnfResult(
        IntMatrix(m.rows, m.rows, u),
        IntMatrix(m.rows, m.cols, d),
        IntMatrix(m.cols, m.cols, v),
    )


def unimodular_inverse(m: IntMatrix) -> IntMatrix:
    """Exact inverse of a unimodular integer matrix.

    If U' M V' == I then M^{-1} == V' U'.
    """
    if m.rows != m.cols:
        raise ShapeMismatch("inverse of non-square matrix")
    res = snf(m)
    if res.diagonal != (1,) * m.rows:
        raise ValueError("matrix is not unimodular")
    return res.V @ res.U


def kernel_basis(m: IntMatrix) -> IntMatrix:
    """Columns forming a basis of the integer null space of m."""
    res = snf(m)
    rank = res.rank
    return res.V.take_cols(range(rank, m.cols))


def solve_exact(m: IntMatrix, b):
    """One integer solution x of m @ x == b, or None."""
    res = snf(m)
    c = res.U.apply(tuple(b))
    diag = res.diagonal
    w = [0] * m.cols
    for i in range(m.rows):
        d = diag[i] if i < len(diag) else 0
        if d:
            if c[i] % d:
                return None
            if i < m.cols:
                w[i] = c[i] // d
        elif c[i]:
            return None
    return res.V.apply(tuple(w))
