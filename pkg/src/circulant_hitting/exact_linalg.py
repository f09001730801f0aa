"""Exact dense linear algebra over arbitrary-precision rationals.

Entries are ``fractions.Fraction`` values, which are canonical by
construction (lowest terms, positive denominator), so every result here is
exact: no floating point appears anywhere in this module.  The solver uses
fraction-free (Bareiss) elimination on a denominator-cleared copy of the
system, which keeps all intermediate values as exact integers and is far
cheaper than eliminating with rationals directly.
"""

from fractions import Fraction
from math import lcm


class SingularMatrixError(ValueError):
    """No nonzero pivot available; carries the offending pivot row index."""

    def __init__(self, pivot_row: int):
        self.pivot_row = pivot_row
        super().__init__(f"matrix is singular: no nonzero pivot at or below row {pivot_row}")


class RationalMatrix:
    """Dense row-major matrix of exact rationals."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, entries):
        data = [[Fraction(x) for x in row] for row in entries]
        if not data or not data[0]:
            raise ValueError("matrix must have at least one row and one column")
        cols = len(data[0])
        if any(len(row) != cols for row in data):
            raise ValueError("all rows must have the same length")
        self.rows = len(data)
        self.cols = cols
        self.data = data

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    def __getitem__(self, index) -> Fraction:
        i, j = index
        return self.data[i][j]

    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        return self.data == other.data

    def __repr__(self) -> str:
        return f"RationalMatrix({self.rows}x{self.cols})"

    def row(self, i: int) -> list:
        return list(self.data[i])


def multiply(a: RationalMatrix, b: RationalMatrix) -> RationalMatrix:
    """Exact matrix product a @ b.

    Zero entries of ``a`` are skipped, so multiplying by a banded matrix
    costs O(nnz(a) * cols(b)) instead of the dense cubic count.
    """
    if a.cols != b.rows:
        raise ValueError(f"dimension mismatch: {a.rows}x{a.cols} times {b.rows}x{b.cols}")
    zero = Fraction(0)
    out = []
    for i in range(a.rows):
        arow = a.data[i]
        acc = [zero] * b.cols
        for m in range(a.cols):
            f = arow[m]
            if not f:
                continue
            brow = b.data[m]
            for col in range(b.cols):
                v = brow[col]
                if v:
                    acc[col] += f * v
        out.append(acc)
    return RationalMatrix(out)


def mat_vec(a: RationalMatrix, x: list) -> list:
    """Exact matrix-vector product a @ x."""
    if a.cols != len(x):
        raise ValueError(f"dimension mismatch: {a.rows}x{a.cols} times vector of length {len(x)}")
    return [sum((f * x[m] for m, f in enumerate(row) if f), Fraction(0)) for row in a.data]


def is_identity(a: RationalMatrix) -> bool:
    """True iff ``a`` is exactly the identity matrix (no tolerance)."""
    if a.rows != a.cols:
        raise ValueError("is_identity needs a square matrix")
    for i, row in enumerate(a.data):
        for j, v in enumerate(row):
            if v != (1 if i == j else 0):
                return False
    return True


def solve(a: RationalMatrix, b: list, verify: bool = True) -> list:
    """Solve a @ x = b exactly, returning x as a list of Fractions.

    Raises SingularMatrixError (naming the pivot row) if elimination stalls.
    With ``verify`` the solution is re-multiplied through ``a`` and checked
    against ``b`` before being returned.
    """
    n = a.rows
    if a.cols != n:
        raise ValueError(f"solve needs a square matrix, got {a.rows}x{a.cols}")
    if len(b) != n:
        raise ValueError(f"dimension mismatch: {n}x{n} matrix, rhs of length {len(b)}")
    rhs = [Fraction(v) for v in b]

    # Clear denominators row by row; row scaling leaves the solution unchanged.
    m = []
    for i in range(n):
        row = a.data[i] + [rhs[i]]
        scale = lcm(*(v.denominator for v in row))
        m.append([int(v * scale) for v in row])

    prev = 1
    for k in range(n):
        pivot = next((r for r in range(k, n) if m[r][k]), None)
        if pivot is None:
            raise SingularMatrixError(k)
        if pivot != k:
            m[k], m[pivot] = m[pivot], m[k]
        pk = m[k][k]
        row_k = m[k]
        for i in range(k + 1, n):
            row_i = m[i]
            mik = row_i[k]
            for j in range(k + 1, n + 1):
                # Bareiss update: exact integer division by the previous pivot.
                row_i[j] = (row_i[j] * pk - mik * row_k[j]) // prev
            row_i[k] = 0
        prev = pk

    x = [Fraction(0)] * n
    for i in reversed(range(n)):
        acc = Fraction(m[i][n]) - sum(m[i][j] * x[j] for j in range(i + 1, n))
        x[i] = acc / m[i][i]

    if verify and mat_vec(a, x) != rhs:
        raise ArithmeticError("solver self-check failed: a @ x != b")
    return x
