"""Dense exact matrices over a coefficient field.

Elimination is ordinary Gauss-Jordan with the first nonzero entry of each
column as pivot.  Since every entry is an exact canonical field element
there is no pivoting strategy to worry about.
"""
from __future__ import annotations

from typing import Iterable, Sequence

from .scalars import Field, Scalar


class Matrix:
    __slots__ = ("field", "nrows", "ncols", "rows")

    def __init__(self, field: Field, rows: Sequence[Sequence], ncols: int | None = None):
        self.field = field
        self.rows = [[field(x) for x in row] for row in rows]
        self.nrows = len(self.rows)
        if ncols is None:
            ncols = len(self.rows[0]) if self.rows else 0
        self.ncols = ncols
        for row in self.rows:
            if len(row) != ncols:
                raise ValueError("ragged matrix")

    @classmethod
    def _raw(cls, field: Field, rows: list[list[Scalar]], ncols: int) -> "Matrix":
        m = cls.__new__(cls)
        m.field = field
        m.rows = rows
        m.nrows = len(rows)
        m.ncols = ncols
        return m

    @classmethod
    def zeros(cls, field: Field, nrows: int, ncols: int) -> "Matrix":
        z = field.zero
        return cls._raw(field, [[z] * ncols for _ in range(nrows)], ncols)

    @classmethod
    def identity(cls, field: Field, n: int) -> "Matrix":
        m = cls.zeros(field, n, n)
        for i in range(n):
            m.rows[i][i] = field.one
        return m

    @classmethod
    def diagonal(cls, field: Field, entries: Sequence) -> "Matrix":
        n = len(entries)
        m = cls.zeros(field, n, n)
        for i, x in enumerate(entries):
            m.rows[i][i] = field(x)
        return m

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def copy(self) -> "Matrix":
        return Matrix._raw(self.field, [list(r) for r in self.rows], self.ncols)

    def with_entry(self, i: int, j: int, value) -> "Matrix":
        m = self.copy()
        m.rows[i][j] = self.field(value)
        return m

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (self.nrows, self.ncols) == (other.nrows, other.ncols) and all(
            a == b for ra, rb in zip(self.rows, other.rows) for a, b in zip(ra, rb)
        )

    def __hash__(self):
        return hash((self.nrows, self.ncols, tuple(tuple(r) for r in self.rows)))

    def __repr__(self):
        return f"Matrix({self.nrows}x{self.ncols}, {[[str(x) for x in r] for r in self.rows]})"

    def is_zero(self) -> bool:
        return all(x.is_zero() for r in self.rows for x in r)

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_shape(other)
        return Matrix._raw(
            self.field, [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)], self.ncols
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check_shape(other)
        return Matrix._raw(
            self.field, [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)], self.ncols
        )

    def __neg__(self) -> "Matrix":
        return Matrix._raw(self.field, [[-a for a in r] for r in self.rows], self.ncols)

    def scale(self, c) -> "Matrix":
        c = self.field(c)
        if c.is_zero():
            return Matrix.zeros(self.field, self.nrows, self.ncols)
        return Matrix._raw(self.field, [[c * a if a else a for a in r] for r in self.rows], self.ncols)

    def __mul__(self, other):
        if isinstance(other, Matrix):
            return self.matmul(other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def matmul(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch in product")
        zero = self.field.zero
        # sparse rows of the right factor
        right = [[(j, x) for j, x in enumerate(r) if x] for r in other.rows]
        out = []
        for r in self.rows:
            acc: dict[int, Scalar] = {}
            for k, a in enumerate(r):
                if not a:
                    continue
                for j, b in right[k]:
                    v = acc.get(j)
                    acc[j] = a * b if v is None else v + a * b
            row = [zero] * other.ncols
            for j, v in acc.items():
                row[j] = v
            out.append(row)
        return Matrix._raw(self.field, out, other.ncols)

    def __pow__(self, n: int) -> "Matrix":
        if self.nrows != self.ncols:
            raise ValueError("power of a non-square matrix")
        if n < 0:
            return self.inverse() ** (-n)
        result = Matrix.identity(self.field, self.nrows)
        base = self
        while n:
            if n & 1:
                result = result.matmul(base)
            n >>= 1
            if n:
                base = base.matmul(base)
        return result

    def apply(self, vec: Sequence[Scalar]) -> list[Scalar]:
        zero = self.field.zero
        out = []
        for r in self.rows:
            acc = zero
            for a, x in zip(r, vec):
                if a and x:
                    acc = acc + a * x
            out.append(acc)
        return out

    def transpose(self) -> "Matrix":
        return Matrix._raw(self.field, [list(c) for c in zip(*self.rows)] if self.nrows else [], self.nrows)

    def kron(self, other: "Matrix") -> "Matrix":
        zero = self.field.zero
        rows = []
        for ra in self.rows:
            for rb in other.rows:
                rows.append([a * b if a and b else zero for a in ra for b in rb])
        return Matrix._raw(self.field, rows, self.ncols * other.ncols)

    def column(self, j: int) -> list[Scalar]:
        return [r[j] for r in self.rows]

    def _check_shape(self, other):
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise ValueError("shape mismatch")

    # -- elimination ---------------------------------------------------------

    def rref(self) -> tuple["Matrix", list[int]]:
        """Reduced row echelon form and the list of pivot columns."""
        rows = [list(r) for r in self.rows]
        pivots: list[int] = []
        r = 0
        for c in range(self.ncols):
            if r >= len(rows):
                break
            p = next((i for i in range(r, len(rows)) if rows[i][c]), None)
            if p is None:
                continue
            rows[r], rows[p] = rows[p], rows[r]
            inv = rows[r][c].inverse()
            rows[r] = [x * inv if x else x for x in rows[r]]
            pivot_row = rows[r]
            support = [j for j in range(c, self.ncols) if pivot_row[j]]
            for i in range(len(rows)):
                if i != r and rows[i][c]:
                    f = rows[i][c]
                    row = rows[i]
                    for j in support:
                        row[j] = row[j] - f * pivot_row[j]
            pivots.append(c)
            r += 1
        return Matrix._raw(self.field, rows, self.ncols), pivots

    def rank(self) -> int:
        return len(self.rref()[1])

    def kernel(self) -> list[list[Scalar]]:
        """Basis of the right null space {v : M v = 0}."""
        red, pivots = self.rref()
        free = [c for c in range(self.ncols) if c not in set(pivots)]
        zero, one = self.field.zero, self.field.one
        basis = []
        for fcol in free:
            v = [zero] * self.ncols
            v[fcol] = one
            for i, pc in enumerate(pivots):
                x = red.rows[i][fcol]
                if x:
                    v[pc] = -x
            basis.append(v)
        return basis

    def inverse(self) -> "Matrix":
        if self.nrows != self.ncols:
            raise ValueError("inverse of a non-square matrix")
        n = self.nrows
        aug = Matrix._raw(
            self.field,
            [list(r) + [self.field.one if i == j else self.field.zero for j in range(n)] for i, r in enumerate(self.rows)],
            2 * n,
        )
        red, pivots = aug.rref()
        if pivots[:n] != list(range(n)):
            raise ZeroDivisionError("singular matrix")
        return Matrix._raw(self.field, [r[n:] for r in red.rows], n)


def kernel(m: Matrix) -> list[list[Scalar]]:
    return m.kernel()


def rank(m: Matrix) -> int:
    return m.rank()


def row_space_basis(field: Field, vectors: Iterable[Sequence[Scalar]], ncols: int) -> list[list[Scalar]]:
    """Reduced basis of the span of the given vectors."""
    vecs = [list(v) for v in vectors]
    if not vecs:
        return []
    red, pivots = Matrix._raw(field, vecs, ncols).rref()
    return [red.rows[i] for i in range(len(pivots))]
