"""Exact linear algebra over the rationals.

All routines run Gaussian elimination on :class:`fractions.Fraction` entries.
The pivot in each column is the first row (lowest index) holding a nonzero
entry, so every basis returned here is reproducible bit for bit.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import ShapeMismatch

__all__ = ["Matrix", "rank", "rref", "kernel_basis", "cokernel", "solve"]


def _frac(x):
    if isinstance(x, Fraction):
        return x
    if isinstance(x, str):
        return Fraction(x)
    if isinstance(x, float):
        raise TypeError("floating point entries are not accepted")
    return Fraction(x)


@dataclass(frozen=True)
class Matrix:
    """Immutable ``rows x cols`` matrix with rational entries (row-major)."""

    rows: int
    cols: int
    entries: tuple

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ShapeMismatch("negative matrix dimension")
        if len(self.entries) != self.rows * self.cols:
            raise ShapeMismatch(
                f"{len(self.entries)} entries for a {self.rows}x{self.cols} matrix"
            )

    @classmethod
    def from_rows(cls, rows, cols=None):
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        if any(len(r) != cols for r in rows):
            raise ShapeMismatch("ragged rows")
        return cls(len(rows), cols, tuple(_frac(x) for r in rows for x in r))

    @classmethod
    def zeros(cls, rows, cols):
        return cls(rows, cols, (Fraction(0),) * (rows * cols))

    @classmethod
    def identity(cls, n):
        return cls(n, n, tuple(Fraction(int(i == j)) for i in range(n) for j in range(n)))

    @classmethod
    def column(cls, values):
        values = [_frac(v) for v in values]
        return cls(len(values), 1, tuple(values))

    @property
    def shape(self):
        return (self.rows, self.cols)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i):
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def to_rows(self):
        return [list(self.row(i)) for i in range(self.rows)]

    @property
    def T(self):
        return Matrix(self.cols, self.rows,
                      tuple(self[i, j] for j in range(self.cols) for i in range(self.rows)))

    def __matmul__(self, other):
        if self.cols != other.rows:
            raise ShapeMismatch(f"cannot multiply {self.shape} by {other.shape}")
        a, b = self.to_rows(), other.to_rows()
        out = []
        for i in range(self.rows):
            ai = a[i]
            for j in range(other.cols):
                s = Fraction(0)
                for k in range(self.cols):
                    if ai[k]:
                        s += ai[k] * b[k][j]
                out.append(s)
        return Matrix(self.rows, other.cols, tuple(out))

    def __add__(self, other):
        if self.shape != other.shape:
            raise ShapeMismatch(f"cannot add {self.shape} and {other.shape}")
        return Matrix(self.rows, self.cols, tuple(x + y for x, y in zip(self.entries, other.entries)))

    def __neg__(self):
        return Matrix(self.rows, self.cols, tuple(-x for x in self.entries))

    def __sub__(self, other):
        return self + (-other)

    def is_zero(self):
        return not any(self.entries)

    def submatrix(self, rows, cols):
        rows, cols = list(rows), list(cols)
        return Matrix(len(rows), len(cols), tuple(self[i, j] for i in rows for j in cols))

    @staticmethod
    def vstack(blocks, cols):
        entries = []
        nrows = 0
        for b in blocks:
            if b.cols != cols:
                raise ShapeMismatch("vstack column mismatch")
            entries.extend(b.entries)
            nrows += b.rows
        return Matrix(nrows, cols, tuple(entries))

    @staticmethod
    def hstack(blocks, rows):
        for b in blocks:
            if b.rows != rows:
                raise ShapeMismatch("hstack row mismatch")
        cols = sum(b.cols for b in blocks)
        entries = []
        for i in range(rows):
            for b in blocks:
                entries.extend(b.row(i))
        return Matrix(rows, cols, tuple(entries))

    @staticmethod
    def block_diag(blocks):
        rows = sum(b.rows for b in blocks)
        cols = sum(b.cols for b in blocks)
        out = [[Fraction(0)] * cols for _ in range(rows)]
        r0 = c0 = 0
        for b in blocks:
            for i in range(b.rows):
                for j in range(b.cols):
                    out[r0 + i][c0 + j] = b[i, j]
            r0 += b.rows
            c0 += b.cols
        return Matrix(rows, cols, tuple(x for r in out for x in r))

    def to_strings(self):
        """Rows of ``"num/den"`` strings (the JSON wire format)."""
        return [[f"{x.numerator}/{x.denominator}" for x in self.row(i)] for i in range(self.rows)]

    @classmethod
    def from_strings(cls, rows, nrows, ncols):
        if nrows == 0 or ncols == 0:
            return cls.zeros(nrows, ncols)
        return cls.from_rows(rows, ncols)

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in self.row(i)) for i in range(self.rows))
        return f"Matrix({self.rows}x{self.cols}: [{body}])"


def rref(a: Matrix):
    """Reduced row echelon form; returns ``(rows, pivot_columns)``."""
    m = a.to_rows()
    pivots = []
    r = 0
    for c in range(a.cols):
        if r == a.rows:
            break
        p = next((i for i in range(r, a.rows) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(a.rows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    return m, pivots


def rank(a: Matrix) -> int:
    return len(rref(a)[1])


def kernel_basis(a: Matrix) -> Matrix:
    """Matrix whose columns form a basis of the right kernel of ``a``.

    One basis vector per free column: 1 at the free position, minus the
    reduced pivot-row entries at pivot positions.
    """
    m, pivots = rref(a)
    free = [c for c in range(a.cols) if c not in set(pivots)]
    cols = []
    for f in free:
        v = [Fraction(0)] * a.cols
        v[f] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -m[r][f]
        cols.append(v)
    return Matrix(a.cols, len(free), tuple(cols[j][i] for i in range(a.cols) for j in range(len(free))))


def cokernel(a: Matrix):
    """Return ``(dim, projection)`` with ``projection @ a == 0``.

    ``projection`` is ``dim x a.rows`` of full row rank, so it realises the
    quotient map onto the cokernel of ``a``.
    """
    proj = kernel_basis(a.T).T
    return proj.rows, proj


def solve(a: Matrix, b):
    """Solve ``a x = b`` exactly; ``None`` when the system is inconsistent.

    ``b`` may be a one-column :class:`Matrix` or a sequence of numbers. Free
    variables are set to zero.
    """
    if isinstance(b, Matrix):
        if b.cols != 1:
            raise ShapeMismatch("right-hand side must be a single column")
        bvals = list(b.entries)
    else:
        bvals = [_frac(x) for x in b]
    if len(bvals) != a.rows:
        raise ShapeMismatch(f"rhs of length {len(bvals)} for {a.rows} equations")
    aug = Matrix.hstack([a, Matrix.column(bvals)], a.rows) if a.rows else Matrix.zeros(0, a.cols + 1)
    m, pivots = rref(aug)
    if a.cols in pivots:
        return None
    x = [Fraction(0)] * a.cols
    for r, pc in enumerate(pivots):
        x[pc] = m[r][a.cols]
    return tuple(x)
