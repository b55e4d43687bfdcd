"""Sparse exact matrices and linear solving over any exact field.

Entries may be Fraction or QScalar (anything with field arithmetic, truthiness
for zero-detection, and ** -1).  No zero entries are ever stored.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable


class SparseMatrix:
    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries=None):
        if rows < 0 or cols < 0:
            raise ValueError("negative dimension")
        self.rows = rows
        self.cols = cols
        self.entries: dict[tuple[int, int], object] = {}
        if entries:
            for (i, j), v in (entries.items() if isinstance(entries, dict) else entries):
                self[i, j] = v

    # -- element access -------------------------------------------------

    def __getitem__(self, key):
        i, j = key
        self._check(i, j)
        return self.entries.get((i, j), 0)

    def __setitem__(self, key, value):
        i, j = key
        self._check(i, j)
        if value:
            self.entries[i, j] = value
        else:
            self.entries.pop((i, j), None)

    def _check(self, i, j):
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(f"({i},{j}) out of bounds for {self.rows}x{self.cols}")

    # -- constructors -----------------------------------------------------

    @staticmethod
    def identity(n: int, one=Fraction(1)) -> "SparseMatrix":
        m = SparseMatrix(n, n)
        for i in range(n):
            m.entries[i, i] = one
        return m

    @staticmethod
    def zero(rows: int, cols: int) -> "SparseMatrix":
        return SparseMatrix(rows, cols)

    @staticmethod
    def from_rows(data) -> "SparseMatrix":
        rows = len(data)
        cols = len(data[0]) if rows else 0
        m = SparseMatrix(rows, cols)
        for i, row in enumerate(data):
            if len(row) != cols:
                raise ValueError("ragged rows")
            for j, v in enumerate(row):
                if v:
                    m.entries[i, j] = v
        return m

    def to_rows(self, zero=Fraction(0)) -> list[list]:
        return [
            [self.entries.get((i, j), zero) for j in range(self.cols)]
            for i in range(self.rows)
        ]

    def copy(self) -> "SparseMatrix":
        m = SparseMatrix(self.rows, self.cols)
        m.entries = dict(self.entries)
        return m

    # -- predicates ------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.entries

    def __eq__(self, other) -> bool:
        if not isinstance(other, SparseMatrix):
            return NotImplemented
        if (self.rows, self.cols) != (other.rows, other.cols):
            return False
        return (self - other).is_zero()

    def __hash__(self):
        raise TypeError("SparseMatrix is unhashable")

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: "SparseMatrix") -> "SparseMatrix":
        self._same_shape(other)
        m = self.copy()
        for k, v in other.entries.items():
            s = m.entries.get(k, 0) + v
            if s:
                m.entries[k] = s
            else:
                m.entries.pop(k, None)
        return m

    def __neg__(self) -> "SparseMatrix":
        m = SparseMatrix(self.rows, self.cols)
        m.entries = {k: -v for k, v in self.entries.items()}
        return m

    def __sub__(self, other: "SparseMatrix") -> "SparseMatrix":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, SparseMatrix):
            return self.matmul(other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, c) -> "SparseMatrix":
        m = SparseMatrix(self.rows, self.cols)
        if c:
            m.entries = {k: v * c for k, v in self.entries.items()}
        return m

    def matmul(self, other: "SparseMatrix") -> "SparseMatrix":
        if self.cols != other.rows:
            raise ValueError(
                f"shape mismatch {self.rows}x{self.cols} @ {other.rows}x{other.cols}"
            )
        by_row: dict[int, list[tuple[int, object]]] = {}
        for (i, j), v in other.entries.items():
            by_row.setdefault(i, []).append((j, v))
        out: dict[tuple[int, int], object] = {}
        for (i, k), a in self.entries.items():
            row = by_row.get(k)
            if not row:
                continue
            for j, b in row:
                key = (i, j)
                s = out.get(key, 0) + a * b
                if s:
                    out[key] = s
                else:
                    out.pop(key, None)
        m = SparseMatrix(self.rows, other.cols)
        m.entries = out
        return m

    def __pow__(self, k: int) -> "SparseMatrix":
        if self.rows != self.cols:
            raise ValueError("power of non-square matrix")
        if k < 0:
            return invert(self) ** (-k)
        out = None
        base = self
        while k:
            if k & 1:
                out = base if out is None else out.matmul(base)
            k >>= 1
            if k:
                base = base.matmul(base)
        if out is None:
            one = _one_like(next(iter(self.entries.values()), Fraction(1)))
            return SparseMatrix.identity(self.rows, one)
        return out

    def transpose(self) -> "SparseMatrix":
        m = SparseMatrix(self.cols, self.rows)
        m.entries = {(j, i): v for (i, j), v in self.entries.items()}
        return m

    def _same_shape(self, other: "SparseMatrix"):
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")

    # -- blocks / columns ---------------------------------------------------

    def column(self, j: int) -> "SparseMatrix":
        m = SparseMatrix(self.rows, 1)
        for i in range(self.rows):
            v = self.entries.get((i, j))
            if v:
                m.entries[i, 0] = v
        return m

    def hstack(self, other: "SparseMatrix") -> "SparseMatrix":
        self_cols = self.cols
        if self.rows != other.rows:
            raise ValueError("row mismatch in hstack")
        m = SparseMatrix(self.rows, self.cols + other.cols)
        m.entries = dict(self.entries)
        for (i, j), v in other.entries.items():
            m.entries[i, j + self_cols] = v
        return m

    def apply(self, vec: list) -> list:
        out = [0] * self.rows
        for (i, j), v in self.entries.items():
            if vec[j]:
                out[i] = out[i] + v * vec[j]
        return out

    def __str__(self) -> str:
        body = "; ".join(
            " ".join(str(self.entries.get((i, j), 0)) for j in range(self.cols))
            for i in range(self.rows)
        )
        return f"[{body}]"

    __repr__ = __str__


def _one_like(sample):
    if isinstance(sample, (int, Fraction)):
        return Fraction(1)
    return sample / sample if sample else Fraction(1)


def kron(a: SparseMatrix, b: SparseMatrix) -> SparseMatrix:
    m = SparseMatrix(a.rows * b.rows, a.cols * b.cols)
    for (i, j), x in a.entries.items():
        for (k, l), y in b.entries.items():
            m.entries[i * b.rows + k, j * b.cols + l] = x * y
    return m


@dataclass
class LinearSolution:
    """Exact solution description: rank, kernel basis and a particular solution."""

    consistent: bool
    rank: int
    particular: SparseMatrix | None
    kernel: list[SparseMatrix] = field(default_factory=list)

    @property
    def kernel_dim(self) -> int:
        return len(self.kernel)


def _complexity(v) -> int:
    # pivot preference: least total degree, so growth stays controlled
    if isinstance(v, (int, Fraction)):
        return 0
    deg = 0
    if v.num.coeffs:
        deg += v.num.max_exp() - v.num.min_exp()
    if v.den.coeffs:
        deg += v.den.max_exp()
    return deg


def solve_linear(a: SparseMatrix, b: SparseMatrix) -> LinearSolution:
    """Exact Gaussian elimination of A x = b with deterministic degree-pivoting.

    b may have several columns; `particular` then solves all of them at once.
    Kernel vectors are returned as column matrices and satisfy A v = 0 exactly.
    """
    if a.rows != b.rows:
        raise ValueError("incompatible right-hand side")
    n, nc = a.rows, a.cols
    rows = [dict() for _ in range(n)]
    for (i, j), v in a.entries.items():
        rows[i][j] = v
    rhs = [dict() for _ in range(n)]
    for (i, j), v in b.entries.items():
        rhs[i][j] = v

    pivots: list[tuple[int, int]] = []
    used_rows: set[int] = set()
    for col in range(nc):
        best = None
        for i in range(n):
            if i in used_rows:
                continue
            v = rows[i].get(col)
            if v:
                key = (_complexity(v), i)
                if best is None or key < best[0]:
                    best = (key, i)
        if best is None:
            continue
        piv_row = best[1]
        used_rows.add(piv_row)
        pivots.append((piv_row, col))
        inv = rows[piv_row][col] ** -1
        rows[piv_row] = {j: v * inv for j, v in rows[piv_row].items()}
        rhs[piv_row] = {j: v * inv for j, v in rhs[piv_row].items()}
        for i in range(n):
            if i == piv_row:
                continue
            f = rows[i].get(col)
            if not f:
                continue
            for j, v in rows[piv_row].items():
                s = rows[i].get(j, 0) - f * v
                if s:
                    rows[i][j] = s
                else:
                    rows[i].pop(j, None)
            for j, v in rhs[piv_row].items():
                s = rhs[i].get(j, 0) - f * v
                if s:
                    rhs[i][j] = s
                else:
                    rhs[i].pop(j, None)

    rank = len(pivots)
    for i in range(n):
        if i not in used_rows and rhs[i]:
            return LinearSolution(False, rank, None)

    pivot_col_of_row = dict(pivots)
    pivot_cols = set(pivot_col_of_row.values())
    free_cols = [j for j in range(nc) if j not in pivot_cols]

    particular = SparseMatrix(nc, b.cols)
    for i, col in pivots:
        for j, v in rhs[i].items():
            particular[col, j] = v

    kernel = []
    for fc in free_cols:
        vec = SparseMatrix(nc, 1)
        one = None
        for i, col in pivots:
            v = rows[i].get(fc)
            if v:
                vec[col, 0] = -v
                one = _one_like(v)
        vec[fc, 0] = one if one is not None else Fraction(1)
        kernel.append(vec)
    return LinearSolution(True, rank, particular, kernel)


def rank(a: SparseMatrix) -> int:
    return solve_linear(a, SparseMatrix(a.rows, 1)).rank


def invert(a: SparseMatrix) -> SparseMatrix:
    if a.rows != a.cols:
        raise ValueError("inverse of non-square matrix")
    one = _one_like(next(iter(a.entries.values()), Fraction(1)))
    sol = solve_linear(a, SparseMatrix.identity(a.rows, one))
    if sol.rank < a.rows:
        raise ZeroDivisionError("matrix is singular")
    return sol.particular


def lift(mat: SparseMatrix, fn) -> SparseMatrix:
    """Apply fn to every stored entry (e.g. specialization at q = 1)."""
    m = SparseMatrix(mat.rows, mat.cols)
    for k, v in mat.entries.items():
        w = fn(v)
        if w:
            m.entries[k] = w
    return m
