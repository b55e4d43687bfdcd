"""Truncated power series in a formal parameter h with matrix coefficients."""

from __future__ import annotations

from fractions import Fraction
from math import factorial

from .sparse import SparseMatrix


class TruncatedSeries:
    """Sum_{k=0..order} coeffs[k] * h^k over square matrices of one size."""

    __slots__ = ("order", "coeffs", "dim")

    def __init__(self, coeffs: list[SparseMatrix], order: int | None = None):
        if not coeffs:
            raise ValueError("need at least the h^0 coefficient")
        if order is None:
            order = len(coeffs) - 1
        dims = {(c.rows, c.cols) for c in coeffs}
        if len(dims) != 1:
            raise ValueError("coefficient matrices must share dimensions")
        (r, c) = next(iter(dims))
        if r != c:
            raise ValueError("series coefficients must be square")
        self.dim = r
        self.order = order
        padded = list(coeffs[: order + 1])
        while len(padded) < order + 1:
            padded.append(SparseMatrix(r, r))
        self.coeffs = padded

    @staticmethod
    def identity(dim: int, order: int, one=Fraction(1)) -> "TruncatedSeries":
        coeffs = [SparseMatrix.identity(dim, one)] + [
            SparseMatrix(dim, dim) for _ in range(order)
        ]
        return TruncatedSeries(coeffs, order)

    @staticmethod
    def from_term(mat: SparseMatrix, power: int, order: int) -> "TruncatedSeries":
        coeffs = [SparseMatrix(mat.rows, mat.rows) for _ in range(order + 1)]
        if power <= order:
            coeffs[power] = mat
        return TruncatedSeries(coeffs, order)

    def _check(self, other: "TruncatedSeries"):
        if self.order != other.order:
            raise ValueError("series orders differ")
        if self.dim != other.dim:
            raise ValueError("series dimensions differ")

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check(other)
        return TruncatedSeries(
            [a + b for a, b in zip(self.coeffs, other.coeffs)], self.order
        )

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check(other)
        return TruncatedSeries(
            [a - b for a, b in zip(self.coeffs, other.coeffs)], self.order
        )

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check(other)
        n = self.order
        out = [SparseMatrix(self.dim, self.dim) for _ in range(n + 1)]
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j in range(n + 1 - i):
                b = other.coeffs[j]
                if b.is_zero():
                    continue
                out[i + j] = out[i + j] + a.matmul(b)
        return TruncatedSeries(out, n)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        self._check(other)
        return all(a == b for a, b in zip(self.coeffs, other.coeffs))

    def __hash__(self):
        raise TypeError("TruncatedSeries is unhashable")

    def inverse(self) -> "TruncatedSeries":
        """Neumann-series inverse; requires the h^0 term to be the identity."""
        ident = SparseMatrix.identity(self.dim, _sample_one(self))
        if self.coeffs[0] != ident:
            raise ValueError("inverse needs identity constant term")
        tail = TruncatedSeries(
            [SparseMatrix(self.dim, self.dim)] + [(-c) for c in self.coeffs[1:]],
            self.order,
        )
        out = TruncatedSeries.identity(self.dim, self.order, _sample_one(self))
        power = TruncatedSeries.identity(self.dim, self.order, _sample_one(self))
        for _ in range(self.order):
            power = power * tail
            out = out + power
        return out

    def first_nonzero_degree(self) -> int | None:
        for k, c in enumerate(self.coeffs):
            if not c.is_zero():
                return k
        return None


def _sample_one(series: TruncatedSeries):
    for c in series.coeffs:
        for v in c.entries.values():
            return v / v
    return Fraction(1)


def series_exp(mat: SparseMatrix, power: int, order: int) -> TruncatedSeries:
    """exp(mat * h^power) truncated at h^order; power must be >= 1.

    A nonzero h^0 argument is rejected: the exponential would then need the
    full (non-nilpotent) matrix exponential, which has no exact truncation.
    """
    if power < 1:
        raise ValueError("exponent argument must carry a positive power of h")
    if mat.rows != mat.cols:
        raise ValueError("exp of non-square matrix")
    one = Fraction(1)
    for v in mat.entries.values():
        one = v / v
        break
    out = TruncatedSeries.identity(mat.rows, order, one)
    term = TruncatedSeries.identity(mat.rows, order, one)
    step = TruncatedSeries.from_term(mat, power, order)
    k = 1
    while k * power <= order:
        term = term * step
        scaled = TruncatedSeries(
            [c.scale(Fraction(1, factorial(k))) for c in term.coeffs], order
        )
        out = out + scaled
        k += 1
    return out


def series_compose(a: TruncatedSeries, b: TruncatedSeries, operator: str = "mul") -> TruncatedSeries:
    if operator != "mul":
        raise ValueError(f"unsupported series operator {operator!r}")
    return a * b
