"""Labelled diagrams, generalized braid groups, and braid-relation checks."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .diagrams import Diagram
from .sparse import SparseMatrix, invert

# Coxeter label for a pair with infinite order; relations with this label are
# vacuous and must be skipped, never approximated by a large integer.
INFINITE: Optional[int] = None


@dataclass(frozen=True)
class LabelledDiagram:
    diagram: Diagram
    labels: dict  # (i, j) with i < j -> int in {2,3,...} or INFINITE

    def label(self, i: int, j: int) -> Optional[int]:
        if i == j:
            raise ValueError("no label for a vertex with itself")
        return self.labels.get((min(i, j), max(i, j)), 2)

    def validate(self) -> None:
        for (i, j), m in self.labels.items():
            if i >= j:
                raise ValueError("labels must be keyed by (i, j) with i < j")
            if m is not INFINITE and (not isinstance(m, int) or m < 2):
                raise ValueError(f"label m[{i},{j}] = {m!r} out of range")
            if self.diagram.orthogonal(1 << i, 1 << j) and m != 2:
                raise ValueError(f"orthogonal vertices {i},{j} must carry label 2")


def is_generalized_cartan_matrix(a: list[list[Fraction]]) -> bool:
    n = len(a)
    for i in range(n):
        if len(a[i]) != n:
            return False
        if a[i][i] != 2:
            return False
        for j in range(n):
            if i == j:
                continue
            x = a[i][j]
            if x > 0 or x != int(x):
                return False
            if (a[i][j] == 0) != (a[j][i] == 0):
                return False
    return True


def _rank2_reflection_order(aij: Fraction, aji: Fraction) -> Optional[int]:
    """Exact order of s_i s_j acting on the span of the two simple roots."""
    # s_i(alpha_j) = alpha_j - a_ij alpha_i in the basis (alpha_i, alpha_j)
    s1 = SparseMatrix.from_rows([[Fraction(-1), -aij], [Fraction(0), Fraction(1)]])
    s2 = SparseMatrix.from_rows([[Fraction(1), Fraction(0)], [-aji, Fraction(-1)]])
    p = s1.matmul(s2)
    ident = SparseMatrix.identity(2)
    power = ident
    for k in range(1, 7):
        power = power.matmul(p)
        if power == ident:
            return k
    # a 2x2 integer matrix of determinant 1 has finite order only in {1,2,3,4,6}
    return INFINITE


def coxeter_labels_from_gcm(a: list[list[Fraction]]) -> LabelledDiagram:
    """Coxeter matrix of a generalized Cartan matrix, via exact matrix orders."""
    a = [[Fraction(x) for x in row] for row in a]
    if not is_generalized_cartan_matrix(a):
        raise ValueError("input is not a generalized Cartan matrix")
    n = len(a)
    edges = [
        (i, j)
        for i in range(n)
        for j in range(i + 1, n)
        if a[i][j] != 0 or a[j][i] != 0
    ]
    d = Diagram(n, edges)
    labels = {}
    for i in range(n):
        for j in range(i + 1, n):
            labels[i, j] = _rank2_reflection_order(a[i][j], a[j][i])
    return LabelledDiagram(d, labels)


def braid_products(
    rho_i: SparseMatrix, rho_j: SparseMatrix, m: int
) -> tuple[SparseMatrix, SparseMatrix]:
    left = None
    right = None
    for k in range(m):
        fl = rho_i if k % 2 == 0 else rho_j
        fr = rho_j if k % 2 == 0 else rho_i
        left = fl if left is None else left.matmul(fl)
        right = fr if right is None else right.matmul(fr)
    return left, right


def verify_braid_relation(rho: dict, i: int, j: int, m: Optional[int]):
    """Exact test of the alternating braid relation of length m for (i, j).

    Returns (holds, difference matrix); the difference is None on success.
    """
    if m is INFINITE:
        raise ValueError("label is infinite; the relation is vacuous")
    if m < 2:
        raise ValueError("braid label must be at least 2")
    a, b = rho[i], rho[j]
    if a.rows != a.cols or a.rows != b.rows or b.rows != b.cols:
        raise ValueError("representation matrices must be square of equal size")
    left, right = braid_products(a, b, m)
    diff = left - right
    if diff.is_zero():
        return True, None
    return False, diff


@dataclass(frozen=True)
class BraidWord:
    """Word in the braid generators: sequence of (vertex, +1 | -1)."""

    letters: tuple[tuple[int, int], ...]

    def __post_init__(self):
        for _, e in self.letters:
            if e not in (1, -1):
                raise ValueError("exponents must be +1 or -1")


def evaluate_word(rho: dict, word: BraidWord) -> SparseMatrix:
    """Ordered product of generator matrices; inverses are cached per generator."""
    size = None
    for mat in rho.values():
        size = mat.rows
        break
    if size is None:
        raise ValueError("empty representation")
    inverses: dict[int, SparseMatrix] = {}
    out = SparseMatrix.identity(size, _one_of(rho))
    for gen, exp in word.letters:
        if exp == 1:
            mat = rho[gen]
        else:
            if gen not in inverses:
                inverses[gen] = invert(rho[gen])
            mat = inverses[gen]
        out = out.matmul(mat)
    return out


def _one_of(rho: dict):
    for mat in rho.values():
        for v in mat.entries.values():
            return v / v
    return Fraction(1)
