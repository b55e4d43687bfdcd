"""Faithful matrix models of finite-type Kac-Moody algebras and their
extended versions, root decompositions, invariant forms, and Tits operators.

Supported types: A_n as trace-zero (n+1)x(n+1) matrices, B2 as so(5) (5x5),
C2 as sp(4) (4x4).  Every model is validated at load time against the Serre
presentation; nothing hardcoded is trusted without machine verification.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .realizations import symmetrizer
from .sparse import SparseMatrix, solve_linear, invert


def _mat(n: int, entries: dict) -> SparseMatrix:
    m = SparseMatrix(n, n)
    for (i, j), v in entries.items():
        m[i, j] = Fraction(v)
    return m


def _bracket(x: SparseMatrix, y: SparseMatrix) -> SparseMatrix:
    return x.matmul(y) - y.matmul(x)


def _vec(m: SparseMatrix) -> tuple:
    return tuple(
        m.entries.get((i, j), Fraction(0)) for i in range(m.rows) for j in range(m.cols)
    )


def nilpotent_exp(x: SparseMatrix) -> SparseMatrix:
    """Exact exp of a nilpotent matrix; errors if x is not nilpotent."""
    n = x.rows
    out = SparseMatrix.identity(n)
    term = SparseMatrix.identity(n)
    for k in range(1, n + 1):
        term = term.matmul(x).scale(Fraction(1, k))
        if term.is_zero():
            return out
        out = out + term
    if not term.matmul(x).is_zero():
        raise ValueError("matrix is not nilpotent; exponential is not a finite sum")
    return out


def tits_operator(e: SparseMatrix, f: SparseMatrix) -> SparseMatrix:
    """The triple exponential exp(e) exp(-f) exp(e) on an integrable module."""
    return nilpotent_exp(e).matmul(nilpotent_exp(-f)).matmul(nilpotent_exp(e))


CARTAN_MATRICES: dict[str, list[list[int]]] = {
    "A1": [[2]],
    "A2": [[2, -1], [-1, 2]],
    "A3": [[2, -1, 0], [-1, 2, -1], [0, -1, 2]],
    "B2": [[2, -1], [-2, 2]],
    "C2": [[2, -2], [-1, 2]],
}


@dataclass
class FiniteModel:
    """Matrix model of a finite-type algebra with Chevalley generators."""

    name: str
    a: list[list[Fraction]]
    d: list[Fraction]
    size: int  # matrices are size x size
    e: list[SparseMatrix]
    f: list[SparseMatrix]
    h: list[SparseMatrix]
    kappa: Fraction  # invariant form is kappa * Tr(xy)

    @property
    def n(self) -> int:
        return len(self.a)

    def form(self, x: SparseMatrix, y: SparseMatrix) -> Fraction:
        tr = Fraction(0)
        prod = x.matmul(y)
        for i in range(self.size):
            tr += prod[i, i]
        return self.kappa * tr

    def fundamental_coweight(self, i: int) -> SparseMatrix:
        """Element of the Cartan with alpha_j(w) = delta_ij."""
        n = self.n
        amat = SparseMatrix.from_rows(
            [[Fraction(self.a[k][j]) for k in range(n)] for j in range(n)]
        )
        b = SparseMatrix(n, 1)
        b[i, 0] = Fraction(1)
        sol = solve_linear(amat, b)
        if not sol.consistent or sol.rank < n:
            raise ValueError("fundamental coweights need an invertible Cartan matrix")
        out = SparseMatrix(self.size, self.size)
        for k in range(n):
            c = sol.particular[k, 0]
            if c:
                out = out + self.h[k].scale(c)
        return out


def _validate_model(m: FiniteModel) -> None:
    n = m.n
    a = m.a
    for i in range(n):
        for j in range(n):
            if not _bracket(m.h[i], m.h[j]).is_zero():
                raise ValueError("Cartan is not abelian")
            lhs = _bracket(m.h[i], m.e[j])
            if lhs != m.e[j].scale(a[i][j]):
                raise ValueError(f"[h_{i}, e_{j}] != a[{i}][{j}] e_{j}")
            lhs = _bracket(m.h[i], m.f[j])
            if lhs != m.f[j].scale(-a[i][j]):
                raise ValueError(f"[h_{i}, f_{j}] relation fails")
            lhs = _bracket(m.e[i], m.f[j])
            if i == j:
                if lhs != m.h[i]:
                    raise ValueError(f"[e_{i}, f_{i}] != h_{i}")
            elif not lhs.is_zero():
                raise ValueError(f"[e_{i}, f_{j}] != 0")
    # Serre relations ad(x_i)^(1 - a_ij)(x_j) = 0
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            for fam in (m.e, m.f):
                acc = fam[j]
                for _ in range(1 - int(a[i][j])):
                    acc = _bracket(fam[i], acc)
                if not acc.is_zero():
                    raise ValueError(f"Serre relation fails for ({i},{j})")
    # invariant form normalization on the Cartan
    for i in range(n):
        for j in range(n):
            if m.form(m.h[i], m.h[j]) != m.d[i] * a[j][i]:
                raise ValueError("trace form does not match d_i alpha_i on the Cartan")


def _sl_model(n: int) -> FiniteModel:
    size = n + 1
    a = [[Fraction(x) for x in row] for row in _a_type_cartan(n)]
    e = [_mat(size, {(i, i + 1): 1}) for i in range(n)]
    f = [_mat(size, {(i + 1, i): 1}) for i in range(n)]
    h = [_mat(size, {(i, i): 1, (i + 1, i + 1): -1}) for i in range(n)]
    d = [Fraction(1)] * n
    return FiniteModel(f"A{n}", a, d, size, e, f, h, Fraction(1))


def _a_type_cartan(n: int) -> list[list[int]]:
    return [
        [2 if i == j else (-1 if abs(i - j) == 1 else 0) for j in range(n)]
        for i in range(n)
    ]


def _so5_model() -> FiniteModel:
    a = [[Fraction(x) for x in row] for row in CARTAN_MATRICES["B2"]]
    e1 = _mat(5, {(0, 1): 1, (3, 4): -1})
    f1 = _mat(5, {(1, 0): 1, (4, 3): -1})
    e2 = _mat(5, {(1, 2): 1, (2, 3): -1})
    f2 = _mat(5, {(2, 1): 2, (3, 2): -2})
    h1 = _bracket(e1, f1)
    h2 = _bracket(e2, f2)
    d = symmetrizer(a)
    return FiniteModel("B2", a, d, 5, [e1, e2], [f1, f2], [h1, h2], Fraction(1, 2))


def _sp4_model() -> FiniteModel:
    a = [[Fraction(x) for x in row] for row in CARTAN_MATRICES["C2"]]
    e1 = _mat(4, {(0, 1): 1, (3, 2): -1})
    f1 = _mat(4, {(1, 0): 1, (2, 3): -1})
    e2 = _mat(4, {(1, 3): 1})
    f2 = _mat(4, {(3, 1): 1})
    h1 = _bracket(e1, f1)
    h2 = _bracket(e2, f2)
    d = symmetrizer(a)
    return FiniteModel("C2", a, d, 4, [e1, e2], [f1, f2], [h1, h2], Fraction(1))


_MODEL_CACHE: dict[str, FiniteModel] = {}


def finite_model(name: str) -> FiniteModel:
    """Load and validate a finite-type matrix model by name (A1, A2, ..., B2, C2)."""
    if name not in _MODEL_CACHE:
        if name.startswith("A") and name[1:].isdigit():
            model = _sl_model(int(name[1:]))
        elif name == "B2":
            model = _so5_model()
        elif name == "C2":
            model = _sp4_model()
        else:
            raise ValueError(f"no matrix model for type {name!r}")
        _validate_model(model)
        _MODEL_CACHE[name] = model
    return _MODEL_CACHE[name]


def model_for_cartan_matrix(a) -> FiniteModel:
    """Find the supported finite-type model whose Cartan matrix equals a."""
    a = [[Fraction(x) for x in row] for row in a]
    n = len(a)
    if a == [[Fraction(x) for x in row] for row in _a_type_cartan(n)]:
        return finite_model(f"A{n}")
    for name in ("B2", "C2"):
        if a == [[Fraction(x) for x in row] for row in CARTAN_MATRICES[name]]:
            return finite_model(name)
    raise ValueError("unsupported Cartan matrix for a finite-type matrix model")


# -- root decomposition -------------------------------------------------------


@dataclass
class RootSystemData:
    model: FiniteModel
    positive_roots: list[tuple[int, ...]]  # coordinates in the simple roots
    e_vectors: dict[tuple[int, ...], SparseMatrix]
    f_vectors: dict[tuple[int, ...], SparseMatrix]
    # for non-simple roots: (simple index i, lower root) with e_r = [e_i, e_lower]
    construction: dict[tuple[int, ...], tuple[int, tuple[int, ...]]] = None

    def support(self, root: tuple[int, ...]) -> set[int]:
        return {i for i, c in enumerate(root) if c}

    def representation(self, e_gens, f_gens, h_gens):
        """Images of all basis root vectors in a module given on generators."""
        rep: dict = {}
        n = self.model.n
        for i in range(n):
            simple = tuple(1 if k == i else 0 for k in range(n))
            rep["e", simple] = e_gens[i]
            rep["f", simple] = f_gens[i]
            rep["h", i] = h_gens[i]
        for root in self.positive_roots:
            if ("e", root) in rep:
                continue
            i, lower = self.construction[root]
            rep["e", root] = _bracket(e_gens[i], rep["e", lower])
            rep["f", root] = _bracket(f_gens[i], rep["f", lower])
        return rep


def root_decomposition(model: FiniteModel) -> RootSystemData:
    """Positive and negative root vectors built by parallel bracketing.

    The Chevalley involution guarantees [f_i, f_a] vanishes exactly when
    [e_i, e_a] does, so one bracketing pattern serves both signs.
    """
    n = model.n
    pos: dict[tuple[int, ...], SparseMatrix] = {}
    neg: dict[tuple[int, ...], SparseMatrix] = {}
    construction: dict[tuple[int, ...], tuple[int, tuple[int, ...]]] = {}
    frontier: dict[tuple[int, ...], tuple[SparseMatrix, SparseMatrix]] = {}
    for i in range(n):
        root = tuple(1 if k == i else 0 for k in range(n))
        pos[root] = model.e[i]
        neg[root] = model.f[i]
        frontier[root] = (model.e[i], model.f[i])
    while frontier:
        new: dict[tuple[int, ...], tuple[SparseMatrix, SparseMatrix]] = {}
        for root, (evec, fvec) in sorted(frontier.items()):
            for i in range(n):
                ecand = _bracket(model.e[i], evec)
                if ecand.is_zero():
                    continue
                target = tuple(c + (1 if k == i else 0) for k, c in enumerate(root))
                if target in pos:
                    continue
                fcand = _bracket(model.f[i], fvec)
                if fcand.is_zero():
                    raise ValueError("root space asymmetry; model is inconsistent")
                new[target] = (ecand, fcand)
                pos[target] = ecand
                neg[target] = fcand
                construction[target] = (i, root)
        frontier = new
    order = sorted(pos, key=lambda r: (sum(r), r))
    return RootSystemData(
        model,
        order,
        {r: pos[r] for r in order},
        {r: neg[r] for r in order},
        construction,
    )
