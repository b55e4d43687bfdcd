"""Realizations of a square matrix: minimal/canonical forms, morphism torsors,
symmetrizers, invariant forms, and the Cartan-diagrammatic decision machinery.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, lcm

from .sparse import LinearSolution, SparseMatrix, solve_linear, rank as matrix_rank


def _to_fraction_matrix(a) -> list[list[Fraction]]:
    return [[Fraction(x) for x in row] for row in a]


def matrix_from_rows(rows: list[list[Fraction]]) -> SparseMatrix:
    return SparseMatrix.from_rows(rows)


@dataclass
class Realization:
    """(V, roots, coroots) with alpha_i(h_j) = a_{ji}; vectors are coordinate lists."""

    a: list[list[Fraction]]
    dim: int
    coroots: list[list[Fraction]]  # n vectors in V
    roots: list[list[Fraction]]  # n functionals, stored as row vectors

    @property
    def n(self) -> int:
        return len(self.a)

    def coroot_matrix(self) -> SparseMatrix:
        # columns are the coroots
        return SparseMatrix.from_rows(
            [[self.coroots[j][i] for j in range(self.n)] for i in range(self.dim)]
        )

    def root_matrix(self) -> SparseMatrix:
        return SparseMatrix.from_rows(self.roots)

    def pairing(self, i: int, v: list[Fraction]) -> Fraction:
        return sum((c * x for c, x in zip(self.roots[i], v)), Fraction(0))


class RealizationError(ValueError):
    pass


def is_realization(r: Realization) -> bool:
    try:
        check_realization(r)
        return True
    except RealizationError:
        return False


def check_realization(r: Realization) -> None:
    n = r.n
    rk = matrix_rank(SparseMatrix.from_rows(r.a))
    if r.dim < 2 * n - rk:
        raise RealizationError("dimension below 2n - rank(A)")
    if matrix_rank(r.coroot_matrix()) != n:
        raise RealizationError("coroots are linearly dependent")
    if matrix_rank(r.root_matrix()) != n:
        raise RealizationError("roots are linearly dependent")
    for i in range(n):
        for j in range(n):
            if r.pairing(i, r.coroots[j]) != r.a[j][i]:
                raise RealizationError(
                    f"pairing alpha_{i}(h_{j}) != a[{j}][{i}]"
                )


def minimal_realization(a) -> Realization:
    """The (unique up to isomorphism) realization of dimension 2n - rank(A)."""
    a = _to_fraction_matrix(a)
    n = len(a)
    rk = matrix_rank(SparseMatrix.from_rows(a)) if n else 0
    dim = 2 * n - rk
    coroots = [[Fraction(1) if i == j else Fraction(0) for i in range(dim)] for j in range(n)]
    # first n coordinates of alpha_i pair with the coroots: alpha_i(h_j) = a_ji
    roots = [[a[j][i] for j in range(n)] + [Fraction(0)] * (dim - n) for i in range(n)]
    # complete the root family to full rank using the extra coordinates
    extra = dim - n  # = n - rk
    if extra:
        chosen: list[int] = []
        rows_done: list[list[Fraction]] = []
        base_rank = 0
        for i in range(n):
            cand = rows_done + [[a[j][i] for j in range(n)]]
            r2 = matrix_rank(SparseMatrix.from_rows(cand))
            if r2 > base_rank:
                rows_done = cand
                base_rank = r2
            else:
                chosen.append(i)
        if len(chosen) != extra:
            raise RealizationError("rank completion failed")
        for k, i in enumerate(chosen):
            roots[i][n + k] = Fraction(1)
    out = Realization(a, dim, coroots, roots)
    check_realization(out)
    return out


def canonical_realization(a) -> Realization:
    """Dimension-2n realization with fundamental-coweight-style vectors."""
    a = _to_fraction_matrix(a)
    n = len(a)
    dim = 2 * n
    coroots = [[Fraction(1) if i == j else Fraction(0) for i in range(dim)] for j in range(n)]
    roots = [
        [a[j][i] for j in range(n)]
        + [Fraction(1) if k == i else Fraction(0) for k in range(n)]
        for i in range(n)
    ]
    out = Realization(a, dim, coroots, roots)
    check_realization(out)
    return out


def add_null_subspace(r: Realization, extra: int) -> Realization:
    """Extend by a null subspace: V + k^extra with roots vanishing on it."""
    coroots = [v + [Fraction(0)] * extra for v in r.coroots]
    roots = [v + [Fraction(0)] * extra for v in r.roots]
    out = Realization(r.a, r.dim + extra, coroots, roots)
    check_realization(out)
    return out


def change_basis(r: Realization, g: SparseMatrix) -> Realization:
    """Transport the realization along an invertible map g: V -> V."""
    from .sparse import invert

    ginv = invert(g)
    coroots = [g.apply([Fraction(x) for x in v]) for v in r.coroots]
    roots = [
        [
            sum((Fraction(r.roots[i][k]) * ginv[k, j] for k in range(r.dim)), Fraction(0))
            for j in range(r.dim)
        ]
        for i in range(r.n)
    ]
    out = Realization(r.a, r.dim, coroots, roots)
    check_realization(out)
    return out


@dataclass
class RealizationMorphism:
    source: Realization
    target: Realization
    matrix: SparseMatrix  # target.dim x source.dim

    def validate(self) -> None:
        t = self.matrix
        for j in range(self.source.n):
            img = t.apply(self.source.coroots[j])
            if img != self.target.coroots[j]:
                raise RealizationError(f"coroot {j} not preserved")
        for i in range(self.source.n):
            pulled = [
                sum(
                    (Fraction(self.target.roots[i][k]) * t[k, j] for k in range(self.target.dim)),
                    Fraction(0),
                )
                for j in range(self.source.dim)
            ]
            if pulled != self.source.roots[i]:
                raise RealizationError(f"root {i} not preserved")


def morphism_space(
    v1: Realization, v2: Realization
) -> tuple[RealizationMorphism, list[SparseMatrix]]:
    """One morphism plus a basis of the translation space Hom(V1/V1', roots2-perp).

    The returned affine space is exactly Hom_A(V1, V2); it is never empty.
    """
    if v1.a != v2.a:
        raise RealizationError("realizations of different matrices")
    n = v1.n
    d1, d2 = v1.dim, v2.dim
    unknowns = d2 * d1

    def tvar(i, j):
        return i * d1 + j

    rows: list[dict[int, Fraction]] = []
    rhs: list[Fraction] = []
    # T h1_k = h2_k
    for k in range(n):
        for i in range(d2):
            row = {}
            for j in range(d1):
                c = v1.coroots[k][j]
                if c:
                    row[tvar(i, j)] = c
            rows.append(row)
            rhs.append(v2.coroots[k][i])
    # alpha2_k o T = alpha1_k
    for k in range(n):
        for j in range(d1):
            row = {}
            for i in range(d2):
                c = v2.roots[k][i]
                if c:
                    row[tvar(i, j)] = c
            rows.append(row)
            rhs.append(v1.roots[k][j])

    amat = SparseMatrix(len(rows), unknowns)
    for r_idx, row in enumerate(rows):
        for c_idx, v in row.items():
            amat[r_idx, c_idx] = v
    bmat = SparseMatrix(len(rhs), 1)
    for r_idx, v in enumerate(rhs):
        bmat[r_idx, 0] = v

    sol = solve_linear(amat, bmat)
    if not sol.consistent:
        raise RealizationError("morphism system inconsistent (should not happen)")

    def unflatten(col: SparseMatrix) -> SparseMatrix:
        m = SparseMatrix(d2, d1)
        for (k, _), v in col.entries.items():
            m[k // d1, k % d1] = v
        return m

    particular = unflatten(sol.particular)
    mor = RealizationMorphism(v1, v2, particular)
    mor.validate()
    return mor, [unflatten(k) for k in sol.kernel]


def transpose_realization(r: Realization) -> Realization:
    """The dual realization (V*, coroots as roots, roots as coroots) of A^t."""
    at = [[r.a[j][i] for j in range(r.n)] for i in range(r.n)]
    return Realization(at, r.dim, [list(v) for v in r.roots], [list(v) for v in r.coroots])


# -- symmetrizers and invariant forms ----------------------------------------


class NotSymmetrizable(ValueError):
    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


def symmetrizer(a) -> list[Fraction]:
    """Invertible diagonal D with A D symmetric, normalized to smallest positive
    integers with gcd 1 per indecomposable block; raises with a cycle witness."""
    a = _to_fraction_matrix(a)
    n = len(a)
    for i in range(n):
        for j in range(n):
            if (a[i][j] == 0) != (a[j][i] == 0):
                raise NotSymmetrizable(
                    f"a[{i}][{j}] = 0 but a[{j}][{i}] != 0", witness=(i, j)
                )
    d: list[Fraction | None] = [None] * n
    for start in range(n):
        if d[start] is not None:
            continue
        d[start] = Fraction(1)
        stack = [start]
        component = [start]
        parent = {start: None}
        while stack:
            i = stack.pop()
            for j in range(n):
                if j == i or a[i][j] == 0:
                    continue
                val = d[i] * a[j][i] / a[i][j]
                if d[j] is None:
                    d[j] = val
                    parent[j] = i
                    stack.append(j)
                    component.append(j)
                elif d[j] != val:
                    cycle = _trace_cycle(parent, i, j)
                    raise NotSymmetrizable(
                        f"inconsistent cycle through vertices {cycle}", witness=cycle
                    )
        # normalize the component: smallest integers with gcd 1, first entry positive
        denoms = lcm(*[d[i].denominator for i in component])
        scaled = [int(d[i] * denoms) for i in component]
        g = gcd(*scaled) or 1
        sign = 1 if scaled[0] > 0 else -1
        for i, x in zip(component, scaled):
            d[i] = Fraction(x * sign, g)
    out = [Fraction(x) for x in d]
    # exact symmetry check (also catches sign-inconsistent components)
    for i in range(n):
        for j in range(n):
            if a[i][j] * out[j] != a[j][i] * out[i]:
                raise NotSymmetrizable(
                    f"A D not symmetric at ({i},{j})", witness=(i, j)
                )
    return out


def _trace_cycle(parent, i, j):
    path_i = []
    k = i
    while k is not None:
        path_i.append(k)
        k = parent.get(k)
    path_j = []
    k = j
    while k is not None:
        path_j.append(k)
        k = parent.get(k)
    common = set(path_i) & set(path_j)
    cut_i = next(idx for idx, v in enumerate(path_i) if v in common)
    cut_j = next(idx for idx, v in enumerate(path_j) if v in common)
    return path_i[: cut_i + 1] + list(reversed(path_j[: cut_j]))


def invariant_form(r: Realization, d: list[Fraction]) -> SparseMatrix:
    """Symmetric nondegenerate G with G h_i = d_i alpha_i (rows as functionals)."""
    n, dim = r.n, r.dim
    unknowns = dim * (dim + 1) // 2

    def uvar(i, j):
        i, j = min(i, j), max(i, j)
        return i * dim - i * (i - 1) // 2 + (j - i)

    rows = []
    rhs = []
    for k in range(n):
        for j in range(dim):
            row: dict[int, Fraction] = {}
            for i in range(dim):
                c = r.coroots[k][i]
                if c:
                    var = uvar(i, j)
                    row[var] = row.get(var, Fraction(0)) + c
            rows.append(row)
            rhs.append(d[k] * r.roots[k][j])
    amat = SparseMatrix(len(rows), unknowns)
    for ri, row in enumerate(rows):
        for ci, v in row.items():
            amat[ri, ci] = v
    bmat = SparseMatrix(len(rhs), 1)
    for ri, v in enumerate(rhs):
        bmat[ri, 0] = v
    sol = solve_linear(amat, bmat)
    if not sol.consistent:
        raise RealizationError("no invariant form (matrix not symmetrizable here)")

    def build(col: SparseMatrix) -> SparseMatrix:
        g = SparseMatrix(dim, dim)
        for i in range(dim):
            for j in range(dim):
                v = col[uvar(i, j), 0]
                if v:
                    g[i, j] = v
        return g

    base = build(sol.particular)
    if matrix_rank(base) == dim:
        return base
    # deterministic search through kernel directions for a nondegenerate form
    for coeffs in itertools.product([0, 1, -1, 2], repeat=len(sol.kernel)):
        col = sol.particular.copy()
        for c, k in zip(coeffs, sol.kernel):
            if c:
                col = col + k.scale(Fraction(c))
        g = build(col)
        if matrix_rank(g) == dim:
            return g
    raise RealizationError("could not complete to a nondegenerate invariant form")


# -- the Cartan-diagrammatic decision machinery -------------------------------


@dataclass
class DiagrammaticVerdict:
    kind: str  # diagrammatic_by_sufficient_condition | diagrammatic_by_construction
    #           | obstructed | undetermined
    witness: dict = field(default_factory=dict)

    @property
    def is_diagrammatic(self) -> bool:
        return self.kind.startswith("diagrammatic")


def _submatrix(a, subset: tuple[int, ...]):
    return [[a[i][j] for j in subset] for i in subset]


def _subspace_basis(vectors: list[list[Fraction]], dim: int) -> list[list[Fraction]]:
    """Row-reduced basis of the span, deterministic."""
    rows = [list(map(Fraction, v)) for v in vectors]
    basis: list[list[Fraction]] = []
    pivots: list[int] = []
    for row in rows:
        row = row[:]
        for b, p in zip(basis, pivots):
            if row[p]:
                f = row[p] / b[p]
                row = [x - f * y for x, y in zip(row, b)]
        for p in range(dim):
            if row[p]:
                basis.append(row)
                pivots.append(p)
                break
    return basis


def _intersect(space1: list[list[Fraction]], space2: list[list[Fraction]], dim: int):
    """Basis of the intersection of two spanned subspaces."""
    if not space1 or not space2:
        return []
    m = SparseMatrix.from_rows(
        [list(v) for v in space1] + [[-x for x in v] for v in space2]
    ).transpose()
    sol = solve_linear(m, SparseMatrix(dim, 1))
    out = []
    k1 = len(space1)
    for vec in sol.kernel:
        coeffs = [vec[i, 0] for i in range(k1)]
        v = [Fraction(0)] * dim
        for c, b in zip(coeffs, space1):
            if c:
                v = [x + c * y for x, y in zip(v, b)]
        if any(v):
            out.append(v)
    return _subspace_basis(out, dim)


def _contains(space: list[list[Fraction]], vec: list[Fraction], dim: int) -> bool:
    if not any(vec):
        return True
    if not space:
        return False
    m = SparseMatrix.from_rows(list(space)).transpose()
    b = SparseMatrix(dim, 1)
    for i, v in enumerate(vec):
        if v:
            b[i, 0] = v
    return solve_linear(m, b).consistent


def cartan_diagrammatic_test(a) -> DiagrammaticVerdict:
    """Sufficient condition, explicit zero-matrix construction, or a
    constraint-propagation obstruction; `undetermined` is the honest fallback.
    """
    a = _to_fraction_matrix(a)
    n = len(a)
    verts = tuple(range(n))

    if all(a[i][j] == 0 for i in range(n) for j in range(n)):
        return DiagrammaticVerdict(
            "diagrammatic_by_construction",
            {"reason": "zero matrix; coordinate-split canonical realization"},
        )

    # sufficient condition: det(A_B) != 0 whenever at least two vertices are removed
    ok = True
    for size in range(0, n - 1):
        for subset in itertools.combinations(verts, size):
            sub = _submatrix(a, subset)
            if subset and matrix_rank(SparseMatrix.from_rows(sub)) < len(subset):
                ok = False
                break
        if not ok:
            break
    if ok:
        return DiagrammaticVerdict("diagrammatic_by_sufficient_condition")

    # constraint propagation inside the minimal realization of A
    ambient = minimal_realization(a)
    dim = ambient.dim
    subsets = []
    for size in range(1, n + 1):
        subsets.extend(itertools.combinations(verts, size))

    def coroot_span(subset):
        return _subspace_basis([ambient.coroots[i] for i in subset], dim)

    def required_dim(subset):
        sub = _submatrix(a, subset)
        return 2 * len(subset) - matrix_rank(SparseMatrix.from_rows(sub))

    full_space = _subspace_basis(
        [[Fraction(1) if i == j else Fraction(0) for i in range(dim)] for j in range(dim)],
        dim,
    )
    bound: dict[tuple, list[list[Fraction]]] = {}
    for subset in subsets:
        sub = _submatrix(a, subset)
        if matrix_rank(SparseMatrix.from_rows(sub)) == len(subset):
            bound[subset] = coroot_span(subset)
        else:
            bound[subset] = full_space

    # kernel of alpha_j in the ambient realization
    def ker_alpha(j):
        m = SparseMatrix.from_rows([ambient.roots[j]])
        sol = solve_linear(m, SparseMatrix(1, 1))
        return _subspace_basis([[k[i, 0] for i in range(dim)] for k in sol.kernel], dim)

    kernels = {j: ker_alpha(j) for j in range(n)}

    def orthogonal_vertices(subset):
        out = []
        sset = set(subset)
        for j in range(n):
            if j in sset:
                continue
            if all(a[i][j] == 0 and a[j][i] == 0 for i in subset):
                out.append(j)
        return out

    changed = True
    iterations = 0
    while changed and iterations < 2 * n + 4:
        changed = False
        iterations += 1
        for subset in subsets:
            cur = bound[subset]
            new = cur
            for other in subsets:
                if set(subset) < set(other):
                    new = _intersect(new, bound[other], dim)
            for j in orthogonal_vertices(subset):
                new = _intersect(new, kernels[j], dim)
            if len(new) != len(cur):
                bound[subset] = new
                changed = True

    for subset in subsets:
        req = required_dim(subset)
        got = len(bound[subset])
        if got < req:
            return DiagrammaticVerdict(
                "obstructed",
                {
                    "subdiagram": list(subset),
                    "forced_dim": got,
                    "required_dim": req,
                },
            )
        for i in subset:
            if not _contains(bound[subset], ambient.coroots[i], dim):
                return DiagrammaticVerdict(
                    "obstructed",
                    {
                        "subdiagram": list(subset),
                        "reason": f"forced space omits coroot {i}",
                    },
                )
    return DiagrammaticVerdict("undetermined")
