"""Truncated associator axioms (pentagon, hexagons, duality, 2-jet) checked on
explicit Drinfeld-Yetter modules, with leg-insertion maps for up to four
tensor factors.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce

from .liebialg import DYModule, dy_r_matrix, dy_tensor
from .series import TruncatedSeries, series_exp
from .sparse import SparseMatrix, kron


def tensor_permutation(dims: list[int], source_of: list[int]) -> SparseMatrix:
    """Permutation operator: output leg s carries input leg source_of[s]."""
    n = len(dims)
    out_dims = [dims[source_of[s]] for s in range(n)]
    total = 1
    for d in dims:
        total *= d
    mat = SparseMatrix(total, total)
    # enumerate input multi-indices
    strides_in = [0] * n
    acc = 1
    for k in reversed(range(n)):
        strides_in[k] = acc
        acc *= dims[k]
    strides_out = [0] * n
    acc = 1
    for k in reversed(range(n)):
        strides_out[k] = acc
        acc *= out_dims[k]

    def walk(k, idx, row_in):
        if k == n:
            row_out = sum(idx[source_of[s]] * strides_out[s] for s in range(n))
            mat[row_out, row_in] = Fraction(1)
            return
        for v in range(dims[k]):
            idx.append(v)
            walk(k + 1, idx, row_in + v * strides_in[k])
            idx.pop()

    walk(0, [], 0)
    return mat


def place_operator(
    op: SparseMatrix, groups: tuple[tuple[int, ...], ...], dims: list[int]
) -> SparseMatrix:
    """Insert an operator acting on grouped legs into the full tensor product.

    groups lists 0-based leg indices; the operator acts on the tensor product
    of the grouped legs in the listed order, identity elsewhere.
    """
    flat = [leg for g in groups for leg in g]
    if len(set(flat)) != len(flat):
        raise ValueError("legs may appear in at most one group")
    idle = [k for k in range(len(dims)) if k not in flat]
    order = flat + idle
    perm = tensor_permutation(dims, order)
    rest = 1
    for k in idle:
        rest *= dims[k]
    big = kron(op, SparseMatrix.identity(rest)) if rest > 1 else op
    return perm.transpose().matmul(big).matmul(perm)


@dataclass
class LegContext:
    """Fixed modules V_1..V_n with cached grouped tensor modules."""

    modules: list[DYModule]

    def __post_init__(self):
        self._cache: dict[tuple[int, ...], DYModule] = {}

    @property
    def dims(self) -> list[int]:
        return [m.dim for m in self.modules]

    def group_module(self, group: tuple[int, ...]) -> DYModule:
        if group not in self._cache:
            mods = [self.modules[k] for k in group]
            self._cache[group] = reduce(dy_tensor, mods)
        return self._cache[group]

    def omega(self, g1: tuple[int, ...], g2: tuple[int, ...]) -> SparseMatrix:
        _, om = dy_r_matrix(self.group_module(g1), self.group_module(g2))
        return place_operator(om, (g1, g2), self.dims)

    def phi_jet(
        self,
        g1: tuple[int, ...],
        g2: tuple[int, ...],
        g3: tuple[int, ...],
        coefficient: Fraction,
    ) -> SparseMatrix:
        """The h^2 coefficient of the associator 2-jet on three grouped legs."""
        om12 = self.omega(g1, g2)
        om23 = self.omega(g2, g3)
        return (om12.matmul(om23) - om23.matmul(om12)).scale(coefficient)


def _phi_series(ctx: LegContext, groups, order: int, coefficient: Fraction) -> TruncatedSeries:
    total = 1
    for d in ctx.dims:
        total *= d
    coeffs = [SparseMatrix.identity(total)] + [SparseMatrix(total, total) for _ in range(order)]
    if order >= 2:
        coeffs[2] = ctx.phi_jet(*groups, coefficient)
    return TruncatedSeries(coeffs, order)


def _exp_half_omega(ctx: LegContext, g1, g2, order: int) -> TruncatedSeries:
    om = ctx.omega(g1, g2).scale(Fraction(1, 2))
    return series_exp(om, 1, order)


@dataclass
class RelationResult:
    name: str
    holds: bool
    failing_degree: int | None = None

    def __str__(self):
        if self.holds:
            return f"{self.name}: ok"
        return f"{self.name}: fails at h^{self.failing_degree}"


def _compare(name: str, lhs: TruncatedSeries, rhs: TruncatedSeries) -> RelationResult:
    diff = lhs - rhs
    deg = diff.first_nonzero_degree()
    return RelationResult(name, deg is None, deg)


def check_associator_axioms(
    modules: list[DYModule],
    order: int = 2,
    coefficient: Fraction = Fraction(1, 24),
) -> list[RelationResult]:
    """Pentagon on four legs, hexagons and duality on three, all mod h^(order+1).

    The associator is the 2-jet 1 + coefficient * h^2 [Omega_12, Omega_23];
    the documented value of the coefficient is 1/24, and perturbing it makes
    the hexagons fail at h^2 (the shipped negative control).
    """
    if order > 2:
        raise ValueError("only the 2-jet of the associator is available")
    if len(modules) < 4:
        raise ValueError("need four modules (pentagon has four legs)")
    results: list[RelationResult] = []

    tri = LegContext(modules[:3])
    phi = lambda *groups: _phi_series(tri, groups, order, coefficient)
    ex = lambda g1, g2: _exp_half_omega(tri, g1, g2, order)
    one = (0,)
    two = (1,)
    three = (2,)

    # hexagon 1: exp(Omega_{12,3}/2) = Phi_{3,1,2} exp(Om_13/2) Phi_{1,3,2}^-1 exp(Om_23/2) Phi_{1,2,3}
    lhs = _exp_half_omega(tri, (0, 1), (2,), order)
    rhs = (
        phi(three, one, two)
        * ex(one, three)
        * phi(one, three, two).inverse()
        * ex(two, three)
        * phi(one, two, three)
    )
    results.append(_compare("hexagon (legs 12,3)", lhs, rhs))

    # hexagon 2: exp(Omega_{1,23}/2) = Phi_{2,3,1}^-1 exp(Om_13/2) Phi_{2,1,3} exp(Om_12/2) Phi_{1,2,3}^-1
    lhs = _exp_half_omega(tri, (0,), (1, 2), order)
    rhs = (
        phi(two, three, one).inverse()
        * ex(one, three)
        * phi(two, one, three)
        * ex(one, two)
        * phi(one, two, three).inverse()
    )
    results.append(_compare("hexagon (legs 1,23)", lhs, rhs))

    results.append(
        _compare("duality", phi(three, two, one), phi(one, two, three).inverse())
    )

    quad = LegContext(modules[:4])
    phi4 = lambda *groups: _phi_series(quad, groups, order, coefficient)
    lhs = phi4((0,), (1,), (2, 3)) * phi4((0, 1), (2,), (3,))
    rhs = phi4((1,), (2,), (3,)) * phi4((0,), (1, 2), (3,)) * phi4((0,), (1,), (2,))
    results.append(_compare("pentagon", lhs, rhs))
    return results


def omega_leg_additivity(modules: list[DYModule]) -> bool:
    """Omega_{12,3} = Omega_13 + Omega_23: first-order content of the hexagons."""
    ctx = LegContext(modules[:3])
    lhs = ctx.omega((0, 1), (2,))
    rhs = ctx.omega((0,), (2,)) + ctx.omega((1,), (2,))
    return lhs == rhs
