"""Finite-dimensional Lie bialgebras by structure constants: doubles, Manin
triples, Drinfeld-Yetter modules, r-matrices, and split Borel pairs.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from .finitelie import FiniteModel, root_decomposition, tits_operator
from .sparse import SparseMatrix, kron, solve_linear


Vec = dict[int, Fraction]  # sparse coefficient vector over a basis


@dataclass
class LieBialgebra:
    """bracket[i][j] and cobracket d_k^{ij} as sparse structure constants."""

    dim: int
    bracket: dict[tuple[int, int], Vec] = field(default_factory=dict)
    cobracket: dict[int, dict[tuple[int, int], Fraction]] = field(default_factory=dict)
    basis_names: list[str] | None = None

    def brk(self, i: int, j: int) -> Vec:
        return self.bracket.get((i, j), {})

    def cob(self, k: int) -> dict[tuple[int, int], Fraction]:
        return self.cobracket.get(k, {})

    def bracket_vectors(self, x: Vec, y: Vec) -> Vec:
        out: Vec = {}
        for i, a in x.items():
            for j, b in y.items():
                for k, c in self.brk(i, j).items():
                    s = out.get(k, Fraction(0)) + a * b * c
                    if s:
                        out[k] = s
                    else:
                        out.pop(k, None)
        return out

    def cobracket_vector(self, x: Vec) -> dict[tuple[int, int], Fraction]:
        out: dict[tuple[int, int], Fraction] = {}
        for k, a in x.items():
            for (i, j), c in self.cob(k).items():
                s = out.get((i, j), Fraction(0)) + a * c
                if s:
                    out[i, j] = s
                else:
                    out.pop((i, j), None)
        return out


@dataclass
class AxiomReport:
    checks: list[tuple[str, bool, str]] = field(default_factory=list)

    def record(self, name: str, ok: bool, witness: str = "") -> None:
        self.checks.append((name, ok, witness))

    @property
    def ok(self) -> bool:
        return all(c[1] for c in self.checks)

    def failures(self) -> list[tuple[str, str]]:
        return [(n, w) for n, ok, w in self.checks if not ok]


def verify_bialgebra(b: LieBialgebra) -> AxiomReport:
    """Antisymmetry, Jacobi, co-antisymmetry, co-Jacobi, and the cocycle law."""
    rep = AxiomReport()
    n = b.dim
    anti = all(
        _vec_eq(b.brk(i, j), _vec_neg(b.brk(j, i)))
        for i in range(n)
        for j in range(n)
    )
    rep.record("bracket antisymmetry", anti)
    jac_ok = True
    witness = ""
    for i, j, k in itertools.combinations(range(n), 3):
        acc: Vec = {}
        for (x, y, z) in ((i, j, k), (j, k, i), (k, i, j)):
            term = b.bracket_vectors({x: Fraction(1)}, b.brk(y, z))
            acc = _vec_add(acc, term)
        if acc:
            jac_ok = False
            witness = f"jacobi fails at ({i},{j},{k})"
            break
    rep.record("jacobi", jac_ok, witness)
    coanti = all(
        all(b.cob(k).get((j, i), Fraction(0)) == -c for (i, j), c in b.cob(k).items())
        for k in range(n)
    )
    rep.record("cobracket antisymmetry", coanti)
    rep.record("co-jacobi", _co_jacobi(b))
    rep.record("cocycle", _cocycle(b))
    return rep


def _co_jacobi(b: LieBialgebra) -> bool:
    # Alt (delta tensor id) delta = 0
    n = b.dim
    for k in range(n):
        acc: dict[tuple[int, int, int], Fraction] = {}
        for (i, j), c in b.cob(k).items():
            for (p, q), c2 in b.cob(i).items():
                for trip in ((p, q, j), (j, p, q), (q, j, p)):
                    s = acc.get(trip, Fraction(0)) + c * c2
                    if s:
                        acc[trip] = s
                    else:
                        acc.pop(trip, None)
        if acc:
            return False
    return True


def _cocycle(b: LieBialgebra) -> bool:
    # delta([x,y]) = x . delta(y) - y . delta(x), with the adjoint action on b@b
    n = b.dim
    for x in range(n):
        for y in range(n):
            lhs = b.cobracket_vector(b.brk(x, y))
            rhs: dict[tuple[int, int], Fraction] = {}
            for (i, j), c in b.cob(y).items():
                for k, c2 in b.brk(x, i).items():
                    _acc2(rhs, (k, j), c * c2)
                for k, c2 in b.brk(x, j).items():
                    _acc2(rhs, (i, k), c * c2)
            for (i, j), c in b.cob(x).items():
                for k, c2 in b.brk(y, i).items():
                    _acc2(rhs, (k, j), -c * c2)
                for k, c2 in b.brk(y, j).items():
                    _acc2(rhs, (i, k), -c * c2)
            if lhs != rhs:
                return False
    return True


def _acc2(d, key, val):
    s = d.get(key, Fraction(0)) + val
    if s:
        d[key] = s
    else:
        d.pop(key, None)


def _vec_add(a: Vec, b: Vec) -> Vec:
    out = dict(a)
    for k, v in b.items():
        s = out.get(k, Fraction(0)) + v
        if s:
            out[k] = s
        else:
            out.pop(k, None)
    return out


def _vec_neg(a: Vec) -> Vec:
    return {k: -v for k, v in a.items()}


def _vec_eq(a: Vec, b: Vec) -> bool:
    return _vec_add(a, _vec_neg(b)) == {}


# -- Drinfeld double ----------------------------------------------------------


def drinfeld_double(b: LieBialgebra) -> tuple[LieBialgebra, SparseMatrix]:
    """The double b + b* with its canonical pairing.

    Basis: 0..dim-1 is b, dim..2dim-1 is b*.  Returns (double, form matrix).
    The bracket on b* is the transpose of the cobracket; the mixed bracket is
    the coadjoint action plus the coaction term, fixed by invariance of the
    canonical pairing.
    """
    d = b.dim
    dd = 2 * d
    bracket: dict[tuple[int, int], Vec] = {}

    def put(i, j, vec: Vec):
        if vec:
            bracket[i, j] = dict(vec)
            bracket[j, i] = _vec_neg(vec)

    for i in range(d):
        for j in range(d):
            if i < j and b.brk(i, j):
                put(i, j, b.brk(i, j))
    # bracket of duals: [phi^i, phi^j] = sum_k d_k^{ij} phi^k
    for i in range(d):
        for j in range(i + 1, d):
            vec: Vec = {}
            for k in range(d):
                c = b.cob(k).get((i, j), Fraction(0))
                if c:
                    vec[d + k] = c
            put(d + i, d + j, vec)
    # mixed: [x_i, phi^j] = ad*(x_i)(phi^j) + (phi^j tensor id) delta(x_i)
    for i in range(d):
        for j in range(d):
            vec: Vec = {}
            # coadjoint part: -phi^j([x_i, .]) = -sum_k c_{ik}^j phi^k
            for k in range(d):
                c = b.brk(i, k).get(j, Fraction(0))
                if c:
                    _acc1(vec, d + k, -c)
            # coaction part: (phi^j tensor id) delta(x_i) = sum d_i^{jk} x_k
            for (p, q), c in b.cob(i).items():
                if p == j:
                    _acc1(vec, q, c)
            put(i, d + j, vec)

    double = LieBialgebra(dd, bracket, _double_cobracket(b))
    form = SparseMatrix(dd, dd)
    for i in range(d):
        form[i, d + i] = Fraction(1)
        form[d + i, i] = Fraction(1)
    return double, form


def _acc1(vec: Vec, k: int, v: Fraction):
    s = vec.get(k, Fraction(0)) + v
    if s:
        vec[k] = s
    else:
        vec.pop(k, None)


def _double_cobracket(b: LieBialgebra):
    # delta_double = delta_b on b and -(bracket_b)^t on b*
    d = b.dim
    cob: dict[int, dict[tuple[int, int], Fraction]] = {}
    for k in range(d):
        if b.cob(k):
            cob[k] = dict(b.cob(k))
    for k in range(d):
        entry: dict[tuple[int, int], Fraction] = {}
        for i in range(d):
            for j in range(d):
                c = b.brk(i, j).get(k, Fraction(0))
                if c:
                    entry[d + i, d + j] = -c
        if entry:
            cob[d + k] = entry
    return cob


# -- Manin triples ------------------------------------------------------------


@dataclass
class SubspaceBasis:
    """Subspace of a structure-constant algebra given by spanning vectors."""

    vectors: list[Vec]

    def matrix(self, dim: int) -> SparseMatrix:
        m = SparseMatrix(dim, len(self.vectors))
        for j, vec in enumerate(self.vectors):
            for i, c in vec.items():
                m[i, j] = c
        return m


def manin_triple_check(
    g: LieBialgebra, form: SparseMatrix, plus: SubspaceBasis, minus: SubspaceBasis
) -> AxiomReport:
    """Isotropy, complementarity, closure, invariance, and the pairing iso."""
    rep = AxiomReport()
    dim = g.dim
    rep.record("form symmetric", form == form.transpose())
    inv_ok = True
    witness = ""
    for x in range(dim):
        for y in range(dim):
            for z in range(dim):
                lhs = _form_apply(form, g.brk(x, y), {z: Fraction(1)})
                rhs = _form_apply(form, {x: Fraction(1)}, g.brk(y, z))
                if lhs != rhs:
                    inv_ok = False
                    witness = f"<[x{x},x{y}],x{z}> != <x{x},[x{y},x{z}]>"
                    break
            if not inv_ok:
                break
        if not inv_ok:
            break
    rep.record("form invariant", inv_ok, witness)
    from .sparse import rank as matrix_rank

    rep.record("form nondegenerate", matrix_rank(form) == dim)

    mp, mm = plus.matrix(dim), minus.matrix(dim)
    stacked = mp.hstack(mm)
    rep.record(
        "direct sum decomposition",
        len(plus.vectors) + len(minus.vectors) == dim
        and matrix_rank(stacked) == dim,
    )
    for name, sub in (("plus", plus), ("minus", minus)):
        iso = all(
            _form_apply(form, u, v) == 0
            for u in sub.vectors
            for v in sub.vectors
        )
        rep.record(f"{name} isotropic", iso)
        closed = all(
            _in_span(g.bracket_vectors(u, v), sub, dim)
            for u, v in itertools.combinations(sub.vectors, 2)
        )
        rep.record(f"{name} closed under bracket", closed)
    pairing = SparseMatrix(len(plus.vectors), len(minus.vectors))
    for i, u in enumerate(plus.vectors):
        for j, v in enumerate(minus.vectors):
            val = _form_apply(form, u, v)
            if val:
                pairing[i, j] = val
    rep.record(
        "pairing identifies plus with dual of minus",
        len(plus.vectors) == len(minus.vectors)
        and matrix_rank(pairing) == len(plus.vectors),
    )
    return rep


def _form_apply(form: SparseMatrix, x: Vec, y: Vec) -> Fraction:
    out = Fraction(0)
    for i, a in x.items():
        for j, b in y.items():
            v = form[i, j]
            if v:
                out += a * b * v
    return out


def _in_span(vec: Vec, sub: SubspaceBasis, dim: int) -> bool:
    if not vec:
        return True
    m = sub.matrix(dim)
    b = SparseMatrix(dim, 1)
    for i, c in vec.items():
        b[i, 0] = c
    return solve_linear(m, b).consistent


# -- Drinfeld-Yetter modules --------------------------------------------------


@dataclass
class DYModule:
    """Action matrices per basis element and coaction legs per basis element:
    pi*(v) = sum_i x_i (x) coact[i] v."""

    base: LieBialgebra
    dim: int
    action: list[SparseMatrix]
    coaction: list[SparseMatrix]

    def act(self, x: Vec) -> SparseMatrix:
        out = SparseMatrix(self.dim, self.dim)
        for i, c in x.items():
            out = out + self.action[i].scale(c)
        return out


def trivial_dy_module(b: LieBialgebra) -> DYModule:
    z = SparseMatrix(1, 1)
    return DYModule(b, 1, [z.copy() for _ in range(b.dim)], [z.copy() for _ in range(b.dim)])


def verify_dy(v: DYModule) -> AxiomReport:
    rep = AxiomReport()
    b = v.base
    n = b.dim
    act_ok = True
    for i in range(n):
        for j in range(n):
            lhs = v.action[i].matmul(v.action[j]) - v.action[j].matmul(v.action[i])
            rhs = v.act(b.brk(i, j))
            if lhs != rhs:
                act_ok = False
                break
        if not act_ok:
            break
    rep.record("action is a Lie action", act_ok)

    # coaction axiom: (delta tensor id) pi* = ((12) - id) (id tensor pi*) pi*
    co_ok = True
    lhs: dict[tuple[int, int], SparseMatrix] = {}
    for k in range(n):
        for (i, j), c in b.cob(k).items():
            _macc(lhs, (i, j), v.coaction[k].scale(c), v.dim)
    rhs: dict[tuple[int, int], SparseMatrix] = {}
    for i in range(n):
        for j in range(n):
            prod = v.coaction[j].matmul(v.coaction[i])
            if prod.is_zero():
                continue
            _macc(rhs, (j, i), prod, v.dim)
            _macc(rhs, (i, j), prod.scale(Fraction(-1)), v.dim)
    for key in set(lhs) | set(rhs):
        l = lhs.get(key, SparseMatrix(v.dim, v.dim))
        r = rhs.get(key, SparseMatrix(v.dim, v.dim))
        if l != r:
            co_ok = False
            break
    rep.record("coaction is a Lie coaction", co_ok)
    rep.record("action-coaction compatibility", _dy_compat(v))
    return rep


def _macc(d, key, mat, dim):
    cur = d.get(key)
    d[key] = mat if cur is None else cur + mat
    if d[key].is_zero():
        del d[key]


def _dy_compat(v: DYModule) -> bool:
    """The mixed compatibility in End(b tensor V), leg 0 = b, leg 1 = V."""
    b = v.base
    n = b.dim
    for a in range(n):  # incoming b-basis leg
        # each side is a map V -> b tensor V, written as matrices per b-output-index
        lhs: list[SparseMatrix] = [SparseMatrix(v.dim, v.dim) for _ in range(n)]
        rhs: list[SparseMatrix] = [SparseMatrix(v.dim, v.dim) for _ in range(n)]
        # pi* ( pi(x_a (x) .) )
        for k in range(n):
            lhs[k] = lhs[k] + v.coaction[k].matmul(v.action[a])
        # - (id tensor pi) (12) (id tensor pi*): x_a (x) v -> x_a acts after swap
        for k in range(n):
            lhs[k] = lhs[k] - v.action[a].matmul(v.coaction[k])
        # rhs: ([ , ] tensor id)(id tensor pi*): v -> [x_a, x_i] (x) coact_i v
        for i in range(n):
            for k, c in b.brk(a, i).items():
                rhs[k] = rhs[k] + v.coaction[i].scale(c)
        # rhs -= (id tensor pi)(delta tensor id): x_a (x) v -> delta legs act
        for (i, j), c in b.cob(a).items():
            rhs[i] = rhs[i] - v.action[j].scale(c)
        for k in range(n):
            if lhs[k] != rhs[k]:
                return False
    return True


def dy_tensor(v: DYModule, w: DYModule) -> DYModule:
    if v.base is not w.base and v.base != w.base:
        raise ValueError("modules over different bialgebras")
    b = v.base
    dim = v.dim * w.dim
    idv = SparseMatrix.identity(v.dim)
    idw = SparseMatrix.identity(w.dim)
    action = [kron(v.action[i], idw) + kron(idv, w.action[i]) for i in range(b.dim)]
    coaction = [kron(v.coaction[i], idw) + kron(idv, w.coaction[i]) for i in range(b.dim)]
    return DYModule(b, dim, action, coaction)


def dy_r_matrix(v: DYModule, w: DYModule) -> tuple[SparseMatrix, SparseMatrix]:
    """(r, Omega) on V tensor W: r = (pi_V tensor id)(12)(id tensor pi*_W)."""
    if v.base is not w.base and v.base != w.base:
        raise ValueError("modules over different bialgebras")
    b = v.base
    r = SparseMatrix(v.dim * w.dim, v.dim * w.dim)
    r21 = SparseMatrix(v.dim * w.dim, v.dim * w.dim)
    for i in range(b.dim):
        r = r + kron(v.action[i], w.coaction[i])
        r21 = r21 + kron(v.coaction[i], w.action[i])
    return r, r + r21


def check_cybe(v: DYModule, w: DYModule, u: DYModule) -> bool:
    """[r12,r13] + [r12,r23] + [r13,r23] = 0 on V tensor W tensor U."""
    b = v.base
    dims = (v.dim, w.dim, u.dim)
    idm = [SparseMatrix.identity(d) for d in dims]
    total = dims[0] * dims[1] * dims[2]
    r12 = SparseMatrix(total, total)
    r13 = SparseMatrix(total, total)
    r23 = SparseMatrix(total, total)
    for i in range(b.dim):
        r12 = r12 + kron(kron(v.action[i], w.coaction[i]), idm[2])
        r13 = r13 + kron(kron(v.action[i], idm[1]), u.coaction[i])
        r23 = r23 + kron(kron(idm[0], w.action[i]), u.coaction[i])
    def com(x, y):
        return x.matmul(y) - y.matmul(x)
    total_sum = com(r12, r13) + com(r12, r23) + com(r13, r23)
    return total_sum.is_zero()


def omega_is_morphism(v: DYModule, w: DYModule) -> bool:
    """Omega commutes with the tensor action and intertwines the coaction."""
    _, omega = dy_r_matrix(v, w)
    t = dy_tensor(v, w)
    for i in range(v.base.dim):
        if t.action[i].matmul(omega) != omega.matmul(t.action[i]):
            return False
        if t.coaction[i].matmul(omega) != omega.matmul(t.coaction[i]):
            return False
    return True


# -- morphism checks ----------------------------------------------------------


def is_bialgebra_morphism(
    src: LieBialgebra, dst: LieBialgebra, mat: SparseMatrix
) -> bool:
    """mat: src -> dst preserves bracket and cobracket."""
    for i in range(src.dim):
        for j in range(src.dim):
            img_i = {k: mat[k, i] for k in range(dst.dim) if mat[k, i]}
            img_j = {k: mat[k, j] for k in range(dst.dim) if mat[k, j]}
            lhs = dst.bracket_vectors(img_i, img_j)
            rhs: Vec = {}
            for k, c in src.brk(i, j).items():
                for p in range(dst.dim):
                    if mat[p, k]:
                        _acc1(rhs, p, c * mat[p, k])
            if not _vec_eq(lhs, rhs):
                return False
    for i in range(src.dim):
        lhs2: dict[tuple[int, int], Fraction] = {}
        for (p, q), c in src.cob(i).items():
            for p2 in range(dst.dim):
                a = mat[p2, p]
                if not a:
                    continue
                for q2 in range(dst.dim):
                    bb = mat[q2, q]
                    if bb:
                        _acc2(lhs2, (p2, q2), c * a * bb)
        img_i = {k: mat[k, i] for k in range(dst.dim) if mat[k, i]}
        rhs2 = dst.cobracket_vector(img_i)
        if lhs2 != rhs2:
            return False
    return True


@dataclass
class SplitPair:
    small: LieBialgebra
    big: LieBialgebra
    injection: SparseMatrix  # big.dim x small.dim
    projection: SparseMatrix  # small.dim x big.dim

    def validate(self) -> None:
        if not is_bialgebra_morphism(self.small, self.big, self.injection):
            raise ValueError("injection is not a bialgebra morphism")
        if not is_bialgebra_morphism(self.big, self.small, self.projection):
            raise ValueError("projection is not a bialgebra morphism")
        comp = self.projection.matmul(self.injection)
        if comp != SparseMatrix.identity(self.small.dim):
            raise ValueError("projection o injection is not the identity")
