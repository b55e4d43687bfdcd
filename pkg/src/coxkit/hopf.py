"""Finite-dimensional Hopf algebras by structure tensors, Drinfeld-Yetter
modules over them, R-matrices, and the finite quantum double.

All Sweedler-leg manipulations are expanded mechanically on explicit tensors;
dual bases are never identified implicitly.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from .liebialg import AxiomReport
from .sparse import SparseMatrix, invert, kron, solve_linear


@dataclass
class HopfAlgebra:
    """mult[i][j] -> vector, comult[k] -> matrix of (i,j) coefficients, etc."""

    dim: int
    mult: list[list[dict[int, Fraction]]]
    comult: list[dict[tuple[int, int], Fraction]]
    unit: dict[int, Fraction]
    counit: list[Fraction]
    antipode: SparseMatrix
    names: list[str] | None = None

    def product_vec(self, x: dict[int, Fraction], y: dict[int, Fraction]) -> dict[int, Fraction]:
        out: dict[int, Fraction] = {}
        for i, a in x.items():
            for j, b in y.items():
                for k, c in self.mult[i][j].items():
                    s = out.get(k, Fraction(0)) + a * b * c
                    if s:
                        out[k] = s
                    else:
                        out.pop(k, None)
        return out

    def antipode_inverse(self) -> SparseMatrix:
        return invert(self.antipode)

    def left_mult_matrix(self, x: dict[int, Fraction]) -> SparseMatrix:
        m = SparseMatrix(self.dim, self.dim)
        for i, a in x.items():
            for j in range(self.dim):
                for k, c in self.mult[i][j].items():
                    m[k, j] = m[k, j] + a * c
        return m


def verify_hopf(h: HopfAlgebra) -> AxiomReport:
    rep = AxiomReport()
    d = h.dim
    ok = True
    for i in range(d):
        for j in range(d):
            for k in range(d):
                lhs = h.product_vec(h.mult[i][j], {k: Fraction(1)})
                rhs = h.product_vec({i: Fraction(1)}, h.mult[j][k])
                if lhs != rhs:
                    ok = False
    rep.record("associativity", ok)
    ok = all(
        h.product_vec(h.unit, {i: Fraction(1)}) == {i: Fraction(1)}
        and h.product_vec({i: Fraction(1)}, h.unit) == {i: Fraction(1)}
        for i in range(d)
    )
    rep.record("unit", ok)
    # coassociativity: (Delta (x) id) Delta = (id (x) Delta) Delta
    ok = True
    for x in range(d):
        lhs: dict[tuple[int, int, int], Fraction] = {}
        rhs: dict[tuple[int, int, int], Fraction] = {}
        for (i, j), c in h.comult[x].items():
            for (p, q), c2 in h.comult[i].items():
                _acc(lhs, (p, q, j), c * c2)
            for (p, q), c2 in h.comult[j].items():
                _acc(rhs, (i, p, q), c * c2)
        if lhs != rhs:
            ok = False
            break
    rep.record("coassociativity", ok)
    ok = True
    for x in range(d):
        left = {j: Fraction(0) for j in range(d)}
        right = {j: Fraction(0) for j in range(d)}
        for (i, j), c in h.comult[x].items():
            left[j] += c * h.counit[i]
            right[i] += c * h.counit[j]
        left = {k: v for k, v in left.items() if v}
        right = {k: v for k, v in right.items() if v}
        if left != {x: Fraction(1)} or right != {x: Fraction(1)}:
            ok = False
            break
    rep.record("counit", ok)
    # Delta is an algebra map
    ok = True
    for x in range(d):
        for y in range(d):
            lhs2: dict[tuple[int, int], Fraction] = {}
            for k, c in h.mult[x][y].items():
                for (i, j), c2 in h.comult[k].items():
                    _acc(lhs2, (i, j), c * c2)
            rhs2: dict[tuple[int, int], Fraction] = {}
            for (i1, j1), c1 in h.comult[x].items():
                for (i2, j2), c2 in h.comult[y].items():
                    for p, cp in h.mult[i1][i2].items():
                        for q, cq in h.mult[j1][j2].items():
                            _acc(rhs2, (p, q), c1 * c2 * cp * cq)
            if lhs2 != rhs2:
                ok = False
    rep.record("bialgebra compatibility", ok)
    ok = True
    for x in range(d):
        acc_l: dict[int, Fraction] = {}
        acc_r: dict[int, Fraction] = {}
        for (i, j), c in h.comult[x].items():
            s_i = {k: h.antipode[k, i] for k in range(d) if h.antipode[k, i]}
            for k, v in h.product_vec(s_i, {j: Fraction(1)}).items():
                _acc1(acc_l, k, c * v)
            s_j = {k: h.antipode[k, j] for k in range(d) if h.antipode[k, j]}
            for k, v in h.product_vec({i: Fraction(1)}, s_j).items():
                _acc1(acc_r, k, c * v)
        target = {k: v * h.counit[x] for k, v in h.unit.items() if v * h.counit[x]}
        if acc_l != target or acc_r != target:
            ok = False
            break
    rep.record("antipode identity", ok)
    return rep


def _acc(d, key, val):
    s = d.get(key, Fraction(0)) + val
    if s:
        d[key] = s
    else:
        d.pop(key, None)


def _acc1(d, key, val):
    s = d.get(key, Fraction(0)) + val
    if s:
        d[key] = s
    else:
        d.pop(key, None)


# -- standard fixtures ---------------------------------------------------------


def group_algebra(order: int) -> HopfAlgebra:
    """k[Z/order]: group-likes g^0..g^(order-1)."""
    d = order
    mult = [[{(i + j) % d: Fraction(1)} for j in range(d)] for i in range(d)]
    comult = [{(i, i): Fraction(1)} for i in range(d)]
    unit = {0: Fraction(1)}
    counit = [Fraction(1)] * d
    antipode = SparseMatrix(d, d)
    for i in range(d):
        antipode[(-i) % d, i] = Fraction(1)
    return HopfAlgebra(d, mult, comult, unit, counit, antipode,
                       [f"g^{i}" for i in range(d)])


def sweedler_algebra() -> HopfAlgebra:
    """The 4-dimensional Hopf algebra <g, x | g^2=1, x^2=0, xg=-gx>."""
    names = ["1", "g", "x", "gx"]
    idx = {n: k for k, n in enumerate(names)}
    d = 4
    # explicit multiplication table with signs
    table = {
        ("1", "1"): (1, "1"), ("1", "g"): (1, "g"), ("1", "x"): (1, "x"), ("1", "gx"): (1, "gx"),
        ("g", "1"): (1, "g"), ("g", "g"): (1, "1"), ("g", "x"): (1, "gx"), ("g", "gx"): (1, "x"),
        ("x", "1"): (1, "x"), ("x", "g"): (-1, "gx"), ("x", "x"): (0, "1"), ("x", "gx"): (0, "1"),
        ("gx", "1"): (1, "gx"), ("gx", "g"): (-1, "x"), ("gx", "x"): (0, "1"), ("gx", "gx"): (0, "1"),
    }
    mult = [[{} for _ in range(d)] for _ in range(d)]
    for (a, b), (s, c) in table.items():
        if s:
            mult[idx[a]][idx[b]] = {idx[c]: Fraction(s)}
    # Delta(g) = g(x)g, Delta(x) = x(x)1 + g(x)x, Delta(gx) = gx(x)g + 1(?)...
    comult = [dict() for _ in range(d)]
    comult[idx["1"]] = {(idx["1"], idx["1"]): Fraction(1)}
    comult[idx["g"]] = {(idx["g"], idx["g"]): Fraction(1)}
    comult[idx["x"]] = {
        (idx["x"], idx["1"]): Fraction(1),
        (idx["g"], idx["x"]): Fraction(1),
    }
    # Delta(gx) = Delta(g) Delta(x) = gx (x) g + 1 (x) gx
    comult[idx["gx"]] = {
        (idx["gx"], idx["g"]): Fraction(1),
        (idx["1"], idx["gx"]): Fraction(1),
    }
    unit = {idx["1"]: Fraction(1)}
    counit = [Fraction(1), Fraction(1), Fraction(0), Fraction(0)]
    antipode = SparseMatrix(d, d)
    antipode[idx["1"], idx["1"]] = Fraction(1)
    antipode[idx["g"], idx["g"]] = Fraction(1)
    antipode[idx["gx"], idx["x"]] = Fraction(-1)
    antipode[idx["x"], idx["gx"]] = Fraction(1)
    return HopfAlgebra(d, mult, comult, unit, counit, antipode, names)


# -- tensor-algebra helpers over a Hopf algebra --------------------------------


def iterated_comult(h: HopfAlgebra, x: int, legs: int) -> dict[tuple, Fraction]:
    """Delta^(legs-1) of a basis element, as a map from leg tuples."""
    out = {(x,): Fraction(1)}
    for _ in range(legs - 1):
        nxt: dict[tuple, Fraction] = {}
        for key, c in out.items():
            last = key[-1]
            for (i, j), c2 in h.comult[last].items():
                _acc(nxt, key[:-1] + (i, j), c * c2)
        out = nxt
    return out


def dual_opposite(h: HopfAlgebra) -> HopfAlgebra:
    """The dual Hopf algebra with opposite coproduct, on the dual basis."""
    d = h.dim
    mult = [[{} for _ in range(d)] for _ in range(d)]
    for i in range(d):
        for j in range(d):
            vec: dict[int, Fraction] = {}
            for k in range(d):
                c = h.comult[k].get((i, j), Fraction(0))
                if c:
                    vec[k] = c
            mult[i][j] = vec
    comult = [dict() for _ in range(d)]
    for k in range(d):
        for i in range(d):
            for j in range(d):
                c = h.mult[j][i].get(k, Fraction(0))
                if c:
                    comult[k][i, j] = c
    unit = {i: h.counit[i] for i in range(d) if h.counit[i]}
    counit = [h.unit.get(i, Fraction(0)) for i in range(d)]
    # antipode of H* is S^t; the opposite coproduct inverts it
    antipode = invert(h.antipode).transpose()
    out = HopfAlgebra(d, mult, comult, unit, counit, antipode,
                      [f"{n}*" for n in (h.names or map(str, range(d)))])
    return out


@dataclass
class QuantumDouble:
    base: HopfAlgebra
    dual: HopfAlgebra
    double: HopfAlgebra
    r_element: dict[tuple[int, int], Fraction]  # element of DB (x) DB

    def index(self, a: int, i: int) -> int:
        return a * self.base.dim + i


def quantum_double(h: HopfAlgebra) -> QuantumDouble:
    """DB = H (x) H^dual-cop with Drinfeld's cross multiplication."""
    d = h.dim
    hd = dual_opposite(h)
    dd = d * d
    sinv = invert(h.antipode)

    def idx(a, i):
        return a * d + i

    # Delta^(2) legs of H and of H-degree-sign, precomputed
    legs3_h = [iterated_comult(h, a, 3) for a in range(d)]
    legs3_f = [iterated_comult(hd, i, 3) for i in range(d)]

    mult = [[{} for _ in range(dd)] for _ in range(dd)]
    for a in range(d):
        for i in range(d):
            for c_ in range(d):
                for j in range(d):
                    # (b_a (x) f^i) . (b_c (x) f^j)
                    vec: dict[int, Fraction] = {}
                    for (p, q, r), cb in legs3_h[c_].items():
                        for (k, l, m), cf in legs3_f[i].items():
                            # <S^-1(b_p), f^k> <b_r, f^m>
                            w1 = sinv[k, p]
                            if not w1:
                                continue
                            if r != m:
                                continue
                            coeff = cb * cf * w1
                            for bq, cb2 in h.mult[a][q].items():
                                for fq, cf2 in hd.mult[l][j].items():
                                    _acc1(vec, idx(bq, fq), coeff * cb2 * cf2)
                    mult[idx(a, i)][idx(c_, j)] = vec

    comult = [dict() for _ in range(dd)]
    for a in range(d):
        for i in range(d):
            entry: dict[tuple[int, int], Fraction] = {}
            for (a1, a2), cb in h.comult[a].items():
                for (i1, i2), cf in hd.comult[i].items():
                    _acc(entry, (idx(a1, i1), idx(a2, i2)), cb * cf)
            comult[idx(a, i)] = entry

    unit: dict[int, Fraction] = {}
    for a, cb in h.unit.items():
        for i, cf in hd.unit.items():
            unit[idx(a, i)] = cb * cf
    counit = [Fraction(0)] * dd
    for a in range(d):
        for i in range(d):
            counit[idx(a, i)] = h.counit[a] * hd.counit[i]

    antipode = _solve_antipode(dd, mult, comult, unit, counit)
    db = HopfAlgebra(dd, mult, comult, unit, counit, antipode)
    r_elem: dict[tuple[int, int], Fraction] = {}
    for a in range(d):
        left: dict[int, Fraction] = {}
        for i, cf in hd.unit.items():
            left[idx(a, i)] = cf
        right: dict[int, Fraction] = {}
        for b_, cb in h.unit.items():
            right[idx(b_, a)] = cb
        for l, cl in left.items():
            for r, cr in right.items():
                _acc(r_elem, (l, r), cl * cr)
    return QuantumDouble(h, hd, db, r_elem)


def _solve_antipode(dim, mult, comult, unit, counit) -> SparseMatrix:
    """The antipode is the convolution inverse of the identity; solve for it."""
    nvar = dim * dim

    def var(r, c):
        return r * dim + c

    amat = SparseMatrix(dim * dim, nvar)
    bmat = SparseMatrix(dim * dim, 1)
    row = 0
    for x in range(dim):
        # sum_{(1)(2)} S(x_1) x_2 = unit * counit(x), coefficient of each k
        acc_rows: dict[int, dict[int, Fraction]] = {}
        for (i, j), c in comult[x].items():
            # S(x_i) = sum_r S[r,i] b_r; b_r * b_j -> mult[r][j]
            for r in range(dim):
                for k, c2 in mult[r][j].items():
                    acc_rows.setdefault(k, {})
                    key = var(r, i)
                    acc_rows[k][key] = acc_rows[k].get(key, Fraction(0)) + c * c2
        for k in range(dim):
            for key, v in acc_rows.get(k, {}).items():
                if v:
                    amat[row, key] = v
            target = unit.get(k, Fraction(0)) * counit[x]
            if target:
                bmat[row, 0] = target
            row += 1
    sol = solve_linear(amat, bmat)
    if not sol.consistent:
        raise ValueError("no antipode: the bialgebra is not Hopf")
    s = SparseMatrix(dim, dim)
    for r in range(dim):
        for c in range(dim):
            v = sol.particular[var(r, c), 0]
            if v:
                s[r, c] = v
    return s


# -- tensor elements of DB^(x)n -------------------------------------------------


def tensor_mult(h: HopfAlgebra, x: dict, y: dict) -> dict:
    """Componentwise product of elements of H^(x)n given as leg-tuple dicts."""
    out: dict = {}
    for kx, cx in x.items():
        for ky, cy in y.items():
            parts = [h.mult[a][b] for a, b in zip(kx, ky)]
            # expand the product of component vectors
            keys = [(), ]
            coefs = [cx * cy]
            for part in parts:
                nk, nc = [], []
                for key, co in zip(keys, coefs):
                    for t, c2 in part.items():
                        nk.append(key + (t,))
                        nc.append(co * c2)
                keys, coefs = nk, nc
            for key, co in zip(keys, coefs):
                _acc(out, key, co)
    return out


def quasitriangularity_report(qd: QuantumDouble) -> AxiomReport:
    rep = AxiomReport()
    db = qd.double
    dd = db.dim
    r = qd.r_element
    # invertibility
    rinv = _invert_tensor2(db, r)
    rep.record("R invertible", rinv is not None)
    if rinv is None:
        return rep
    ok = True
    for x in range(dd):
        # R Delta(x) = Delta^op(x) R
        lhs = tensor_mult(db, r, dict(db.comult[x]))
        rhs = tensor_mult(db, {(j, i): c for (i, j), c in db.comult[x].items()}, r)
        if lhs != rhs:
            ok = False
            break
    rep.record("R conjugates Delta to its opposite", ok)
    # coproduct identities
    r13 = {(i, 0, j): c for (i, j), c in r.items()}
    r13 = _pad_unit(db, r13, 1)
    r23 = {(0, i, j): c for (i, j), c in r.items()}
    r23 = _pad_unit(db, r23, 0)
    r12 = {(i, j, 0): c for (i, j), c in r.items()}
    r12 = _pad_unit(db, r12, 2)
    lhs = {}
    for (i, j), c in r.items():
        for (p, q), c2 in db.comult[i].items():
            _acc(lhs, (p, q, j), c * c2)
    rep.record("(Delta x id)R = R13 R23", lhs == tensor_mult(db, r13, r23))
    lhs = {}
    for (i, j), c in r.items():
        for (p, q), c2 in db.comult[j].items():
            _acc(lhs, (i, p, q), c * c2)
    rep.record("(id x Delta)R = R13 R12", lhs == tensor_mult(db, r13, r12))
    return rep


def _pad_unit(db: HopfAlgebra, elem: dict, leg: int) -> dict:
    out: dict = {}
    for key, c in elem.items():
        for u, cu in db.unit.items():
            k2 = list(key)
            k2[leg] = u
            _acc(out, tuple(k2), c * cu)
    return out


def _invert_tensor2(db: HopfAlgebra, r: dict):
    """Inverse of R in DB (x) DB: try the antipode candidates (S x id)R and
    (S^-1 x id)R, verified by multiplication."""
    one: dict = {}
    for u, cu in db.unit.items():
        for v, cv in db.unit.items():
            _acc(one, (u, v), cu * cv)
    for s in (db.antipode, invert(db.antipode)):
        cand: dict = {}
        for (i, j), c in r.items():
            for k in range(db.dim):
                v = s[k, i]
                if v:
                    _acc(cand, (k, j), c * v)
        if tensor_mult(db, r, cand) == one and tensor_mult(db, cand, r) == one:
            return cand
    return None
