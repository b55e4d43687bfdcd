"""Classical (non-quantum) fixtures: extended Kac-Moody data, Manin triples,
Borel bialgebras with cobrackets induced by the doubling construction, split
diagrammatic pairs, and Drinfeld-Yetter modules over those Borels.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .finitelie import FiniteModel, RootSystemData, finite_model, model_for_cartan_matrix, root_decomposition
from .liebialg import (
    DYModule,
    LieBialgebra,
    SplitPair,
    SubspaceBasis,
    Vec,
    drinfeld_double,
    is_bialgebra_morphism,
    verify_bialgebra,
    verify_dy,
)
from .sparse import SparseMatrix, invert, kron, solve_linear


@dataclass(frozen=True)
class BasisElement:
    kind: str  # "e" | "f" | "h" | "lam" | "ch" | "clam"  (c* = central copy)
    tag: tuple


@dataclass
class ExtendedAlgebra:
    """g(A) for the canonical (extended=True) or minimal realization, finite type.

    Elements are pairs (matrix in the model, lambda-coefficient vector); the
    lambda generators act on the model like fundamental coweights but are
    independent basis directions.
    """

    model: FiniteModel
    roots: RootSystemData
    extended: bool
    basis: list[BasisElement]
    index: dict[BasisElement, int]
    form: SparseMatrix
    bracket: dict[tuple[int, int], Vec]

    @property
    def dim(self) -> int:
        return len(self.basis)

    def bracket_vectors(self, x: Vec, y: Vec) -> Vec:
        out: Vec = {}
        for i, a in x.items():
            for j, b in y.items():
                for k, c in self.bracket.get((i, j), {}).items():
                    s = out.get(k, Fraction(0)) + a * b * c
                    if s:
                        out[k] = s
                    else:
                        out.pop(k, None)
        return out


def _model_basis(model: FiniteModel, roots: RootSystemData):
    elems = []
    mats = []
    for r in roots.positive_roots:
        elems.append(BasisElement("e", r))
        mats.append(roots.e_vectors[r])
    for r in roots.positive_roots:
        elems.append(BasisElement("f", r))
        mats.append(roots.f_vectors[r])
    for i in range(model.n):
        elems.append(BasisElement("h", (i,)))
        mats.append(model.h[i])
    return elems, mats


def extended_algebra(a, extended: bool = True) -> ExtendedAlgebra:
    """Structure constants and invariant form for g(A) / extended g(A)."""
    model = model_for_cartan_matrix(a)
    roots = root_decomposition(model)
    elems, mats = _model_basis(model, roots)
    n = model.n
    if extended:
        for i in range(n):
            elems.append(BasisElement("lam", (i,)))
    index = {el: k for k, el in enumerate(elems)}
    size = model.size

    # expansion of model matrices over the g-part basis
    gdim = len(mats)
    expand_mat = SparseMatrix(size * size, gdim)
    for j, m in enumerate(mats):
        for (r, c), v in m.entries.items():
            expand_mat[r * size + c, j] = v

    def expand(x: SparseMatrix) -> Vec:
        b = SparseMatrix(size * size, 1)
        for (r, c), v in x.entries.items():
            b[r * size + c, 0] = v
        sol = solve_linear(expand_mat, b)
        if not sol.consistent:
            raise ValueError("element outside the model span")
        return {
            i: sol.particular[i, 0] for i in range(gdim) if sol.particular[i, 0]
        }

    coweights = [model.fundamental_coweight(i) for i in range(n)] if extended else []

    def as_pair(k: int):
        el = elems[k]
        if el.kind == "lam":
            return SparseMatrix(size, size), el.tag[0]
        return mats[k], None

    bracket: dict[tuple[int, int], Vec] = {}
    dim = len(elems)
    for i in range(dim):
        for j in range(dim):
            xi, li = as_pair(i)
            xj, lj = as_pair(j)
            wi = coweights[li] if li is not None else SparseMatrix(size, size)
            wj = coweights[lj] if lj is not None else SparseMatrix(size, size)
            total = (xi + wi).matmul(xj + wj) - (xj + wj).matmul(xi + wi)
            if total.is_zero():
                continue
            bracket[i, j] = expand(total)

    form = SparseMatrix(dim, dim)
    for i in range(gdim):
        for j in range(gdim):
            v = model.form(mats[i], mats[j])
            if v:
                form[i, j] = v
    if extended:
        for i in range(n):
            hi = index[BasisElement("h", (i,))]
            li = index[BasisElement("lam", (i,))]
            form[hi, li] = model.d[i]
            form[li, hi] = model.d[i]
    out = ExtendedAlgebra(model, roots, extended, elems, index, form, bracket)
    _check_form_invariance(out)
    return out


def _check_form_invariance(alg: ExtendedAlgebra) -> None:
    dim = alg.dim
    for x in range(dim):
        for y in range(dim):
            bxy = alg.bracket.get((x, y))
            for z in range(dim):
                lhs = Fraction(0)
                if bxy:
                    for k, c in bxy.items():
                        v = alg.form[k, z]
                        if v:
                            lhs += c * v
                rhs = Fraction(0)
                for k, c in alg.bracket.get((y, z), {}).items():
                    v = alg.form[x, k]
                    if v:
                        rhs += c * v
                if lhs != rhs:
                    raise ValueError(
                        f"invariant form fails at basis triple ({x},{y},{z})"
                    )


# -- the doubled algebra and its Manin triple ---------------------------------


@dataclass
class DoubledData:
    """g2 = g + (Cartan copy), with form <,> - <,>|_Cartan and Borel halves."""

    algebra: ExtendedAlgebra
    lie: LieBialgebra  # bracket only (cobracket filled for the Borel halves)
    form: SparseMatrix
    plus: SubspaceBasis
    minus: SubspaceBasis
    cartan_indices: list[int]  # indices of the Cartan copy inside g2


def doubled_algebra(alg: ExtendedAlgebra) -> DoubledData:
    n = alg.model.n
    cart_elems = [BasisElement("ch", (i,)) for i in range(n)]
    if alg.extended:
        cart_elems += [BasisElement("clam", (i,)) for i in range(n)]
    dim = alg.dim + len(cart_elems)
    bracket: dict[tuple[int, int], Vec] = {
        k: dict(v) for k, v in alg.bracket.items()
    }
    lie = LieBialgebra(dim, bracket, {})

    form = SparseMatrix(dim, dim)
    for (i, j), v in alg.form.entries.items():
        form[i, j] = v
    # Cartan copy carries the negated restriction of the form
    cart_src = [alg.index[BasisElement("h", (i,))] for i in range(n)]
    if alg.extended:
        cart_src += [alg.index[BasisElement("lam", (i,))] for i in range(n)]
    for a, ia in enumerate(cart_src):
        for b, ib in enumerate(cart_src):
            v = alg.form[ia, ib]
            if v:
                form[alg.dim + a, alg.dim + b] = -v

    plus_vecs: list[Vec] = []
    minus_vecs: list[Vec] = []
    for k, el in enumerate(alg.basis):
        if el.kind == "e":
            plus_vecs.append({k: Fraction(1)})
        elif el.kind == "f":
            minus_vecs.append({k: Fraction(1)})
    for a, ia in enumerate(cart_src):
        plus_vecs.append({ia: Fraction(1), alg.dim + a: Fraction(1)})
        minus_vecs.append({ia: Fraction(1), alg.dim + a: Fraction(-1)})
    return DoubledData(
        alg, lie, form, SubspaceBasis(plus_vecs), SubspaceBasis(minus_vecs),
        [alg.dim + a for a in range(len(cart_src))],
    )


def _pairing_matrix(dd: DoubledData, left: list[Vec], right: list[Vec]) -> SparseMatrix:
    m = SparseMatrix(len(left), len(right))
    for i, u in enumerate(left):
        for j, v in enumerate(right):
            val = Fraction(0)
            for a, ca in u.items():
                for b, cb in v.items():
                    f = dd.form[a, b]
                    if f:
                        val += ca * cb * f
            if val:
                m[i, j] = val
    return m


def borel_bialgebra(
    dd: DoubledData, sign: int, subset: tuple[int, ...] | None = None
) -> tuple[LieBialgebra, list[Vec]]:
    """The Borel half (sign=+1 upper, -1 lower) over a vertex subset, as an
    abstract Lie bialgebra with the cobracket dual to the opposite bracket.

    Returns (bialgebra, embedding of its basis into the doubled algebra).
    """
    alg = dd.algebra
    n = alg.model.n
    if subset is None:
        subset = tuple(range(n))
    sset = set(subset)

    def in_subset(root: tuple[int, ...]) -> bool:
        return {i for i, c in enumerate(root) if c} <= sset

    this_vecs: list[Vec] = []
    names: list[str] = []
    kind = "e" if sign > 0 else "f"
    cart_count = 2 * n if alg.extended else n
    cart_offset = alg.dim
    # Cartan members first: h_i (+ lam_i), only for i in subset
    for i in subset:
        src = alg.index[BasisElement("h", (i,))]
        this_vecs.append({src: Fraction(1), cart_offset + i: Fraction(sign)})
        names.append(f"h{i}")
    if alg.extended:
        for i in subset:
            src = alg.index[BasisElement("lam", (i,))]
            this_vecs.append(
                {src: Fraction(1), cart_offset + n + i: Fraction(sign)}
            )
            names.append(f"lam{i}")
    for r in alg.roots.positive_roots:
        if in_subset(r):
            this_vecs.append({alg.index[BasisElement(kind, r)]: Fraction(1)})
            names.append(f"{kind}{r}")

    other_vecs: list[Vec] = []
    okind = "f" if sign > 0 else "e"
    for i in subset:
        src = alg.index[BasisElement("h", (i,))]
        other_vecs.append({src: Fraction(1), cart_offset + i: Fraction(-sign)})
    if alg.extended:
        for i in subset:
            src = alg.index[BasisElement("lam", (i,))]
            other_vecs.append(
                {src: Fraction(1), cart_offset + n + i: Fraction(-sign)}
            )
    for r in alg.roots.positive_roots:
        if in_subset(r):
            other_vecs.append({alg.index[BasisElement(okind, r)]: Fraction(1)})

    d = len(this_vecs)
    # bracket of the Borel in its own basis
    span = SparseMatrix(dd.lie.dim, d)
    for j, vec in enumerate(this_vecs):
        for i, c in vec.items():
            span[i, j] = c
    bracket: dict[tuple[int, int], Vec] = {}
    for i in range(d):
        for j in range(d):
            if i == j:
                continue
            res = dd.lie.bracket_vectors(this_vecs[i], this_vecs[j])
            if not res:
                continue
            b = SparseMatrix(dd.lie.dim, 1)
            for k, c in res.items():
                b[k, 0] = c
            sol = solve_linear(span, b)
            if not sol.consistent:
                raise ValueError("Borel is not closed under the bracket")
            vec = {
                k: sol.particular[k, 0] for k in range(d) if sol.particular[k, 0]
            }
            bracket[i, j] = vec

    # cobracket via the pairing with the opposite half:
    # <delta(x), u (x) v> = <x, [u, v]>
    pair = _pairing_matrix(dd, this_vecs, other_vecs)
    pinv = invert(pair)
    cobracket: dict[int, dict[tuple[int, int], Fraction]] = {}
    for x in range(d):
        kmat = SparseMatrix(d, d)
        for u in range(d):
            for v in range(d):
                br = dd.lie.bracket_vectors(other_vecs[u], other_vecs[v])
                if not br:
                    continue
                val = Fraction(0)
                for a, ca in this_vecs[x].items():
                    for bidx, cb in br.items():
                        f = dd.form[a, bidx]
                        if f:
                            val += ca * cb * f
                if val:
                    kmat[u, v] = val
        dmat = pinv.matmul(kmat).matmul(pinv.transpose())
        entry = {k: v for k, v in dmat.entries.items() if v}
        if entry:
            cobracket[x] = entry
    out = LieBialgebra(d, bracket, cobracket, names)
    return out, this_vecs


# -- split diagrammatic pairs --------------------------------------------------


def split_borel_pair(a, small: tuple[int, ...], big: tuple[int, ...] | None = None, sign: int = 1) -> SplitPair:
    """Split pair (b_small, b_big) of extended Borels; the projection kills the
    root spaces outside the small diagram and projects the Cartan along the
    form-orthogonal complement.
    """
    alg = extended_algebra(a, extended=True)
    dd = doubled_algebra(alg)
    n = alg.model.n
    if big is None:
        big = tuple(range(n))
    if not set(small) <= set(big):
        raise ValueError("small subset must lie inside the big one")
    bia_small, vec_small = borel_bialgebra(dd, sign, tuple(small))
    bia_big, vec_big = borel_bialgebra(dd, sign, tuple(big))

    # embed: each small basis vector equals a big basis vector
    span_big = SparseMatrix(dd.lie.dim, len(vec_big))
    for j, vec in enumerate(vec_big):
        for i, c in vec.items():
            span_big[i, j] = c
    inj = SparseMatrix(bia_big.dim, bia_small.dim)
    for j, vec in enumerate(vec_small):
        b = SparseMatrix(dd.lie.dim, 1)
        for i, c in vec.items():
            b[i, 0] = c
        sol = solve_linear(span_big, b)
        if not sol.consistent:
            raise ValueError("small Borel does not embed")
        for k in range(bia_big.dim):
            v = sol.particular[k, 0]
            if v:
                inj[k, j] = v

    # projection: on the Cartan, split along the complement of the small Cartan
    # that is orthogonal under the invariant form on the extended Cartan itself
    # (the doubled form vanishes on each isotropic Borel half, so it cannot be
    # used here); root spaces outside `small` die
    def alg_part(vec: Vec) -> Vec:
        return {i: c for i, c in vec.items() if i < alg.dim}

    def alg_form(x: Vec, y: Vec) -> Fraction:
        out = Fraction(0)
        for a2, ca in x.items():
            for b2, cb in y.items():
                f = alg.form[a2, b2]
                if f:
                    out += ca * cb * f
        return out

    small_cart = [
        alg_part(v) for v, nm in zip(vec_small, bia_small.basis_names) if nm[0] in "hl"
    ]
    big_cart_idx = [j for j, nm in enumerate(bia_big.basis_names) if nm[0] in "hl"]
    proj = SparseMatrix(bia_small.dim, bia_big.dim)
    # root-space part: a big basis vector matching a small one projects to it
    for j, nm in enumerate(bia_big.basis_names):
        if nm[0] in "hl":
            continue
        for i2, nm2 in enumerate(bia_small.basis_names):
            if nm2 == nm:
                proj[i2, j] = Fraction(1)
    gram = SparseMatrix(len(small_cart), len(small_cart))
    for i2, s in enumerate(small_cart):
        for j2, s2 in enumerate(small_cart):
            val = alg_form(s, s2)
            if val:
                gram[i2, j2] = val
    gram_inv = invert(gram)
    for j in big_cart_idx:
        x = alg_part(vec_big[j])
        rhs = SparseMatrix(len(small_cart), 1)
        for i2, s in enumerate(small_cart):
            val = alg_form(x, s)
            if val:
                rhs[i2, 0] = val
        coeffs = gram_inv.matmul(rhs)
        for i2 in range(len(small_cart)):
            v = coeffs[i2, 0]
            if v:
                # small Cartan vectors sit first in bia_small's basis order
                proj[i2, j] = v
    pair = SplitPair(bia_small, bia_big, inj, proj)
    pair.validate()
    return pair


# -- Drinfeld-Yetter fixtures --------------------------------------------------


def dy_module_from_borel(
    bia: LieBialgebra,
    action: list[SparseMatrix],
    extra_candidates: list[SparseMatrix] | None = None,
) -> DYModule:
    """Extend a Borel action to a module over the double and read off the
    coaction legs.  The dual-basis images are solved from equivariance and
    verified against the full double bracket.
    """
    double, _ = drinfeld_double(bia)
    d = bia.dim
    vdim = action[0].rows
    # unknowns: images of the d dual basis vectors, each vdim x vdim
    nvar = d * vdim * vdim

    def var(p, r, c):
        return p * vdim * vdim + r * vdim + c

    rows: list[dict[int, Fraction]] = []
    rhs_vals: list[Fraction] = []
    for i in range(d):  # b-basis element
        for p in range(d):  # dual basis element
            # [rho(x_i), Y_p] - sum over dual part of [x_i, phi^p] = known b-part
            mix = double.brk(i, d + p)
            known = SparseMatrix(vdim, vdim)
            for k, c in mix.items():
                if k < d:
                    known = known + action[k].scale(c)
            for r in range(vdim):
                for c in range(vdim):
                    row: dict[int, Fraction] = {}
                    # (action[i] Y_p - Y_p action[i])[r, c]
                    for k in range(vdim):
                        v = action[i][r, k]
                        if v:
                            row[var(p, k, c)] = row.get(var(p, k, c), Fraction(0)) + v
                        v = action[i][k, c]
                        if v:
                            row[var(p, r, k)] = row.get(var(p, r, k), Fraction(0)) - v
                    # minus dual-part unknowns of the mixed bracket
                    for k, cf in mix.items():
                        if k >= d:
                            key = var(k - d, r, c)
                            row[key] = row.get(key, Fraction(0)) - cf
                    rows.append(row)
                    rhs_vals.append(known[r, c])
    amat = SparseMatrix(len(rows), nvar)
    for ri, row in enumerate(rows):
        for ci, v in row.items():
            if v:
                amat[ri, ci] = v
    bmat = SparseMatrix(len(rhs_vals), 1)
    for ri, v in enumerate(rhs_vals):
        bmat[ri, 0] = v
    sol = solve_linear(amat, bmat)
    if not sol.consistent:
        raise ValueError("no double extension for this action")

    def dual_images(col: SparseMatrix) -> list[SparseMatrix]:
        out = []
        for p in range(d):
            m = SparseMatrix(vdim, vdim)
            for r in range(vdim):
                for c in range(vdim):
                    v = col[var(p, r, c), 0]
                    if v:
                        m[r, c] = v
            out.append(m)
        return out

    def full_check(duals: list[SparseMatrix]) -> bool:
        for p in range(d):
            for q in range(d):
                lhs = duals[p].matmul(duals[q]) - duals[q].matmul(duals[p])
                rhs = SparseMatrix(vdim, vdim)
                for k, c in double.brk(d + p, d + q).items():
                    rhs = rhs + (action[k] if k < d else duals[k - d]).scale(c)
                if lhs != rhs:
                    return False
        return True

    candidates = [sol.particular]
    for coeffs in itertools.product([0, 1, -1], repeat=min(len(sol.kernel), 6)):
        if not any(coeffs):
            continue
        col = sol.particular.copy()
        for cf, k in zip(coeffs, sol.kernel):
            if cf:
                col = col + k.scale(Fraction(cf))
        candidates.append(col)
    for col in candidates:
        duals = dual_images(col)
        if full_check(duals):
            mod = DYModule(bia, vdim, [m.copy() for m in action], duals)
            rep = verify_dy(mod)
            if rep.ok:
                return mod
    raise ValueError("could not extend to a Drinfeld-Yetter module")


def sl2_borel_bialgebra() -> LieBialgebra:
    """The two-dimensional Borel (h, e) with [h,e] = 2e, delta(e) = h ^ e."""
    bracket = {(0, 1): {1: Fraction(2)}, (1, 0): {1: Fraction(-2)}}
    cobracket = {1: {(0, 1): Fraction(1), (1, 0): Fraction(-1)}}
    return LieBialgebra(2, bracket, cobracket, ["h", "e"])


def sl2_borel_dy_module(m: int) -> DYModule:
    """Drinfeld-Yetter structure on the (m+1)-dimensional sl2-module."""
    em, fm, hm = _sl2_irrep_matrices(m)
    bia = sl2_borel_bialgebra()
    return dy_module_from_borel(bia, [hm, em])


def _sl2_irrep_matrices(m: int):
    dim = m + 1
    e = SparseMatrix(dim, dim)
    f = SparseMatrix(dim, dim)
    h = SparseMatrix(dim, dim)
    for k in range(dim):
        h[k, k] = Fraction(m - 2 * k)
        if k > 0:
            e[k - 1, k] = Fraction(m - k + 1)
        if k < m:
            f[k + 1, k] = Fraction(k + 1)
    return e, f, h


def borel_dy_module(a, e_gens, f_gens, h_gens, sign: int = 1) -> DYModule:
    """DY module over the full (non-extended) Borel of a finite-type algebra,
    from a module given by its Chevalley generator matrices."""
    alg = extended_algebra(a, extended=False)
    dd = doubled_algebra(alg)
    bia, vecs = borel_bialgebra(dd, sign)
    rep = alg.roots.representation(e_gens, f_gens, h_gens)
    vdim = e_gens[0].rows
    action = []
    for vec in vecs:
        m = SparseMatrix(vdim, vdim)
        for idx, c in vec.items():
            if idx >= alg.dim:
                continue  # central copy acts by zero
            el = alg.basis[idx]
            if el.kind == "h":
                m = m + rep["h", el.tag[0]].scale(c)
            else:
                m = m + rep[el.kind, el.tag].scale(c)
        action.append(m)
    return dy_module_from_borel(bia, action)


def adjoint_generators(a):
    """ad(e_i), ad(f_i), ad(h_i) on the basis of the plain finite-type algebra."""
    alg = extended_algebra(a, extended=False)
    dim = alg.dim
    n = alg.model.n

    def ad_matrix(idx: int) -> SparseMatrix:
        m = SparseMatrix(dim, dim)
        for j in range(dim):
            for k, c in alg.bracket.get((idx, j), {}).items():
                m[k, j] = c
        return m

    e = [ad_matrix(alg.index[BasisElement("e", tuple(1 if k == i else 0 for k in range(n)))]) for i in range(n)]
    f = [ad_matrix(alg.index[BasisElement("f", tuple(1 if k == i else 0 for k in range(n)))]) for i in range(n)]
    h = [ad_matrix(alg.index[BasisElement("h", (i,))]) for i in range(n)]
    return e, f, h
