"""iHall algebras of iquiver algebras.

Modules over the iquiver algebra are enumerated and counted over prime
fields, multiplied with the twisted Hall product, and reduced onto the basis
[X] * [K_alpha].  The generic algebra is fully supported for split A1; other
iquivers are available at a fixed small q and small total dimension.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from .cartan import QuiverShape, RootDatum, euler_form, parse_quiver_spec, validate_involution
from .finrep import (BoundQuiver, CensusCapError, FqRep, census_modules, direct_sum, ext_dim, gl_order,
                     hom_basis, hom_dim, matmul_mod, nullspace_mod, rank_mod, rref, zeros)
from .hallgen import add_into, fit_joint
from .scalars import ONE, PRIMES, ZERO, ScalarHalf, eval_at_prime, vpow
from .triangle import TriangularProblem, lusztig_basis


class CoverageError(ValueError):
    pass


class ReductionError(ArithmeticError):
    pass


# the iquiver algebra --------------------------------------------------------------------------

@dataclass
class IQuiverAlgebra:
    shape: QuiverShape
    rho: tuple
    quiver: BoundQuiver
    n_q_arrows: int
    eps: tuple  # arrow index of epsilon_i for each vertex

    @property
    def n(self):
        return self.shape.n

    def split(self, i):
        return self.rho[i] == i

    def is_split(self):
        return all(self.split(i) for i in range(self.n))

    def module(self, dims, mats) -> FqRep:
        M = FqRep(self.quiver, 0, dims, mats)
        return M

    def rep(self, q, dims, mats=None) -> FqRep:
        return FqRep(self.quiver, q, tuple(dims), [list(map(list, m)) for m in mats] if mats else [])

    def simple(self, i, q) -> FqRep:
        return self.rep(q, tuple(int(j == i) for j in range(self.n)))

    def generalized_simple(self, i, q) -> FqRep:
        """The module K_i: k[eps]/eps^2 at a fixed vertex, or k -> k along eps_i otherwise."""
        if self.split(i):
            dims = tuple(2 * int(j == i) for j in range(self.n))
        else:
            dims = tuple(int(j in (i, self.rho[i])) for j in range(self.n))
        M = self.rep(q, dims)
        a = self.eps[i]
        if self.split(i):
            M.mats[a] = [[0, 0], [1, 0]]
        else:
            M.mats[a] = [[1]]
        return M

    def K_module(self, alpha, q) -> FqRep:
        parts = []
        for i, a in enumerate(alpha):
            if a < 0:
                raise ValueError("K-modules need a nonnegative exponent")
            parts += [self.generalized_simple(i, q)] * a
        return direct_sum(parts, self.quiver, q) if parts else self.rep(q, (0,) * self.n)

    def from_kq(self, X: FqRep) -> FqRep:
        """A kQ-module viewed as a module with zero epsilon action."""
        M = self.rep(X.q, X.dims)
        for a in range(self.n_q_arrows):
            M.mats[a] = [list(r) for r in X.mats[a]]
        return M

    def restrict(self, M: FqRep):
        """Dimension vector of the restriction to kQ."""
        return M.dims

    def restrict_H(self, M: FqRep) -> tuple:
        """Isoclass data of the restriction to the epsilon subalgebra (ranks of each epsilon)."""
        out = []
        for i in range(self.n):
            a = self.eps[i]
            s, t = self.quiver.arrows[a]
            out.append((M.dims[i], rank_mod(M.mats[a], M.dims[s], M.q) if M.dims[s] and M.dims[t] else 0))
        return tuple(out)


def build_lambda(shape, rho=None) -> IQuiverAlgebra:
    if isinstance(shape, str):
        shape, parsed = parse_quiver_spec(shape)
        rho = parsed if rho is None else rho
    datum = RootDatum(shape)
    rho = validate_involution(datum, rho if rho is not None else tuple(range(shape.n)))
    arrows = list(shape.arrows)
    index = {a: k for k, a in enumerate(arrows)}
    for a in arrows:
        if (rho[a[0]], rho[a[1]]) not in index:
            raise ValueError("the involution must map arrows to arrows")
    eps = []
    for i in range(shape.n):
        eps.append(len(arrows))
        arrows.append((i, rho[i]))
    relations = []
    for i in range(shape.n):
        # eps_i eps_{rho i}: first eps_{rho i}, then eps_i
        relations.append(((1, (eps[rho[i]], eps[i])),))
    for k, (j, i) in enumerate(shape.arrows):
        rk = index[(rho[j], rho[i])]
        # eps_i alpha - rho(alpha) eps_j
        relations.append(((1, (k, eps[i])), (-1, (eps[j], rk))))
    quiver = BoundQuiver(shape.n, tuple(arrows), tuple(relations))
    return IQuiverAlgebra(shape, rho, quiver, len(shape.arrows), tuple(eps))


# enumeration and isomorphism ----------------------------------------------------------------

def _all_matrices(r, c, q):
    for vals in itertools.product(range(q), repeat=r * c):
        yield [list(vals[k * c:(k + 1) * c]) for k in range(r)]


def aut_count(M: FqRep, cap=10 ** 6) -> int:
    """Number of automorphisms, by enumerating the endomorphism space."""
    basis = hom_basis(M, M)
    q = M.q
    if q ** len(basis) > cap:
        raise CensusCapError("automorphism enumeration exceeds the cap")
    count = 0
    for coeffs in itertools.product(range(q), repeat=len(basis)):
        ok = True
        for i in range(M.quiver.n):
            d = M.dims[i]
            if not d:
                continue
            mat = [[sum(c * f[i][r][s] for c, f in zip(coeffs, basis)) % q for s in range(d)] for r in range(d)]
            if rank_mod(mat, d, q) < d:
                ok = False
                break
        count += ok
    return count


def is_isomorphic(M: FqRep, N: FqRep, cap=10 ** 6) -> bool:
    if M.dims != N.dims:
        return False
    if hom_dim(M, M) != hom_dim(N, N) or hom_dim(M, N) != hom_dim(M, M):
        return False
    basis = hom_basis(M, N)
    q = M.q
    if q ** len(basis) > cap:
        raise CensusCapError("isomorphism search exceeds the cap")
    for coeffs in itertools.product(range(q), repeat=len(basis)):
        good = True
        for i in range(M.quiver.n):
            d = M.dims[i]
            if not d:
                continue
            mat = [[sum(c * f[i][r][s] for c, f in zip(coeffs, basis)) % q for s in range(d)] for r in range(d)]
            if rank_mod(mat, d, q) < d:
                good = False
                break
        if good:
            return True
    return False


def _dims_below(d):
    return [t for t in itertools.product(*[range(x + 1) for x in d]) if any(t)]


def enumerate_modules(alg: IQuiverAlgebra, d, q, cap=6, point_cap=200_000) -> list:
    """One representative per isoclass of modules with dimension vector ``d``.

    Points are classified by Hom-dimension fingerprints; each class is then
    certified to be a single orbit by comparing its size with |GL_d|/|Aut|.
    """
    d = tuple(d)
    if sum(d) > cap:
        raise CoverageError(f"coverage: total dimension {sum(d)} exceeds the cap {cap}")
    arrows = alg.quiver.arrows
    npts = q ** sum(d[t] * d[s] for s, t in arrows)
    if npts > point_cap:
        raise CoverageError(f"coverage: {npts} points exceed the enumeration cap")
    probes = []
    for e in _dims_below(d):
        if e != d:
            probes += _module_cache(alg, e, q, cap, point_cap)
    classes: dict = {}
    for mats in itertools.product(*[list(_all_matrices(d[t], d[s], q)) for s, t in arrows]):
        M = alg.rep(q, d, [m for m in mats])
        if not M.satisfies_relations():
            continue
        fp = (alg.restrict_H(M), hom_dim(M, M),
              tuple(hom_dim(P, M) for P in probes), tuple(hom_dim(M, P) for P in probes))
        if fp in classes:
            classes[fp][1] += 1
        else:
            classes[fp] = [M, 1]
    glsize = 1
    for x in d:
        glsize *= gl_order(x, q)
    reps = []
    for fp, (M, cnt) in sorted(classes.items(), key=lambda kv: repr(kv[0])):
        if glsize % aut_count(M) or glsize // aut_count(M) != cnt:
            raise CoverageError("fingerprint does not separate isoclasses at this size")
        reps.append(M)
    return reps


_ENUM: dict = {}


def _module_cache(alg, d, q, cap, point_cap):
    key = (alg.shape, alg.rho, tuple(d), q)
    if key not in _ENUM:
        _ENUM[key] = enumerate_modules(alg, d, q, cap, point_cap)
    return _ENUM[key]


def classify_module(alg: IQuiverAlgebra, M: FqRep) -> int:
    """Index of the enumerated representative isomorphic to M."""
    reps = _module_cache(alg, M.dims, M.q, 10 ** 9, 10 ** 9)
    for k, R in enumerate(reps):
        if is_isomorphic(R, M):
            return k
    raise ReductionError("module not found among the enumerated representatives")


# projectives and syzygies -------------------------------------------------------------------

def _paths_from(quiver, i, length):
    out = [((), i)]
    for _ in range(length):
        nxt = []
        for p, end in out:
            for a, (s, t) in enumerate(quiver.arrows):
                if s == end:
                    nxt.append((p + (a,), t))
        out = nxt
    return out


def projective_module(alg: IQuiverAlgebra, i, q, max_len=12) -> tuple:
    """The projective module P_i as a representation, and its normal-form path basis."""
    quiver = alg.quiver
    layers = []
    for ell in range(max_len + 1):
        paths = _paths_from(quiver, i, ell)
        idx = {p: k for k, (p, _) in enumerate(paths)}
        rows = []
        for rel in quiver.relations:
            rlen = len(rel[0][1])
            if rlen > ell:
                continue
            for pre_len in range(ell - rlen + 1):
                for p1, end1 in _paths_from(quiver, i, pre_len):
                    s0 = quiver.arrows[rel[0][1][0]][0]
                    if end1 != s0:
                        continue
                    t0 = quiver.arrows[rel[0][1][-1]][1]
                    for p2, _ in _paths_from(quiver, t0, ell - rlen - pre_len):
                        row = [0] * len(paths)
                        for c, path in rel:
                            row[idx[p1 + tuple(path) + p2]] += c
                        rows.append([x % q for x in row])
        red, piv = rref(rows, len(paths), q) if rows else ([], [])
        free = [k for k in range(len(paths)) if k not in set(piv)]
        layers.append((paths, idx, red, piv, free))
        if not free:
            break
    else:
        raise CoverageError("projective module did not terminate within the path length cap")

    basis = []  # (layer, path index) in normal form
    for ell, (paths, _, _, _, free) in enumerate(layers):
        for k in free:
            basis.append((ell, paths[k][0], paths[k][1]))
    by_vertex = {j: [b for b in basis if b[2] == j] for j in range(alg.n)}
    pos = {j: {b[1]: k for k, b in enumerate(by_vertex[j])} for j in range(alg.n)}
    dims = tuple(len(by_vertex[j]) for j in range(alg.n))

    def normal(path):
        ell = len(path)
        if ell >= len(layers):
            return {}
        paths, idx, red, piv, free = layers[ell]
        vec = [0] * len(paths)
        vec[idx[path]] = 1
        for r, c in zip(red, piv):
            if vec[c]:
                f = vec[c]
                vec = [(x - f * y) % q for x, y in zip(vec, r)]
        return {paths[k][0]: vec[k] for k in free if vec[k]}

    P = alg.rep(q, dims)
    for a, (s, t) in enumerate(quiver.arrows):
        m = zeros(dims[t], dims[s])
        for b in by_vertex[s]:
            col = pos[s][b[1]]
            for path, c in normal(b[1] + (a,)).items():
                m[pos[t][path]][col] = (m[pos[t][path]][col] + c) % q
        P.mats[a] = m
    return P, by_vertex


def _radical_rows(M: FqRep, j):
    rows = []
    for a, (s, t) in enumerate(M.quiver.arrows):
        if t == j and M.dims[s]:
            for c in range(M.dims[s]):
                rows.append([M.mats[a][r][c] for r in range(M.dims[j])])
    return rows


def _solve(cols, target, p):
    """Coordinates x with sum x_k cols[k] = target (cols as vectors), or None."""
    n = len(target)
    rows = [[cols[k][r] for k in range(len(cols))] + [target[r]] for r in range(n)]
    red, piv = rref(rows, len(cols) + 1, p)
    if len(cols) in piv:
        return None
    x = [0] * len(cols)
    for r, c in zip(red, piv):
        x[c] = r[-1]
    return x


def syzygy(alg: IQuiverAlgebra, M: FqRep) -> FqRep:
    """Kernel of a projective cover of M."""
    q = M.q
    blocks = []
    for i in range(alg.n):
        rad = _radical_rows(M, i)
        base = rref(rad, M.dims[i], q)[0] if rad else []
        cur = list(base)
        for k in range(M.dims[i]):
            e = [int(r == k) for r in range(M.dims[i])]
            if rank_mod(cur + [e], M.dims[i], q) > len(cur):
                cur.append(e)
                blocks.append((i, e))
    if not blocks:
        return alg.rep(q, (0,) * alg.n)
    projs = {}
    parts = []
    images = {j: [] for j in range(alg.n)}  # per vertex: images of P basis vectors in M_j
    for i, m in blocks:
        if i not in projs:
            projs[i] = projective_module(alg, i, q)
        P, by_vertex = projs[i]
        parts.append(P)
        for j in range(alg.n):
            for b in by_vertex[j]:
                path = b[1]
                vec = [[x] for x in m]
                mat = M.path_matrix(path) if path else None
                img = matmul_mod(mat, vec, q) if mat is not None else vec
                images[j].append([r[0] for r in img])
    Ptot = direct_sum(parts, alg.quiver, q)
    kernels = {}
    for j in range(alg.n):
        cols = images[j]
        rows = [[cols[k][r] for k in range(len(cols))] for r in range(M.dims[j])]
        kernels[j] = nullspace_mod(rows, Ptot.dims[j], q) if M.dims[j] else \
            [[int(a == b) for a in range(Ptot.dims[j])] for b in range(Ptot.dims[j])]
    dims = tuple(len(kernels[j]) for j in range(alg.n))
    K = alg.rep(q, dims)
    for a, (s, t) in enumerate(alg.quiver.arrows):
        m = zeros(dims[t], dims[s])
        for c, x in enumerate(kernels[s]):
            y = matmul_mod(Ptot.mats[a], [[v] for v in x], q) if Ptot.dims[t] else []
            y = [r[0] for r in y]
            coords = _solve(kernels[t], y, q) if dims[t] else []
            if coords is None:
                raise ReductionError("syzygy is not a submodule")
            for r, v in enumerate(coords):
                m[r][c] = v
        K.mats[a] = m
    return K


def _split_projective(alg, G: FqRep):
    """Remove one indecomposable projective summand of G if there is one."""
    q = G.q
    for i in range(alg.n):
        if not G.dims[i]:
            continue
        P, by_vertex = projective_module(alg, i, q)
        top = by_vertex[i].index(next(b for b in by_vertex[i] if b[1] == ()))
        for g in hom_basis(G, P):
            if any(g[i][top][c] for c in range(G.dims[i])):
                # g is a split epimorphism onto P; its kernel is the complement
                kernels = {}
                for j in range(alg.n):
                    rows = g[j]
                    kernels[j] = nullspace_mod(rows, G.dims[j], q) if P.dims[j] else \
                        [[int(a == b) for a in range(G.dims[j])] for b in range(G.dims[j])]
                dims = tuple(len(kernels[j]) for j in range(alg.n))
                H = alg.rep(q, dims)
                for a, (s, t) in enumerate(alg.quiver.arrows):
                    m = zeros(dims[t], dims[s])
                    for c, x in enumerate(kernels[s]):
                        y = [r[0] for r in matmul_mod(G.mats[a], [[v] for v in x], q)] if G.dims[t] else []
                        coords = _solve(kernels[t], y, q) if dims[t] else []
                        for r, v in enumerate(coords):
                            m[r][c] = v
                    H.mats[a] = m
                return H
    return None


def stable_part(alg, G: FqRep) -> FqRep:
    while True:
        H = _split_projective(alg, G)
        if H is None:
            return G
        G = H


def dsg_iso(alg: IQuiverAlgebra, M: FqRep, N: FqRep) -> bool:
    """Isomorphism in the singularity category, via one syzygy step."""
    A = stable_part(alg, syzygy(alg, M))
    B = stable_part(alg, syzygy(alg, N))
    return is_isomorphic(A, B)


# the twisted Hall product at a fixed q --------------------------------------------------------

class IHallAtQ:
    """Twisted Hall algebra of the iquiver algebra over F_q on enumerated modules.

    Elements are dicts keyed by ``(dims, index)`` with ScalarHalf coefficients
    in which v stands for sqrt(q) while explicit rational factors are already
    evaluated at q.
    """

    def __init__(self, alg: IQuiverAlgebra, q: int, cap=4):
        self.alg = alg
        self.q = q
        self.cap = cap
        self._prod: dict = {}

    def reps(self, d):
        return _module_cache(self.alg, tuple(d), self.q, self.cap, 200_000)

    def key_of(self, M: FqRep):
        return (M.dims, classify_module(self.alg, M))

    def module(self, key) -> FqRep:
        return self.reps(key[0])[key[1]]

    def class_of(self, M):
        return {self.key_of(M): ONE}

    def euler(self, a, b):
        return euler_form(self.alg.shape, a, b)

    def product_basis(self, k1, k2) -> dict:
        key = (k1, k2)
        if key in self._prod:
            return self._prod[key]
        M, N = self.module(k1), self.module(k2)
        if sum(M.dims) + sum(N.dims) > self.cap:
            raise CoverageError("coverage: product exceeds the dimension cap")
        census = census_modules(M, N, lambda L: self.key_of(L))
        tw = vpow(self.euler(M.dims, N.dims))
        den = Fraction(self.q) ** hom_dim(M, N)
        out = {k: tw * ScalarHalf(Fraction(c) / den) for k, c in census.items()}
        self._prod[key] = out
        return out

    def multiply(self, x: dict, y: dict) -> dict:
        out: dict = {}
        for k1, a in x.items():
            for k2, b in y.items():
                add_into(out, self.product_basis(k1, k2), a * b)
        return out

    # reduction onto the Hall basis [X] * [K_alpha]
    def hall_basis(self, d):
        """Pairs (X-key, alpha) with dim X + (alpha + rho alpha) = d."""
        alg = self.alg
        out = []
        for alpha in itertools.product(*[range(x + 1) for x in d]):
            kd = [0] * alg.n
            for i, a in enumerate(alpha):
                kd[i] += a
                kd[alg.rho[i]] += a
            xd = tuple(x - y for x, y in zip(d, kd))
            if any(c < 0 for c in xd):
                continue
            for X in _kq_modules(alg, xd, self.q):
                out.append((X, tuple(alpha)))
        return out

    def basis_element(self, X, alpha) -> dict:
        """[X] * [K_alpha] as a combination of module classes."""
        Xm = self.alg.from_kq(X)
        Km = self.alg.K_module(alpha, self.q)
        if not any(Km.dims):
            return self.class_of(Xm)
        if not any(Xm.dims):
            return self.class_of(Km)
        return self.multiply(self.class_of(Xm), self.class_of(Km))

    def reduce(self, x: dict) -> dict:
        """Coordinates of x on the Hall basis, keyed by ((dims, index of X), alpha)."""
        by_dim: dict = {}
        for k, c in x.items():
            by_dim.setdefault(k[0], {})[k] = c
        out: dict = {}
        for d, part in by_dim.items():
            red = self._reduction_matrix(d)
            for k, c in part.items():
                for b, r in red[k].items():
                    add_into(out, {b: c * r})
        return out

    def _reduction_matrix(self, d):
        key = ("red", d)
        if key in self._prod:
            return self._prod[key]
        alg = self.alg
        mods = self.reps(d)
        keys = [(tuple(d), k) for k in range(len(mods))]
        basis = self.hall_basis(d)
        # each basis product is a single v-power times rational data
        rows = []
        labels = []
        for X, alpha in basis:
            el = self.basis_element(X, alpha)
            exps = {e for c in el.values() for e in c.c}
            if len(exps) != 1:
                raise ReductionError("Hall basis reduction failed: mixed v-powers in a basis product")
            e = exps.pop()
            row = [el.get(k, ZERO).c.get(e, Fraction(0)) for k in keys]
            rows.append(row)
            labels.append(((X.dims, _kq_index(alg, X)), alpha, e))
        # ideal relations [M] - [N]
        ideal = []
        for a in range(len(mods)):
            for b in range(a + 1, len(mods)):
                if alg.restrict_H(mods[a]) == alg.restrict_H(mods[b]) and dsg_iso(alg, mods[a], mods[b]):
                    r = [Fraction(0)] * len(keys)
                    r[a], r[b] = Fraction(1), Fraction(-1)
                    ideal.append(r)
        red = _express(keys, rows, ideal)
        out = {}
        for k, coeffs in red.items():
            acc = {}
            for (lab, c) in zip(labels, coeffs):
                if c:
                    xkey, alpha, e = lab
                    add_into(acc, {(xkey, alpha): ScalarHalf._raw({-e: Fraction(c)})})
            out[k] = acc
        self._prod[key] = out
        return out


    # generators of the iquantum group ------------------------------------------------------
    def letter_value(self, tok) -> dict:
        """B_j -> v^(-1/2) [S_j] and the normalised Cartan letter -> [K_j]."""
        if tok[0] == "B":
            return {self.key_of(self.alg.simple(tok[1], self.q)): vpow(Fraction(-1, 2))}
        _, j, e = tok
        if e < 0:
            raise CoverageError("coverage: inverse Cartan letters need the localisation")
        if not self.alg.split(j):
            raise CoverageError("coverage: only split vertices are realised at a fixed q")
        return self.class_of(self.alg.K_module(tuple(int(k == j) for k in range(self.alg.n)), self.q))

    def evaluate(self, tree) -> dict:
        prefix = {(): {((0,) * self.alg.n, 0): ONE}}
        letters: dict = {}

        def val(w):
            if w not in prefix:
                tok = w[-1]
                if tok not in letters:
                    letters[tok] = self.letter_value(tok)
                prefix[w] = self.multiply(val(w[:-1]), letters[tok])
            return prefix[w]

        acc: dict = {}
        for w, c in sorted(tree.num.items(), key=lambda kv: len(kv[0])):
            add_into(acc, val(w), c)
        return {k: c.exact_div(tree.den) for k, c in acc.items()}

    def vanishes(self, x: dict) -> bool:
        """Whether x is zero after reduction and specialisation v = sqrt(q)."""
        for c in self.reduce(x).values():
            val = eval_at_prime(c, self.q)
            if val if isinstance(val, Fraction) else any(val):
                return False
        return True

    def check_relations(self, names=None) -> dict:
        """Evaluate the defining relations of the iquantum group with positive Cartan powers."""
        from .iquant import IQuantumGroup
        iq = IQuantumGroup(self.alg.shape, rho=self.alg.rho)
        out = {}
        for name, tree in iq.relations().items():
            if names is not None and name not in names:
                continue
            if any(tok[0] == "K" and tok[2] < 0 for w in tree.num for tok in w):
                continue
            out[name] = self.vanishes(self.evaluate(tree))
        return out


def _express(keys, rows, ideal):
    """Write every unit vector e_k as a rational combination of ``rows`` modulo ``ideal``."""
    nb = len(rows)
    nk = len(keys)
    # unknowns: coefficients on rows and on ideal vectors; solve sum x_r row_r + sum y_s ideal_s = e_k
    gens = rows + ideal
    out = {}
    for k in range(nk):
        target = [Fraction(int(j == k)) for j in range(nk)]
        sol = _frac_solve(gens, target)
        if sol is None:
            raise ReductionError("Hall basis reduction failed: class outside the span")
        out[keys[k]] = sol[:nb]
    # uniqueness: basis products stay independent modulo the ideal
    if _frac_rank(gens) != _frac_rank(ideal) + nb:
        raise ReductionError("Hall basis reduction failed: basis products are dependent")
    return out


def _frac_rref(rows, ncols):
    m = [list(r) for r in rows]
    piv = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        piv.append(c)
        r += 1
    return m[:r], piv


def _frac_rank(rows):
    if not rows:
        return 0
    return len(_frac_rref(rows, len(rows[0]))[1])


def _frac_solve(gens, target):
    n = len(gens)
    ncols = len(target)
    aug = [[g[j] for g in gens] + [target[j]] for j in range(ncols)]
    red, piv = _frac_rref(aug, n + 1)
    if n in piv:
        return None
    x = [Fraction(0)] * n
    for r, c in zip(red, piv):
        x[c] = r[-1]
    return x


_KQ: dict = {}


def _kq_modules(alg: IQuiverAlgebra, d, q) -> list:
    """Isoclass representatives of kQ-modules of dimension d (direct sums of indecomposables)."""
    from .finrep import classes_of_dim, indec_table
    key = (alg.shape, tuple(d), q)
    if key not in _KQ:
        datum = RootDatum(alg.shape)
        table = indec_table(alg.shape, q)
        out = []
        for lam in classes_of_dim(datum, tuple(d)):
            out.append(table.module(lam))
        _KQ[key] = (classes_of_dim(datum, tuple(d)), out)
    return _KQ[key][1]


def _kq_index(alg, X):
    key = (alg.shape, tuple(X.dims), X.q)
    for lam, M in zip(*_KQ[key]):
        if M is X:
            return lam
    raise ReductionError("unknown kQ-module")


# generic split A1 -------------------------------------------------------------------------------

class SplitRankOne:
    """Generic iHall algebra of split A1.

    Basis keys are ``(b, a)`` for [K]^b * u_a where u_a is the class of the
    semisimple kQ-module of dimension a; b may be negative.
    """

    def __init__(self, primes=PRIMES, census_cap=10 ** 9, escalate=False):
        self.alg = build_lambda("A1")
        self.primes = tuple(primes)
        self.escalate = escalate
        self.cap = census_cap
        self._left: dict = {}
        self._monos: dict = {}

    # counting -------------------------------------------------------------------------------
    def module(self, a, b, q) -> FqRep:
        """S^a + K^b over F_q."""
        parts = [self.alg.simple(0, q)] * a + [self.alg.generalized_simple(0, q)] * b
        return direct_sum(parts, self.alg.quiver, q) if parts else self.alg.rep(q, (0,))

    @staticmethod
    def classify(M: FqRep):
        """(b, a) with M = S^a + K^b; square-zero epsilon is determined by its rank."""
        d = M.dims[0]
        eps = M.mats[0]
        r = rank_mod(eps, d, M.q) if d else 0
        return (r, d - 2 * r)

    def census(self, X, Z, q):
        M = self.module(X[1], X[0], q)
        N = self.module(Z[1], Z[0], q)
        return census_modules(M, N, self.classify, self.cap), hom_dim(M, N), M.dims[0], N.dims[0]

    def product_at(self, X, Z, q) -> dict:
        """[M_X] * [M_Z] over F_q, expressed on module classes."""
        counts, h, dx, dz = self.census(X, Z, q)
        tw = vpow(dx * dz)
        return {k: tw * ScalarHalf(Fraction(c, q ** h)) for k, c in counts.items()}

    def reduction_coefficient(self, b, a, q=None) -> ScalarHalf:
        """c with [S^a + K^b] = c * [S^a] * [K^b].

        K^b is projective so the product has a single term; the twist
        v^(2ab) cancels q^(-hom) = v^(-2ab), but both are recomputed here.
        """
        q = q or self.primes[0]
        M, N = self.module(a, 0, q), self.module(0, b, q)
        if ext_dim(M, N):
            raise ReductionError("Hall basis reduction failed: unexpected extension")
        return vpow(-euler_form(self.alg.shape, M.dims, N.dims)) * vpow(2 * hom_dim(M, N))

    def left_S_generic(self, a) -> dict:
        """[S] * u_a on the generic basis."""
        if a in self._left:
            return self._left[a]

        def sample(q):
            counts, h, dx, dz = self.census((0, 1), (0, a), q)
            return counts

        # every count is at most q^ext with ext(S, S^a) = a, which bounds the degree
        fits = fit_joint(sample, self.primes, max_degree=a, fixed=not self.escalate)
        out = {}
        tw = vpow(a) * vpow(-2 * a)  # v^{<1,a>} q^{-hom(S, S^a)}
        for (b, aa), poly in fits.items():
            out[(b, aa)] = poly.to_scalar() * tw * self.reduction_coefficient(b, aa)
        self._left[a] = out
        return out

    def held_out_check(self, a, q) -> bool:
        """Compare the generic [S] * u_a evaluated at q with a direct count."""
        direct = self.product_at((0, 1), (0, a), q)
        for k, c in self.left_S_generic(a).items():
            direct_k = direct.pop(k, ZERO) * self.reduction_coefficient(*k, q=q)
            if eval_at_prime(c, q) != eval_at_prime(direct_k, q):
                return False
        return not direct

    def k_commutation_exponent(self, q=None) -> int:
        """e with [K] * [S] = v^e [S] * [K], read off from counts."""
        q = q or self.primes[0]
        left = self.product_at((1, 0), (0, 1), q)
        right = self.product_at((0, 1), (1, 0), q)
        (k1, c1), = left.items()
        (k2, c2), = right.items()
        if k1 != k2:
            raise ReductionError("K-commutation produced different classes")
        ratio = c1.exact_div(c2)
        if not ratio.is_monomial():
            raise ReductionError("K-commutation is not a monomial")
        return Fraction(ratio.min_exp(), 2)

    def relations_at(self, q) -> dict:
        """Cartan relations checked on direct counts over F_q."""
        KK = self.product_at((1, 0), (1, 0), q)
        return {
            "kB": self.k_commutation_exponent(q) == 0,
            "kk": list(KK) == [(2, 0)] and eval_at_prime(KK[(2, 0)], q) == 1,
        }

    def letter_value(self, tok) -> dict:
        if tok[0] == "B":
            return self.B()
        return self.script_K(tok[2])

    def evaluate(self, tree) -> dict:
        acc: dict = {}
        for w, c in tree.num.items():
            z = {(0, 0): ONE}
            for tok in w:
                z = self.multiply(z, self.letter_value(tok))
            add_into(acc, z, c)
        return {k: c.exact_div(tree.den) for k, c in acc.items() if c}

    def check_relations(self) -> dict:
        from .iquant import IQuantumGroup
        iq = IQuantumGroup(self.alg.shape)
        return {name: not self.evaluate(t) for name, t in iq.relations().items()}

    # algebra -------------------------------------------------------------------------------------
    def left_S(self, x: dict) -> dict:
        out: dict = {}
        for (b, a), c in x.items():
            for (b2, a2), d in self.left_S_generic(a).items():
                add_into(out, {(b + b2, a2): c * d})
        return out

    def left_K(self, x: dict, e=1) -> dict:
        return {(b + e, a): c for (b, a), c in x.items()}

    def u_word(self, a):
        """u_a as (coefficients on S^j K^i, denominator): u_a = sum c[(i,j)] S^j K^i / den."""
        if a in self._monos:
            return self._monos[a]
        if a == 0:
            res = ({(0, 0): ONE}, ONE)
        else:
            top = self.left_S_generic(a - 1)
            c_top = top[(0, a)]
            num_prev, den_prev = self.u_word(a - 1)
            # u_a = (S u_{a-1} - sum_{others} c K^b u_{a'}) / c_top
            num: dict = {}
            for (i, j), c in num_prev.items():
                add_into(num, {(i, j + 1): c})
            den = den_prev
            terms = [(num, den)]
            for (b, a2), c in top.items():
                if (b, a2) == (0, a):
                    continue
                n2, d2 = self.u_word(a2)
                terms.append(({(i + b, j): -c * e for (i, j), e in n2.items()}, d2))
            from .hallgen import _combine
            num, den = _combine(terms)
            res = (num, den * c_top)
        self._monos[a] = res
        return res

    def left_u(self, a, y: dict) -> dict:
        num, den = self.u_word(a)
        out: dict = {}
        for (i, j), c in num.items():
            z = y
            for _ in range(j):
                z = self.left_S(z)
            add_into(out, self.left_K(z, i), c)
        return {k: c.exact_div(den) for k, c in out.items()}

    def multiply(self, x: dict, y: dict) -> dict:
        out: dict = {}
        for (b, a), c in x.items():
            add_into(out, self.left_K(self.left_u(a, y), b), c)
        return out

    def S(self):
        return {(0, 1): ONE}

    def K(self, e=1):
        return {(e, 0): ONE}

    def B(self):
        """Image of the generator B."""
        return {(0, 1): vpow(Fraction(-1, 2))}

    def script_K(self, e=1):
        """Image of the normalised Cartan generator."""
        return self.K(e)

    def bar(self, x: dict) -> dict:
        """Anti-involution with u_alpha -> v^-1 u_alpha, [K] fixed (the algebra is commutative)."""
        out: dict = {}
        for (b, a), c in x.items():
            num, den = self.u_word(a)
            acc: dict = {}
            for (i, j), e in num.items():
                z = {(0, 0): ONE}
                for _ in range(j):
                    z = self.left_S(z)
                add_into(acc, self.left_K(z, i), e.bar() * vpow(-j))
            acc = {k: v.exact_div(den.bar()) for k, v in acc.items()}
            add_into(out, self.left_K(acc, b), c.bar())
        return out

    # dual canonical basis -------------------------------------------------------------------------
    @staticmethod
    def U_exponent(a) -> Fraction:
        return Fraction(-a * a, 2)

    def U(self, b, a) -> dict:
        """K^b <> U_a (the diamond action is plain multiplication in split type)."""
        return {(b, a): vpow(self.U_exponent(a))}

    def standard_coords(self, x: dict) -> dict:
        return {k: c * vpow(-self.U_exponent(k[1])) for k, c in x.items()}

    def dual_icanonical(self, m) -> dict:
        """Transition {(b, a): {(b', a'): coeff}} on the degree-m window, b >= 0."""
        idx = [(b, m - 2 * b) for b in range(m // 2 + 1)]
        barm = {k: self.standard_coords(self.bar(self.U(*k))) for k in idx}
        below = {k: [j for j in idx if j[0] > k[0]] for k in idx}
        return lusztig_basis(TriangularProblem(idx, below, barm, "neg"))

    def element_of(self, trans_row: dict) -> dict:
        out: dict = {}
        for k, c in trans_row.items():
            add_into(out, self.U(*k), c)
        return out

    def from_iqg(self, poly: dict) -> dict:
        """Image of sum c * B^j K^i (keys (j, i)) under B -> v^-1/2 [S], K -> [K]."""
        out: dict = {}
        for (j, i), c in poly.items():
            z = {(i, 0): ONE}
            for _ in range(j):
                z = self.left_S(z)
            add_into(out, z, c * vpow(Fraction(-j, 2)))
        return out

    def positivity(self, m) -> bool:
        from .canonbasis import invert_unitriangular
        inv = invert_unitriangular(self.dual_icanonical(m))
        for k, row in inv.items():
            for j, c in row.items():
                if j == k:
                    if c != ONE:
                        return False
                elif not c.has_natural_coeffs() or any(e >= 0 for e in c.c):
                    return False
        return True
