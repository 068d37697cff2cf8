"""Quiver representations over prime fields.

Indecomposables of a Dynkin quiver come from BGP reflection functors; Hom
and Ext are computed by linear algebra mod p; extension spaces are
enumerated to count middle terms.  Representations may carry relations
(bound quivers), which the ihall module relies on.
"""

from __future__ import annotations

import hashlib
import itertools
import json
import os
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache

from .cartan import QuiverShape, RootDatum


class CensusCapError(RuntimeError):
    pass


class DecompositionError(ValueError):
    pass


DEFAULT_CENSUS_CAP = 10 ** 6


# linear algebra mod p ------------------------------------------------------------

def rref(rows, ncols: int, p: int):
    """Row-reduce a list of rows mod p.  Returns (reduced rows, pivot columns)."""
    m = [[x % p for x in r] for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, len(m)):
            if m[i][c]:
                piv = i
                break
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = pow(m[r][c], p - 2, p)
        row = [(x * inv) % p for x in m[r]]
        m[r] = row
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                mi = m[i]
                m[i] = [(a - f * b) % p for a, b in zip(mi, row)]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank_mod(rows, ncols: int, p: int) -> int:
    if not rows or not ncols:
        return 0
    return len(rref(rows, ncols, p)[1])


def nullspace_mod(rows, ncols: int, p: int):
    """Basis of {x : rows . x = 0} over F_p."""
    if not rows:
        return [[int(i == j) for i in range(ncols)] for j in range(ncols)]
    red, pivots = rref(rows, ncols, p)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        x = [0] * ncols
        x[f] = 1
        for r, c in enumerate(pivots):
            x[c] = (-red[r][f]) % p
        basis.append(x)
    return basis


def matmul_mod(a, b, p):
    if not a or not b or not b[0]:
        cols = len(b[0]) if b else 0
        return [[0] * cols for _ in range(len(a))]
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) % p for col in bt] for row in a]


def zeros(r, c):
    return [[0] * c for _ in range(r)]


def identity(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]


# representations --------------------------------------------------------------------

@dataclass(frozen=True)
class BoundQuiver:
    """Quiver with relations given as sums of paths.

    A relation is a tuple of ``(coeff, path)`` where ``path`` lists arrow indices
    in traversal order.
    """

    n: int
    arrows: tuple
    relations: tuple = ()

    @classmethod
    def of(cls, shape) -> "BoundQuiver":
        if isinstance(shape, BoundQuiver):
            return shape
        return cls(shape.n, tuple(shape.arrows), ())


@dataclass
class FqRep:
    quiver: BoundQuiver
    q: int
    dims: tuple
    mats: list = field(default_factory=list)  # per arrow: dims[t] x dims[s]

    def __post_init__(self):
        self.dims = tuple(self.dims)
        if not self.mats:
            self.mats = [zeros(self.dims[t], self.dims[s]) for s, t in self.quiver.arrows]
        for (s, t), m in zip(self.quiver.arrows, self.mats):
            if len(m) != self.dims[t] or any(len(r) != self.dims[s] for r in m):
                raise ValueError("matrix shape does not match vertex dimensions")

    def total_dim(self) -> int:
        return sum(self.dims)

    def path_matrix(self, path):
        p = self.q
        s0 = self.quiver.arrows[path[0]][0]
        acc = identity(self.dims[s0])
        for a in path:
            acc = matmul_mod(self.mats[a], acc, p)
        return acc

    def satisfies_relations(self) -> bool:
        p = self.q
        for rel in self.quiver.relations:
            s = self.quiver.arrows[rel[0][1][0]][0]
            t = self.quiver.arrows[rel[0][1][-1]][1]
            tot = zeros(self.dims[t], self.dims[s])
            for c, path in rel:
                m = self.path_matrix(path)
                tot = [[(x + c * y) % p for x, y in zip(r1, r2)] for r1, r2 in zip(tot, m)]
            if any(any(r) for r in tot):
                return False
        return True

    def key(self):
        return (self.dims, tuple(tuple(tuple(r) for r in m) for m in self.mats))


def simple_rep(quiver, q, i) -> FqRep:
    quiver = BoundQuiver.of(quiver)
    dims = tuple(int(j == i) for j in range(quiver.n))
    return FqRep(quiver, q, dims)


def direct_sum(reps, quiver=None, q=None) -> FqRep:
    reps = list(reps)
    if not reps:
        return FqRep(BoundQuiver.of(quiver), q, (0,) * BoundQuiver.of(quiver).n)
    quiver = reps[0].quiver
    q = reps[0].q
    n = quiver.n
    dims = tuple(sum(r.dims[i] for r in reps) for i in range(n))
    mats = []
    for a, (s, t) in enumerate(quiver.arrows):
        m = zeros(dims[t], dims[s])
        ro = co = 0
        for r in reps:
            blk = r.mats[a]
            for i, row in enumerate(blk):
                m[ro + i][co:co + len(row)] = row
            ro += r.dims[t]
            co += r.dims[s]
        mats.append(m)
    return FqRep(quiver, q, dims, mats)


def _hom_system(M: FqRep, N: FqRep):
    """Equations for intertwiners f = (f_i : M_i -> N_i)."""
    quiver = M.quiver
    offs, off = [], 0
    for i in range(quiver.n):
        offs.append(off)
        off += N.dims[i] * M.dims[i]
    nvars = off
    rows = []
    p = M.q
    for a, (s, t) in enumerate(quiver.arrows):
        Na, Ma = N.mats[a], M.mats[a]
        # (N_a f_s - f_t M_a)[r][c] = 0 for r < N_t, c < M_s
        for r in range(N.dims[t]):
            for c in range(M.dims[s]):
                row = [0] * nvars
                for k in range(N.dims[s]):
                    x = Na[r][k]
                    if x:
                        row[offs[s] + k * M.dims[s] + c] += x
                for k in range(M.dims[t]):
                    x = Ma[k][c]
                    if x:
                        row[offs[t] + r * M.dims[t] + k] -= x
                rows.append([v % p for v in row])
    return rows, nvars, offs


def hom_basis(M: FqRep, N: FqRep):
    rows, nvars, offs = _hom_system(M, N)
    basis = nullspace_mod(rows, nvars, M.q)
    out = []
    for vec in basis:
        maps = []
        for i in range(M.quiver.n):
            o = offs[i]
            maps.append([[vec[o + r * M.dims[i] + c] for c in range(M.dims[i])]
                         for r in range(N.dims[i])])
        out.append(maps)
    return out


def hom_dim(M: FqRep, N: FqRep) -> int:
    rows, nvars, _ = _hom_system(M, N)
    if nvars == 0:
        return 0
    return nvars - rank_mod(rows, nvars, M.q)


# extensions -----------------------------------------------------------------------------

def _eta_layout(X: FqRep, Z: FqRep):
    offs, off = [], 0
    for s, t in X.quiver.arrows:
        offs.append(off)
        off += Z.dims[t] * X.dims[s]
    return offs, off


def _cocycle_rows(X: FqRep, Z: FqRep):
    """Linearised relation conditions on eta for the upper-triangular middle term."""
    p = X.q
    quiver = X.quiver
    offs, nvars = _eta_layout(X, Z)
    rows = []
    for rel in quiver.relations:
        s0 = quiver.arrows[rel[0][1][0]][0]
        t0 = quiver.arrows[rel[0][1][-1]][1]
        # entry (r, c) of sum_coeff sum_k Z_{after k} eta_{a_k} X_{before k}
        block = [[[0] * nvars for _ in range(X.dims[s0])] for _ in range(Z.dims[t0])]
        for coeff, path in rel:
            for k, a in enumerate(path):
                s, t = quiver.arrows[a]
                before = X.path_matrix(path[:k]) if k else identity(X.dims[s0])
                after = Z.path_matrix(path[k + 1:]) if k + 1 < len(path) else identity(Z.dims[t0])
                o = offs[a]
                for r in range(Z.dims[t0]):
                    for c in range(X.dims[s0]):
                        row = block[r][c]
                        for i in range(Z.dims[t]):
                            ai = after[r][i]
                            if not ai:
                                continue
                            for j in range(X.dims[s]):
                                bj = before[j][c]
                                if bj:
                                    row[o + i * X.dims[s] + j] += coeff * ai * bj
        for r in range(Z.dims[t0]):
            for c in range(X.dims[s0]):
                rows.append([v % p for v in block[r][c]])
    return rows, nvars


def _coboundaries(X: FqRep, Z: FqRep):
    """Images delta(f) for a basis of f in sum_i Hom_k(X_i, Z_i)."""
    quiver = X.quiver
    p = X.q
    offs, nvars = _eta_layout(X, Z)
    vecs = []
    for i in range(quiver.n):
        for r in range(Z.dims[i]):
            for c in range(X.dims[i]):
                # f = elementary matrix at vertex i
                vec = [0] * nvars
                for a, (s, t) in enumerate(quiver.arrows):
                    o = offs[a]
                    if s == i:  # Z_a f_s
                        Za = Z.mats[a]
                        for rr in range(Z.dims[t]):
                            if Za[rr][r]:
                                vec[o + rr * X.dims[s] + c] += Za[rr][r]
                    if t == i:  # - f_t X_a
                        Xa = X.mats[a]
                        for cc in range(X.dims[s]):
                            if Xa[c][cc]:
                                vec[o + r * X.dims[s] + cc] -= Xa[c][cc]
                vecs.append([x % p for x in vec])
    return vecs, nvars


def ext_representatives(X: FqRep, Z: FqRep):
    """Basis vectors (eta) spanning a complement of coboundaries in cocycles."""
    p = X.q
    crow, nvars = _cocycle_rows(X, Z)
    cocycles = nullspace_mod(crow, nvars, p) if crow else [
        [int(i == j) for i in range(nvars)] for j in range(nvars)]
    cob, _ = _coboundaries(X, Z)
    red, piv = rref(cob, nvars, p) if cob else ([], [])
    basis_rows = list(red)
    chosen = []
    cur_rank = len(piv)
    for z in cocycles:
        trial = basis_rows + [z]
        rk = rank_mod(trial, nvars, p)
        if rk > cur_rank:
            basis_rows, cur_rank = trial, rk
            chosen.append(z)
    return chosen


def ext_dim(X: FqRep, Z: FqRep) -> int:
    return len(ext_representatives(X, Z))


def middle_term(X: FqRep, Z: FqRep, eta) -> FqRep:
    quiver = X.quiver
    offs, _ = _eta_layout(X, Z)
    dims = tuple(Z.dims[i] + X.dims[i] for i in range(quiver.n))
    mats = []
    for a, (s, t) in enumerate(quiver.arrows):
        m = zeros(dims[t], dims[s])
        for r in range(Z.dims[t]):
            m[r][:Z.dims[s]] = Z.mats[a][r]
            for c in range(X.dims[s]):
                m[r][Z.dims[s] + c] = eta[offs[a] + r * X.dims[s] + c]
        for r in range(X.dims[t]):
            m[Z.dims[t] + r][Z.dims[s]:] = X.mats[a][r]
        mats.append(m)
    return FqRep(quiver, X.q, dims, mats)


def projective_points(e: int, q: int):
    """One representative per line of F_q^e (first nonzero coordinate 1)."""
    for lead in range(e):
        for tail in itertools.product(range(q), repeat=e - lead - 1):
            yield (0,) * lead + (1,) + tail


def census_modules(X: FqRep, Z: FqRep, classify, cap: int = DEFAULT_CENSUS_CAP):
    """Counter of ``classify(Y)`` over all extension classes of X by Z.

    Nonzero classes on one line give isomorphic middle terms, so only one
    point per line is inspected and weighted by q-1.
    """
    q = X.q
    reps = ext_representatives(X, Z)
    e = len(reps)
    if q ** e > cap:
        raise CensusCapError(f"census cap: enumeration of {q}^{e} = {q ** e} classes exceeds {cap}")
    out = Counter()
    out[classify(direct_sum([Z, X]))] += 1
    nv = len(reps[0]) if reps else 0
    for coords in projective_points(e, q):
        eta = [0] * nv
        for c, z in zip(coords, reps):
            if c:
                for k in range(nv):
                    eta[k] = (eta[k] + c * z[k]) % q
        out[classify(middle_term(X, Z, eta))] += q - 1
    return out


# indecomposables via reflection functors -------------------------------------------

def _reflect_source(dims, mats, arrows, k, p):
    """Apply the cokernel reflection functor at a source ``k``.

    ``arrows`` is the current orientation (k is a source).  Returns the new
    dims, mats and the orientation with arrows at k reversed.
    """
    out_arrows = [a for a, (s, t) in enumerate(arrows) if s == k]
    targets = [arrows[a][1] for a in out_arrows]
    D = sum(dims[j] for j in targets)
    # A : V_k -> sum V_j, rows stacked
    A = []
    for a in out_arrows:
        A.extend(mats[a])
    # left nullspace: rows L with L A = 0
    if dims[k] == 0:
        L = identity(D)
    else:
        At = [list(col) for col in zip(*A)] if A else []
        L = nullspace_mod(At, D, p)
    newdim = len(L)
    new_dims = list(dims)
    new_dims[k] = newdim
    new_mats = list(mats)
    new_arrows = list(arrows)
    off = 0
    for a, j in zip(out_arrows, targets):
        new_mats[a] = [row[off:off + dims[j]] for row in L]
        off += dims[j]
        new_arrows[a] = (j, k)
    return tuple(new_dims), new_mats, new_arrows


def _sink_sequence(shape: QuiverShape, datum: RootDatum):
    """Sink-adapted reduced word for the longest element.

    At each step the smallest sink whose root stays positive is reflected.
    """
    arrows = list(shape.arrows)
    seq, orients, found = [], [], []
    nroots = len(datum.positive_roots)
    while len(found) < nroots:
        sinks = [i for i in range(shape.n) if all(s != i for s, _ in arrows)]
        for k in sinks:
            beta = datum.apply_word(seq, datum.simple(k))
            if all(c >= 0 for c in beta):
                break
        else:
            raise RuntimeError("reflection sequence did not produce every positive root")
        found.append((beta, len(seq)))
        seq.append(k)
        orients.append(list(arrows))
        arrows = [(t, s) if t == k else (s, t) for s, t in arrows]
    return seq, orients, found


@lru_cache(maxsize=None)
def _bgp_data(shape: QuiverShape):
    datum = RootDatum(shape)
    seq, orients, found = _sink_sequence(shape, datum)
    if sorted(b for b, _ in found) != sorted(datum.positive_roots):
        raise RuntimeError("reflection sequence did not produce every positive root")
    return datum, seq, orients, found


def bgp_indecomposable(shape: QuiverShape, q: int, t: int) -> FqRep:
    datum, seq, orients, found = _bgp_data(shape)
    k = seq[t]
    dims = tuple(int(j == k) for j in range(shape.n))
    mats = [zeros(dims[b], dims[a]) for a, b in shape.arrows]
    # undo the reflections innermost first; seq[r] is a source after step r
    for r in range(t - 1, -1, -1):
        dims, mats, _ = _reflect_source(dims, mats, _orient_after(orients[r], seq[r]), seq[r], q)
    return FqRep(BoundQuiver.of(shape), q, dims, mats)


def _orient_after(arrows, k):
    return [(t, s) if t == k else (s, t) for s, t in arrows]


# tables ---------------------------------------------------------------------------------

class IndecTable:
    """Indecomposables M_q(beta) and the generic Hom table of a Dynkin quiver."""

    def __init__(self, shape: QuiverShape, q: int):
        self.shape = shape
        self.q = q
        self.quiver = BoundQuiver.of(shape)
        datum, seq, orients, found = _bgp_data(shape)
        self.datum = datum
        self.roots = datum.positive_roots
        by_root = {beta: bgp_indecomposable(shape, q, t) for beta, t in found}
        self.reps = [by_root[b] for b in self.roots]
        self.hom = generic_hom_table(shape)
        self.order = directing_order(self.hom)
        self._cache = {}

    def module(self, lam) -> FqRep:
        key = tuple(lam)
        if key not in self._cache:
            parts = []
            for idx, m in enumerate(lam):
                parts.extend([self.reps[idx]] * m)
            self._cache[key] = direct_sum(parts, self.quiver, self.q)
        return self._cache[key]

    def fingerprint(self, M: FqRep):
        return [hom_dim(R, M) for R in self.reps]

    def decompose(self, M: FqRep) -> tuple:
        f = self.fingerprint(M)
        n = len(self.roots)
        lam = [0] * n
        # hom[b][g] != 0 only when b precedes g in the directing order
        for g in reversed(self.order):
            rest = sum(lam[h] * self.hom[g][h] for h in range(n) if h != g)
            lam[g] = f[g] - rest
            if lam[g] < 0:
                raise DecompositionError("not a module of this shape")
        if any(sum(lam[h] * self.hom[b][h] for h in range(n)) != f[b] for b in range(n)):
            raise DecompositionError("not a module of this shape")
        dims = tuple(sum(lam[h] * self.roots[h][i] for h in range(n)) for i in range(self.shape.n))
        if dims != M.dims:
            raise DecompositionError("not a module of this shape")
        return tuple(lam)


@lru_cache(maxsize=None)
def generic_hom_table(shape: QuiverShape):
    datum, seq, orients, found = _bgp_data(shape)
    by_root = {beta: bgp_indecomposable(shape, 2, t) for beta, t in found}
    reps = [by_root[b] for b in datum.positive_roots]
    return tuple(tuple(hom_dim(a, b) for b in reps) for a in reps)


def directing_order(hom):
    n = len(hom)
    indeg = {g: sum(1 for b in range(n) if b != g and hom[b][g]) for g in range(n)}
    order, ready = [], sorted(g for g in range(n) if indeg[g] == 0)
    while ready:
        b = ready.pop(0)
        order.append(b)
        for g in range(n):
            if g != b and hom[b][g]:
                indeg[g] -= 1
                if indeg[g] == 0:
                    ready.append(g)
                    ready.sort()
    if len(order) != n:
        raise RuntimeError("Hom table is not directed")
    return order


@lru_cache(maxsize=None)
def indec_table(shape: QuiverShape, q: int) -> IndecTable:
    return IndecTable(shape, q)


def build_indecomposables(shape: QuiverShape, q: int) -> IndecTable:
    return indec_table(shape, q)


def decompose(M: FqRep, table: IndecTable) -> tuple:
    return table.decompose(M)


# Krull-Schmidt class helpers ---------------------------------------------------------

def ks_dim(datum: RootDatum, lam) -> tuple:
    roots = datum.positive_roots
    return tuple(sum(m * roots[k][i] for k, m in enumerate(lam)) for i in range(datum.n))


def ks_from_roots(datum: RootDatum, mult: dict) -> tuple:
    roots = datum.positive_roots
    lam = [0] * len(roots)
    for beta, m in mult.items():
        lam[roots.index(tuple(beta))] += m
    return tuple(lam)


def ks_simple(datum: RootDatum, i: int) -> tuple:
    return ks_from_roots(datum, {datum.simple(i): 1})


def ks_add(a, b) -> tuple:
    return tuple(x + y for x, y in zip(a, b))


def ks_name(datum: RootDatum, lam) -> str:
    roots = datum.positive_roots
    parts = []
    for k, m in enumerate(lam):
        if m:
            label = "[" + ",".join(map(str, roots[k])) + "]"
            parts.append(label if m == 1 else f"{m}{label}")
    return "+".join(parts) if parts else "0"


def parse_ks(datum: RootDatum, text: str) -> tuple:
    """Parse ``"a1"``, ``"[1,1]"``, ``"2[1,0]+[0,1]"`` or ``"a1+a2"`` (sum of simples)."""
    import re
    mult: dict = {}
    text = text.replace(" ", "")
    if text in ("", "0"):
        return (0,) * len(datum.positive_roots)
    for tok in text.split("+"):
        m = re.fullmatch(r"(\d*)(?:\[([\d,]+)\]|a(\d+))", tok)
        if not m:
            raise ValueError(f"cannot parse class token {tok!r}")
        k = int(m.group(1)) if m.group(1) else 1
        if m.group(2):
            beta = tuple(int(x) for x in m.group(2).split(","))
        else:
            beta = datum.simple(int(m.group(3)) - 1)
        if beta not in datum.positive_roots:
            raise ValueError(f"{beta} is not a positive root")
        mult[beta] = mult.get(beta, 0) + k
    return ks_from_roots(datum, mult)


def classes_of_dim(datum: RootDatum, d) -> list:
    """All Krull-Schmidt classes of dimension vector ``d``."""
    roots = datum.positive_roots
    d = tuple(d)
    out = []

    def rec(k, rem, acc):
        if not any(rem):
            out.append(tuple(acc + [0] * (len(roots) - k)))
            return
        if k == len(roots):
            return
        beta = roots[k]
        m = 0
        while all(rem[i] - m * beta[i] >= 0 for i in range(len(d))):
            rec(k + 1, tuple(rem[i] - m * beta[i] for i in range(len(d))), acc + [m])
            m += 1

    rec(0, d, [])
    return sorted(out)


# numerical invariants ----------------------------------------------------------------

def hom_generic(hom, lam, mu) -> int:
    return sum(a * b * hom[i][j] for i, a in enumerate(lam) if a for j, b in enumerate(mu) if b)


def dim_end(hom, lam) -> int:
    return hom_generic(hom, lam, lam)


def gl_order(m: int, q: int) -> int:
    out = 1
    for k in range(m):
        out *= q ** m - q ** k
    return out


def aut_order(hom, lam, q: int) -> int:
    e = dim_end(hom, lam) - sum(m * m for m in lam)
    out = q ** e
    for m in lam:
        out *= gl_order(m, q)
    return out


def aut_poly_coeffs(hom, lam) -> list:
    """Coefficients in q (lowest first) of the automorphism-group order."""
    poly = [1]

    def mul(a, b):
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                out[i + j] += x * y
        return out

    e = dim_end(hom, lam) - sum(m * m for m in lam)
    poly = [0] * e + [1]
    for m in lam:
        for k in range(m):
            factor = [0] * (m + 1)
            factor[m] += 1
            factor[k] -= 1
            poly = mul(poly, factor)
    return poly


def hom_to_indecs(hom, lam) -> list:
    n = len(hom)
    return [sum(lam[g] * hom[g][b] for g in range(n)) for b in range(n)]


def hom_leq(hom, lam, mu) -> bool:
    """Non-strict Hom order: lam is at least as degenerate as mu."""
    a, b = hom_to_indecs(hom, lam), hom_to_indecs(hom, mu)
    return all(x >= y for x, y in zip(a, b))


def hom_less(hom, lam, mu) -> bool:
    return tuple(lam) != tuple(mu) and hom_leq(hom, lam, mu)


# censuses with caching -------------------------------------------------------------------

CACHE_VERSION = 1


def _cache_dir():
    return os.environ.get("HALLCANON_CACHE")


def _cache_path(shape: QuiverShape, q, X, Z):
    h = hashlib.sha256(f"{shape.key()}|{q}|{X}|{Z}".encode()).hexdigest()[:24]
    return os.path.join(_cache_dir(), f"census-{h}.json")


_CENSUS_MEMO: dict = {}


def ext_census(shape: QuiverShape, X, Z, q: int, cap: int = DEFAULT_CENSUS_CAP) -> Counter:
    """Counter {Y: number of extension classes with middle term Y}."""
    key = (shape, q, tuple(X), tuple(Z))
    if key in _CENSUS_MEMO:
        return _CENSUS_MEMO[key]
    path = _cache_path(shape, q, tuple(X), tuple(Z)) if _cache_dir() else None
    if path and os.path.exists(path):
        with open(path) as fh:
            data = json.load(fh)
        if data.get("version") != CACHE_VERSION:
            raise RuntimeError(f"stale cache schema in {path}")
        out = Counter({tuple(k): v for k, v in data["counts"]})
        _CENSUS_MEMO[key] = out
        return out
    table = indec_table(shape, q)
    out = census_modules(table.module(X), table.module(Z), table.decompose, cap)
    _CENSUS_MEMO[key] = out
    if path:
        os.makedirs(os.path.dirname(path), exist_ok=True)
        tmp = path + ".tmp"
        with open(tmp, "w") as fh:
            json.dump({"version": CACHE_VERSION, "shape": shape.key(), "q": q,
                       "X": list(X), "Z": list(Z),
                       "counts": sorted([list(k), v] for k, v in out.items())}, fh)
        os.replace(tmp, path)
    return out


def hall_number_F(shape: QuiverShape, X, Z, Y, q: int):
    from fractions import Fraction
    hom = generic_hom_table(shape)
    census = ext_census(shape, X, Z, q)
    G = Fraction(census.get(tuple(Y), 0), q ** hom_generic(hom, X, Z))
    F = G * aut_order(hom, Y, q) / (aut_order(hom, X, q) * aut_order(hom, Z, q))
    if F.denominator != 1 or F < 0:
        raise ArithmeticError(f"Hall number {F} is not a nonnegative integer")
    return int(F)
