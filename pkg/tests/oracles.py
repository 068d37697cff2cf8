"""Brute-force reference computations, independent of the package internals.

Representations of the linearly oriented quiver 1 -> 2 -> ... -> n over F_p
are built as direct sums of interval modules.  Hall numbers are obtained by
listing every subspace tuple, and automorphism groups by listing every
endomorphism tuple.  Only tiny cases are feasible, which is all the tests need.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from math import log


def intervals(n):
    """Positive roots of A_n as (start, end) intervals, 0-based inclusive."""
    return [(a, b) for a in range(n) for b in range(a, n)]


def interval_vector(n, iv):
    return tuple(int(iv[0] <= k <= iv[1]) for k in range(n))


class LinearRep:
    """Direct sum of interval modules; basis vectors are the interval copies."""

    def __init__(self, n, copies, p):
        self.n, self.p = n, p
        self.copies = list(copies)
        self.basis = [[c for c, iv in enumerate(self.copies) if iv[0] <= k <= iv[1]] for k in range(n)]
        self.dims = [len(b) for b in self.basis]

    def vectors(self, k):
        return list(itertools.product(range(self.p), repeat=self.dims[k]))

    def arrow(self, k, x):
        """Image of x in V_k under the arrow k -> k+1."""
        coords = dict(zip(self.basis[k], x))
        return tuple(coords.get(c, 0) for c in self.basis[k + 1])

    def path(self, a, b, x):
        for k in range(a, b):
            x = self.arrow(k, x)
        return x


def _span(vecs, p, dim):
    out = {tuple([0] * dim)}
    for v in vecs:
        new = set()
        for w in out:
            for t in range(p):
                new.add(tuple((a + t * b) % p for a, b in zip(w, v)))
        out = new
    return frozenset(out)


def subspaces(dim, p):
    """Every subspace of F_p^dim as a frozenset of vectors."""
    found = {frozenset({tuple([0] * dim)})}
    frontier = list(found)
    allv = list(itertools.product(range(p), repeat=dim))
    while frontier:
        nxt = []
        for U in frontier:
            for v in allv:
                if v not in U:
                    W = _span(list(U) + [v], p, dim)
                    if W not in found:
                        found.add(W)
                        nxt.append(W)
        frontier = nxt
    return list(found)


def _dim(S, p):
    return round(log(len(S), p))


def invariants_of_class(n, mult):
    """(dims, ranks of every path a -> b) for the class {interval: multiplicity}."""
    dims = tuple(sum(m for iv, m in mult.items() if iv[0] <= k <= iv[1]) for k in range(n))
    ranks = tuple(sum(m for iv, m in mult.items() if iv[0] <= a and b <= iv[1])
                  for a in range(n) for b in range(a + 1, n))
    return dims, ranks


def hall_number(n, m_mult, n_mult, l_mult, p):
    """#{U in L : U ~ N, L/U ~ M} by listing all subrepresentations of L."""
    L = LinearRep(n, [iv for iv, m in sorted(l_mult.items()) for _ in range(m)], p)
    want_sub = invariants_of_class(n, n_mult)
    want_quot = invariants_of_class(n, m_mult)
    spaces = [subspaces(L.dims[k], p) for k in range(n)]
    count = 0
    for U in itertools.product(*spaces):
        if any(L.arrow(k, x) not in U[k + 1] for k in range(n - 1) for x in U[k]):
            continue
        dims = tuple(_dim(U[k], p) for k in range(n))
        sub_ranks, quot_ranks = [], []
        for a in range(n):
            for b in range(a + 1, n):
                sub_ranks.append(_dim({L.path(a, b, x) for x in U[a]}, p))
                image = {L.path(a, b, x) for x in L.vectors(a)}
                both = _span(list(image) + list(U[b]), p, L.dims[b])
                quot_ranks.append(_dim(both, p) - dims[b])
        quot_dims = tuple(L.dims[k] - dims[k] for k in range(n))
        if (dims, tuple(sub_ranks)) == want_sub and (quot_dims, tuple(quot_ranks)) == want_quot:
            count += 1
    return count


def _matrices(rows, cols, p):
    for entries in itertools.product(range(p), repeat=rows * cols):
        yield tuple(tuple(entries[r * cols:(r + 1) * cols]) for r in range(rows))


def _apply(g, x, p):
    return tuple(sum(a * b for a, b in zip(row, x)) % p for row in g)


def _invertible(g, p):
    d = len(g)
    if d == 0:
        return True
    images = {_apply(g, x, p) for x in itertools.product(range(p), repeat=d)}
    return len(images) == p ** d


def automorphisms(n, mult, p):
    """|Aut M| by testing every tuple of invertible matrices for compatibility."""
    M = LinearRep(n, [iv for iv, m in sorted(mult.items()) for _ in range(m)], p)
    per_vertex = [[g for g in _matrices(d, d, p) if _invertible(g, p)] for d in M.dims]
    count = 0
    for gs in itertools.product(*per_vertex):
        ok = True
        for k in range(n - 1):
            for x in M.vectors(k):
                if M.arrow(k, _apply(gs[k], x, p)) != _apply(gs[k + 1], M.arrow(k, x), p):
                    ok = False
                    break
            if not ok:
                break
        count += ok
    return count


def euler_linear(n, a, b):
    return sum(x * y for x, y in zip(a, b)) - sum(a[k] * b[k + 1] for k in range(n - 1))


def twisted_constant(n, m_mult, n_mult, l_mult, p):
    """|Ext(M, N)_L| / |Hom(M, N)| via Riedtmann: F * |Aut M| |Aut N| / |Aut L|."""
    F = hall_number(n, m_mult, n_mult, l_mult, p)
    return Fraction(F * automorphisms(n, m_mult, p) * automorphisms(n, n_mult, p), automorphisms(n, l_mult, p))


# split rank one iquiver: k[x, e]/(e^2) with e acting nilpotently -------------------------------

def _nilpotent(d, r):
    """Square-zero matrix of rank r: pairs (x_k, e x_k) then singles."""
    m = [[0] * d for _ in range(d)]
    for k in range(r):
        m[2 * k + 1][2 * k] = 1
    return m


def split_a1_aut(d, r, p):
    """|Aut| of the k[e]/(e^2)-module of dimension d with rank e = r, by listing GL_d(F_p)."""
    e = _nilpotent(d, r)
    count = 0
    for g in _matrices(d, d, p):
        if not _invertible(g, p):
            continue
        ge = [[sum(g[i][k] * e[k][j] for k in range(d)) % p for j in range(d)] for i in range(d)]
        eg = [[sum(e[i][k] * g[k][j] for k in range(d)) % p for j in range(d)] for i in range(d)]
        count += ge == eg
    return count


def split_a1_twisted(r_m, d_m, r_n, d_n, r_l, p):
    F = split_a1_hall(r_m, d_m, r_n, d_n, r_l, p)
    d = d_m + d_n
    return Fraction(F * split_a1_aut(d_m, r_m, p) * split_a1_aut(d_n, r_n, p), split_a1_aut(d, r_l, p))


def split_a1_hall(r_m, d_m, r_n, d_n, r_l, p):
    """Hall number for modules of k[e]/(e^2): count e-stable U of L with the given ranks."""
    d = d_m + d_n
    # L = r_l Jordan blocks of size 2 plus d - 2 r_l of size 1; basis order: (x_k, e x_k) pairs then singles
    def e_apply(x):
        y = [0] * d
        for k in range(r_l):
            y[2 * k + 1] = x[2 * k]
        return tuple(y)
    count = 0
    for U in subspaces(d, p):
        if _dim(U, p) != d_n:
            continue
        if any(e_apply(x) not in U for x in U):
            continue
        rank_sub = _dim({e_apply(x) for x in U}, p)
        image = {e_apply(x) for x in itertools.product(range(p), repeat=d)}
        rank_quot = _dim(_span(list(image) + list(U), p, d), p) - d_n
        if rank_sub == r_n and rank_quot == r_m:
            count += 1
    return count
