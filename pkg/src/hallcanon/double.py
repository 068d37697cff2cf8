"""The Drinfeld double in PBW normal form.

A normal-form monomial is F(lm) E(lp) K_mu K'_nu, keyed by the tuple
``(lm, lp, mu, nu)``.  Here E(l) and F(l) are the images of the Hall basis
vector u_l under u_i -> v^(1/2) E_i and u_i -> v^(1/2) F_i, so that
E(alpha_i) = v^(1/2) E_i.  K-exponents may be negative.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .cartan import QuiverShape, RootDatum, parse_quiver_spec
from .hallgen import HallAlgebra, LetterMap, add_into, div_exact, scale
from .scalars import ONE, ZERO, ScalarHalf, qint, vpow


def _vec_add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _vec_sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


class DrinfeldDouble:
    def __init__(self, shape_or_hall):
        if isinstance(shape_or_hall, HallAlgebra):
            self.H = shape_or_hall
        else:
            shape = shape_or_hall if isinstance(shape_or_hall, QuiverShape) else parse_quiver_spec(shape_or_hall)[0]
            self.H = HallAlgebra(shape)
        H = self.H
        self.n = H.n
        self.C = H.datum.cartan
        self.z = (0,) * self.n
        self.zc = H.zero_class
        self._comm: dict = {}
        self._eind: dict = {}
        self.F_bar = H.letter_map(vpow(-1), reverse=True, conj=True)
        self.F_psi = H.letter_map(vpow(-1), reverse=False, conj=True)
        self.F_star = H.letter_map(ONE, reverse=True, conj=False)

    # construction -------------------------------------------------------------------------
    def key(self, lm=None, lp=None, mu=None, nu=None):
        return (tuple(lm or self.zc), tuple(lp or self.zc), tuple(mu or self.z), tuple(nu or self.z))

    def one(self):
        return {self.key(): ONE}

    def unit(self, i):
        return tuple(int(j == i) for j in range(self.n))

    def Eu(self, lam):
        return {self.key(lp=lam): ONE}

    def Fu(self, lam):
        return {self.key(lm=lam): ONE}

    def E(self, i):
        """Chevalley generator E_i."""
        return {self.key(lp=self.H.simple(i)): vpow(Fraction(-1, 2))}

    def F(self, i):
        return {self.key(lm=self.H.simple(i)): vpow(Fraction(-1, 2))}

    def K(self, mu, nu=None):
        return {self.key(mu=mu, nu=nu): ONE}

    def Ki(self, i, e=1):
        return self.K(tuple(e * x for x in self.unit(i)))

    def Kpi(self, i, e=1):
        return self.K(self.z, tuple(e * x for x in self.unit(i)))

    def pair(self, mu, gamma) -> int:
        return sum(mu[i] * self.C[i][j] * gamma[j] for i in range(self.n) for j in range(self.n))

    def weight(self, k):
        """E-weight minus F-weight of a normal-form key."""
        return _vec_sub(self.H.dim(k[1]), self.H.dim(k[0]))

    def gamma_degree(self, k):
        mu, nu = k[2], k[3]
        plus = _vec_add(_vec_add(self.H.dim(k[1]), mu), nu)
        minus = _vec_add(_vec_add(self.H.dim(k[0]), mu), nu)
        return plus, minus

    # left multiplications -------------------------------------------------------------------
    def left_K(self, mu, nu, y: dict) -> dict:
        out = {}
        for (lm, lp, m2, n2), c in y.items():
            g, d = self.H.dim(lm), self.H.dim(lp)
            e = -self.pair(mu, g) + self.pair(nu, g) + self.pair(mu, d) - self.pair(nu, d)
            out[(lm, lp, _vec_add(mu, m2), _vec_add(nu, n2))] = c * vpow(e)
        return out

    def left_F(self, lam, y: dict) -> dict:
        H = self.H
        out: dict = {}
        for (lm, lp, mu, nu), c in y.items():
            prod = H.product(H.u(lam), H.u(lm))
            for lm2, d in prod.items():
                add_into(out, {(lm2, lp, mu, nu): c * d})
        return out

    def comm(self, i, lam) -> dict:
        """[E(alpha_i), F(lam)] in normal form (terms F(p) K_i and F(p) K'_i)."""
        lam = tuple(lam)
        key = (i, lam)
        if key in self._comm:
            return self._comm[key]
        H = self.H
        if not any(lam):
            out = {}
        else:
            factors, h = H.split_class(lam)
            if len(factors) == 1:
                k = factors[0]
                word, prod = H.top_word(k)
                out = self._comm_word(i, word)
                target = H.indec(k)
                for mu, c in prod.items():
                    if mu != target:
                        add_into(out, self.comm(i, mu), -c)
                out = div_exact(out, prod[target])
            else:
                first = H.indec(factors[0])
                rest = tuple(a - b for a, b in zip(lam, first))
                hh = H.hom_classes(first, rest)
                # F(lam) = v^hh F(first) F(rest)
                out = self._times_F_right(self.comm(i, first), rest)
                add_into(out, self.left_F(first, self.comm(i, rest)))
                out = scale(out, vpow(hh))
        self._comm[key] = out
        return out

    def _times_F_right(self, x: dict, lam) -> dict:
        """x * F(lam) for x with trivial E-part."""
        H = self.H
        out: dict = {}
        g = H.dim(lam)
        for (lm, lp, mu, nu), c in x.items():
            e = -self.pair(mu, g) + self.pair(nu, g)
            for lm2, d in H.product(H.u(lm), H.u(lam)).items():
                add_into(out, {(lm2, lp, mu, nu): c * d * vpow(e)})
        return out

    def _comm_word(self, i, word) -> dict:
        H = self.H
        out: dict = {}
        ei = self.unit(i)
        factor = ONE - vpow(2)
        for m, j in enumerate(word):
            if j != i:
                continue
            s = sum(self.C[i][w] for w in word[m + 1:])
            rest = word[:m] + word[m + 1:]
            prod = H.word_product(rest)
            for lm, c in prod.items():
                add_into(out, {(lm, self.zc, ei, self.z): c * factor * vpow(-s)})
                add_into(out, {(lm, self.zc, self.z, ei): -c * factor * vpow(s)})
        return out

    def left_e(self, i, y: dict) -> dict:
        """E(alpha_i) * y."""
        H = self.H
        out: dict = {}
        for (lm, lp, mu, nu), c in y.items():
            for lp2, d in H.left_simple_class(i, lp).items():
                add_into(out, {(lm, lp2, mu, nu): c * d})
            dl = H.dim(lp)
            for (pm, _, km, kn), d in self.comm(i, lm).items():
                e = self.pair(km, dl) - self.pair(kn, dl)
                add_into(out, {(pm, lp, _vec_add(km, mu), _vec_add(kn, nu)): c * d * vpow(e)})
        return out

    def _left_E_indec_basic(self, k, lm, lp) -> dict:
        key = (k, lm, lp)
        if key in self._eind:
            return self._eind[key]
        H = self.H
        word, prod = H.top_word(k)
        y = {(lm, lp, self.z, self.z): ONE}
        acc = y
        for i in reversed(word):
            acc = self.left_e(i, acc)
        acc = dict(acc)
        target = H.indec(k)
        for mu, c in prod.items():
            if mu != target:
                add_into(acc, self.left_E(mu, y), -c)
        out = div_exact(acc, prod[target])
        self._eind[key] = out
        return out

    def left_E(self, lam, y: dict) -> dict:
        """E(lam) * y."""
        if not any(lam):
            return dict(y)
        factors, h = self.H.split_class(lam)
        for k in reversed(factors):
            out: dict = {}
            for (lm, lp, mu, nu), c in y.items():
                base = self._left_E_indec_basic(k, lm, lp)
                for (a, b, m2, n2), d in base.items():
                    add_into(out, {(a, b, _vec_add(m2, mu), _vec_add(n2, nu)): c * d})
            y = out
        return scale(y, vpow(h))

    def multiply(self, x: dict, y: dict) -> dict:
        out: dict = {}
        groups: dict = {}
        for (lm, lp, mu, nu), c in x.items():
            groups.setdefault((lp, mu, nu), []).append((lm, c))
        for (lp, mu, nu), fs in groups.items():
            t = self.left_E(lp, self.left_K(mu, nu, y))
            for lm, c in fs:
                add_into(out, self.left_F(lm, t), c)
        return out

    def mul(self, *xs):
        out = self.one()
        for x in xs:
            out = self.multiply(out, x)
        return out

    def power(self, x, n):
        out = self.one()
        for _ in range(n):
            out = self.multiply(out, x)
        return out

    # words -------------------------------------------------------------------------------------
    def generator(self, token: str) -> dict:
        """Parse ``E1``, ``F2``, ``K1``, ``Kp1``, ``K1^-1``, ``Kp2^3``."""
        m = re.fullmatch(r"(E|F|Kp|K)(\d+)(?:\^(-?\d+))?", token.strip())
        if not m:
            raise ValueError(f"bad generator token {token!r}")
        kind, idx, ex = m.group(1), int(m.group(2)) - 1, int(m.group(3) or 1)
        if not 0 <= idx < self.n:
            raise ValueError(f"vertex index out of range in {token!r}")
        if kind == "E":
            return self.power(self.E(idx), ex)
        if kind == "F":
            return self.power(self.F(idx), ex)
        if kind == "K":
            return self.Ki(idx, ex)
        return self.Kpi(idx, ex)

    def normal_form(self, word) -> dict:
        if isinstance(word, str):
            word = word.split()
        out = self.one()
        for tok in word:
            out = self.multiply(out, self.generator(tok) if isinstance(tok, str) else tok)
        return out

    # involutions ------------------------------------------------------------------------------
    def bar(self, x: dict) -> dict:
        out: dict = {}
        for (lm, lp, mu, nu), c in x.items():
            kpart = {(self.zc, self.zc, mu, nu): c.bar()}
            epart = {(self.zc, b, self.z, self.z): d for b, d in self.F_bar.of_class(lp).items()}
            fpart = {(a, self.zc, self.z, self.z): d for a, d in self.F_bar.of_class(lm).items()}
            add_into(out, self.multiply(self.multiply(kpart, epart), fpart))
        return out

    def psi(self, x: dict) -> dict:
        out: dict = {}
        for (lm, lp, mu, nu), c in x.items():
            fimg = self.F_psi.of_class(lm)
            eimg = self.F_psi.of_class(lp)
            for a, d in fimg.items():
                for b, e in eimg.items():
                    add_into(out, {(a, b, nu, mu): c.bar() * d * e})
        return out

    def star(self, x: dict) -> dict:
        out: dict = {}
        for (lm, lp, mu, nu), c in x.items():
            kpart = {(self.zc, self.zc, nu, mu): c}
            epart = {(self.zc, b, self.z, self.z): d for b, d in self.F_star.of_class(lp).items()}
            fpart = {(a, self.zc, self.z, self.z): d for a, d in self.F_star.of_class(lm).items()}
            add_into(out, self.multiply(self.multiply(kpart, epart), fpart))
        return out

    # diamond action and Heisenberg quotients ----------------------------------------------------
    def diamond(self, mu, nu, x: dict) -> dict:
        """K_mu K'_nu <> x."""
        out: dict = {}
        for k, c in x.items():
            g = self.weight(k)
            e = Fraction(-self.pair(mu, g) + self.pair(nu, g), 2)
            add_into(out, self.left_K(mu, nu, {k: c * vpow(e)}))
        return out

    def heisenberg_project(self, x: dict, sign="+") -> dict:
        if sign == "+":
            return {k: c for k, c in x.items() if not any(k[3])}
        return {k: c for k, c in x.items() if not any(k[2])}

    def heisenberg_multiply(self, x, y, sign="+"):
        return self.heisenberg_project(self.multiply(x, y), sign)

    # braid operators -------------------------------------------------------------------------------
    def reflect(self, i, mu):
        return RootDatum.reflect(self.H.datum, i, mu)

    def braid_images(self, i, inverse=False):
        """Images of the Chevalley generators under T_i (or its inverse)."""
        n = self.n
        E, F = self.E, self.F
        denom = vpow(1) - vpow(-1)
        imgs_E, imgs_F = {}, {}
        for j in range(n):
            cij = self.C[i][j]
            if j == i:
                if not inverse:
                    imgs_E[j] = scale(self.multiply(self.Kpi(i, -1), F(i)), vpow(1))
                    imgs_F[j] = scale(self.multiply(E(i), self.Ki(i, -1)), vpow(-1))
                else:
                    imgs_E[j] = scale(self.multiply(F(i), self.Ki(i, -1)), vpow(1))
                    imgs_F[j] = scale(self.multiply(self.Kpi(i, -1), E(i)), vpow(-1))
            elif cij == 0:
                imgs_E[j], imgs_F[j] = E(j), F(j)
            elif cij == -1:
                a, b = (i, j) if not inverse else (j, i)
                x = add_into(scale(self.multiply(E(a), E(b)), vpow(Fraction(1, 2))),
                             self.multiply(E(b), E(a)), -vpow(Fraction(-1, 2)))
                imgs_E[j] = div_exact(x, denom)
                y = add_into(scale(self.multiply(F(a), F(b)), vpow(Fraction(1, 2))),
                             self.multiply(F(b), F(a)), -vpow(Fraction(-1, 2)))
                imgs_F[j] = div_exact(y, denom)
            else:
                raise ValueError("braid operators need a simply-laced Cartan matrix")
        return imgs_E, imgs_F

    def braid_T(self, i, x: dict, inverse=False) -> dict:
        imgs_E, imgs_F = self.braid_images(i, inverse)
        hom = DoubleHom(self, imgs_E, imgs_F, lambda mu: self.reflect(i, mu))
        return hom(x)


class DoubleHom:
    """Algebra endomorphism of the double given on Chevalley generators.

    K-monomials map through a lattice map; Hall-basis parts are rewritten via
    top words like the Hall-side letter maps.
    """

    def __init__(self, D: DrinfeldDouble, imgs_E: dict, imgs_F: dict, kmap):
        self.D = D
        self.kmap = kmap
        half = vpow(Fraction(1, 2))
        self.e = {j: scale(x, half) for j, x in imgs_E.items()}  # image of E(alpha_j)
        self.f = {j: scale(x, half) for j, x in imgs_F.items()}
        self._E: dict = {}
        self._F: dict = {}

    def _part(self, lam, letters, memo):
        lam = tuple(lam)
        if lam in memo:
            return memo[lam]
        D, H = self.D, self.D.H
        if not any(lam):
            out = D.one()
        else:
            factors, h = H.split_class(lam)
            if len(factors) == 1:
                k = factors[0]
                word, prod = H.top_word(k)
                out = D.mul(*[letters[j] for j in word])
                target = H.indec(k)
                for mu, c in prod.items():
                    if mu != target:
                        add_into(out, self._part(mu, letters, memo), -c)
                out = div_exact(out, prod[target])
            else:
                out = D.mul(*[self._part(H.indec(k), letters, memo) for k in factors])
                out = scale(out, vpow(h))
        memo[lam] = out
        return out

    def __call__(self, x: dict) -> dict:
        D = self.D
        out: dict = {}
        for (lm, lp, mu, nu), c in x.items():
            f = self._part(lm, self.f, self._F)
            e = self._part(lp, self.e, self._E)
            k = D.K(self.kmap(mu), self.kmap(nu))
            add_into(out, D.mul(f, e, k), c)
        return out


# double canonical basis ---------------------------------------------------------------------------

def _compositions(total, n):
    if n == 1:
        yield (total,)
        return
    for k in range(total + 1):
        for rest in _compositions(total - k, n - 1):
            yield (k,) + rest


def _vecs_upto(limit):
    """All nonnegative integer vectors componentwise below ``limit``."""
    import itertools
    return list(itertools.product(*[range(x + 1) for x in limit]))


class DoubleBasis:
    """Two-stage construction of the double canonical basis on a window.

    Indices are ``(a, b, lm, lp)``: the element K_a K'_b <> (b- . b+) where
    b- and b+ are dual canonical elements labelled by Hall classes.
    """

    def __init__(self, D: DrinfeldDouble, window: int):
        from .canonbasis import dual_canonical_basis, invert_unitriangular
        self.D = D
        self.window = window
        H = D.H
        self._dual = {}
        self._dual_inv = {}
        self._dcb = dual_canonical_basis
        self._inv = invert_unitriangular
        self.stage1: dict = {}
        self.stage2: dict = {}

    # dual canonical data in u-coordinates
    def dual(self, d):
        d = tuple(d)
        if d not in self._dual:
            H = self.D.H
            fam = self._dcb(H, d)
            u_of = {lam: {mu: c * vpow(H.U_exponent(mu)) for mu, c in row.items()}
                    for lam, row in fam.transition.items()}
            inv = self._inv(fam.transition)
            # u_mu = sum_lam inv[mu][lam] * v^{-U(mu)} c_lam
            u_in_c = {mu: {lam: c * vpow(-H.U_exponent(mu)) for lam, c in row.items()}
                      for mu, row in inv.items()}
            self._dual[d] = u_of
            self._dual_inv[d] = u_in_c
        return self._dual[d], self._dual_inv[d]

    def pm_product(self, lm, lp) -> dict:
        """b-(lm) * b+(lp) in normal form."""
        D, H = self.D, self.D.H
        cm, _ = self.dual(H.dim(lm))
        cp, _ = self.dual(H.dim(lp))
        out: dict = {}
        for a, x in cm[lm].items():
            for b, y in cp[lp].items():
                add_into(out, {(a, b, D.z, D.z): x * y})
        return out

    def stage1_standard(self, a, lm, lp):
        D = self.D
        return D.diamond(a, D.z, self.pm_product(lm, lp))

    def coords_H_plus(self, x: dict) -> dict:
        """Coordinates of an H+ element on the stage-1 standard basis {K_a <> b- b+}."""
        D, H = self.D, self.D.H
        out: dict = {}
        for (lm, lp, mu, nu), c in x.items():
            if any(nu):
                raise ValueError("element is not in the positive Heisenberg quotient")
            _, im = self.dual(H.dim(lm))
            _, ip = self.dual(H.dim(lp))
            g = D.weight((lm, lp, mu, nu))
            # normal form is y K_mu = v^{-(mu,g)/2} K_mu <> y
            fac = vpow(Fraction(-D.pair(mu, g), 2))
            for bm, x1 in im[lm].items():
                for bp, x2 in ip[lp].items():
                    add_into(out, {(mu, bm, bp): c * x1 * x2 * fac})
        return out

    def degrees(self):
        """Gamma-degrees (plus, minus) with total size at most the window."""
        n = self.D.n
        out = []
        for tot in range(self.window + 1):
            for sp in range(tot + 1):
                for gp in _compositions(sp, n):
                    for gm in _compositions(tot - sp, n):
                        out.append((gp, gm))
        return out

    def stage1_indices(self, gp, gm):
        H = self.D.H
        idx = []
        for a in _vecs_upto(tuple(min(x, y) for x, y in zip(gp, gm))):
            dp = _vec_sub(gp, a)
            dm = _vec_sub(gm, a)
            for lm in H.classes(dm):
                for lp in H.classes(dp):
                    idx.append((tuple(a), lm, lp))
        return idx

    def solve_stage1(self, gp, gm):
        from .triangle import TriangularProblem, lusztig_basis
        key = (gp, gm)
        if key in self.stage1:
            return self.stage1[key]
        D = self.D
        idx = self.stage1_indices(gp, gm)
        barm = {}
        for a, lm, lp in idx:
            x = self.stage1_standard(a, lm, lp)
            bx = D.heisenberg_project(D.bar(x), "+")
            barm[(a, lm, lp)] = self.coords_H_plus(bx)
        below = {i: [j for j in idx if j[0] != i[0] and all(x >= y for x, y in zip(j[0], i[0]))]
                 for i in idx}
        sol = lusztig_basis(TriangularProblem(idx, below, barm, "pos"))
        self.stage1[key] = sol
        return sol

    def stage1_element(self, a, lm, lp) -> dict:
        """b- o b+ shifted by K_a, as a normal-form element of H+."""
        D, H = self.D, self.D.H
        gp = _vec_add(H.dim(lp), a)
        gm = _vec_add(H.dim(lm), a)
        sol = self.solve_stage1(gp, gm)
        out: dict = {}
        for (a2, m2, p2), c in sol[(tuple(a), lm, lp)].items():
            add_into(out, self.stage1_standard(a2, m2, p2), c)
        return out

    def coords_U_hat(self, x: dict, gp, gm) -> dict:
        """Coordinates on the stage-2 standard basis {K'_b <> iota(stage-1 element)}."""
        D = self.D
        byb: dict = {}
        for (lm, lp, mu, nu), c in x.items():
            byb.setdefault(nu, {})[(lm, lp, mu, D.z)] = c
        out: dict = {}
        for b, part in byb.items():
            # part * K'_b = sum over terms; remove K'_b with its diamond factor
            conv: dict = {}
            for k, c in part.items():
                g = D.weight(k)
                fac = vpow(Fraction(D.pair(b, g), 2))  # y K'_b = v^{(b,g)/2} K'_b <> y
                add_into(conv, {k: c * fac})
            std = self.coords_H_plus(conv)
            # rewrite standard coordinates in stage-1 basis elements (unitriangular)
            sub_gp, sub_gm = _vec_sub(gp, b), _vec_sub(gm, b)
            sol = self.solve_stage1(sub_gp, sub_gm)
            inv = self._inv(sol)
            for i1, c in std.items():
                for j1, d in inv[i1].items():
                    add_into(out, {(tuple(b), j1): c * d})
        return out

    def solve_stage2(self, gp, gm):
        from .triangle import TriangularProblem, lusztig_basis
        key = (gp, gm)
        if key in self.stage2:
            return self.stage2[key]
        D = self.D
        idx = []
        for b in _vecs_upto(tuple(min(x, y) for x, y in zip(gp, gm))):
            for j1 in self.stage1_indices(_vec_sub(gp, b), _vec_sub(gm, b)):
                idx.append((tuple(b), j1))
        barm = {}
        for b, (a, lm, lp) in idx:
            x = D.diamond(D.z, b, self.stage1_element(a, lm, lp))
            barm[(b, (a, lm, lp))] = self.coords_U_hat(D.bar(x), gp, gm)
        below = {i: [j for j in idx if j[0] != i[0] and all(x >= y for x, y in zip(j[0], i[0]))]
                 for i in idx}
        sol = lusztig_basis(TriangularProblem(idx, below, barm, "neg"))
        self.stage2[key] = sol
        return sol

    def element(self, b, a, lm, lp) -> dict:
        """K_a K'_b <> (b- . b+) in normal form."""
        D, H = self.D, self.D.H
        gp = _vec_add(_vec_add(H.dim(lp), a), b)
        gm = _vec_add(_vec_add(H.dim(lm), a), b)
        sol = self.solve_stage2(gp, gm)
        out: dict = {}
        for (b2, (a2, m2, p2)), c in sol[(tuple(b), (tuple(a), lm, lp))].items():
            add_into(out, D.diamond(D.z, b2, self.stage1_element(a2, m2, p2)), c)
        return out

    def family(self) -> dict:
        """All double-basis elements on the window, keyed by (a, b, lm, lp)."""
        out = {}
        for gp, gm in self.degrees():
            for b in _vecs_upto(tuple(min(x, y) for x, y in zip(gp, gm))):
                for a, lm, lp in self.stage1_indices(_vec_sub(gp, b), _vec_sub(gm, b)):
                    out[(tuple(a), tuple(b), lm, lp)] = self.element(b, a, lm, lp)
        return out


def sl2_casimir_powers(D: DrinfeldDouble, m_max: int):
    """C^(m) by C^(m+1) = C C^(m) - K K' C^(m-1)."""
    F, E = D.F(0), D.E(0)
    C = add_into(add_into(D.multiply(F, E), D.Ki(0), -vpow(1)), D.Kpi(0), -vpow(-1))
    KK = D.K((1,), (1,))
    pw = [D.one(), C]
    while len(pw) <= m_max:
        nxt = add_into(D.multiply(C, pw[-1]), D.multiply(KK, pw[-2]), ScalarHalf(-1))
        pw.append(nxt)
    return pw


def sl2_family_element(D: DrinfeldDouble, ap, am, mm, m0, mp, casimir=None) -> dict:
    """v^{(a+ - a-)(m- - m+)} K^{a+} K'^{a-} F^{m-} C^(m0) E^{m+}; a+ and a- may be negative."""
    Cp = casimir or sl2_casimir_powers(D, m0)
    x = D.mul(D.K((ap,), (am,)), D.power(D.F(0), mm), Cp[m0], D.power(D.E(0), mp))
    return scale(x, vpow((ap - am) * (mm - mp)))


def sl2_expected_family(D: DrinfeldDouble, window: int) -> list:
    """The family above with a+, a- >= 0, min(m+, m-) = 0 and Gamma-degree at most the window."""
    Cp = sl2_casimir_powers(D, window)
    out = []
    for ap in range(window + 1):
        for am in range(window + 1):
            for mm in range(window + 1):
                for m0 in range(window + 1):
                    for mp in range(window + 1):
                        if min(mp, mm) or 2 * ap + 2 * am + mm + 2 * m0 + mp > window:
                            continue
                        out.append(((ap, am, mm, m0, mp), sl2_family_element(D, ap, am, mm, m0, mp, Cp)))
    return out


def sl2_family_index(D: DrinfeldDouble, x: dict):
    """Parameters (a+, a-, m-, m0, m+) if x is a family element (any integer a+, a-), else None."""
    x = {k: c for k, c in x.items() if c}
    if not x:
        return None
    top = max(x, key=lambda k: (k[0][0] + k[1][0], k[1][0]))
    lm, lp, mu, nu = top[0][0], top[1][0], top[2][0], top[3][0]
    m0 = min(lm, lp)
    params = (mu, nu, lm - m0, m0, lp - m0)
    cand = sl2_family_element(D, *params)
    return params if {k: c for k, c in cand.items() if c} == x else None
