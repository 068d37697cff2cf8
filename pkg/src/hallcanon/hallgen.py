"""Generic Hall algebra of a Dynkin quiver.

Elements are dicts ``{KSClass: ScalarHalf}`` in the basis u_lambda = [M(lambda)].
Structure constants for left multiplication by a simple are interpolated from
extension censuses over prime fields.  Everything else is derived from those:

* each indecomposable beta has a *top word* whose ordered product of simples
  has beta as its unique most generic term;
* every class is, up to a v-power, an ordered product of its indecomposable
  summands with no extensions between earlier and later factors.

Together these give products of arbitrary elements and the images of basis
vectors under any (anti-)automorphism fixed on simples, without ever
inverting matrices over the fraction field.
"""

from __future__ import annotations

import itertools
from collections import Counter
from fractions import Fraction
from functools import cached_property

from .cartan import QuiverShape, RootDatum, euler_form, norm_N
from .finrep import (aut_poly_coeffs, classes_of_dim, dim_end, directing_order, ext_census,
                     generic_hom_table, hom_generic, hom_less, ks_add, ks_dim, ks_name,
                     ks_simple, indec_table)
from .scalars import (ONE, PRIMES, ZERO, InexactDivision, InterpolationError, ScalarHalf,
                      _lagrange, poly_gcd, vpow)


# linear combinations ------------------------------------------------------------------

def add_into(acc: dict, x: dict, c=ONE):
    for k, a in x.items():
        s = acc.get(k, ZERO) + a * c
        if s:
            acc[k] = s
        else:
            acc.pop(k, None)
    return acc


def lincomb(pairs) -> dict:
    acc: dict = {}
    for c, x in pairs:
        add_into(acc, x, c)
    return acc


def scale(x: dict, c) -> dict:
    if not c:
        return {}
    return {k: a * c for k, a in x.items()}


def sub(x: dict, y: dict) -> dict:
    return add_into(dict(x), y, ScalarHalf(-1))


def bar_coeffs(x: dict) -> dict:
    return {k: a.bar() for k, a in x.items()}


def div_exact(x: dict, c: ScalarHalf) -> dict:
    return {k: a.exact_div(c) for k, a in x.items()}


# interpolation of censuses -----------------------------------------------------------

def fit_joint(sample, primes, max_degree: int, fixed: bool = False) -> dict:
    """Interpolate several counts sampled together.

    ``sample(q)`` returns a Counter keyed by class.  With ``fixed`` the first
    ``max_degree + 1`` primes are used directly; otherwise sample primes are
    added until two consecutive interpolants agree, and one further prime is
    held out as a check.  Returns ``{key: QPolynomial}``.
    """
    primes = list(primes)
    data: dict = {}

    def at(q):
        if q not in data:
            data[q] = sample(q)
        return data[q]

    def fit(n):
        keys = set()
        for q in primes[:n]:
            keys |= set(at(q))
        return {k: _lagrange([(q, at(q).get(k, 0)) for q in primes[:n]]) for k in keys}

    if fixed:
        n = max_degree + 1
        if len(primes) < n:
            raise InterpolationError("interpolation instability: not enough primes for the cap")
        cur = fit(n)
        if any(p.degree() > max_degree for p in cur.values()):
            raise InterpolationError("interpolation instability: degree exceeds cap")
        return cur
    prev = None
    for n in range(1, len(primes)):
        cur = fit(n)
        if prev is not None and cur == prev:
            held = primes[n]
            got = at(held)
            keys = set(got) | set(cur)
            if any(cur[k](held) != got.get(k, 0) if k in cur else got.get(k, 0) != 0 for k in keys):
                raise InterpolationError(
                    f"interpolation instability: held-out prime {held} disagrees")
            return cur
        if n > max_degree + 2:
            break
        prev = cur
    raise InterpolationError("interpolation instability: no stable interpolant")


# the algebra ---------------------------------------------------------------------------------

class HallAlgebra:
    """Generic Hall algebra H(Q) in the u-basis."""

    def __init__(self, shape: QuiverShape, primes=PRIMES):
        self.shape = shape
        self.datum = RootDatum(shape)
        self.roots = self.datum.positive_roots
        self.nroots = len(self.roots)
        self.hom = generic_hom_table(shape)
        self.order = directing_order(self.hom)
        self.primes = tuple(primes)
        self.zero_class = (0,) * self.nroots
        self._left: dict = {}
        self._words: dict = {(): {self.zero_class: ONE}}
        self._top: dict = {}
        self._mulc: dict = {}
        self._classes: dict = {}

    # class bookkeeping ----------------------------------------------------------------
    @property
    def n(self):
        return self.datum.n

    def simple(self, i) -> tuple:
        return ks_simple(self.datum, i)

    def indec(self, k) -> tuple:
        return tuple(int(j == k) for j in range(self.nroots))

    def dim(self, lam) -> tuple:
        return ks_dim(self.datum, lam)

    def name(self, lam) -> str:
        return ks_name(self.datum, lam)

    def classes(self, d) -> list:
        d = tuple(d)
        if d not in self._classes:
            self._classes[d] = classes_of_dim(self.datum, d)
        return self._classes[d]

    def euler(self, a, b) -> int:
        return euler_form(self.shape, a, b)

    def hom_classes(self, lam, mu) -> int:
        return hom_generic(self.hom, lam, mu)

    def ext_classes(self, lam, mu) -> int:
        return self.hom_classes(lam, mu) - self.euler(self.dim(lam), self.dim(mu))

    def dim_end(self, lam) -> int:
        return dim_end(self.hom, lam)

    def less(self, lam, mu) -> bool:
        """Strict Hom order: lam is a proper degeneration of mu."""
        return hom_less(self.hom, lam, mu)

    def aut(self, lam) -> ScalarHalf:
        return ScalarHalf.from_qpoly(aut_poly_coeffs(self.hom, lam))

    # exponents of rescaled bases ----------------------------------------------------------
    def E_exponent(self, lam) -> Fraction:
        return Fraction(self.dim_end(lam) - sum(self.dim(lam)))

    def U_exponent(self, lam) -> Fraction:
        d = self.dim(lam)
        return Fraction(-self.dim_end(lam)) + Fraction(self.euler(d, d), 2)

    def rescaled_bases(self, lam):
        """(E_lambda, U_lambda) as dicts in the u-basis (E has a fraction-field coefficient).

        E_lambda = v^e w_lambda is returned as ``(v^e, a_lambda)`` meaning v^e/a_lambda * u.
        """
        return (vpow(self.E_exponent(lam)), self.aut(lam)), vpow(self.U_exponent(lam))

    def norm(self, d) -> Fraction:
        return norm_N(self.datum, d)

    # census-derived structure constants -------------------------------------------------
    def census_constants(self, mu, nu, primes=None, fixed=False) -> dict:
        """u_mu * u_nu by interpolating censuses directly (no words involved)."""
        primes = tuple(primes or self.primes)
        mu, nu = tuple(mu), tuple(nu)
        e = self.ext_classes(mu, nu)
        counts = fit_joint(lambda q: ext_census(self.shape, mu, nu, q), primes, e, fixed=fixed)
        twist = self.euler(self.dim(mu), self.dim(nu)) - 2 * self.hom_classes(mu, nu)
        out = {}
        for lam, poly in counts.items():
            if poly.coeffs:
                if any(c.denominator != 1 for c in poly.coeffs):
                    raise ArithmeticError("non-integral Hall polynomial")
                out[lam] = poly.to_scalar().shift(2 * twist)
        return out

    def left_simple_class(self, i, lam) -> dict:
        key = (i, tuple(lam))
        if key not in self._left:
            self._left[key] = self.census_constants(self.simple(i), lam)
        return self._left[key]

    def left_simple(self, i, x: dict) -> dict:
        acc: dict = {}
        for lam, c in x.items():
            add_into(acc, self.left_simple_class(i, lam), c)
        return acc

    def word_product(self, word) -> dict:
        """u_{w1} u_{w2} ... u_{wk} for a word of vertex indices."""
        word = tuple(word)
        if word not in self._words:
            self._words[word] = self.left_simple(word[0], self.word_product(word[1:]))
        return self._words[word]

    def apply_word_left(self, word, x: dict) -> dict:
        for i in reversed(word):
            x = self.left_simple(i, x)
        return x

    # decompositions --------------------------------------------------------------------------
    def split_class(self, lam):
        """Ordered indecomposable factors and the v-exponent h with u_lam = v^h prod u_L."""
        rank = {b: k for k, b in enumerate(self.order)}
        factors = []
        for b in sorted(range(self.nroots), key=rank.__getitem__):
            factors.extend([b] * lam[b])
        h = 0
        for a in range(len(factors)):
            for b in range(a + 1, len(factors)):
                x, y = factors[a], factors[b]
                ext = self.hom[x][y] - self.euler(self.roots[x], self.roots[y])
                if ext:
                    raise RuntimeError("factor order has extensions")
                h += self.hom[x][y]
        return factors, h

    def top_word(self, k):
        """(word, expansion) for indecomposable index k; expansion has the indecomposable on top."""
        if k in self._top:
            return self._top[k]
        beta = self.roots[k]
        letters = [i for i in range(self.n) for _ in range(beta[i])]
        target = self.indec(k)
        best = None
        for word in sorted(set(itertools.permutations(letters))):
            prod = self.word_product(word)
            c = prod.get(target)
            if not c:
                continue
            score = (len(c.c), len(prod), word)
            if best is None or score < best[0]:
                best = (score, word, prod)
                if len(c.c) == 1 and len(prod) == 1:
                    break
        if best is None:
            raise RuntimeError(f"no word reaches the indecomposable {beta}")
        self._top[k] = (best[1], best[2])
        return self._top[k]

    # products ------------------------------------------------------------------------------
    def mul_indec_class(self, k, nu) -> dict:
        key = (k, tuple(nu))
        if key in self._mulc:
            return self._mulc[key]
        word, prod = self.top_word(k)
        target = self.indec(k)
        acc = self.apply_word_left(word, {tuple(nu): ONE})
        for mu, c in prod.items():
            if mu != target:
                add_into(acc, self.mul_class(mu, {tuple(nu): ONE}), -c)
        out = div_exact(acc, prod[target])
        self._mulc[key] = out
        return out

    def mul_class(self, mu, y: dict) -> dict:
        """u_mu * y."""
        if not any(mu):
            return dict(y)
        factors, h = self.split_class(mu)
        for k in reversed(factors):
            acc = {}
            for nu, c in y.items():
                add_into(acc, self.mul_indec_class(k, nu), c)
            y = acc
        return scale(y, vpow(h))

    def product(self, x: dict, y: dict) -> dict:
        acc: dict = {}
        for mu, c in x.items():
            add_into(acc, self.mul_class(mu, y), c)
        return acc

    def u(self, lam) -> dict:
        return {tuple(lam): ONE}

    def generator(self, i) -> dict:
        return {self.simple(i): ONE}

    # monomial expressions -----------------------------------------------------------------------
    def monomial_expression(self, lam):
        """u_lam = (sum_w c_w * word_w) / denominator with Laurent c_w."""
        num, den = self._words_of(tuple(lam))
        return num, den

    def _words_of(self, lam):
        if not any(lam):
            return {(): ONE}, ONE
        factors, h = self.split_class(lam)
        if len(factors) == 1:
            k = factors[0]
            word, prod = self.top_word(k)
            target = self.indec(k)
            terms = [({word: ONE}, ONE)]
            for mu, c in prod.items():
                if mu != target:
                    n, d = self._words_of(mu)
                    terms.append((scale(n, -c), d))
            num, den = _combine(terms)
            return num, den * prod[target]
        num, den = {(): vpow(h)}, ONE
        for k in factors:
            n2, d2 = self._words_of(self.indec(k))
            prod_num: dict = {}
            for w1, a in num.items():
                for w2, b in n2.items():
                    add_into(prod_num, {w1 + w2: a * b})
            num, den = prod_num, den * d2
        g = poly_gcd(den, _content_gcd(num))
        if len(g.c) > 1:
            num = div_exact(num, g)
            den = den.exact_div(g)
        return num, den

    def evaluate_words(self, num: dict, den: ScalarHalf) -> dict:
        acc: dict = {}
        for w, c in num.items():
            add_into(acc, self.word_product(w), c)
        return div_exact(acc, den)

    # (anti)automorphisms fixed on simples ------------------------------------------------------
    def letter_map(self, letter_scale, reverse=False, conj=False, target=None) -> "LetterMap":
        return LetterMap(self, target or self, letter_scale, reverse, conj)

    @cached_property
    def bar_map(self):
        return self.letter_map(vpow(-1), reverse=True, conj=True)

    @cached_property
    def psi_map(self):
        return self.letter_map(vpow(-2) * -1, reverse=False, conj=True)

    @cached_property
    def star_map(self):
        return self.letter_map(ONE, reverse=True, conj=False)

    def bar(self, x: dict) -> dict:
        return self.bar_map(x)

    def psi(self, x: dict) -> dict:
        return self.psi_map(x)

    def star(self, x: dict) -> dict:
        return self.star_map(x)

    # pairing -----------------------------------------------------------------------------------
    def hopf_pair(self, x: dict, y: dict) -> ScalarHalf:
        acc = ZERO
        for lam, a in x.items():
            b = y.get(lam)
            if b:
                acc = acc + a * b * self.aut(lam)
        return acc

    # export ---------------------------------------------------------------------------------------
    def table(self, degrees_pairs):
        rows = []
        for mu, nu in degrees_pairs:
            prod = self.product(self.u(mu), self.u(nu))
            for lam in sorted(prod):
                rows.append({"mu": list(mu), "nu": list(nu), "lambda": list(lam),
                             "coeffs": prod[lam].to_triples()})
        return rows


def _content_gcd(num: dict) -> ScalarHalf:
    g = None
    for c in num.values():
        g = c if g is None else poly_gcd(g, c)
    return g or ONE


def _combine(terms):
    """Sum of (numerator dict, denominator) pairs over a common denominator."""
    den = ONE
    for _, d in terms:
        den = den * d.exact_div(poly_gcd(den, d))
    num: dict = {}
    for n, d in terms:
        add_into(num, n, den.exact_div(d))
    return num, den


class LetterMap:
    """Semilinear map H(Q) -> H(Q') with u_i -> s * u_i, multiplicative or anti.

    ``conj`` applies the bar involution to coefficients.  The target may be the
    Hall algebra of another orientation of the same diagram.
    """

    def __init__(self, source: HallAlgebra, target: HallAlgebra, letter_scale,
                 reverse: bool, conj: bool):
        self.src = source
        self.tgt = target
        self.s = letter_scale if isinstance(letter_scale, ScalarHalf) else ScalarHalf(letter_scale)
        self.reverse = reverse
        self.conj = conj
        self._memo: dict = {}
        if source.roots != target.roots:
            raise ValueError("letter maps need the same vertex set")

    def coeff(self, c: ScalarHalf) -> ScalarHalf:
        return c.bar() if self.conj else c

    def of_class(self, lam) -> dict:
        lam = tuple(lam)
        if lam in self._memo:
            return self._memo[lam]
        src, tgt = self.src, self.tgt
        if not any(lam):
            out = {tgt.zero_class: ONE}
        else:
            factors, h = src.split_class(lam)
            if len(factors) == 1:
                k = factors[0]
                word, prod = src.top_word(k)
                w = tuple(reversed(word)) if self.reverse else word
                acc = scale(tgt.word_product(w), self.s ** len(word))
                target = src.indec(k)
                for mu, c in prod.items():
                    if mu != target:
                        add_into(acc, self.of_class(mu), -self.coeff(c))
                out = div_exact(acc, self.coeff(prod[target]))
            else:
                images = [self.of_class(src.indec(k)) for k in factors]
                if self.reverse:
                    images.reverse()
                out = images[-1]
                for img in reversed(images[:-1]):
                    out = tgt.product(img, out)
                out = scale(out, self.coeff(vpow(h)))
        self._memo[lam] = out
        return out

    def __call__(self, x: dict) -> dict:
        acc: dict = {}
        for lam, c in x.items():
            add_into(acc, self.of_class(lam), self.coeff(c))
        return acc
