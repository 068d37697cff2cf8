"""Canonical and dual canonical bases of the generic Hall algebra."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .hallgen import HallAlgebra, LetterMap, add_into, scale
from .scalars import ONE, ZERO, ScalarHalf, vpow
from .triangle import TriangularProblem, lusztig_basis


class BasisCheckError(AssertionError):
    pass


@dataclass
class BasisFamily:
    """Transition matrices for one degree.

    ``transition[l]`` maps classes to coefficients against the standard basis
    (E for ``canonical``, U for ``dual-canonical``).
    """

    kind: str
    degree: tuple
    transition: dict
    norms: dict = field(default_factory=dict)

    def classes(self):
        return sorted(self.transition)


# conversions between u-coordinates and the rescaled bases -------------------------------

def E_coords_of_u(H: HallAlgebra, lam, coeff: ScalarHalf, denom: ScalarHalf = ONE) -> ScalarHalf:
    """Coefficient on E_lam of (coeff/denom) * u_lam, asserted Laurent."""
    return (coeff * H.aut(lam) * vpow(-H.E_exponent(lam))).exact_div(denom)


def psi_matrix_E(H: HallAlgebra, d) -> dict:
    """psi(E_l) = sum_m M[l][m] E_m on the classes of degree d."""
    out = {}
    for lam in H.classes(d):
        img = H.psi(H.u(lam))
        # psi(E_l) = v^{-e_l} psi(u_l) / bar(a_l)
        den = H.aut(lam).bar()
        pre = vpow(-H.E_exponent(lam))
        out[lam] = {mu: E_coords_of_u(H, mu, c * pre, den) for mu, c in img.items()}
    return out


def bar_matrix_U(H: HallAlgebra, d) -> dict:
    out = {}
    for lam in H.classes(d):
        img = H.bar(H.u(lam))
        pre = vpow(-H.U_exponent(lam))
        out[lam] = {mu: c * pre * vpow(-H.U_exponent(mu)) for mu, c in img.items()}
    return out


def canonical_basis(H: HallAlgebra, d) -> BasisFamily:
    d = tuple(d)
    cls = H.classes(d)
    below = {lam: [mu for mu in cls if H.less(mu, lam)] for lam in cls}
    trans = lusztig_basis(TriangularProblem(cls, below, psi_matrix_E(H, d), "neg"))
    return BasisFamily("canonical", d, trans, {lam: H.norm(d) for lam in cls})


def dual_canonical_basis(H: HallAlgebra, d) -> BasisFamily:
    d = tuple(d)
    cls = H.classes(d)
    below = {lam: [mu for mu in cls if H.less(lam, mu)] for lam in cls}
    trans = lusztig_basis(TriangularProblem(cls, below, bar_matrix_U(H, d), "neg"))
    return BasisFamily("dual-canonical", d, trans, {lam: H.norm(d) for lam in cls})


def canonical_in_u(H: HallAlgebra, fam: BasisFamily, lam) -> tuple:
    """B_lam as (numerator dict in u, common denominator)."""
    den = ONE
    for mu in fam.transition[lam]:
        den = den * H.aut(mu).exact_div(_gcd(den, H.aut(mu)))
    num: dict = {}
    for mu, c in fam.transition[lam].items():
        add_into(num, {mu: c * vpow(H.E_exponent(mu)) * den.exact_div(H.aut(mu))})
    return num, den


def _gcd(a, b):
    from .scalars import poly_gcd
    return poly_gcd(a, b)


def dual_in_u(H: HallAlgebra, fam: BasisFamily, lam) -> dict:
    return {mu: c * vpow(H.U_exponent(mu)) for mu, c in fam.transition[lam].items()}


def pairing_duality_check(H: HallAlgebra, d) -> dict:
    """Gram matrix (v^{dim/2} B_m, v^{-n/2} C_l); raises on any non-Kronecker entry.

    B is the psi-invariant canonical basis; its pairing-normalised version
    carries the extra factor v^{dim/2}.
    """
    d = tuple(d)
    can = canonical_basis(H, d)
    dual = dual_canonical_basis(H, d)
    n = H.norm(d)
    half_dim = Fraction(sum(d), 2)
    gram = {}
    for mu in can.classes():
        num, den = canonical_in_u(H, can, mu)
        for lam in dual.classes():
            c = dual_in_u(H, dual, lam)
            val = H.hopf_pair(num, c).exact_div(den) * vpow(half_dim - n / 2)
            gram[(mu, lam)] = val
            want = ONE if mu == lam else ZERO
            if val != want:
                raise BasisCheckError(f"pairing of {H.name(mu)} with {H.name(lam)} is {val}")
    return gram


def positivity_check(H: HallAlgebra, fam: BasisFamily) -> bool:
    """Standard basis expands in the computed basis with v^-1 N[v^-1] off the diagonal."""
    inv = invert_unitriangular(fam.transition)
    for lam, row in inv.items():
        for mu, c in row.items():
            if mu == lam:
                if c != ONE:
                    return False
            elif not c.has_natural_coeffs() or any(e >= 0 for e in c.c):
                return False
    return True


def invert_unitriangular(trans: dict) -> dict:
    """Inverse of a unitriangular transition matrix {l: {m: c}}."""
    order = sorted(trans, key=lambda l: len(trans[l]))
    inv: dict = {}
    for lam in order:
        # e_l = b_l - sum_{m != l} c_m e_m
        row = {lam: ONE}
        for mu, c in trans[lam].items():
            if mu != lam:
                add_into(row, inv[mu] if mu in inv else _late(trans, inv, mu), -c)
        inv[lam] = row
    return inv


def _late(trans, inv, mu):
    row = {mu: ONE}
    for nu, c in trans[mu].items():
        if nu != mu:
            add_into(row, inv[nu] if nu in inv else _late(trans, inv, nu), -c)
    inv[mu] = row
    return row


# products in E-coordinates ------------------------------------------------------------------

def product_E(H: HallAlgebra, x: dict, y: dict) -> dict:
    """Product of two elements written in E-coordinates."""
    acc: dict = {}
    for mu, a in x.items():
        for nu, b in y.items():
            prod = H.product(H.u(mu), H.u(nu))
            den = H.aut(mu) * H.aut(nu)
            pre = a * b * vpow(H.E_exponent(mu) + H.E_exponent(nu))
            for lam, c in prod.items():
                add_into(acc, {lam: E_coords_of_u(H, lam, c * pre, den)})
    return acc


def divided_power_E(H: HallAlgebra, i, r) -> dict:
    """The r-th divided power of the i-th simple generator equals E_{r alpha_i}."""
    lam = tuple(r * x for x in H.simple(i))
    return {lam: ONE}


def sl3_family(a, b, c):
    """Word data (letters, exponents) describing the canonical element for (a, b, c)."""
    if c >= a:
        return ((0, b), (1, b + c), (0, a))
    return ((1, c), (0, a + b), (1, b))


def sl3_element(H: HallAlgebra, a, b, c) -> dict:
    out = None
    for i, r in sl3_family(a, b, c):
        f = divided_power_E(H, i, r) if r else {H.zero_class: ONE}
        out = f if out is None else product_E(H, out, f)
    return out


# orientation change -----------------------------------------------------------------------------

def fourier_map(H: HallAlgebra, H2: HallAlgebra) -> LetterMap:
    return LetterMap(H, H2, ONE, reverse=False, conj=False)


def fourier_check(H: HallAlgebra, H2: HallAlgebra, d, kind="both") -> dict:
    """Image of each (dual) canonical element of H is one of H2."""
    d = tuple(d)
    F = fourier_map(H, H2)
    report = {}
    if kind in ("both", "canonical"):
        can, can2 = canonical_basis(H, d), canonical_basis(H2, d)
        targets = {_freeze(row) for row in can2.transition.values()}
        for lam, row in can.transition.items():
            img: dict = {}
            for mu, c in row.items():
                fu = F.of_class(mu)
                pre = c * vpow(H.E_exponent(mu))
                for nu, e in fu.items():
                    add_into(img, {nu: E_coords_of_u(H2, nu, e * pre, H.aut(mu))})
            if _freeze(img) not in targets:
                raise BasisCheckError(f"canonical element {H.name(lam)} is not mapped into the basis")
        report["canonical"] = len(can.transition)
    if kind in ("both", "dual"):
        dual, dual2 = dual_canonical_basis(H, d), dual_canonical_basis(H2, d)
        targets = {_freeze(row) for row in dual2.transition.values()}
        for lam, row in dual.transition.items():
            img = {}
            for mu, c in row.items():
                pre = c * vpow(H.U_exponent(mu))
                for nu, e in F.of_class(mu).items():
                    add_into(img, {nu: e * pre * vpow(-H2.U_exponent(nu))})
            if _freeze(img) not in targets:
                raise BasisCheckError(f"dual canonical element {H.name(lam)} is not mapped into the basis")
        report["dual"] = len(dual.transition)
    return report


def _freeze(row):
    return frozenset((k, v) for k, v in row.items())


def serre_defects(H: HallAlgebra) -> dict:
    """Quantum Serre expressions in the images v^{-1/2} u_i; all should vanish."""
    from .scalars import qbinom
    out = {}
    c = H.datum.cartan
    for i in range(H.n):
        for j in range(H.n):
            if i == j:
                continue
            m = 1 - c[i][j]
            acc: dict = {}
            for r in range(m + 1):
                word = (i,) * (m - r) + (j,) + (i,) * r
                coeff = qbinom(m, r) * ScalarHalf(-1) ** r * vpow(Fraction(-(m + 1), 2))
                add_into(acc, H.word_product(word), coeff)
            out[(i, j)] = acc
    return out
