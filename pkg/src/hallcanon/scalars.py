"""Exact Laurent polynomials in a half-power variable.

Every coefficient in the package is a :class:`ScalarHalf`: a finite sum of
rational multiples of powers of ``u`` where ``u*u = v`` and ``q = v*v``.
Exponents are stored as integer powers of ``u``.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt
from typing import Iterable


class InterpolationError(ArithmeticError):
    """Raised when prime samples do not fit a polynomial of the allowed degree."""


class InexactDivision(ArithmeticError):
    pass


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


class ScalarHalf:
    """Laurent polynomial in u = v^(1/2) with rational coefficients."""

    __slots__ = ("c", "_h")

    def __init__(self, coeffs=None):
        if coeffs is None:
            self.c = {}
        elif isinstance(coeffs, dict):
            self.c = {int(e): _frac(a) for e, a in coeffs.items() if a != 0}
        else:
            a = _frac(coeffs)
            self.c = {0: a} if a != 0 else {}
        self._h = None

    # constructors ---------------------------------------------------------
    @classmethod
    def _raw(cls, d):
        obj = cls.__new__(cls)
        obj.c = d
        obj._h = None
        return obj

    @classmethod
    def upow(cls, e: int, coeff=1) -> "ScalarHalf":
        return cls._raw({int(e): _frac(coeff)}) if coeff != 0 else cls._raw({})

    @classmethod
    def vpow(cls, e, coeff=1) -> "ScalarHalf":
        """Monomial coeff * v^e; ``e`` may be a half-integer."""
        e2 = _frac(e) * 2
        if e2.denominator != 1:
            raise ValueError(f"v-exponent {e} is not a half-integer")
        return cls.upow(int(e2), coeff)

    @classmethod
    def from_qpoly(cls, coeffs: Iterable) -> "ScalarHalf":
        return cls({4 * k: a for k, a in enumerate(coeffs)})

    # basic protocol -------------------------------------------------------
    def __bool__(self):
        return bool(self.c)

    def __eq__(self, other):
        if not isinstance(other, ScalarHalf):
            try:
                other = ScalarHalf(other)
            except (TypeError, ValueError):
                return NotImplemented
        return self.c == other.c

    def __hash__(self):
        if self._h is None:
            self._h = hash(frozenset(self.c.items()))
        return self._h

    def __add__(self, other):
        if not isinstance(other, ScalarHalf):
            other = ScalarHalf(other)
        if not other.c:
            return self
        if not self.c:
            return other
        d = dict(self.c)
        for e, a in other.c.items():
            s = d.get(e, 0) + a
            if s:
                d[e] = s
            else:
                d.pop(e, None)
        return ScalarHalf._raw(d)

    __radd__ = __add__

    def __neg__(self):
        return ScalarHalf._raw({e: -a for e, a in self.c.items()})

    def __sub__(self, other):
        if not isinstance(other, ScalarHalf):
            other = ScalarHalf(other)
        return self + (-other)

    def __rsub__(self, other):
        return ScalarHalf(other) - self

    def __mul__(self, other):
        if not isinstance(other, ScalarHalf):
            a = _frac(other)
            if a == 0:
                return ScalarHalf._raw({})
            return ScalarHalf._raw({e: a * b for e, b in self.c.items()})
        if not self.c or not other.c:
            return ScalarHalf._raw({})
        if len(other.c) == 1:
            (f, b), = other.c.items()
            return ScalarHalf._raw({e + f: a * b for e, a in self.c.items()})
        if len(self.c) == 1:
            (f, b), = self.c.items()
            return ScalarHalf._raw({e + f: a * b for e, a in other.c.items()})
        d: dict = {}
        for e1, a1 in self.c.items():
            for e2, a2 in other.c.items():
                e = e1 + e2
                d[e] = d.get(e, 0) + a1 * a2
        return ScalarHalf._raw({e: a for e, a in d.items() if a})

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if not self.is_monomial():
                raise InexactDivision("only monomials have Laurent inverses")
            (e, a), = self.c.items()
            return ScalarHalf._raw({-e * -n: Fraction(1) / a ** -n})
        result = ScalarHalf(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __truediv__(self, other):
        if not isinstance(other, ScalarHalf):
            a = _frac(other)
            return ScalarHalf._raw({e: b / a for e, b in self.c.items()})
        return self.exact_div(other)

    # structure ------------------------------------------------------------
    def is_monomial(self) -> bool:
        return len(self.c) == 1

    def is_zero(self) -> bool:
        return not self.c

    def min_exp(self) -> int:
        return min(self.c)

    def max_exp(self) -> int:
        return max(self.c)

    def coeff(self, e: int) -> Fraction:
        return self.c.get(e, Fraction(0))

    def bar(self) -> "ScalarHalf":
        return ScalarHalf._raw({-e: a for e, a in self.c.items()})

    def shift(self, k: int) -> "ScalarHalf":
        """Multiply by u^k."""
        return ScalarHalf._raw({e + k: a for e, a in self.c.items()})

    def part(self, pred) -> "ScalarHalf":
        return ScalarHalf._raw({e: a for e, a in self.c.items() if pred(e)})

    def negative_part(self):
        return self.part(lambda e: e < 0)

    def positive_part(self):
        return self.part(lambda e: e > 0)

    def constant(self) -> Fraction:
        return self.c.get(0, Fraction(0))

    def has_integer_coeffs(self) -> bool:
        return all(a.denominator == 1 for a in self.c.values())

    def has_natural_coeffs(self) -> bool:
        return all(a.denominator == 1 and a >= 0 for a in self.c.values())

    def in_v_integral(self) -> bool:
        """True when every exponent is an integral power of v."""
        return all(e % 2 == 0 for e in self.c)

    def subs_u(self, value: Fraction) -> Fraction:
        return sum((a * Fraction(value) ** e for e, a in self.c.items()), Fraction(0))

    def exact_div(self, other: "ScalarHalf") -> "ScalarHalf":
        """Quotient in the Laurent ring; raise :class:`InexactDivision` otherwise."""
        if not other.c:
            raise ZeroDivisionError("division by zero ScalarHalf")
        if len(other.c) == 1:
            (f, b), = other.c.items()
            return ScalarHalf._raw({e - f: a / b for e, a in self.c.items()})
        if not self.c:
            return self
        # long division on shifted polynomials, from the top exponent down
        rem = dict(self.c)
        top_d = max(other.c)
        low_d = min(other.c)
        lead = other.c[top_d]
        quot: dict = {}
        low_n = min(self.c)
        while rem:
            top = max(rem)
            if top - top_d < low_n - low_d:
                raise InexactDivision(f"{self} is not divisible by {other}")
            k = top - top_d
            a = rem[top] / lead
            quot[k] = a
            for e, b in other.c.items():
                s = rem.get(e + k, 0) - a * b
                if s:
                    rem[e + k] = s
                else:
                    rem.pop(e + k, None)
        return ScalarHalf._raw(quot)

    # serialization ----------------------------------------------------------
    def to_triples(self) -> list:
        return [[e, a.numerator, a.denominator] for e, a in sorted(self.c.items())]

    @classmethod
    def from_triples(cls, triples) -> "ScalarHalf":
        return cls({int(e): Fraction(int(n), int(d)) for e, n, d in triples})

    def __repr__(self):
        return f"ScalarHalf({self})"

    def __str__(self):
        if not self.c:
            return "0"
        parts = []
        for e, a in sorted(self.c.items(), reverse=True):
            if e == 0:
                mono = ""
            else:
                ve = Fraction(e, 2)
                mono = "v" if ve == 1 else f"v^{ve}" if ve.denominator == 1 else f"v^({ve})"
            if mono and abs(a) == 1:
                term = mono
            else:
                term = str(abs(a)) + ("*" + mono if mono else "")
            sign = "-" if a < 0 else "+"
            parts.append((sign, term))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, term in parts[1:]:
            out += f" {sign} {term}"
        return out


ZERO = ScalarHalf()
ONE = ScalarHalf(1)
V = ScalarHalf.upow(2)
VINV = ScalarHalf.upow(-2)
SQRT_V = ScalarHalf.upow(1)


def vpow(e) -> ScalarHalf:
    return ScalarHalf.vpow(e)


def bar(x: ScalarHalf) -> ScalarHalf:
    return x.bar()


# quantum integers -----------------------------------------------------------

def qint(n: int) -> ScalarHalf:
    """Symmetric quantum integer [n] = (v^n - v^-n)/(v - v^-1)."""
    if n == 0:
        return ZERO
    if n < 0:
        return -qint(-n)
    return ScalarHalf({2 * (n - 1 - 2 * k): 1 for k in range(n)})


def qfactorial(n: int) -> ScalarHalf:
    out = ONE
    for k in range(1, n + 1):
        out = out * qint(k)
    return out


def qbinom(n: int, k: int) -> ScalarHalf:
    if k < 0 or n < 0 or k > n:
        return ZERO
    return qfactorial(n).exact_div(qfactorial(k) * qfactorial(n - k))


def poly_gcd(a: ScalarHalf, b: ScalarHalf) -> ScalarHalf:
    """Monic gcd of two Laurent polynomials, normalised to lowest exponent 0."""

    def norm(x):
        if not x.c:
            return x
        x = x.shift(-x.min_exp())
        return x / x.c[x.max_exp()]

    a, b = norm(a), norm(b)
    while b.c:
        # remainder of a by b on ordinary polynomials
        r = dict(a.c)
        top_b = b.max_exp()
        lead = b.c[top_b]
        while r and max(r) >= top_b:
            top = max(r)
            k = top - top_b
            f = r[top] / lead
            for e, c in b.c.items():
                s = r.get(e + k, 0) - f * c
                if s:
                    r[e + k] = s
                else:
                    r.pop(e + k, None)
        a, b = b, norm(ScalarHalf._raw(r))
    return a if a.c else ONE


# polynomials in q -------------------------------------------------------------

class QPolynomial:
    """Polynomial in q with rational coefficients (lowest degree first)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable):
        cs = [_frac(a) for a in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, q) -> Fraction:
        out = Fraction(0)
        for a in reversed(self.coeffs):
            out = out * q + a
        return out

    def __eq__(self, other):
        return isinstance(other, QPolynomial) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def to_scalar(self) -> ScalarHalf:
        return ScalarHalf.from_qpoly(self.coeffs)

    def __repr__(self):
        if not self.coeffs:
            return "QPolynomial(0)"
        terms = [f"{a}*q^{k}" for k, a in enumerate(self.coeffs) if a]
        return "QPolynomial(" + " + ".join(terms) + ")"


def _lagrange(points) -> QPolynomial:
    n = len(points)
    total = [Fraction(0)] * n
    for i, (xi, yi) in enumerate(points):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j, (xj, _) in enumerate(points):
            if j == i:
                continue
            basis = [Fraction(0)] + basis
            for k in range(len(basis) - 1):
                basis[k] -= xj * basis[k + 1]
            denom *= xi - xj
        scale = Fraction(yi) / denom
        for k, b in enumerate(basis):
            total[k] += scale * b
    return QPolynomial(total)


def interpolate_q(samples, degree_cap: int) -> QPolynomial:
    """Lagrange interpolant of degree at most ``degree_cap`` through ``samples``.

    Extra samples beyond ``degree_cap + 1`` must lie on the interpolant.
    """
    pts = [(Fraction(q), Fraction(y)) for q, y in samples]
    xs = [p[0] for p in pts]
    if len(set(xs)) != len(xs):
        raise ValueError("sample points must be distinct")
    if len(pts) < degree_cap + 1:
        raise ValueError(f"need at least {degree_cap + 1} samples, got {len(pts)}")
    poly = _lagrange(pts[: degree_cap + 1])
    for q, y in pts[degree_cap + 1:]:
        if poly(q) != y:
            raise InterpolationError(
                f"interpolation instability: sample at q={q} gives {y}, interpolant predicts {poly(q)}")
    if poly.degree() > degree_cap:
        raise InterpolationError("interpolation instability: degree exceeds cap")
    return poly


def interpolate_stable(sampler, primes, start: int = 1, max_degree: int = 12) -> QPolynomial:
    """Fit with escalating sample count.

    ``sampler(q)`` returns the exact value at ``q``.  Samples are added until two
    consecutive interpolants agree; the result is then checked on one further
    held-out prime.
    """
    primes = list(primes)
    values: dict = {}

    def val(q):
        if q not in values:
            values[q] = Fraction(sampler(q))
        return values[q]

    n = max(1, start)
    prev = None
    while n + 1 <= len(primes):
        pts = [(q, val(q)) for q in primes[:n]]
        cur = _lagrange(pts)
        if prev is not None and cur == prev:
            held = primes[n]
            if cur(held) != val(held):
                raise InterpolationError(
                    f"interpolation instability: held-out prime {held} disagrees")
            return cur
        prev = cur
        n += 1
        if n - 1 > max_degree + 1:
            break
    raise InterpolationError("interpolation instability: no stable interpolant within the prime list")


PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


# evaluation -------------------------------------------------------------------

def _int_root(n: int, k: int):
    r = round(n ** (1.0 / k))
    for c in (r - 1, r, r + 1):
        if c >= 0 and c ** k == n:
            return c
    return None


def eval_at_prime(x: ScalarHalf, q: int):
    """Exact value of ``x`` at v = sqrt(q).

    Returns a :class:`Fraction` when the value is visibly rational.  Otherwise
    returns a 4-tuple ``(a0, a1, a2, a3)`` of rationals meaning
    ``a0 + a1*q^(1/4) + a2*q^(1/2) + a3*q^(3/4)``; ``q^(1/4)`` is sqrt(v).
    """
    q = int(q)
    fourth = _int_root(q, 4)
    if fourth is not None:
        return x.subs_u(Fraction(fourth))
    sq = isqrt(q)
    if sq * sq == q and x.in_v_integral():
        return sum((a * Fraction(sq) ** (e // 2) for e, a in x.c.items()), Fraction(0))
    acc = [Fraction(0)] * 4
    for e, a in x.c.items():
        r = e % 4
        acc[r] += a * Fraction(q) ** ((e - r) // 4)
    if sq * sq == q:
        # q^(1/2) is rational: fold residues 2 and 3 onto 0 and 1
        acc = [acc[0] + acc[2] * sq, acc[1] + acc[3] * sq, Fraction(0), Fraction(0)]
    if not any(acc[1:]):
        return acc[0]
    return tuple(acc)
