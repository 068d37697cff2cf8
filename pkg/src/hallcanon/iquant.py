"""The universal iquantum group inside the Drinfeld double.

Elements are carried as noncommutative polynomials (``Tree``) in the letters
``("B", j)`` and ``("K", j, e)`` (the normalised Cartan generator to the power
e = +-1) together with a common denominator.  Evaluation sends a tree to a
normal-form element of the double.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .cartan import RootDatum, braid_order, orbit_reps, parse_quiver_spec, validate_involution
from .double import DrinfeldDouble
from .hallgen import _combine, add_into, scale
from .scalars import ONE, ZERO, ScalarHalf, qint, vpow


class RelationFailure(AssertionError):
    pass


@dataclass
class Tree:
    num: dict = field(default_factory=dict)
    den: ScalarHalf = ONE

    @staticmethod
    def letter(tok, c=ONE):
        return Tree({(tok,): c})

    @staticmethod
    def const(c=ONE):
        return Tree({(): c} if c else {})

    def __add__(self, other):
        num, den = _combine([(self.num, self.den), (other.num, other.den)])
        return Tree(num, den)

    def __sub__(self, other):
        return self + other.scaled(ScalarHalf(-1))

    def scaled(self, c):
        return Tree(scale(self.num, c), self.den)

    def divided(self, d):
        return Tree(dict(self.num), self.den * d)

    def __mul__(self, other):
        num: dict = {}
        for w1, a in self.num.items():
            for w2, b in other.num.items():
                add_into(num, {w1 + w2: a * b})
        return Tree(num, self.den * other.den)

    def bar(self):
        """Anti-involution fixing every letter and conjugating scalars."""
        return Tree({tuple(reversed(w)): c.bar() for w, c in self.num.items()}, self.den.bar())

    def substitute(self, images):
        """Replace each letter ``t`` by the tree ``images(t)``."""
        out = Tree()
        cache: dict = {}
        for w, c in self.num.items():
            acc = Tree.const(c)
            for t in w:
                if t not in cache:
                    cache[t] = images(t)
                acc = acc * cache[t]
            out = out + acc
        return out.divided(self.den)

    def words(self):
        return len(self.num)


def bracket_v(x: Tree, y: Tree) -> Tree:
    """[x, y]_v = x y - v y x."""
    return x * y - (y * x).scaled(vpow(1))


class IQuantumGroup:
    def __init__(self, spec, rho=None, double: DrinfeldDouble | None = None):
        if isinstance(spec, str):
            shape, parsed_rho = parse_quiver_spec(spec)
            rho = parsed_rho if rho is None else rho
        else:
            shape = spec
        self.D = double or DrinfeldDouble(shape)
        self.shape = shape
        self.datum = self.D.H.datum
        self.n = self.D.n
        self.rho = validate_involution(self.datum, rho if rho is not None else tuple(range(self.n)))
        self.C = self.datum.cartan
        self._val: dict = {}

    # generators --------------------------------------------------------------------------
    def split(self, i) -> bool:
        return self.rho[i] == i

    def B(self, j) -> Tree:
        return Tree.letter(("B", j))

    def Kn(self, j, e=1) -> Tree:
        """Normalised Cartan generator (v k~_j at split j, k~_j otherwise)."""
        return Tree.letter(("K", j, e))

    def ktilde(self, j) -> Tree:
        return self.Kn(j).scaled(vpow(-1) if self.split(j) else ONE)

    def kmono(self, mu) -> Tree:
        out = Tree.const()
        for j, a in enumerate(mu):
            tok = ("K", j, 1 if a > 0 else -1)
            for _ in range(abs(a)):
                out = out * Tree.letter(tok)
        return out

    def embed_letter(self, tok) -> dict:
        D = self.D
        if tok[0] == "B":
            j = tok[1]
            return add_into(D.F(j), D.multiply(D.E(self.rho[j]), D.Kpi(j)))
        _, j, e = tok
        mu = tuple(e * int(k == j) for k in range(self.n))
        nu = tuple(e * int(k == self.rho[j]) for k in range(self.n))
        c = vpow(e) if self.split(j) else ONE
        return scale(D.K(mu, nu), c)

    def embed(self, gen: str) -> dict:
        """PBW image of ``B<j>``, ``kt<j>`` (k tilde) or ``K<j>`` (normalised), 1-based."""
        import re
        m = re.fullmatch(r"(B|kt|K)(\d+)", gen.strip())
        if not m:
            raise ValueError(f"bad generator {gen!r}")
        j = int(m.group(2)) - 1
        if m.group(1) == "B":
            return self.embed_letter(("B", j))
        if m.group(1) == "K":
            return self.embed_letter(("K", j, 1))
        return self.evaluate(self.ktilde(j))

    # evaluation -----------------------------------------------------------------------------
    def evaluate(self, t: Tree, letter_value=None) -> dict:
        D = self.D
        value = letter_value or self.embed_letter
        cache: dict = {}
        prefix: dict = {(): D.one()}

        def val(w):
            if w in prefix:
                return prefix[w]
            head = val(w[:-1])
            tok = w[-1]
            if tok not in cache:
                cache[tok] = value(tok)
            prefix[w] = D.multiply(head, cache[tok])
            return prefix[w]

        acc: dict = {}
        for w, c in sorted(t.num.items(), key=lambda kv: len(kv[0])):
            add_into(acc, val(w), c)
        return {k: c.exact_div(t.den) for k, c in acc.items()}

    # relations ----------------------------------------------------------------------------------
    def relations(self) -> dict:
        """Defining relations as trees that must evaluate to zero."""
        n, C, rho = self.n, self.C, self.rho
        B, kt = self.B, self.ktilde
        rels = {}
        for l in range(n):
            for i in range(n):
                if i != l:
                    rels[f"kk[{l+1},{i+1}]"] = kt(i) * kt(l) - kt(l) * kt(i)
                e = C[rho[l]][i] - C[l][i]
                rels[f"kB[{l+1},{i+1}]"] = kt(l) * B(i) - (B(i) * kt(l)).scaled(vpow(e))
            rels[f"Kinv[{l+1}]"] = self.Kn(l) * self.Kn(l, -1) - Tree.const()
        for i in range(n):
            for j in range(n):
                if i == j:
                    continue
                if C[i][j] == 0 and rho[i] != j:
                    rels[f"BB[{i+1},{j+1}]"] = B(i) * B(j) - B(j) * B(i)
                elif j != rho[i] and rho[i] != i:
                    m = 1 - C[i][j]
                    acc = Tree()
                    for s in range(m + 1):
                        w = Tree.const(ScalarHalf(-1) ** s * _qbinom(m, s))
                        for _ in range(s):
                            w = w * B(i)
                        w = w * B(j)
                        for _ in range(m - s):
                            w = w * B(i)
                        acc = acc + w
                    rels[f"serre[{i+1},{j+1}]"] = acc
                if rho[i] == j:
                    rels[f"swap[{i+1}]"] = (B(j) * B(i) - B(i) * B(j)
                                            - (kt(i) - kt(j)).scaled(vpow(-1) - vpow(1)))
                if C[i][j] == -1 and rho[i] == i:
                    lhs = B(i) * B(i) * B(j) - (B(i) * B(j) * B(i)).scaled(qint(2)) + B(j) * B(i) * B(i)
                    rhs = (kt(i) * B(j)).scaled(-vpow(1) * (vpow(1) - vpow(-1)) ** 2)
                    rels[f"iserre[{i+1},{j+1}]"] = lhs - rhs
        return rels

    def verify_presentation(self) -> dict:
        report = {}
        for name, t in self.relations().items():
            val = self.evaluate(t)
            if val:
                raise RelationFailure(f"relation {name} leaves {len(val)} terms, e.g. {next(iter(val.items()))}")
            report[name] = t.words()
        return report

    # relative braid operators -------------------------------------------------------------------
    def sreflect(self, i, mu):
        word = (i,) if self.split(i) else (i, self.rho[i])
        return self.datum.apply_word(word, mu)

    def braid_letter(self, i, tok) -> Tree:
        """Image of a letter under the relative braid operator at vertex i."""
        rho, C = self.rho, self.C
        if tok[0] == "K":
            _, j, e = tok
            mu = tuple(e * int(k == j) for k in range(self.n))
            return self.kmono(self.sreflect(i, mu))
        j = tok[1]
        B = self.B
        denom = vpow(1) - vpow(-1)
        half, mhalf = vpow(Fraction(1, 2)), vpow(Fraction(-1, 2))

        def qcomm(a, b):
            return ((B(a) * B(b)).scaled(half) - (B(b) * B(a)).scaled(mhalf)).divided(denom)

        if self.split(i):
            if j == i:
                return self.Kn(i, -1) * B(i)
            if C[i][j] == 0:
                return B(j)
            if C[i][j] == -1:
                return qcomm(i, j)
            raise ValueError("relative braid operators need a simply-laced Cartan matrix")
        ri = rho[i]
        if C[i][ri] != 0:
            raise ValueError("relative braid operator needs c(i, rho i) = 0")
        if j == i:
            return (self.Kn(i, -1) * B(ri)).scaled(vpow(1))
        if j == ri:
            return (self.Kn(ri, -1) * B(i)).scaled(vpow(1))
        a, b = C[i][j], C[ri][j]
        if a == -1 and b == 0:
            return qcomm(i, j)
        if a == 0 and b == -1:
            return qcomm(ri, j)
        if a == -1 and b == -1:
            inner = bracket_v(bracket_v(B(j), B(i)), B(ri)).scaled(vpow(-1)).divided(denom * denom)
            return inner + B(j) * self.Kn(i)
        return B(j)

    def letters(self):
        out = [("B", j) for j in range(self.n)]
        out += [("K", j, e) for j in range(self.n) for e in (1, -1)]
        return out

    def braid_value(self, word, tok) -> dict:
        """PBW value of T_{w1} T_{w2} ... (tok), the rightmost operator acting first."""
        word = tuple(word)
        key = (word, tok)
        if key in self._val:
            return self._val[key]
        if not word:
            out = self.embed_letter(tok)
        else:
            inner, last = word[:-1], word[-1]
            out = self.evaluate(self.braid_letter(last, tok), lambda t: self.braid_value(inner, t))
        self._val[key] = out
        return out

    def ibraid(self, word, x: Tree) -> dict:
        """PBW value of the braid word applied to the element described by ``x``."""
        return self.evaluate(x, lambda t: self.braid_value(tuple(word), t))

    def ibraid_tree(self, i, x: Tree) -> Tree:
        return x.substitute(lambda t: self.braid_letter(i, t))

    def braid_generators(self):
        return orbit_reps(self.rho)

    def check_relations_preserved(self, i) -> dict:
        out = {}
        for name, t in self.relations().items():
            val = self.ibraid((i,), t)
            if val:
                raise RelationFailure(f"braid operator {i+1} breaks relation {name}")
            out[name] = True
        return out

    def check_braid_relations(self) -> dict:
        out = {}
        gens = self.braid_generators()
        for a in gens:
            for b in gens:
                if a >= b:
                    continue
                m = braid_order(self.datum, a, b, self.rho)
                w1 = tuple((a, b)[k % 2] for k in range(m))
                w2 = tuple((b, a)[k % 2] for k in range(m))
                for tok in self.letters():
                    if self.braid_value(w1, tok) != self.braid_value(w2, tok):
                        raise RelationFailure(f"braid relation of length {m} fails for {a+1},{b+1} on {tok}")
                out[(a + 1, b + 1)] = m
        return out

    def check_bar_equivariance(self, i, samples=()) -> int:
        """bar(T_i x) = T_i(bar x) for generators and the given sample trees."""
        trees = [Tree.letter(t) for t in self.letters()] + list(samples)
        for x in trees:
            lhs = self.evaluate(self.ibraid_tree(i, x).bar())
            rhs = self.evaluate(self.ibraid_tree(i, x.bar()))
            if lhs != rhs:
                raise RelationFailure(f"bar equivariance fails for operator {i+1}")
        return len(trees)

    def check_inverse_free(self, i) -> bool:
        """The image tree of every letter evaluates to the stored braid value."""
        for tok in self.letters():
            if self.evaluate(self.braid_letter(i, tok)) != self.braid_value((i,), tok):
                raise RelationFailure("tree and value disagree")
        return True


def _qbinom(m, s):
    from .scalars import qbinom
    return qbinom(m, s)


def diagonal_compatibility(shape_spec: str) -> int:
    """Diagonal type: transported double braid operators agree with the relative ones.

    The isomorphism sends E_i, F_i, K_i, K'_i of the double of ``shape`` to
    B_i, B_{i*}, K'-type and K-type Cartan generators of the diagonal iquantum group.
    """
    from .cartan import diagonal_double, diagonal_swap, shape_from
    base = shape_from(shape_spec)
    dshape = diagonal_double(base)
    iq = IQuantumGroup(dshape, diagonal_swap(dshape))
    n = base.n

    def phi(tok):
        kind, j = tok[0], tok[1]
        if kind == "E":
            return Tree.letter(("B", j))
        if kind == "F":
            return Tree.letter(("B", j + n))
        e = tok[2]
        # K_j -> K-type generator at j*, K'_j -> at j
        return Tree.letter(("K", j + n if kind == "K" else j, e))

    checked = 0
    for i in range(n):
        for tok in _double_letters(n):
            lhs = iq.evaluate(_double_braid_tree(base, i, tok).substitute(phi))
            rhs = iq.evaluate(iq.ibraid_tree(i, phi(tok)))
            if lhs != rhs:
                raise RelationFailure(f"diagonal compatibility fails at {tok}")
            checked += 1
    return checked


def _double_letters(n):
    out = [("E", j) for j in range(n)] + [("F", j) for j in range(n)]
    out += [(k, j, e) for k in ("K", "Kp") for j in range(n) for e in (1, -1)]
    return out


def _double_braid_tree(shape, i, tok) -> Tree:
    """Braid operator of the double on a letter, written as a tree in double letters."""
    datum = RootDatum(shape)
    C = datum.cartan
    L = Tree.letter
    denom = vpow(1) - vpow(-1)
    half, mhalf = vpow(Fraction(1, 2)), vpow(Fraction(-1, 2))
    kind, j = tok[0], tok[1]
    if kind in ("K", "Kp"):
        mu = datum.reflect(i, tuple(tok[2] * int(k == j) for k in range(datum.n)))
        out = Tree.const()
        for k, a in enumerate(mu):
            for _ in range(abs(a)):
                out = out * L((kind, k, 1 if a > 0 else -1))
        return out
    if j == i:
        if kind == "E":
            return (L(("Kp", i, -1)) * L(("F", i))).scaled(vpow(1))
        return (L(("E", i)) * L(("K", i, -1))).scaled(vpow(-1))
    if C[i][j] == 0:
        return L(tok)
    return ((L((kind, i)) * L((kind, j))).scaled(half) - (L((kind, j)) * L((kind, i))).scaled(mhalf)).divided(denom)
