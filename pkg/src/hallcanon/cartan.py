"""Simply-laced root data, quiver orientations and diagram involutions."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property


class ShapeError(ValueError):
    pass


ADE_COUNTS = {"A": lambda n: n * (n + 1) // 2, "D": lambda n: n * (n - 1),
              "E": lambda n: {6: 36, 7: 63, 8: 120}[n]}


def _default_edges(kind: str, n: int):
    if kind == "A":
        return [(k, k + 1) for k in range(1, n)]
    if kind == "D":
        if n < 4:
            raise ShapeError("D_n needs n >= 4")
        return [(k, k + 1) for k in range(1, n - 1)] + [(n - 2, n)]
    if kind == "E":
        if n not in (6, 7, 8):
            raise ShapeError("E_n needs n in 6..8")
        return [(1, 3), (3, 4), (4, 5), (2, 4)] + [(k, k + 1) for k in range(5, n)]
    raise ShapeError(f"unknown Dynkin type {kind!r}")


@dataclass(frozen=True)
class QuiverShape:
    """An oriented simply-laced Dynkin quiver.

    Vertices are indexed ``0..n-1`` internally; ``names`` keeps the labels a
    user typed (``"1"``, ``"2"``, ``"1*"``...).
    """

    names: tuple
    arrows: tuple  # (source, target) index pairs
    tag: str = ""

    def __post_init__(self):
        n = len(self.names)
        for s, t in self.arrows:
            if not (0 <= s < n and 0 <= t < n) or s == t:
                raise ShapeError(f"bad arrow {(s, t)}")
        if not self._acyclic():
            raise ShapeError("quiver has an oriented cycle")
        if not self.tag:
            object.__setattr__(self, "tag", classify(self))

    @property
    def n(self) -> int:
        return len(self.names)

    def _acyclic(self) -> bool:
        indeg = [0] * self.n
        for _, t in self.arrows:
            indeg[t] += 1
        stack = [i for i in range(self.n) if indeg[i] == 0]
        seen = 0
        while stack:
            i = stack.pop()
            seen += 1
            for s, t in self.arrows:
                if s == i:
                    indeg[t] -= 1
                    if indeg[t] == 0:
                        stack.append(t)
        return seen == self.n

    def index(self, name) -> int:
        name = str(name)
        try:
            return self.names.index(name)
        except ValueError:
            raise ShapeError(f"unknown vertex {name!r}") from None

    def opposite(self) -> "QuiverShape":
        return QuiverShape(self.names, tuple((t, s) for s, t in self.arrows), self.tag)

    def key(self) -> str:
        arrows = ",".join(f"{self.names[s]}>{self.names[t]}" for s, t in self.arrows)
        return f"{self.tag}[{arrows}]"

    def spec_string(self) -> str:
        arrows = ", ".join(f"{self.names[s]}->{self.names[t]}" for s, t in self.arrows)
        return f"{self.tag}: {arrows}" if arrows else self.tag

    def sinks(self):
        return [i for i in range(self.n) if all(s != i for s, _ in self.arrows)]


def cartan_of(shape: QuiverShape):
    n = shape.n
    c = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for s, t in shape.arrows:
        c[s][t] -= 1
        c[t][s] -= 1
    return c


def _positive_definite(mat) -> bool:
    n = len(mat)
    m = [[Fraction(x) for x in row] for row in mat]
    for k in range(n):
        if m[k][k] <= 0:
            return False
        for i in range(k + 1, n):
            f = m[i][k] / m[k][k]
            for j in range(k, n):
                m[i][j] -= f * m[k][j]
    return True


def _components(n, edges):
    adj = {i: set() for i in range(n)}
    for s, t in edges:
        adj[s].add(t)
        adj[t].add(s)
    seen, comps = set(), []
    for i in range(n):
        if i in seen:
            continue
        comp, stack = [], [i]
        seen.add(i)
        while stack:
            x = stack.pop()
            comp.append(x)
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        comps.append(sorted(comp))
    return comps, adj


def classify(shape: QuiverShape) -> str:
    """ADE tag such as ``"A3"`` or ``"A1+A1"``; raises for non-Dynkin graphs."""
    if len(set(tuple(sorted(a)) for a in shape.arrows)) != len(shape.arrows):
        raise ShapeError("multiple edges: not simply-laced Dynkin")
    if not _positive_definite(cartan_of(shape)):
        raise ShapeError("underlying graph is not of Dynkin type")
    comps, adj = _components(shape.n, shape.arrows)
    tags = []
    for comp in comps:
        k = len(comp)
        degs = sorted(len(adj[x]) for x in comp)
        if not degs or degs[-1] <= 2:
            tags.append(f"A{k}")
            continue
        branch = next(x for x in comp if len(adj[x]) == 3)
        arms = []
        for y in adj[branch]:
            length, prev, cur = 1, branch, y
            while len(adj[cur]) == 2:
                nxt = next(z for z in adj[cur] if z != prev)
                prev, cur = cur, nxt
                length += 1
            arms.append(length)
        arms.sort()
        tags.append(f"D{k}" if arms[:2] == [1, 1] else f"E{k}")
    return "+".join(tags)


_SPEC_RE = re.compile(r"^\s*(diag\s*\()?\s*([ADE])\s*(\d+)\s*\)?\s*(?::(.*))?$")


def parse_quiver_spec(spec: str):
    """Parse ``"A3: 1->2, 2->3; rho=(1 3)"``.

    Returns ``(shape, rho)`` where ``rho`` is a tuple permutation of vertex
    indices.  ``diag(A2)`` builds the diagonal doubling with its swap.
    Arrows may also be written ``a<-b``.
    """
    head, _, rho_part = spec.partition(";")
    m = _SPEC_RE.match(head)
    if not m:
        raise ShapeError(f"cannot parse quiver spec {spec!r} at position 0")
    diag, kind, n, arrow_txt = m.group(1), m.group(2), int(m.group(3)), m.group(4)
    names = tuple(str(k) for k in range(1, n + 1))
    if arrow_txt and arrow_txt.strip():
        arrows = []
        for tok in arrow_txt.split(","):
            tok = tok.strip()
            if "->" in tok:
                a, b = tok.split("->")
            elif "<-" in tok:
                b, a = tok.split("<-")
            else:
                pos = spec.find(tok)
                raise ShapeError(f"bad arrow {tok!r} at position {pos}")
            arrows.append((names.index(a.strip()), names.index(b.strip())))
    else:
        arrows = [(a - 1, b - 1) for a, b in _default_edges(kind, n)]
    shape = QuiverShape(names, tuple(arrows))
    expected = f"{kind}{n}"
    if shape.tag != expected:
        raise ShapeError(f"arrows describe {shape.tag}, not {expected}")
    if diag:
        shape = diagonal_double(shape)
        rho = diagonal_swap(shape)
    else:
        rho = tuple(range(shape.n))
    rho_txt = rho_part.strip()
    if rho_txt:
        key, _, val = rho_txt.partition("=")
        if key.strip() != "rho":
            raise ShapeError(f"expected rho=..., got {rho_txt!r}")
        rho = parse_involution(shape, val.strip())
    return shape, rho


def parse_involution(shape: QuiverShape, text: str):
    """``id`` or a product of disjoint transpositions ``(1 3)(4 5)``."""
    perm = list(range(shape.n))
    text = text.strip()
    if text in ("", "id", "()"):
        return tuple(perm)
    for cyc in re.findall(r"\(([^)]*)\)", text):
        parts = cyc.replace(",", " ").split()
        if len(parts) != 2:
            raise ShapeError(f"involution cycles must be transpositions: {cyc!r}")
        a, b = shape.index(parts[0]), shape.index(parts[1])
        perm[a], perm[b] = b, a
    return tuple(perm)


def diagonal_double(shape: QuiverShape) -> QuiverShape:
    """Two copies of ``shape`` with vertices ``i`` and ``i*``."""
    n = shape.n
    names = shape.names + tuple(f"{x}*" for x in shape.names)
    arrows = shape.arrows + tuple((s + n, t + n) for s, t in shape.arrows)
    return QuiverShape(names, arrows)


def diagonal_swap(shape: QuiverShape):
    n = shape.n // 2
    return tuple(list(range(n, 2 * n)) + list(range(n)))


def shape_from(spec) -> QuiverShape:
    if isinstance(spec, QuiverShape):
        return spec
    return parse_quiver_spec(spec)[0]


# root data -------------------------------------------------------------------

@dataclass(frozen=True)
class RootDatum:
    shape: QuiverShape
    cartan: tuple = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "cartan", tuple(tuple(r) for r in cartan_of(self.shape)))

    @property
    def n(self):
        return self.shape.n

    @cached_property
    def euler(self):
        n = self.n
        e = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
        for s, t in self.shape.arrows:
            e[s][t] -= 1
        return tuple(tuple(r) for r in e)

    def simple(self, i: int) -> tuple:
        return tuple(1 if j == i else 0 for j in range(self.n))

    def reflect(self, i: int, x) -> tuple:
        k = sum(self.cartan[i][j] * x[j] for j in range(self.n))
        return tuple(x[j] - (k if j == i else 0) for j in range(self.n))

    def apply_word(self, word, x) -> tuple:
        """Apply s_{w1} s_{w2} ... to x (rightmost letter acts first)."""
        for i in reversed(word):
            x = self.reflect(i, x)
        return tuple(x)

    def sym(self, a, b) -> int:
        return sum(a[i] * self.cartan[i][j] * b[j] for i in range(self.n) for j in range(self.n))

    @cached_property
    def positive_roots(self) -> tuple:
        simples = [self.simple(i) for i in range(self.n)]
        seen = set(simples)
        frontier = list(simples)
        while frontier:
            nxt = []
            for r in frontier:
                for i in range(self.n):
                    s = self.reflect(i, r)
                    if all(c >= 0 for c in s) and any(s) and s not in seen:
                        seen.add(s)
                        nxt.append(s)
            frontier = nxt
        roots = sorted(seen, key=lambda r: (sum(r), tuple(-c for c in r)))
        expected = 0
        for part in self.shape.tag.split("+"):
            expected += ADE_COUNTS[part[0]](int(part[1:]))
        if len(roots) != expected:
            raise ShapeError(f"root count {len(roots)} does not match {self.shape.tag}")
        return tuple(roots)


def positive_roots(datum: RootDatum):
    return list(datum.positive_roots)


def euler_form(shape: QuiverShape, a, b) -> int:
    total = sum(x * y for x, y in zip(a, b))
    for s, t in shape.arrows:
        total -= a[s] * b[t]
    return total


def eta(d) -> int:
    return sum(d)


def norm_N(datum: RootDatum, d) -> Fraction:
    """N(d) = (d,d)/2 - eta(d); an integer for simply-laced data."""
    return Fraction(datum.sym(d, d), 2) - eta(d)


# involutions and restricted Weyl group -----------------------------------------

def validate_involution(datum: RootDatum, rho) -> tuple:
    rho = tuple(rho)
    n = datum.n
    if sorted(rho) != list(range(n)) or any(rho[rho[i]] != i for i in range(n)):
        raise ShapeError(f"{rho} is not an involution")
    c = datum.cartan
    for i in range(n):
        for j in range(n):
            if c[i][j] != c[rho[i]][rho[j]]:
                raise ShapeError("involution does not preserve the Cartan matrix")
        if rho[i] != i and c[i][rho[i]] != 0:
            raise ShapeError(f"c(i, rho i) must vanish for i = {datum.shape.names[i]}")
    return rho


def orbit_reps(rho) -> list:
    return [i for i in range(len(rho)) if i <= rho[i]]


def restricted_generators(datum: RootDatum, rho) -> list:
    rho = validate_involution(datum, rho)
    return [(i,) if rho[i] == i else (i, rho[i]) for i in orbit_reps(rho)]


def restricted_reflection(datum: RootDatum, rho, i: int, x) -> tuple:
    word = (i,) if rho[i] == i else (i, rho[i])
    return datum.apply_word(word, x)


def _lattice_matrix(datum, rho, i):
    cols = [restricted_reflection(datum, rho, i, datum.simple(j)) for j in range(datum.n)]
    return [[cols[j][r] for j in range(datum.n)] for r in range(datum.n)]


def _matmul(a, b):
    n = len(a)
    return [[sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)] for i in range(n)]


def braid_order(datum: RootDatum, i: int, j: int, rho=None, limit: int = 12) -> int:
    if rho is None:
        rho = tuple(range(datum.n))
    if i == j:
        raise ValueError("braid order needs i != j")
    m = _matmul(_lattice_matrix(datum, rho, i), _lattice_matrix(datum, rho, j))
    ident = [[int(r == c) for c in range(datum.n)] for r in range(datum.n)]
    p = m
    for k in range(1, limit + 1):
        if p == ident:
            return k
        p = _matmul(p, m)
    raise ShapeError("restricted Weyl group element of unexpected order")
