"""Bar-invariant unitriangular bases on a finite poset."""

from __future__ import annotations

from dataclasses import dataclass, field

from .scalars import ONE, ZERO, ScalarHalf


class TriangleError(ArithmeticError):
    pass


@dataclass
class TriangularProblem:
    """Data for one graded piece.

    ``bar[l]`` is ``{m: coeff}`` with bar(e_l) = sum coeff * e_m.  ``below[l]``
    lists the indices allowed as corrections in the basis element for ``l``.
    ``ring`` is ``"neg"`` for v^-1 Z[v^-1] corrections or ``"pos"`` for v Z[v].
    """

    indices: list
    below: dict
    bar: dict
    ring: str = "neg"
    check_involution: bool = True
    labels: dict = field(default_factory=dict)


def _closure(indices, below):
    out = {i: set(below.get(i, ())) for i in indices}
    changed = True
    while changed:
        changed = False
        for i in indices:
            extra = set()
            for j in out[i]:
                extra |= out.get(j, set())
            if not extra <= out[i]:
                out[i] |= extra
                changed = True
    for i in indices:
        if i in out[i]:
            raise TriangleError("order relation has a cycle")
    return out


def _topo(indices, below, reverse_ties=False):
    rank = {i: len(below[i]) for i in indices}
    pos = {i: k for k, i in enumerate(indices)}
    return sorted(indices, key=lambda i: (rank[i], -pos[i] if reverse_ties else pos[i]))


def _apply_bar(bar, x):
    acc: dict = {}
    for k, c in x.items():
        cb = c.bar()
        for m, d in bar[k].items():
            s = acc.get(m, ZERO) + cb * d
            if s:
                acc[m] = s
            else:
                acc.pop(m, None)
    return acc


def validate(p: TriangularProblem, closed):
    for i in p.indices:
        row = p.bar.get(i)
        if row is None or row.get(i) != ONE:
            raise TriangleError(f"invalid bar data: diagonal entry at {i!r} is not 1")
        for m in row:
            if m != i and m not in closed[i]:
                raise TriangleError(f"invalid bar data: bar({i!r}) involves {m!r} outside the order")
    if p.check_involution:
        for i in p.indices:
            twice = _apply_bar(p.bar, _apply_bar(p.bar, {i: ONE}))
            if twice != {i: ONE}:
                raise TriangleError(f"invalid bar data: bar is not involutive at {i!r}")


def _solve(p: TriangularProblem, order):
    pos = {m: k for k, m in enumerate(order)}
    basis: dict = {}
    keep_neg = p.ring == "neg"
    for lam in order:
        # r = bar(e_lam) - e_lam rewritten in the already bar-invariant b's
        rest = dict(p.bar[lam])
        rest.pop(lam)
        rho: dict = {}
        while rest:
            top = max(rest, key=pos.__getitem__)
            c = rest[top]
            rho[top] = c
            for m, d in basis[top].items():
                s = rest.get(m, ZERO) - c * d
                if s:
                    rest[m] = s
                else:
                    rest.pop(m, None)
        elem = {lam: ONE}
        for mu, r in rho.items():
            if r.bar() != -r or r.constant() != 0:
                raise TriangleError(f"ring mismatch at {lam!r}: defect {r} is not bar-antisymmetric")
            # c - bar(c) = r has the unique solution c = one half of r
            c = r.negative_part() if keep_neg else r.positive_part()
            for m, d in basis[mu].items():
                s = elem.get(m, ZERO) + c * d
                if s:
                    elem[m] = s
                else:
                    elem.pop(m, None)
        basis[lam] = elem
    return basis


def lusztig_basis(p: TriangularProblem) -> dict:
    """Transition matrix ``{l: {m: coeff}}`` of the bar-invariant basis.

    The element for ``l`` is e_l plus corrections from ``below[l]`` with
    coefficients in the selected ring.  The solve is repeated along a second
    linear extension and the results compared.
    """
    if p.ring not in ("neg", "pos"):
        raise ValueError("ring must be 'neg' or 'pos'")
    closed = _closure(p.indices, p.below)
    validate(p, closed)
    results = []
    for rev in (False, True):
        results.append(_solve(p, _topo(p.indices, closed, rev)))
    if results[0] != results[1]:
        raise TriangleError("solution depends on the linear extension")
    basis = results[0]
    for lam, elem in basis.items():
        if _apply_bar(p.bar, elem) != elem:
            raise TriangleError(f"output element {lam!r} is not bar-invariant")
        for m, c in elem.items():
            if m == lam:
                continue
            if m not in closed[lam]:
                raise TriangleError(f"output element {lam!r} leaves the order")
            bad = [e for e in c.c if (e >= 0 if p.ring == "neg" else e <= 0)]
            if bad:
                raise TriangleError(f"ring mismatch in output {lam!r}")
    return basis
