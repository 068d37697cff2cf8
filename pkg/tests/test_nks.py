import itertools

import pytest
from hypothesis import given, strategies as st

from hallcanon.cartan import RootDatum, parse_quiver_spec
from hallcanon.double import DrinfeldDouble, sl2_family_index
from hallcanon.hallgen import add_into
from hallcanon.nks import (NKSQuotient, RepetitionQuiver, coxeter_number, inverse_coefficient, irank1_expand,
                           irank1_inverse, irank1_inversion_holds, irank1_L, pbw_in_double, rank1_EaFb, rank1_f,
                           rank1_L, rank1_pairs, rank1_strongly_dominant)
from hallcanon.scalars import ONE, ScalarHalf, vpow

D1 = DrinfeldDouble("A1")


def clean(x):
    return {k: c for k, c in x.items() if c}


@pytest.mark.parametrize("spec", ["A2", "A3", "A3: 1->2, 3->2", "D4"])
def test_knitting_labels_are_signed_roots_and_periodic(spec):
    shape, _ = parse_quiver_spec(spec)
    roots = set(RootDatum(shape).positive_roots)
    h = coxeter_number(shape)
    rep = RepetitionQuiver(shape, -h - 2, 2 * h + 2)
    for x, c in rep.labels.items():
        assert c in roots or tuple(-t for t in c) in roots
    # after h slices the shift [2] brings every label back
    for (k, p), c in rep.labels.items():
        if (k, p + h) in rep.labels:
            assert rep.labels[(k, p + h)] == c


@pytest.mark.parametrize("spec", ["A3", "A3: 1->2, 3->2", "A4: 1->2, 3->2, 3->4", "D4"])
def test_hammocks_give_module_hom_dimensions(spec):
    from hallcanon.finrep import generic_hom_table
    shape, _ = parse_quiver_spec(spec)
    roots = list(RootDatum(shape).positive_roots)
    hom = generic_hom_table(shape)
    rep = RepetitionQuiver(shape, -2, 2 * coxeter_number(shape) + 2)
    positive = lambda c: all(t >= 0 for t in c)
    modules = [(k, p) for (k, p) in rep.labels
               if p >= 0 and all(positive(rep.labels[(k, r)]) for r in range(p + 1))]
    assert sorted(rep.labels[x] for x in modules) == sorted(roots)
    for x in modules:
        h = rep.hammock(x)
        for y in modules:
            assert h.get(y, 0) == hom[roots.index(rep.labels[x])][roots.index(rep.labels[y])]


def test_coxeter_numbers():
    assert [coxeter_number(parse_quiver_spec(s)[0]) for s in ("A1", "A2", "A3", "D4")] == [2, 3, 4, 6]


def test_quantum_cartan_rank_one():
    Qi = NKSQuotient("A1", kind="i")
    x = Qi.vertices[0]
    assert Qi.quantum_cartan({x: 3}) == {x: 6}
    Qd = NKSQuotient("A1", kind="double")
    a, b = Qd.vertices
    assert Qd.quantum_cartan({a: 2, b: 1}) == {a: 3, b: 3}
    assert Qd.quantum_cartan({}) == {a: 0, b: 0}


def test_rank_one_l_dominant_ranges():
    Qi = NKSQuotient("A1", kind="i")
    x = Qi.vertices[0]
    for m in range(7):
        got = sorted(v.get(x, 0) for v in Qi.enumerate_l_dominant({("frozen", x): m}))
        assert got == list(range(m // 2 + 1))
    Qd = NKSQuotient("A1", kind="double")
    s, ss = Qd.simple_label(0, 0), Qd.simple_label(0, 1)
    got = sorted((v.get(s, 0), v.get(ss, 0)) for v in Qd.enumerate_l_dominant({("frozen", s): 1, ("frozen", ss): 1}))
    assert got == [(0, 0), (0, 1), (1, 0)]


def test_generator_vectors():
    Qi = NKSQuotient("A1", kind="i")
    x = Qi.vertices[0]
    assert Qi.generator_vectors(0) == ({x: 1}, {("frozen", x): 2})
    Q = NKSQuotient("A3: 1->2, 3->2", (2, 1, 0), kind="i")
    v1, w1 = Q.generator_vectors(0)
    v3, w3 = Q.generator_vectors(2)
    assert w1 == w3  # the framing is symmetric under the involution


@pytest.mark.parametrize("spec,rho,kind", [("A2", None, "i"), ("A3: 1->2, 3->2", (2, 1, 0), "i"), ("A2", None, "double")])
def test_index_pairs_solve_the_dictionary_equation(spec, rho, kind):
    Q = NKSQuotient(spec, rho, kind=kind)
    for x in Q.vertices:
        lam = {x: 1}
        v, w = Q.index_pair(lam)
        sw, cv = Q.sigma_star(w), Q.quantum_cartan(v)
        assert all(sw[y] - cv[y] == lam.get(y, 0) for y in Q.vertices)


def test_mesh_hom_is_tau_periodic():
    for kind in ("i", "double"):
        Q = NKSQuotient("A3", kind=kind)
        for x in Q.vertices:
            shifted = Q.mesh_hom(Q.tau[x])
            assert sorted(Q.mesh_hom(x).values()) == sorted(shifted.values())


def test_dot_export():
    dot = NKSQuotient("A2", kind="i").to_dot()
    assert dot.startswith("digraph nks {") and dot.rstrip().endswith("}")
    assert "shape=box" in dot


# rank one: the double

def test_small_closed_forms():
    assert rank1_L((1, 0), (1, 1)) == {(0, 0, 1, 0): ONE}
    assert rank1_L((0, 0), (1, 0)) == {(1, 0, 0, 0): ONE}
    assert rank1_L((0, 0), (1, 1)) == {(1, 1, 0, 0): ONE, (0, 0, 1, 0): -vpow(-1), (0, 0, 0, 1): -vpow(1)}
    C = pbw_in_double(D1, rank1_L((0, 0), (1, 1)))
    assert sl2_family_index(D1, C) == (0, 0, 0, 1, 0)


def test_E_times_F_expansion():
    assert rank1_EaFb(1, 0) == {(0, 0): ONE}
    assert rank1_EaFb(1, 1) == {(0, 0): ONE, (1, 0): vpow(-1), (0, 1): vpow(1)}
    for a, b in itertools.product(range(4), repeat=2):
        assert all(c.has_natural_coeffs() for c in rank1_EaFb(a, b).values())


def test_strong_dominance_range():
    assert rank1_strongly_dominant((1, 0), (1, 1))
    assert not rank1_strongly_dominant((1, 1), (1, 1))
    with pytest.raises(ValueError):
        rank1_L((1, 1), (1, 1))


@given(st.integers(0, 4), st.integers(0, 4), st.integers(0, 2), st.integers(0, 2), st.integers(0, 2), st.integers(0, 2))
def test_exponent_variants_agree_when_w1_dominates(w1, w2, a, b, c, d):
    w = (max(w1, w2), min(w1, w2))
    assert rank1_f(w, (a, b), (c, d), "stated") == rank1_f(w, (a, b), (c, d), "balanced")


def _expansion_holds(a, b, variant):
    lhs = clean(D1.mul(D1.power(D1.E(0), a), D1.power(D1.F(0), b)))
    rhs: dict = {}
    for v, c in rank1_EaFb(a, b).items():
        add_into(rhs, pbw_in_double(D1, rank1_L(v, (a, b), variant)), c)
    return lhs == clean(rhs)


@pytest.mark.parametrize("a,b", [(a, b) for a in range(4) for b in range(a + 1)])
def test_stated_closed_form_straightens_when_a_at_least_b(a, b):
    assert _expansion_holds(a, b, "stated")


@pytest.mark.parametrize("a,b", [(a, b) for a in range(4) for b in range(4)])
def test_balanced_closed_form_straightens(a, b):
    assert _expansion_holds(a, b, "balanced")


def test_balanced_closed_forms_are_the_double_basis():
    for v, w in rank1_pairs(4):
        assert sl2_family_index(D1, pbw_in_double(D1, rank1_L(v, w, "balanced"))) is not None


# rank one: the iquantum group

def test_irank_one_small_cases():
    assert irank1_L(0, 2) == {(2, 0): ONE, (0, 1): ScalarHalf(-1)}
    assert irank1_L(1, 2) == {(0, 1): ONE}
    assert irank1_inverse(2, 0) == {(0, 2): ONE, (1, 2): ONE}
    assert inverse_coefficient(0, 2) == inverse_coefficient(1, 2) == 1
    with pytest.raises(ValueError):
        irank1_L(2, 3)


@given(st.integers(0, 8), st.integers(0, 4))
def test_inverse_expansion_round_trip(a, b):
    assert irank1_expand(irank1_inverse(a, b)) == {(a, b): ONE}


def test_inversion_window():
    assert irank1_inversion_holds(8)
