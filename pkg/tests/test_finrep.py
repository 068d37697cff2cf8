import json
import os

import pytest

from hallcanon import finrep
from hallcanon.cartan import RootDatum, parse_quiver_spec
from hallcanon.finrep import (aut_order, classes_of_dim, ext_census, generic_hom_table, hall_number_F,
                              indec_table, ks_name, parse_ks, rank_mod)

from oracles import automorphisms, hall_number


def _interval_mult(datum, lam):
    out = {}
    for r, m in zip(datum.positive_roots, lam):
        if m:
            nz = [k for k, x in enumerate(r) if x]
            out[(nz[0], nz[-1])] = m
    return out


A2 = parse_quiver_spec("A2")[0]
A3 = parse_quiver_spec("A3")[0]


def test_class_grammar_round_trip():
    datum = RootDatum(A3)
    for text in ("a1", "[1,1,0]", "2[1,0,0]+[0,1,1]", "a1+a2+a3"):
        lam = parse_ks(datum, text)
        assert parse_ks(datum, ks_name(datum, lam)) == lam
    with pytest.raises(ValueError):
        parse_ks(datum, "[1,0,1]")
    with pytest.raises(ValueError):
        parse_ks(datum, "b1")


def test_classes_of_a_dimension_vector():
    datum = RootDatum(A2)
    assert len(classes_of_dim(datum, (1, 1))) == 2
    assert len(classes_of_dim(datum, (2, 2))) == 3
    assert len(classes_of_dim(RootDatum(A3), (1, 1, 1))) == 4


def test_indecomposables_are_bricks():
    table = indec_table(A3, 2)
    for k in range(6):
        M = table.module(tuple(int(j == k) for j in range(6)))
        assert table.decompose(M) == tuple(int(j == k) for j in range(6))


def test_rank_mod():
    assert rank_mod([[1, 1], [1, 1]], 2, 2) == 1
    assert rank_mod([[1, 2], [2, 1]], 2, 3) == 1
    assert rank_mod([[1, 2], [2, 1]], 2, 5) == 2


@pytest.mark.parametrize("q", [2, 3])
def test_automorphism_orders_match_brute_force(q):
    datum = RootDatum(A2)
    hom = generic_hom_table(A2)
    for d in ((1, 1), (2, 1), (1, 2)):
        for lam in classes_of_dim(datum, d):
            assert aut_order(hom, lam, q) == automorphisms(2, _interval_mult(datum, lam), q)


@pytest.mark.parametrize("x,z", [("a1", "a2"), ("a2", "a1"), ("a1", "a1"), ("[1,1]", "a1"), ("a2", "[1,1]"),
                                 ("a1", "a1+a2")])
def test_hall_numbers_match_subspace_count(x, z):
    datum = RootDatum(A2)
    X, Z = parse_ks(datum, x), parse_ks(datum, z)
    total = tuple(a + b for a, b in zip(finrep.ks_dim(datum, X), finrep.ks_dim(datum, Z)))
    for Y in classes_of_dim(datum, total):
        want = hall_number(2, _interval_mult(datum, X), _interval_mult(datum, Z), _interval_mult(datum, Y), 2)
        assert hall_number_F(A2, X, Z, Y, 2) == want


def test_census_counts_every_extension_class():
    datum = RootDatum(A3)
    X, Z = parse_ks(datum, "a1"), parse_ks(datum, "a2")
    for q in (2, 3, 5):
        assert sum(ext_census(A3, X, Z, q).values()) == q  # Ext^1(S1, S2) is one-dimensional


def test_cache_round_trip_and_stale_schema(tmp_path, monkeypatch):
    monkeypatch.setenv("HALLCANON_CACHE", str(tmp_path))
    finrep._CENSUS_MEMO.clear()
    datum = RootDatum(A2)
    X, Z = parse_ks(datum, "a1"), parse_ks(datum, "a2")
    first = ext_census(A2, X, Z, 7)
    files = os.listdir(tmp_path)
    assert len(files) == 1
    finrep._CENSUS_MEMO.clear()
    assert ext_census(A2, X, Z, 7) == first
    path = tmp_path / files[0]
    data = json.loads(path.read_text())
    data["version"] = finrep.CACHE_VERSION + 1
    path.write_text(json.dumps(data))
    finrep._CENSUS_MEMO.clear()
    with pytest.raises(RuntimeError, match="stale"):
        ext_census(A2, X, Z, 7)
    finrep._CENSUS_MEMO.clear()
