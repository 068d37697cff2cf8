import json

import pytest
from click.testing import CliRunner
from hypothesis import given, strategies as st

from hallcanon import finrep
from hallcanon.cli import JobSpec, dumps_csv, dumps_json, dumps_latex, latex_scalar, load_json, main
from hallcanon.scalars import ScalarHalf, vpow


def run(*args, code=0):
    res = CliRunner().invoke(main, list(args))
    assert res.exit_code == code, res.output
    return res.stdout


def test_hall_mult_two_term_product():
    rows = load_json(run("hall", "mult", "A2", "--x", "a1", "--y", "a2"))
    got = {r["class"]: r["coeff"] for r in rows}
    assert got == {"[1,1]": vpow(1) - vpow(-1), "[1,0]+[0,1]": vpow(-1)}


def test_output_is_deterministic():
    args = ("hall", "table", "A2", "--max-dim", "3")
    assert run(*args) == run(*args)


def test_cache_hit_is_byte_identical(tmp_path):
    finrep._CENSUS_MEMO.clear()
    args = ("--cache-dir", str(tmp_path), "hall", "table", "A2", "--max-dim", "2")
    first = run(*args)
    finrep._CENSUS_MEMO.clear()
    assert any(tmp_path.iterdir())
    assert run(*args) == first
    finrep._CENSUS_MEMO.clear()


laurent = st.dictionaries(st.integers(-6, 6), st.fractions(max_denominator=7).filter(bool), max_size=4).map(ScalarHalf)


@given(st.lists(laurent, max_size=4))
def test_json_round_trip(values):
    rows = [{"k": i, "coeff": c} for i, c in enumerate(values)]
    assert load_json(dumps_json(rows)) == rows


def test_csv_and_latex_are_exact():
    rows = [{"class": "[1,1]", "coeff": vpow(1) - vpow(-1)}]
    assert dumps_csv(rows) == 'class,coeff\n"[1,1]",v - v^-1\n'
    assert latex_scalar(vpow(-1) + ScalarHalf.upow(-3)) == "$v^{-1} + v^{-3/2}$"
    assert r"\begin{tabular}" in dumps_latex(rows)


def test_job_spec_validation():
    with pytest.raises(ValueError):
        JobSpec("hall", fmt="xml")
    with pytest.raises(ValueError):
        JobSpec("hall", caps={"degree": 0})


def test_parse_errors_carry_positions():
    res = CliRunner().invoke(main, ["roots", "A2: 1=2"])
    assert res.exit_code == 2 and "position" in res.stderr


def test_double_basis_table_is_the_family():
    rows = load_json(run("tu", "double-basis", "A1", "--window", "4"))
    assert rows and all("family" in r for r in rows)
    params = {tuple(int(t) for t in r["family"].strip("()").split(",")) for r in rows}
    assert all(min(p[2], p[4]) == 0 for p in params)


def test_tu_words():
    rows = load_json(run("tu", "nf", "A1", "E1", "F1"))
    assert {(tuple(r["lambdaMinus"]), tuple(r["lambdaPlus"]), tuple(r["mu"]), tuple(r["nu"])) for r in rows} == {
        ((1,), (1,), (0,), (0,)), ((0,), (0,), (1,), (0,)), ((0,), (0,), (0,), (1,))}
    assert load_json(run("tu", "mult", "A1", "--x", "K1", "--y", "K1^-1"))[0]["coeff"] == ScalarHalf(1)
    assert run("tu", "braid", "A1", "--i", "1", "--x", "E1")


def test_ihall_dual_basis_table():
    rows = load_json(run("ihall", "dual-basis", "A1", "--rho", "id", "--m", "6"))
    assert len(rows) == sum(m // 2 + 1 for m in range(7))
    assert all(r["agrees"] for r in rows)


def test_ihall_table_and_iqg():
    rows = load_json(run("ihall", "table", "--shape", "A1", "--qlist", "2", "--cap", "2"))
    assert {r["z"] for r in rows} == {"((2),0)", "((2),1)"}
    rows = load_json(run("iqg", "verify", "A2"))
    assert all(r["ok"] for r in rows)
    assert load_json(run("iqg", "braid", "A2", "--word", "1", "--gen", "B1"))


def test_nks_and_rank_one_verbs():
    rows = load_json(run("nks", "ldominant", "A1", "--kind", "double", "--w", "1,1'"))
    assert len(rows) == 3
    assert load_json(run("nks", "dict", "A1", "--generator", "K1")) == [{"v": {"(1)": 1}, "w": {"(1)": 2}}]
    assert run("nks", "dot", "A2").startswith("digraph")
    rows = load_json(run("rank1", "L", "--v", "0,0", "--w", "1,1", "--check"))
    assert rows[-1] == {"family_member": "(0,0,0,1,0)"}
    assert load_json(run("rank1", "iL", "--k", "1", "--m", "2")) == [{"B": 0, "K": 1, "coeff": ScalarHalf(1)}]
    assert len(load_json(run("rank1", "inverse", "--a", "2", "--b", "0"))) == 2
    assert len(load_json(run("rank1", "EF", "--a", "1", "--b", "1"))) == 3


def test_verify_exit_status():
    rows = load_json(run("verify", "c1", "c3"))
    assert [r["target"] for r in rows] == ["c1", "c3"] and all(r["ok"] for r in rows)
    run("verify", "c7", code=1)
    run("verify", "c99", code=2)


def test_canon_verbs():
    rows = load_json(run("canon", "basis", "A2", "--degree", "1,1"))
    assert {r["source"] for r in rows} and len(rows) == 3
    rows = load_json(run("canon", "duality", "A2", "--degree", "1,1"))
    assert sum(r["pairing"] == ScalarHalf(1) for r in rows) == 2
    rows = json.loads(run("--format", "json", "roots", "D4"))
    assert len(rows) == 13
