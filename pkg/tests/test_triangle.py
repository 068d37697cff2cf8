import pytest

from hallcanon.scalars import ONE, ScalarHalf, vpow
from hallcanon.triangle import TriangleError, TriangularProblem, lusztig_basis


def _problem(shift=vpow(1) - vpow(-1), ring="neg"):
    bar = {"a": {"a": ONE, "b": shift}, "b": {"b": ONE}}
    return TriangularProblem(["a", "b"], {"a": ["b"], "b": []}, bar, ring)


def test_two_by_two_solution():
    basis = lusztig_basis(_problem())
    assert basis["b"] == {"b": ONE}
    assert basis["a"] == {"a": ONE, "b": -vpow(-1)}


def test_positive_ring():
    basis = lusztig_basis(_problem(ring="pos"))
    assert basis["a"] == {"a": ONE, "b": vpow(1)}


def test_non_involutive_bar_is_rejected():
    with pytest.raises(TriangleError):
        lusztig_basis(_problem(shift=vpow(2)))


def test_recovers_a_planted_basis():
    from hallcanon.canonbasis import invert_unitriangular
    planted = {0: {0: ONE, 1: vpow(-1), 2: vpow(-2) + vpow(-4)}, 1: {1: ONE, 2: -vpow(-1)}, 2: {2: ONE}}
    inverse = invert_unitriangular(planted)
    # bar(e_k) = sum bar(inverse[k][j]) b_j, expanded back into e
    bar: dict = {}
    for k, row in inverse.items():
        acc: dict = {}
        for j, c in row.items():
            for m, d in planted[j].items():
                acc[m] = acc.get(m, ScalarHalf()) + c.bar() * d
        bar[k] = {m: c for m, c in acc.items() if c}
    p = TriangularProblem([0, 1, 2], {0: [1, 2], 1: [2], 2: []}, bar, "neg")
    assert lusztig_basis(p) == planted
