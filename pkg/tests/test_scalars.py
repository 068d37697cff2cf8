from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from hallcanon.scalars import (ONE, ZERO, InexactDivision, ScalarHalf, eval_at_prime, interpolate_q,
                               interpolate_stable, qbinom, qfactorial, qint, vpow)

laurent = st.dictionaries(st.integers(-8, 8), st.fractions(max_denominator=5).filter(bool), max_size=4).map(ScalarHalf)


@given(laurent, laurent, laurent)
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert a - a == ZERO


@given(laurent, laurent)
def test_bar_is_a_ring_involution(a, b):
    assert a.bar().bar() == a
    assert (a * b).bar() == a.bar() * b.bar()


@given(laurent)
def test_triples_round_trip(a):
    assert ScalarHalf.from_triples(a.to_triples()) == a


@given(laurent, laurent.filter(lambda x: not x.is_zero()))
def test_exact_division_inverts_multiplication(a, b):
    assert (a * b).exact_div(b) == a


def test_exact_division_refuses_remainders():
    with pytest.raises(InexactDivision):
        (vpow(2) + ONE).exact_div(vpow(1) + ONE)


def test_quantum_integers_and_binomials():
    assert qint(3) == vpow(2) + ONE + vpow(-2)
    assert qbinom(4, 2) == vpow(4) + vpow(2) + ScalarHalf(2) + vpow(-2) + vpow(-4)
    assert qfactorial(3) == qint(2) * qint(3)
    assert qbinom(5, 0) == ONE and qbinom(5, 6) == ZERO


@given(st.integers(0, 9), st.integers(0, 9))
def test_binomial_is_bar_invariant_and_symmetric(n, k):
    k = min(k, n)
    assert qbinom(n, k).bar() == qbinom(n, k)
    assert qbinom(n, k) == qbinom(n, n - k)


@given(st.integers(1, 8), st.integers(1, 7))
def test_pascal_rule(n, k):
    k = min(k, n)
    assert qbinom(n + 1, k) == vpow(-k) * qbinom(n, k) + vpow(n + 1 - k) * qbinom(n, k - 1)


def test_half_integer_powers_render_exactly():
    assert str(vpow(Fraction(-1, 2))) == "v^(-1/2)"
    assert str(vpow(1) - vpow(-1)) == "v - v^-1"


def test_evaluation_at_primes():
    assert eval_at_prime(vpow(2) + ONE, 3) == 4
    assert eval_at_prime(vpow(4), 4) == 16
    # v = sqrt(2): irrational parts come back as a 4-tuple in powers of 2^(1/4)
    assert eval_at_prime(vpow(1), 2) == (0, 0, 1, 0)
    assert eval_at_prime(vpow(Fraction(1, 2)), 2) == (0, 1, 0, 0)


def test_interpolation_recovers_polynomials():
    poly = interpolate_q([(q, q * q - 1) for q in (2, 3, 5)], 2)
    assert [poly(q) for q in (7, 11)] == [48, 120]
    stable = interpolate_stable(lambda q: q ** 3 + 2, (2, 3, 5, 7, 11, 13))
    assert stable.degree() == 3


@settings(max_examples=25)
@given(st.lists(st.integers(-3, 3), min_size=1, max_size=4))
def test_interpolation_is_exact_for_integer_polynomials(coeffs):
    f = lambda q: sum(c * q ** k for k, c in enumerate(coeffs))
    poly = interpolate_q([(q, f(q)) for q in (2, 3, 5, 7, 11)], len(coeffs) - 1)
    assert poly(17) == f(17)
