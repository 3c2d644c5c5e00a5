import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from youngpoly.polynomial import InexactDivisionError, Polynomial, all_monomials, from_text, to_text


def polys(n=3):
    exps = st.tuples(*[st.integers(0, 3)] * n)
    return st.dictionaries(exps, st.integers(-5, 5), max_size=6).map(lambda d: Polynomial(n, d))


def test_zero_coefficients_dropped():
    p = Polynomial(2, {(1, 0): 0, (0, 1): 3})
    assert list(p.terms) == [((0, 1), 3)]
    assert Polynomial(2, {(1, 0): 1}) - Polynomial(2, {(1, 0): 1}) == Polynomial.zero(2)


def test_reverse_variables():
    p = Polynomial.monomial((2, 1, 0))
    assert p.reverse_variables() == Polynomial.monomial((0, 1, 2))


@given(polys())
def test_reverse_is_involution(p):
    assert p.reverse_variables().reverse_variables() == p


@given(polys(), polys())
def test_ring_axioms(p, q):
    assert p + q == q + p
    assert (p + q) - q == p
    assert p * q == q * p


@given(polys())
def test_text_and_json_round_trip(p):
    assert from_text(to_text(p), 3) == p
    assert Polynomial.from_json(p.to_json()) == p
    json.loads(p.to_json())


def test_text_format():
    p = Polynomial(3, {(0, 1, 3): 1, (1, 1, 2): 2, (0, 0, 0): -1})
    assert to_text(p) == "2*x^(1,1,2) + x^(0,1,3) - 1"
    assert to_text(Polynomial.zero(2)) == "0"


def test_divide_by_difference():
    x1, x2 = Polynomial.variable(1, 2), Polynomial.variable(2, 2)
    f = x1 * x1 - x2 * x2
    assert f.divide_by_difference(1, 2) == x1 + x2
    with pytest.raises(InexactDivisionError):
        (x1 * x1).divide_by_difference(1, 2)


def test_homogeneous_parts():
    p = Polynomial(2, {(1, 0): 1, (1, 1): 2})
    assert not p.is_homogeneous()
    assert set(p.homogeneous_components()) == {1, 2}


def test_all_monomials():
    assert len(all_monomials(3, 2)) == 6
    assert all(sum(e) == 2 for e in all_monomials(3, 2))


def test_symmetric():
    x = [Polynomial.variable(i, 3) for i in (1, 2, 3)]
    assert (x[0] + x[1] + x[2]).is_symmetric()
    assert not x[0].is_symmetric()
