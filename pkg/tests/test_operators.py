import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from youngpoly.core import rev, weak_compositions
from youngpoly.fillings import gen_poly
from youngpoly.operators import (
    apply_mixed,
    apply_word,
    atom_ops,
    key_ops,
    parse_operator_word,
    partial,
    pi,
    pibar,
    pihat,
    yatom_ops,
    ykey_ops,
)
from youngpoly.polynomial import Polynomial


def polys(n):
    exps = st.tuples(*[st.integers(0, 3)] * n)
    return st.dictionaries(exps, st.integers(-4, 4), max_size=5).map(lambda d: Polynomial(n, d))


def test_basic_values():
    x1 = Polynomial.variable(1, 2)
    assert partial(1, x1) == Polynomial.one(2)
    sym = Polynomial.monomial((1, 1, 0)) + Polynomial.monomial((2, 0, 0)) + Polynomial.monomial((0, 2, 0))
    assert partial(1, sym) == Polynomial.zero(3)
    with pytest.raises(ValueError):
        partial(3, sym)


def test_pi_chain_gives_key_032():
    assert apply_word("pi", (1, 2), Polynomial.monomial((3, 2, 0))) == gen_poly("KSSF", (0, 3, 2), 3)


def test_pihat_chain_gives_ykey_230():
    ops = parse_operator_word("pihat:2,pihat:1")
    assert ops == [("pihat", 2), ("pihat", 1)]
    assert apply_mixed(ops, Polynomial.monomial((0, 2, 3))) == gen_poly("YKSSF", (2, 3, 0), 3)


def test_parse_errors():
    with pytest.raises(ValueError):
        parse_operator_word("pj:1")
    assert parse_operator_word("d:1") == [("partial", 1)]


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 4).flatmap(lambda n: st.tuples(st.just(n), polys(n), st.integers(1, n - 1))))
def test_reversal_intertwines(args):
    n, f, i = args
    If = f.reverse_variables()
    assert pi(i, f).reverse_variables() == pihat(n - i, If)
    assert partial(i, f).reverse_variables() == -partial(n - i, If)


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 4).flatmap(lambda n: st.tuples(polys(n), st.integers(1, n - 1))))
def test_operator_relations(args):
    f, i = args
    assert pibar(i, f) == pi(i, f) - f
    assert pi(i, pi(i, f)) == pi(i, f)
    assert partial(i, partial(i, f)) == Polynomial.zero(f.n)


@pytest.mark.parametrize("n,max_size", [(1, 6), (2, 6), (3, 6), (4, 6)])
def test_operators_match_fillings(n, max_size):
    for s in range(max_size + 1):
        for a in weak_compositions(n, s):
            assert key_ops(a) == gen_poly("KSSF", a, n)
            assert atom_ops(a) == gen_poly("ASSF", a, n)
            assert ykey_ops(a) == gen_poly("YKSSF", a, n)
            assert yatom_ops(a) == gen_poly("YASSF", a, n)


def test_young_key_is_reversed_key():
    for a in weak_compositions(3, 4):
        assert ykey_ops(a) == key_ops(rev(a)).reverse_variables()
