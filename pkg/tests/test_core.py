import pytest
from hypothesis import given
from hypothesis import strategies as st

from youngpoly.core import (
    act,
    all_permutations,
    bruhat_leq,
    check_weak_composition,
    compose,
    conjugate,
    flat,
    frev_perm,
    inverse,
    is_reduced_word,
    is_vexillary,
    lehmer,
    length,
    longest,
    parse_index,
    parse_permutation,
    partition_of,
    perm_from_word,
    rearrangements,
    reduced_word,
    reduced_words,
    rev,
    rev_perm,
    revsort,
    sort_wc,
    sorting_permutations,
    sorting_word,
    wc_leq,
    weak_compositions,
    young_lehmer,
)
from youngpoly.tableaux import key_tableau

perms = st.integers(1, 6).flatmap(lambda m: st.permutations(list(range(1, m + 1))).map(tuple))


def test_sort_and_revsort():
    assert sort_wc((0, 3, 2)) == (3, 2, 0)
    assert sort_wc((0, 0, 0)) == (0, 0, 0)
    assert sort_wc((1, 4, 0, 3, 1)) == (4, 3, 1, 1, 0)
    assert revsort((2, 3, 0)) == (0, 2, 3)
    assert partition_of((1, 4, 0, 3, 1)) == (4, 3, 1, 1)
    assert flat((0, 2, 0, 1)) == (2, 1)
    assert rev((0, 3, 2)) == (2, 3, 0)


def test_sorting_permutations():
    w_a, _ = sorting_permutations((0, 3, 2))
    assert w_a == perm_from_word((1, 2), 3)
    _, w_hat = sorting_permutations((2, 3, 0))
    assert w_hat == perm_from_word((2, 1), 3)
    assert sorting_permutations((3, 2, 1))[0] == (1, 2, 3)


def test_weak_compositions_count():
    # stars and bars: C(size + n - 1, n - 1)
    assert len(list(weak_compositions(3, 4))) == 15
    assert list(weak_compositions(2, 0)) == [(0, 0)]


def test_lehmer_codes():
    assert lehmer((3, 1, 2, 5, 4)) == (2, 0, 0, 1, 0)
    assert lehmer((1, 2, 3, 4)) == (0, 0, 0, 0)
    assert young_lehmer(rev_perm((3, 1, 2, 5, 4))) == (0, 1, 0, 0, 2)


def test_frev_perm():
    assert frev_perm((3, 1, 5, 4, 2)) == (4, 2, 1, 5, 3)
    assert frev_perm((1, 2, 3)) == (1, 2, 3)
    w = (2, 1, 5, 3, 4)
    w0 = longest(5)
    assert frev_perm(w) == compose(compose(w0, w), w0)


@given(perms)
def test_frev_perm_involution_preserves_length(w):
    assert frev_perm(frev_perm(w)) == w
    assert length(frev_perm(w)) == length(w)


@given(perms)
def test_frev_on_reduced_words(w):
    n = len(w)
    word = reduced_word(w)
    assert perm_from_word(word, n) == w
    assert perm_from_word(tuple(n - i for i in word), n) == frev_perm(w)


@pytest.mark.parametrize("m", range(1, 6))
def test_young_lehmer_of_reverse(m):
    for w in all_permutations(m):
        assert young_lehmer(rev_perm(w)) == rev(lehmer(w))


def test_reduced_words():
    assert set(reduced_words((2, 1, 5, 3, 4))) == {(1, 4, 3), (4, 1, 3), (4, 3, 1)}
    assert is_reduced_word((1, 2, 1), 3)
    assert not is_reduced_word((1, 1), 3)
    assert inverse((2, 3, 1)) == (3, 1, 2)


def test_bruhat():
    for w in all_permutations(4):
        assert bruhat_leq((1, 2, 3, 4), w)
        assert bruhat_leq(w, longest(4))
    assert not bruhat_leq((2, 1, 3), (1, 3, 2))
    with pytest.raises(ValueError):
        bruhat_leq((1, 2), (1, 2, 3))


def test_wc_leq_is_partial_order_on_rearrangements():
    for a in [(0, 3, 2), (1, 0, 2, 1), (2, 1, 0, 1)]:
        cls = rearrangements(a)
        for b in cls:
            assert wc_leq(b, b)
            for c in cls:
                if wc_leq(b, c) and wc_leq(c, b):
                    assert b == c
                for d in cls:
                    if wc_leq(b, c) and wc_leq(c, d):
                        assert wc_leq(b, d)
    assert not wc_leq((1, 1, 0), (0, 3, 2))


@pytest.mark.parametrize("a", [(0, 3, 2), (1, 0, 2, 1), (2, 3, 0), (0, 0, 1, 2)])
def test_sorting_permutations_sort(a):
    w_a, w_hat = sorting_permutations(a)
    assert act(a, w_a) == sort_wc(a)
    assert act(a, w_hat) == revsort(a)
    assert length(w_a) == len(sorting_word(a))
    assert length(w_hat) == len(sorting_word(a, increasing=True))


@pytest.mark.parametrize("a", [(0, 3, 2), (2, 4, 0, 3), (0, 0, 0), (1, 0, 2, 1)])
def test_key_tableau(a):
    K = key_tableau(a)
    assert K.is_key()
    assert K.weight(len(a)) == a


def test_key_tableau_examples():
    assert key_tableau((0, 3, 2)).rows == ((2, 2, 2), (3, 3))
    assert key_tableau((2, 4, 0, 3)).rows == ((1, 1, 2, 2), (2, 2, 4), (4, 4))
    assert key_tableau((0, 0, 0)).rows == ()


def test_vexillary():
    assert not is_vexillary((2, 1, 4, 3))
    assert is_vexillary((3, 1, 2))


def test_parsing():
    assert parse_index("2,3,0") == (2, 3, 0)
    assert parse_permutation("21534") == (2, 1, 5, 3, 4)
    assert parse_permutation("2,1,5,3,4") == (2, 1, 5, 3, 4)
    with pytest.raises(ValueError):
        parse_permutation("113")
    with pytest.raises(ValueError):
        check_weak_composition((1, -1))


def test_conjugate():
    assert conjugate((3, 2)) == (2, 2, 1)
    assert conjugate(()) == ()


def test_sorting_word_reduced():
    for a in [(0, 3, 2), (1, 0, 2, 1), (0, 0, 1, 2)]:
        assert is_reduced_word(sorting_word(a), len(a))
        assert is_reduced_word(sorting_word(a, increasing=True), len(a))
