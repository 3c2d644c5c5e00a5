from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from youngpoly.core import weak_compositions
from youngpoly.fillings import gen_poly
from youngpoly.generators import (
    compatible_sequences,
    flag_compatible_sequences,
    format_row_frank,
    fp_via_flag,
    key_to_fs,
    maxcomp,
    maxcomp_sequence,
    row_frank_W,
    row_frank_YW,
    ykey_to_yfs,
)
from youngpoly.tableaux import frev_word


def test_compatible_examples():
    assert compatible_sequences((2, 3, 2, 3, 2)) == []
    assert compatible_sequences((2, 2, 3, 2, 3)) == [(1, 1, 2, 2, 3)]


def test_maxcomp_examples():
    assert maxcomp_sequence((4, 3, 5, 2, 5, 4)) == (1, 1, 2, 2, 4, 4)
    assert maxcomp((2, 3, 2, 2, 3), 3) == (1, 3, 1)
    assert maxcomp_sequence((2, 3, 2, 3, 2)) is None


@given(st.lists(st.integers(1, 4), min_size=1, max_size=6).map(tuple))
def test_maxcomp_is_largest(b):
    seqs = compatible_sequences(b)
    m = maxcomp_sequence(b)
    if not seqs:
        assert m is None
    else:
        assert m in seqs
        assert all(all(x <= y for x, y in zip(s, m)) for s in seqs)


def test_slide_expansions():
    assert key_to_fs((0, 3, 2)) == {(2, 2, 1): 1, (0, 3, 2): 1, (1, 3, 1): 1, (2, 3, 0): 1}
    assert ykey_to_yfs((2, 3, 0)) == {(1, 3, 1): 1, (0, 3, 2): 1, (1, 2, 2): 1, (2, 3, 0): 1}


@pytest.mark.parametrize("n", [1, 2, 3])
def test_flag_compatible_generate_particles(n):
    for s in range(6):
        for a in weak_compositions(n, s):
            assert fp_via_flag(a) == gen_poly("LF", a, n)


def test_flag_compatible_example():
    assert set(flag_compatible_sequences((1, 0, 3))) == {(1, 3, 3, 3), (1, 2, 3, 3), (1, 2, 2, 3)}


def test_row_frank_sizes_and_format():
    W = row_frank_W((0, 3, 2))
    assert len(W) == 9
    assert "33|222|" in {format_row_frank(u, (0, 3, 2)) for u in W}
    assert "|233|22" in {format_row_frank(u, (2, 3, 0)) for u in row_frank_YW((2, 3, 0))}


@pytest.mark.parametrize("a", [(0, 3, 2), (1, 0, 2), (2, 0, 1, 1), (0, 2, 1, 0)])
def test_young_words_are_frev_images(a):
    n = len(a)
    assert set(row_frank_YW(a)) == {frev_word(u, n) for u in row_frank_W(a[::-1])}
