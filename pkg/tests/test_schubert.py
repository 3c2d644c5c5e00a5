import json

import pytest

from youngpoly.core import all_permutations, is_vexillary, lehmer, length, rev_perm
from youngpoly.crystals import ysch_via_rfyc
from youngpoly.operators import key_ops, schubert_ops, yschubert_ops
from youngpoly.schubert import (
    enumerate_pd,
    enumerate_pd_bruteforce,
    reading_word,
    schubert_pd,
    trace,
    vexillary_identity_check,
    yschubert_pd,
)
from youngpoly.core import perm_from_word


@pytest.mark.parametrize("m", [1, 2, 3, 4, 5])
def test_backtracking_matches_bruteforce(m):
    for w in all_permutations(m):
        assert enumerate_pd(w) == enumerate_pd_bruteforce(w)


@pytest.mark.parametrize("m", [2, 3, 4])
def test_pipe_dreams_are_reduced(m):
    for w in all_permutations(m):
        for P in enumerate_pd(w):
            assert len(P.crosses) == length(w)
            assert trace(m, P.crosses) == w
            assert perm_from_word(reading_word(P.crosses), m) == w


def test_s4_suite():
    for w in all_permutations(4):
        assert schubert_pd(w) == schubert_ops(w)
        assert yschubert_pd(w) == yschubert_ops(w) == ysch_via_rfyc(w)
        assert yschubert_pd(w) == schubert_pd(rev_perm(w)).reverse_variables()
        for e, _ in yschubert_pd(w).terms:
            assert all(e[i] <= i for i in range(4))
        if is_vexillary(w):
            assert schubert_pd(w) == key_ops(lehmer(w))
            assert vexillary_identity_check(w) is True
        else:
            assert vexillary_identity_check(w) is None


def test_s5_operators_agree():
    for w in all_permutations(5):
        assert schubert_pd(w) == schubert_ops(w)


def test_identity_and_longest():
    assert schubert_pd((1, 2, 3)).coefficient((0, 0, 0)) == 1
    assert schubert_pd((3, 2, 1)) == schubert_ops((3, 2, 1))
    assert len(schubert_pd((3, 2, 1))) == 1


def test_rendering():
    P = enumerate_pd((1, 3, 2))[0]
    assert P.to_ascii().count("+") == 1
    obj = json.loads(P.to_json())
    assert obj["weight"] == list(P.weight())
