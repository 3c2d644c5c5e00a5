import pytest

from youngpoly import analysis
from youngpoly.core import weak_compositions
from youngpoly.fillings import gen_poly
from youngpoly.polynomial import Polynomial


def test_expand_key_into_atoms():
    e = analysis.expand(gen_poly("KSSF", (0, 3, 2), 3), "atom")
    assert e.coeffs == analysis.key_to_atoms((0, 3, 2)).coeffs
    assert e.integral and e.is_nonnegative()
    assert e.reconstruct() == gen_poly("KSSF", (0, 3, 2), 3)


def test_expand_reports_fractions_and_span():
    # x1 = M_1 in one variable is fine; in two variables x1 alone is not quasisymmetric
    with pytest.raises(analysis.NotInSpanError):
        analysis.expand(Polynomial.monomial((1, 0)), "QS")
    e = analysis.expand(Polynomial.monomial((1, 0)) + Polynomial.monomial((0, 1)), "QS")
    assert e.coeffs == {(1,): 1}


@pytest.mark.parametrize("basis", sorted(analysis.BASES))
def test_delta_expansion(basis):
    for n in (1, 2, 3):
        for s in range(4):
            for idx in analysis.candidate_indices(basis, n, s):
                assert analysis.expand(analysis.basis_poly(basis, idx, n), basis).coeffs == {tuple(idx): 1}


@pytest.mark.parametrize("src,dst", analysis.REVERSE_ARROWS + analysis.YOUNG_ARROWS)
def test_arrow_positive(src, dst):
    for n in (1, 2, 3):
        for s in range(5):
            for a in weak_compositions(n, s):
                e = analysis.expand(analysis.basis_poly(src, a, n), dst)
                assert e.integral and e.is_nonnegative()


def test_schur_decompositions():
    qs, yqs = analysis.schur_decompositions((2, 1), 3)
    target = analysis.basis_poly("schur", (2, 1), 3)
    assert qs.reconstruct() == target == yqs.reconstruct()


def test_classifier_examples():
    assert analysis.yqs_eq_qs((2, 1), 2)
    assert analysis.yqs_eq_qs((3, 2), 2)
    assert not analysis.yqs_eq_qs((3, 2), 3)
    assert analysis.yqs_eq_qs((1, 2, 1, 1), 5)
    assert analysis.key_inter_ykey((0, 1, 2))
    assert not analysis.key_inter_ykey((2, 1, 0))
    assert analysis.atom_eq_yatom((1, 2, 1))
    assert not analysis.atom_eq_yatom((0, 2))
    assert analysis.fp_eq_yfp((1, 0, 1))
    assert not analysis.fp_eq_yfp((2, 0, 1))
    assert analysis.qk_eq_yqk((3, 3, 0))
    assert not analysis.qk_eq_yqk((0, 3, 3))
    assert analysis.slide_intersection((0, 2, 1))
    assert analysis.yslide_intersection((2, 1, 0))


def test_slide_example():
    # fs_01 is x1 + x2, which is also the Young slide yfs_10
    assert gen_poly("FF", (0, 1), 2) == gen_poly("YFF", (1, 0), 2)
    assert analysis.brute_force_member("fslide", (1, 0), "yfslide", 2) is None


def test_e_vector_vanishes_on_repeated_column():
    # a 2x1 column with equal entries is killed by the antisymmetrizer
    assert analysis.e_vector(((1,), (1,))) == {}
    assert analysis.e_vector(((1,), (2,))) == {((1,), (2,)): 1, ((2,), (1,)): -1}


def test_module_trace_matches_young_key():
    for a in [(2, 3, 0), (0, 3, 2), (1, 1, 1), (0, 2, 1)]:
        assert analysis.module_trace(a) == gen_poly("YKSSF", a, 3)
        assert analysis.basis_rank(a) == len(analysis.ykeymodule_basis(a))


def test_module_guard():
    with pytest.raises(ValueError):
        analysis.ykeymodule_basis((0, 0, 7, 7))


def test_unknown_basis():
    with pytest.raises(ValueError):
        analysis.basis_id("nope")
    assert analysis.basis_id("fs") == "fslide"
