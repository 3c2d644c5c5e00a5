import pytest

from youngpoly.suites import SUITES, run_suite

SMALL = {"maxcomp": (3, 4), "knuth-insertion": (3, 5), "knuth-frev": (3, 5), "right-left-keys": (3, 2)}


@pytest.mark.parametrize("name", sorted(SUITES))
def test_suite_passes_on_small_range(name):
    max_len, max_size = SMALL.get(name, (3, 4))
    assert run_suite(name, max_len, max_size) == []


def test_unknown_suite():
    with pytest.raises(KeyError):
        run_suite("nope")
