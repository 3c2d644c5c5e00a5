from fractions import Fraction

import pytest

from youngpoly.linalg import NotInSpanError, SingularSystemError, rank, solve


def test_rank():
    assert rank([[1, 2], [2, 4]]) == 1
    assert rank([[1, 0, 0], [0, 1, 0], [0, 0, 0]]) == 2
    assert rank([]) == 0


def test_solve_exact():
    # columns (1,1) and (1,-1); rhs (3,1) = 2*(1,1) + 1*(1,-1)
    assert solve([[1, 1], [1, -1]], [3, 1]) == [2, 1]
    assert solve([[2]], [1]) == [Fraction(1, 2)]


def test_solve_rectangular_overdetermined():
    assert solve([[1, 0, 1], [0, 1, 1]], [2, 3, 5]) == [2, 3]


def test_solve_errors():
    with pytest.raises(NotInSpanError):
        solve([[1, 0]], [0, 1])
    with pytest.raises(SingularSystemError):
        solve([[1, 1], [2, 2]], [3, 3])
