from fractions import Fraction

import pytest

from artinzeta import lp
from oracles import scipy_lp_feasible


def test_feasible_exact():
    A = [[1, 1, 0], [0, 1, 1]]
    b = [Fraction(1, 3), Fraction(1, 2)]
    r = lp.solve(A, b)
    assert all(v >= 0 for v in r.x)
    assert [sum(a * v for a, v in zip(row, r.x)) for row in A] == b
    assert all(isinstance(v, Fraction) for v in r.x)


def test_infeasible():
    with pytest.raises(lp.Infeasible):
        lp.solve([[1, 1]], [-1])
    ok, _ = scipy_lp_feasible([[1, 1]], [-1])
    assert not ok


def test_optimum_matches_scipy():
    from scipy.optimize import linprog

    A = [[1, 2, 1, 0], [3, 1, 0, 1]]
    b = [4, 6]
    c = [1, 1, 0, 0]
    r = lp.solve(A, b, c)
    ref = linprog([-v for v in c], A_eq=A, b_eq=b, method="highs")
    assert abs(float(r.value) + ref.fun) < 1e-9
    assert r.value == Fraction(14, 5)


def test_degenerate_redundant_rows():
    A = [[1, 1], [2, 2], [1, 0]]
    r = lp.solve(A, [2, 4, 1])
    assert r.x == [1, 1]
