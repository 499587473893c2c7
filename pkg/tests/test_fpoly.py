import random

import pytest
from sympy import GF as SGF, Matrix, Poly, symbols
from sympy.polys.galoistools import gf_from_int_poly

from artinzeta import fpoly

x = symbols("x")


def sympy_pattern(coeffs, p):
    P = Poly(list(reversed(coeffs)), x, modulus=p)
    out = []
    for fac, e in P.factor_list()[1]:
        out += [fac.degree()] * e
    return sorted(out)


@pytest.mark.parametrize("p", [2, 3, 5, 7, 11, 13, 101])
def test_distinct_degree_matches_sympy(p):
    rng = random.Random(p)
    for _ in range(15):
        deg = rng.randint(1, 8)
        f = [rng.randrange(p) for _ in range(deg)] + [1]
        if not fpoly.is_squarefree(f, p):
            continue
        assert sorted(fpoly.distinct_degree_pattern(f, p)) == sympy_pattern(f, p)


def test_x3_minus_2_patterns():
    for p in (5, 7, 11, 31, 43):
        f = [-2 % p, 0, 0, 1]
        assert sorted(fpoly.distinct_degree_pattern(f, p)) == sympy_pattern(f, p)


def test_roots():
    p = 31
    f = fpoly.reduce([-2, 0, 0, 1], p)
    r = sorted(fpoly.roots(f, p))
    assert r == sorted(a for a in range(p) if (a ** 3 - 2) % p == 0)
    assert len(r) == 3


def test_divmod_and_gcd():
    p = 7
    f = fpoly.mul([1, 1], [2, 0, 1], p)
    q, r = fpoly.divmod_(f, [1, 1], p)
    assert fpoly.trim(r) == [] or all(c == 0 for c in r)
    assert fpoly.monic(fpoly.gcd(f, fpoly.mul([1, 1], [3, 1], p), p), p) == [1, 1]


@pytest.mark.parametrize("p", [5, 13])
def test_charpoly_matches_sympy(p):
    rng = random.Random(p)
    A = [[rng.randrange(p) for _ in range(4)] for _ in range(4)]
    mine = [c % p for c in fpoly.charpoly(A, p)]
    ref = Matrix(A).charpoly(x).all_coeffs()  # high to low
    ref = [int(c) % p for c in reversed(ref)]
    assert fpoly.trim(mine) == fpoly.trim(ref)


def test_nullspace():
    p = 11
    A = [[1, 2, 3], [2, 4, 6]]
    ns = fpoly.nullspace(A, p)
    assert len(ns) == 2
    for v in ns:
        assert all(sum(a * b for a, b in zip(row, v)) % p == 0 for row in A)
