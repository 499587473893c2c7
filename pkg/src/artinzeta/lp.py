"""Exact two-phase simplex over the rationals with Bland's rule.

Solves  maximize c.x  subject to  A x = b,  x >= 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence


class LPError(Exception):
    pass


class Infeasible(LPError):
    pass


class Unbounded(LPError):
    pass


@dataclass
class LPResult:
    x: list[Fraction]
    value: Fraction


def _pivot(T: list[list[Fraction]], basis: list[int], r: int, c: int) -> None:
    row = T[r]
    inv = 1 / row[c]
    T[r] = row = [v * inv for v in row]
    for i in range(len(T)):
        if i != r and T[i][c]:
            f = T[i][c]
            T[i] = [a - f * b for a, b in zip(T[i], row)]
    basis[r] = c


def _simplex(T, basis, cost, allowed: set[int]) -> None:
    """Maximize cost over the tableau in place (last column is the rhs)."""
    if not T:
        if any(cost[j] > 0 for j in allowed):
            raise Unbounded("objective is unbounded")
        return
    ncols = len(T[0]) - 1
    while True:
        enter = None
        for j in sorted(allowed):
            if j in basis:
                continue
            red = cost[j] - sum((cost[basis[i]] * T[i][j] for i in range(len(T))), Fraction(0))
            if red > 0:
                enter = j
                break
        if enter is None:
            return
        best = None
        for i in range(len(T)):
            a = T[i][enter]
            if a > 0:
                ratio = T[i][ncols] / a
                key = (ratio, basis[i])
                if best is None or key < best[0]:
                    best = (key, i)
        if best is None:
            raise Unbounded("objective is unbounded")
        _pivot(T, basis, best[1], enter)


def solve(A: Sequence[Sequence], b: Sequence, c: Sequence | None = None) -> LPResult:
    m = len(A)
    n = len(A[0]) if m else 0
    A = [[Fraction(v) for v in row] for row in A]
    b = [Fraction(v) for v in b]
    for i in range(m):
        if b[i] < 0:
            A[i] = [-v for v in A[i]]
            b[i] = -b[i]
    # phase 1: artificials n .. n+m-1
    T = [A[i] + [Fraction(int(k == i)) for k in range(m)] + [b[i]] for i in range(m)]
    basis = list(range(n, n + m))
    cost1 = [Fraction(0)] * n + [Fraction(-1)] * m
    _simplex(T, basis, cost1, set(range(n + m)))
    if any(T[i][-1] != 0 for i in range(m) if basis[i] >= n):
        raise Infeasible("no nonnegative solution")
    # drive zero-level artificials out of the basis, dropping redundant rows
    i = 0
    while i < len(T):
        if basis[i] >= n:
            j = next((j for j in range(n) if T[i][j] != 0), None)
            if j is None:
                del T[i]
                del basis[i]
                continue
            _pivot(T, basis, i, j)
        i += 1
    T = [row[:n] + [row[-1]] for row in T]
    cost = [Fraction(v) for v in c] if c is not None else [Fraction(0)] * n
    _simplex(T, basis, cost, set(range(n)))
    x = [Fraction(0)] * n
    for i, j in enumerate(basis):
        x[j] = T[i][-1]
    return LPResult(x, sum((ci * xi for ci, xi in zip(cost, x)), Fraction(0)))
