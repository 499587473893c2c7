"""Independent reference computations used by the test suite.

Nothing here imports the package: each oracle reaches its answer by a
different route (third-party libraries, modular forms, lattice-point counts,
floating point linear algebra).
"""

from __future__ import annotations

import math
from functools import lru_cache

import mpmath
import numpy as np


# ---------------------------------------------------------------------------
# Dirichlet coefficients


def eta_product_coeffs(N: int) -> list[int]:
    """b_1..b_N of q * prod (1 - q^6n)(1 - q^18n), the weight one form of level 108."""
    # series in q^1 starting at q^1; work with exponents shifted by one
    M = N
    poly = [0] * M
    poly[0] = 1
    for step in (6, 18):
        k = 1
        while step * k < M:
            d = step * k
            for i in range(M - 1, d - 1, -1):
                poly[i] -= poly[i - d]
            k += 1
    return poly  # poly[i] is the coefficient of q^(i+1)


def cbrt2_zeta_coeffs(N: int) -> list[int]:
    """a_n of zeta_{Q(2^(1/3))} as the Dirichlet convolution of 1 with the eta product."""
    b = eta_product_coeffs(N)
    a = [0] * N
    for d in range(1, N + 1):
        for m in range(d, N + 1, d):
            a[m - 1] += b[d - 1]
    return a


def ideal_counts_binary_form(N: int, form) -> list[int]:
    """Number of representations of n by a positive binary quadratic form, 1..N."""
    out = [0] * (N + 1)
    R = int(math.isqrt(4 * N)) + 2
    for x in range(-R, R + 1):
        for y in range(-R, R + 1):
            v = form(x, y)
            if 0 < v <= N:
                out[v] += 1
    return out[1:]


def gaussian_zeta_coeffs(N: int) -> list[int]:
    return [c // 4 for c in ideal_counts_binary_form(N, lambda x, y: x * x + y * y)]


def eisenstein_zeta_coeffs(N: int) -> list[int]:
    return [c // 6 for c in ideal_counts_binary_form(N, lambda x, y: x * x + x * y + y * y)]


def cyclotomic_zeta_coeffs(n: int, N: int) -> list[int]:
    """Ideal counts in Q(zeta_n) for n an odd prime (or 8), from residue degrees."""
    from sympy import factorint, n_order, primerange

    phi = n - 1 if n != 8 else 4
    local = {}
    for p in primerange(2, N + 1):
        if n % p == 0:
            f, g = 1, 1  # totally ramified
        else:
            f = n_order(p, n)
            g = phi // f
        # coefficients of (1 - T^f)^(-g)
        k = int(math.log(N, p)) + 1
        ser = [0] * (k + 1)
        for j in range(0, k + 1):
            if j % f == 0:
                m = j // f
                ser[j] = math.comb(m + g - 1, g - 1)
        local[p] = ser
    out = []
    for m in range(1, N + 1):
        v = 1
        for p, e in factorint(m).items():
            v *= local[p][e]
        out.append(v)
    return out


# ---------------------------------------------------------------------------
# zeros


def riemann_zeros(tmax: float) -> list[float]:
    out, k = [], 1
    while True:
        z = float(mpmath.zetazero(k).imag)
        if z > tmax:
            return out
        out.append(z)
        k += 1


@lru_cache(maxsize=None)
def _eta_coeffs_cached(N):
    return tuple(eta_product_coeffs(N))


def lambda_chi2(s, N: int = 90, dps: int = 25):
    """Completed L-function of the eta product via mpmath incomplete gammas:
    Lambda(s) = (sqrt(108)/(2 pi))^s Gamma(s) L(s), root number one."""
    with mpmath.workdps(dps):
        b = _eta_coeffs_cached(N)
        A = mpmath.sqrt(108) / (2 * mpmath.pi)
        s = mpmath.mpc(s)
        total = mpmath.mpc(0)
        for n in range(1, N + 1):
            if b[n - 1]:
                x = n / A
                total += b[n - 1] * ((A / n) ** s * mpmath.gammainc(s, x) + (A / n) ** (1 - s) * mpmath.gammainc(1 - s, x))
        return total


def chi2_zeros(tmax: float, step: float = 0.1) -> list[float]:
    """Sign changes of the real function Lambda(1/2 + it), refined by bisection."""
    f = lambda t: float(mpmath.re(lambda_chi2(mpmath.mpc(0.5, t))))
    out = []
    t0, v0 = step, f(step)
    t = t0
    while t < tmax:
        t1 = min(t + step, tmax)
        v1 = f(t1)
        if v0 == 0 or v0 * v1 < 0:
            lo, hi = t, t1
            for _ in range(30):
                mid = (lo + hi) / 2
                if f(mid) * v0 < 0:
                    hi = mid
                else:
                    lo = mid
            out.append((lo + hi) / 2)
        t, v0 = t1, v1
    return out


# ---------------------------------------------------------------------------
# groups and characters


def numeric_character_table(elements, mul, inv, classes):
    """Irreducible characters by simultaneous diagonalisation of class sums in
    floating point (Burnside's method).  Returns one complex row per character."""
    k = len(classes)
    class_of = {}
    for j, C in enumerate(classes):
        for g in C:
            class_of[g] = j
    reps = [C[0] for C in classes]
    # M_j[l][m] = #{x in C_j : x^-1 z_m in C_l}, z_m the rep of C_m; the central
    # characters omega are common right eigenvectors: M_j omega = omega_j omega
    mats = []
    for j in range(k):
        M = np.zeros((k, k))
        for l in range(k):
            for x in classes[j]:
                M[class_of[mul(inv(x), reps[l])], l] += 1
        mats.append(M)
    rng = np.random.default_rng(0)
    combo = sum(rng.normal() * M for M in mats)
    w, V = np.linalg.eig(combo)
    sizes = np.array([len(C) for C in classes], dtype=float)
    order = sum(sizes)
    inv_class = [class_of[inv(r)] for r in reps]
    rows = []
    for i in range(k):
        v = V[:, i]
        v = v / v[0]  # omega(identity class) = 1
        s = sum(v[a] * v[inv_class[a]] / sizes[a] for a in range(k))
        d = math.sqrt((order / s).real)
        chi = d * v / sizes
        rows.append(chi)
    return rows


def sympy_group(gens):
    from sympy.combinatorics import Permutation, PermutationGroup

    return PermutationGroup([Permutation(list(g)) for g in gens])


def scipy_lp_feasible(A, b):
    from scipy.optimize import linprog

    A = np.array(A, dtype=float)
    res = linprog(np.zeros(A.shape[1]), A_eq=A, b_eq=np.array(b, dtype=float), bounds=[(0, None)] * A.shape[1], method="highs")
    return res.status == 0, res


# ---------------------------------------------------------------------------
# splitting of primes


def splitting_field_x3m2_pattern(p: int) -> list[int] | None:
    """Factor degrees mod p of the minimal polynomial of 2^(1/3) + sqrt(-3),
    a primitive element of the splitting field of x^3 - 2.  None when p
    divides the polynomial discriminant."""
    from sympy import Poly, discriminant, resultant, symbols

    x, y = symbols("x y")
    f = _sextic()
    if discriminant(f, x) % p == 0:
        return None
    P = Poly(f, x, modulus=p)
    out = []
    for fac, e in P.factor_list()[1]:
        out += [fac.degree()] * e
    return sorted(out)


@lru_cache(maxsize=None)
def _sextic():
    from sympy import expand, resultant, symbols

    x, y = symbols("x y")
    return expand(resultant(y**3 - 2, (x - y) ** 2 + 3, y))


def chi2_sign_change_count(tmax: float, step: float = 0.1, N: int = 130, dps: int = 45) -> int:
    """Number of sign changes of Lambda(1/2 + it) on (0, tmax) for the eta product.

    At height t the terms are O(1) while Lambda is about exp(-pi t / 2), so the
    working precision and truncation grow with tmax."""
    f = lambda t: mpmath.re(lambda_chi2(mpmath.mpc(0.5, t), N=N, dps=dps))
    count, prev = 0, f(step / 2)
    t = step / 2
    while t + step < tmax:
        t += step
        v = f(t)
        if v * prev < 0:
            count += 1
        prev = v
    return count
