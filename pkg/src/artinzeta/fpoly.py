"""Dense polynomials over F_p, coefficient lists lowest degree first."""

from __future__ import annotations

import random


def trim(f: list[int]) -> list[int]:
    while f and f[-1] == 0:
        f.pop()
    return f


def reduce(f, p: int) -> list[int]:
    return trim([c % p for c in f])


def sub(f, g, p):
    n = max(len(f), len(g))
    return trim([((f[i] if i < len(f) else 0) - (g[i] if i < len(g) else 0)) % p for i in range(n)])


def mul(f, g, p):
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    return reduce(out, p)


def divmod_(f, g, p):
    f = list(f)
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    inv = pow(g[-1], -1, p)
    dg = len(g) - 1
    q = [0] * max(len(f) - dg, 0)
    for i in range(len(f) - 1, dg - 1, -1):
        c = f[i] * inv % p
        if c:
            q[i - dg] = c
            for j in range(dg + 1):
                f[i - dg + j] = (f[i - dg + j] - c * g[j]) % p
    return trim(q), trim(f[:dg])


def mod(f, g, p):
    return divmod_(f, g, p)[1]


def monic(f, p):
    if not f:
        return f
    inv = pow(f[-1], -1, p)
    return [c * inv % p for c in f]


def gcd(f, g, p):
    f, g = reduce(f, p), reduce(g, p)
    while g:
        f, g = g, mod(f, g, p)
    return monic(f, p)


def powmod(f, e: int, m, p):
    result = [1]
    base = mod(f, m, p)
    while e:
        if e & 1:
            result = mod(mul(result, base, p), m, p)
        base = mod(mul(base, base, p), m, p)
        e >>= 1
    return result


def derivative(f, p):
    return trim([(i * c) % p for i, c in enumerate(f)][1:])


def is_squarefree(f, p) -> bool:
    f = reduce(f, p)
    return len(gcd(f, derivative(f, p), p)) == 1


def distinct_degree_pattern(f, p) -> list[int]:
    """Degrees of the irreducible factors of a squarefree f mod p, sorted."""
    f = monic(reduce(f, p), p)
    degrees: list[int] = []
    x = [0, 1]
    h = x
    d = 0
    while len(f) - 1 >= 2 * (d + 1):
        d += 1
        h = powmod(h, p, f, p)
        g = gcd(f, sub(h, x, p), p)
        if len(g) > 1:
            k = (len(g) - 1) // d
            degrees += [d] * k
            f = divmod_(f, g, p)[0]
            h = mod(h, f, p)
    if len(f) > 1:
        degrees.append(len(f) - 1)
    return sorted(degrees)


def roots(f, p, seed: int = 1) -> list[int]:
    """All roots in F_p of f, with multiplicity ignored, sorted."""
    f = monic(reduce(f, p), p)
    if len(f) <= 1:
        return []
    # keep only the product of distinct linear factors
    g = gcd(f, sub(powmod([0, 1], p, f, p), [0, 1], p), p)
    out: list[int] = []
    rng = random.Random(seed)
    _split(g, p, rng, out)
    return sorted(out)


def _split(g, p, rng, out):
    deg = len(g) - 1
    if deg <= 0:
        return
    if deg == 1:
        out.append((-g[0]) * pow(g[1], -1, p) % p)
        return
    if p == 2:
        for r in (0, 1):
            if r not in out and not _eval(g, r, p):
                out.append(r)
        return
    while True:
        a = rng.randrange(p)
        h = powmod([a, 1], (p - 1) // 2, g, p)
        d = gcd(g, sub(h, [1], p), p)
        if 0 < len(d) - 1 < deg:
            _split(d, p, rng, out)
            _split(divmod_(g, d, p)[0], p, rng, out)
            return


def _eval(f, x, p):
    acc = 0
    for c in reversed(f):
        acc = (acc * x + c) % p
    return acc


# ---------------------------------------------------------------------------
# matrices over F_p (lists of rows)


def rref(rows, p):
    """Reduced row echelon form; returns (rows, pivot columns)."""
    M = [[x % p for x in r] for r in rows]
    pivots = []
    lead = 0
    ncols = len(M[0]) if M else 0
    for c in range(ncols):
        pr = next((i for i in range(lead, len(M)) if M[i][c]), None)
        if pr is None:
            continue
        M[lead], M[pr] = M[pr], M[lead]
        inv = pow(M[lead][c], -1, p)
        M[lead] = [x * inv % p for x in M[lead]]
        for i in range(len(M)):
            if i != lead and M[i][c]:
                f = M[i][c]
                M[i] = [(x - f * y) % p for x, y in zip(M[i], M[lead])]
        pivots.append(c)
        lead += 1
        if lead == len(M):
            break
    return M[:lead], pivots


def nullspace(A, p):
    """Basis of {x : A x = 0} for a square or rectangular A."""
    n = len(A[0])
    R, piv = rref(A, p)
    free = [c for c in range(n) if c not in piv]
    basis = []
    for f in free:
        v = [0] * n
        v[f] = 1
        for r, c in zip(R, piv):
            v[c] = (-r[f]) % p
        basis.append(v)
    return basis


def charpoly(A, p):
    """Characteristic polynomial of A mod p (monic, low to high) via Hessenberg form."""
    n = len(A)
    H = [[x % p for x in r] for r in A]
    for m in range(1, n - 1):
        i = next((i for i in range(m, n) if H[i][m - 1]), None)
        if i is None:
            continue
        if i != m:
            H[i], H[m] = H[m], H[i]
            for row in H:
                row[i], row[m] = row[m], row[i]
        inv = pow(H[m][m - 1], -1, p)
        for i in range(m + 1, n):
            u = H[i][m - 1] * inv % p
            if u:
                H[i] = [(a - u * b) % p for a, b in zip(H[i], H[m])]
                for row in H:
                    row[m] = (row[m] + u * row[i]) % p
    # recurrence on leading principal minors (1-indexed h)
    h = lambda i, j: H[i - 1][j - 1]
    P = [[1]]
    for m in range(1, n + 1):
        cur = mul([(-h(m, m)) % p, 1], P[m - 1], p) if P[m - 1] else []
        prod = 1
        for i in range(1, m):
            prod = prod * h(m - i + 1, m - i) % p
            coef = h(m - i, m) * prod % p
            if coef:
                cur = sub(cur, [c * coef for c in P[m - i - 1]], p)
        P.append(cur)
    out = P[n]
    return out + [0] * (n + 1 - len(out)) if len(out) < n + 1 else out
