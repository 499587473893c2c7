"""Small finite fields GF(q) for the catalog constructors.

Elements are the integers 0..q-1, read as base-p digit vectors (the
coefficients of a polynomial in a root of a fixed primitive polynomial).
Multiplication goes through discrete log tables, so q must stay small.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product


def prime_power(q: int) -> tuple[int, int] | None:
    """Return (p, n) with q = p**n, or None."""
    if q < 2:
        return None
    p = 2
    while p * p <= q and q % p:
        p += 1
    if q % p:
        p = q
    n, r = 0, q
    while r % p == 0:
        r //= p
        n += 1
    return (p, n) if r == 1 else None


class GF:
    def __init__(self, q: int):
        pp = prime_power(q)
        if pp is None:
            raise ValueError(f"{q} is not a prime power")
        self.q = q
        self.p, self.n = pp
        self.modulus = self._find_primitive_polynomial()
        self._build_tables()

    def _vec(self, a: int) -> list[int]:
        out = []
        for _ in range(self.n):
            out.append(a % self.p)
            a //= self.p
        return out

    def _int(self, v) -> int:
        a = 0
        for c in reversed(v):
            a = a * self.p + c % self.p
        return a

    def _times_x(self, v: list[int], f: tuple[int, ...]) -> list[int]:
        # multiply by x modulo the monic polynomial f (coefficients low to high, length n+1)
        p, n = self.p, self.n
        lead = v[-1]
        w = [0] + v[:-1]
        return [(w[k] - lead * f[k]) % p for k in range(n)]

    def _find_primitive_polynomial(self) -> tuple[int, ...]:
        p, n, q = self.p, self.n, self.q
        if n == 1:
            # x - g for the least primitive root g
            for g in range(1, p):
                if _mult_order(g, p) == p - 1:
                    return ((-g) % p, 1)
            return (0, 1)  # p == 2: x is not invertible-free, handled below
        for tail in product(range(p), repeat=n):
            f = tail + (1,)
            if f[0] == 0:
                continue
            v = [0] * n
            v[0] = 1
            seen = 0
            for k in range(1, q):
                v = self._times_x(v, f)
                if v == [1] + [0] * (n - 1):
                    seen = k
                    break
            if seen == q - 1:
                return f
        raise RuntimeError("no primitive polynomial found")

    def _build_tables(self) -> None:
        p, n, q = self.p, self.n, self.q
        exp = []
        if n == 1:
            g = (-self.modulus[0]) % p if p > 2 else 1
            x = 1
            for _ in range(q - 1):
                exp.append(x)
                x = x * g % p
        else:
            v = [1] + [0] * (n - 1)
            for _ in range(q - 1):
                exp.append(self._int(v))
                v = self._times_x(v, self.modulus)
        self.exp = exp
        self.log = {a: k for k, a in enumerate(exp)}
        if len(self.log) != q - 1:
            raise RuntimeError("generator is not primitive")
        self.generator = exp[1] if q > 2 else 1

    def add(self, a: int, b: int) -> int:
        if self.n == 1:
            return (a + b) % self.p
        va, vb = self._vec(a), self._vec(b)
        return self._int([x + y for x, y in zip(va, vb)])

    def neg(self, a: int) -> int:
        if self.n == 1:
            return (-a) % self.p
        return self._int([-x for x in self._vec(a)])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self.exp[(self.log[a] + self.log[b]) % (self.q - 1)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return self.exp[(-self.log[a]) % (self.q - 1)]

    def pow(self, a: int, k: int) -> int:
        if a == 0:
            return 0 if k else 1
        return self.exp[(self.log[a] * k) % (self.q - 1)]

    def is_square(self, a: int) -> bool:
        return a != 0 and (self.p == 2 or self.log[a] % 2 == 0)

    def elements(self) -> range:
        return range(self.q)


def _mult_order(g: int, p: int) -> int:
    x, k = g % p, 1
    while x != 1:
        x = x * g % p
        k += 1
        if k > p:
            return 0
    return k


@lru_cache(maxsize=None)
def field(q: int) -> GF:
    return GF(q)
