"""Exact arithmetic in cyclotomic fields Q(zeta_m).

An element of Q(zeta_m) is stored as a polynomial in zeta_m of degree
below phi(m), i.e. reduced modulo the m-th cyclotomic polynomial.  That
basis is canonical, so two elements of the same conductor are equal iff
their coefficient vectors are equal.  Mixed-conductor operations lift
both operands to the lcm of the conductors.

Coefficients are kept as integers over a single positive common
denominator, which keeps character-table arithmetic cheap.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm

import mpmath

__all__ = [
    "Cyclotomic",
    "E",
    "cyclotomic_polynomial",
    "euler_phi",
    "cyc_arith",
    "cyc_conjugate",
    "cyc_to_complex",
]


def _factorize(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


@lru_cache(maxsize=None)
def euler_phi(n: int) -> int:
    result = n
    for p in _factorize(n):
        result -= result // p
    return result


@lru_cache(maxsize=None)
def _moebius(n: int) -> int:
    f = _factorize(n)
    if any(e > 1 for e in f.values()):
        return 0
    return -1 if len(f) % 2 else 1


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int) -> tuple[int, ...]:
    """Coefficients of Phi_m, lowest degree first."""
    num = [-1] + [0] * (m - 1) + [1]  # x^m - 1
    for d in range(1, m):
        if m % d == 0:
            num = _exact_div(num, cyclotomic_polynomial(d))
    return tuple(num)


def _exact_div(a: list[int], b: tuple[int, ...]) -> list[int]:
    # b monic
    a = list(a)
    db = len(b) - 1
    q = [0] * (len(a) - db)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i]
        if c:
            q[i - db] = c
            for j in range(db + 1):
                a[i - db + j] -= c * b[j]
    assert not any(a[:db]), "inexact division"
    return q


@lru_cache(maxsize=None)
def _power_table(m: int) -> tuple[tuple[int, ...], ...]:
    """Row j is zeta_m^j written in the basis 1, zeta, ..., zeta^(phi-1)."""
    phi = euler_phi(m)
    cp = cyclotomic_polynomial(m)
    rows = []
    cur = [0] * phi
    cur[0] = 1
    for _ in range(m):
        rows.append(tuple(cur))
        lead = cur[-1]
        cur = [0] + cur[:-1]
        if lead:
            for k in range(phi):
                cur[k] -= lead * cp[k]
    return tuple(rows)


@lru_cache(maxsize=None)
def _trace_weights(m: int) -> tuple[Fraction, ...]:
    # normalized trace Tr(zeta_m^j) / phi(m) = mu(m/g) / phi(m/g), g = gcd(j, m)
    out = []
    for j in range(euler_phi(m)):
        g = gcd(j, m)
        out.append(Fraction(_moebius(m // g), euler_phi(m // g)))
    return tuple(out)


class Cyclotomic:
    """An element of Q(zeta_m) in canonical reduced form."""

    __slots__ = ("m", "_c", "_d")

    def __init__(self, m: int, coeffs, den: int = 1):
        # coeffs: integer vector of length phi(m), already reduced
        self.m = m
        self._c = tuple(coeffs)
        self._d = den
        self._normalize()

    def _normalize(self) -> None:
        d = self._d
        if d < 0:
            self._c = tuple(-x for x in self._c)
            d = -d
        g = d
        for x in self._c:
            if g == 1:
                break
            g = gcd(g, x)
        if g > 1:
            self._c = tuple(x // g for x in self._c)
            d //= g
        if not any(self._c):
            d = 1
        self._d = d

    # -- constructors ---------------------------------------------------
    @classmethod
    def rational(cls, value, m: int = 1) -> "Cyclotomic":
        value = Fraction(value)
        coeffs = [0] * euler_phi(m)
        coeffs[0] = value.numerator
        return cls(m, coeffs, value.denominator)

    @classmethod
    def root_of_unity(cls, m: int, k: int = 1) -> "Cyclotomic":
        return cls(m, _power_table(m)[k % m])

    @classmethod
    def from_exponents(cls, m: int, terms) -> "Cyclotomic":
        """Build sum of c * zeta_m^e from (e, c) pairs (any exponents)."""
        phi = euler_phi(m)
        table = _power_table(m)
        den = 1
        terms = [(e, Fraction(c)) for e, c in terms]
        for _, c in terms:
            den = lcm(den, c.denominator)
        acc = [0] * phi
        for e, c in terms:
            w = c.numerator * (den // c.denominator)
            if not w:
                continue
            row = table[e % m]
            for k in range(phi):
                if row[k]:
                    acc[k] += w * row[k]
        return cls(m, acc, den)

    # -- structure ------------------------------------------------------
    def lift(self, M: int) -> "Cyclotomic":
        if M == self.m:
            return self
        if M % self.m:
            raise ValueError(f"conductor {self.m} does not divide {M}")
        step = M // self.m
        phi = euler_phi(M)
        table = _power_table(M)
        acc = [0] * phi
        for j, c in enumerate(self._c):
            if c:
                row = table[(j * step) % M]
                for k in range(phi):
                    if row[k]:
                        acc[k] += c * row[k]
        return Cyclotomic(M, acc, self._d)

    def terms(self) -> list[tuple[int, Fraction]]:
        return [(j, Fraction(c, self._d)) for j, c in enumerate(self._c) if c]

    def is_zero(self) -> bool:
        return not any(self._c)

    def is_rational(self) -> bool:
        return not any(self._c[1:])

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return Fraction(self._c[0], self._d)

    def is_integer(self) -> bool:
        return self.is_rational() and self._d == 1

    def __int__(self) -> int:
        if not self.is_integer():
            raise ValueError(f"{self!r} is not a rational integer")
        return self._c[0]

    # -- arithmetic -----------------------------------------------------
    @staticmethod
    def _coerce(x) -> "Cyclotomic":
        if isinstance(x, Cyclotomic):
            return x
        if isinstance(x, (int, Fraction)):
            return Cyclotomic.rational(x)
        return NotImplemented

    def _common(self, other: "Cyclotomic"):
        M = lcm(self.m, other.m)
        return self.lift(M), other.lift(M), M

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b, M = self._common(other)
        d = lcm(a._d, b._d)
        fa, fb = d // a._d, d // b._d
        return Cyclotomic(M, [x * fa + y * fb for x, y in zip(a._c, b._c)], d)

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(self.m, [-x for x in self._c], self._d)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Fraction(other)
            return Cyclotomic(
                self.m, [x * other.numerator for x in self._c], self._d * other.denominator
            )
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if other.is_rational():
            return self * other.to_fraction()
        if self.is_rational():
            return other * self.to_fraction()
        a, b, M = self._common(other)
        phi = euler_phi(M)
        prod = [0] * (2 * phi - 1)
        for i, x in enumerate(a._c):
            if x:
                for j, y in enumerate(b._c):
                    if y:
                        prod[i + j] += x * y
        acc = prod[:phi]
        table = _power_table(M)
        for e in range(phi, 2 * phi - 1):
            c = prod[e]
            if c:
                row = table[e % M]
                for k in range(phi):
                    if row[k]:
                        acc[k] += c * row[k]
        return Cyclotomic(M, acc, a._d * b._d)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Cyclotomic):
            if not other.is_rational():
                raise TypeError("division only by rational scalars")
            other = other.to_fraction()
        other = Fraction(other)
        if not other:
            raise ZeroDivisionError("division by zero")
        return self * (1 / other)

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers unsupported")
        result = Cyclotomic.rational(1, self.m)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def galois(self, a: int) -> "Cyclotomic":
        """Apply the automorphism zeta_m -> zeta_m^a (a coprime to m)."""
        if gcd(a, self.m) != 1:
            raise ValueError("galois exponent must be coprime to the conductor")
        return Cyclotomic.from_exponents(
            self.m, [(j * a, Fraction(c, self._d)) for j, c in enumerate(self._c) if c]
        )

    def conjugate(self) -> "Cyclotomic":
        if self.is_rational():
            return self
        return self.galois(-1)

    # -- comparison -----------------------------------------------------
    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return False
        if self.m == other.m:
            return self._d == other._d and self._c == other._c
        a, b, _ = self._common(other)
        return a._d == b._d and a._c == b._c

    def __hash__(self):
        # normalized trace does not depend on the conductor used
        w = _trace_weights(self.m)
        tr = sum((w[j] * c for j, c in enumerate(self._c) if c), Fraction(0))
        return hash(tr / self._d)

    # -- output ---------------------------------------------------------
    def to_json(self) -> dict:
        return {"m": self.m, "terms": [[e, f"{c.numerator}/{c.denominator}"] for e, c in self.terms()]}

    @classmethod
    def from_json(cls, data: dict) -> "Cyclotomic":
        return cls.from_exponents(int(data["m"]), [(int(e), Fraction(c)) for e, c in data["terms"]])

    def to_mpc(self, prec: int = 53) -> mpmath.mpc:
        with mpmath.workprec(prec + 10):
            z = mpmath.mpc(0)
            for e, c in self.terms():
                z += mpmath.mpf(c.numerator) / c.denominator * mpmath.expjpi(mpmath.mpf(2 * e) / self.m)
            return +z

    def __complex__(self):
        return complex(self.to_mpc())

    def __repr__(self):
        if self.is_zero():
            return "0"
        parts = []
        for e, c in self.terms():
            if e == 0:
                parts.append(str(c))
            else:
                coef = "" if c == 1 else ("-" if c == -1 else f"{c}*")
                parts.append(f"{coef}E({self.m})^{e}")
        return " + ".join(parts).replace("+ -", "- ")


def E(m: int, k: int = 1) -> Cyclotomic:
    """The root of unity exp(2 pi i k / m)."""
    return Cyclotomic.root_of_unity(m, k)


def cyc_arith(a: Cyclotomic, b: Cyclotomic, op: str) -> Cyclotomic:
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown op {op!r}")


def cyc_conjugate(a: Cyclotomic) -> Cyclotomic:
    return a.conjugate()


def cyc_to_complex(a: Cyclotomic, precision: int = 64):
    """Interval enclosure (mpmath.iv.mpc) of the standard complex embedding."""
    if precision < 64:
        raise ValueError("precision must be at least 64 bits")
    iv = mpmath.iv
    old = iv.prec
    iv.prec = precision
    try:
        re = iv.mpf(0)
        im = iv.mpf(0)
        for e, c in a.terms():
            angle = 2 * iv.pi * e / a.m
            coef = iv.mpf(c.numerator) / c.denominator
            re += coef * iv.cos(angle)
            im += coef * iv.sin(angle)
        return iv.mpc(re, im)
    finally:
        iv.prec = old
