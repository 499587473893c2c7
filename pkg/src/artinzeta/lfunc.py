"""Euler factors of Artin L-functions over Q for a few concrete Galois fields.

A field is given by a Galois group acting on the roots of a defining
polynomial and a rule sending an unramified prime p to its Frobenius
class.  Local factors are the reciprocal polynomials det(1 - Frob T) on
the representation, built from the power sums chi(Frob^k) with Newton's
identities; T stands for p^-s.  At ramified primes the representation is
cut down to inertia invariants, whose power sums are averages of chi over
the coset Frob^k * I.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from math import gcd
from typing import Callable, Sequence

from . import fpoly
from .chartab import ClassFunction, character_table, induce, trivial_character, regular_character
from .cyclo import Cyclotomic
from .groups import FiniteGroup, Subgroup, cycle_type

ZERO = Cyclotomic.rational(0)
ONE = Cyclotomic.rational(1)


class LFunctionError(Exception):
    pass


class RamifiedPrime(LFunctionError):
    pass


class AmbiguousCycleType(LFunctionError):
    pass


class FieldMismatch(LFunctionError):
    pass


class MissingRamifiedData(LFunctionError):
    pass


# ---------------------------------------------------------------------------
# polynomials in T with cyclotomic coefficients


def poly_trim(f: list) -> list:
    f = list(f)
    while f and f[-1].is_zero():
        f.pop()
    return f


def poly_mul(f: Sequence, g: Sequence) -> list:
    if not f or not g:
        return []
    out = [ZERO] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a.is_zero():
            continue
        for j, b in enumerate(g):
            if not b.is_zero():
                out[i + j] = out[i + j] + a * b
    return poly_trim(out)


def poly_pow(f: Sequence, n: int) -> list:
    out = [ONE]
    for _ in range(n):
        out = poly_mul(out, f)
    return out


def poly_product(polys) -> list:
    out = [ONE]
    for f in polys:
        out = poly_mul(out, f)
    return out


def poly_str(f: Sequence) -> str:
    if not f:
        return "0"
    parts = []
    for k, c in enumerate(f):
        if c.is_zero():
            continue
        mono = "" if k == 0 else ("T" if k == 1 else f"T^{k}")
        if k and c == 1:
            parts.append(mono)
        elif k and c == -1:
            parts.append("-" + mono)
        else:
            coef = repr(c)
            if k and (" " in coef):
                coef = f"({coef})"
            parts.append(coef + ("*" + mono if mono else ""))
    return " + ".join(parts).replace("+ -", "- ")


def _binom(k: int, f: int, sign: Cyclotomic) -> list:
    """1 - sign * T^f"""
    out = [ONE] + [ZERO] * f
    out[f] = out[f] - sign
    return poly_trim(out)


@dataclass(frozen=True)
class LocalFactor:
    p: int
    coeffs: tuple  # reciprocal polynomial, constant term 1
    inverted: bool = True  # the L-factor is 1 / polynomial

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __str__(self):
        return poly_str(self.coeffs)


# ---------------------------------------------------------------------------
# fields


@dataclass
class RamifiedData:
    inertia: frozenset  # element indices of an inertia group
    frobenius: int  # element index of a Frobenius lift


@dataclass
class GaloisNumberField:
    name: str
    poly: tuple  # monic integer polynomial, low to high
    group: FiniteGroup
    ramified: dict
    discriminant: int
    signature: tuple
    frobenius_rule: Callable[[int], int] | None = None  # p -> element index; None means cycle type
    subfields: dict = field(default_factory=dict)
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        if self.frobenius_rule is None:
            types = [cycle_type(self.group.elements[c.rep]) for c in self.group.classes]
            if len(set(types)) != len(types):
                raise AmbiguousCycleType(f"{self.name}: cycle type does not determine the Frobenius class")
            self._type_to_class = {t: k for k, t in enumerate(types)}

    @property
    def degree(self) -> int:
        return self.group.order

    def zeta_character(self) -> ClassFunction:
        return regular_character(self.group)

    def cycle_type_to_class(self) -> dict:
        return dict(self._type_to_class)


@dataclass
class SubfieldView:
    """The fixed field of H inside a Galois field, seen through the parent."""

    name: str
    parent: GaloisNumberField
    subgroup: Subgroup
    poly: tuple
    discriminant: int
    signature: tuple

    @property
    def degree(self) -> int:
        return self.parent.group.order // self.subgroup.order

    @property
    def group(self) -> FiniteGroup:
        return self.parent.group

    @property
    def ramified(self) -> dict:
        return self.parent.ramified

    def zeta_character(self) -> ClassFunction:
        return induce(self.subgroup, trivial_character(self.subgroup.group))


@dataclass
class Subfield:
    """Arithmetic description of a subfield L^H used for induction checks.

    ``local(p, psi)`` returns the subfield-side reciprocal polynomial for a
    linear character psi of H, computed from residue degrees and Frobenius
    data in L^H itself.
    """

    name: str
    subgroup: Subgroup
    local: Callable[[int, ClassFunction], list]


def _legendre(a: int, p: int) -> int:
    a %= p
    if a == 0:
        return 0
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


def _cyclic_generator_value(psi: ClassFunction, perm) -> Cyclotomic:
    H = psi.group
    return psi.values[H.class_of[H.index[tuple(perm)]]]


@lru_cache(maxsize=None)
def x3m2_splitting_field() -> GaloisNumberField:
    # roots r_i = w^i * 2^(1/3); sigma multiplies by w, tau is complex conjugation
    sigma, tau = (1, 2, 0), (0, 2, 1)
    G = FiniteGroup([sigma, tau])
    e, s, s2 = G.index[(0, 1, 2)], G.index[sigma], G.index[(2, 0, 1)]
    ramified = {
        2: RamifiedData(frozenset([e, s, s2]), G.index[tau]),
        3: RamifiedData(frozenset(range(G.order)), e),
    }
    F = GaloisNumberField("x3m2split", (-2, 0, 0, 1), G, ramified, -34992, (0, 3))
    H_c = G.subgroup([G.index[tau]])
    H_q = G.subgroup([s])

    def local_cbrt2(p, psi):
        nontrivial = not all(v == 1 for v in psi.values)
        out = [ONE]
        for f in factor_pattern_mod_p(F.poly, p):
            val = 1
            if nontrivial and f % 2 == 1:
                val = _legendre(-3, p)
            out = poly_mul(out, _binom(0, f, Cyclotomic.rational(val)))
        return out

    def local_sqrtm3(p, psi):
        if p % 3 == 2:
            return _binom(0, 2, ONE)
        g = next(g for g in range(2, p) if all(pow(g, (p - 1) // q, p) != 1 for q in _prime_factors(p - 1)))
        w = pow(g, (p - 1) // 3, p)
        c = pow(2, (p - 1) // 3, p)
        j = next(j for j in range(3) if pow(w, j, p) == c)
        z = _cyclic_generator_value(psi, sigma)
        return poly_mul(_binom(0, 1, z**j), _binom(0, 1, z ** ((3 - j) % 3)))

    F.subfields = {
        "q_cbrt2": Subfield("q_cbrt2", H_c, local_cbrt2),
        "q_sqrtm3": Subfield("q_sqrtm3", H_q, local_sqrtm3),
    }
    return F


def _prime_factors(n: int) -> list[int]:
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _abelian_field(name: str, n: int, residues: list[int], poly, disc: int, signature) -> GaloisNumberField:
    """Subfield-free abelian field: Gal = (Z/n)* restricted to ``residues``, acting on
    the roots zeta_n^a (a in residues) by multiplication."""
    pos = {a: i for i, a in enumerate(residues)}
    gens = [tuple(pos[(a * b) % n] for a in residues) for b in residues]
    G = FiniteGroup(gens, degree=len(residues))
    elem = {b: G.index[tuple(pos[(a * b) % n] for a in residues)] for b in residues}
    ramified = {p: RamifiedData(frozenset(range(G.order)), 0) for p in _prime_factors(n)}

    def rule(p):
        return elem[p % n]

    return GaloisNumberField(name, tuple(poly), G, ramified, disc, signature, rule)


def _residues(n: int) -> list[int]:
    return [a for a in range(1, n) if gcd(a, n) == 1]


@lru_cache(maxsize=None)
def get_field(name: str):
    if name == "x3m2split":
        return x3m2_splitting_field()
    if name == "q_cbrt2":
        L = x3m2_splitting_field()
        return SubfieldView("q_cbrt2", L, L.subfields["q_cbrt2"].subgroup, (-2, 0, 0, 1), -108, (1, 1))
    if name == "q_sqrtm3":
        return _abelian_field("q_sqrtm3", 3, [1, 2], (1, 1, 1), -3, (0, 1))
    if name == "q_i":
        return _abelian_field("q_i", 4, [1, 3], (1, 0, 1), -4, (0, 1))
    if name == "q_zeta8":
        return _abelian_field("q_zeta8", 8, [1, 3, 5, 7], (1, 0, 0, 0, 1), 256, (0, 2))
    if name.startswith("q_zeta"):
        p = int(name[6:])
        if p not in (5, 7, 11, 13):
            raise KeyError(name)
        disc = (-1) ** ((p - 1) // 2) * p ** (p - 2)
        return _abelian_field(name, p, _residues(p), tuple([1] * p), disc, (0, (p - 1) // 2))
    raise KeyError(f"unknown field {name!r}")


FIELD_NAMES = ["x3m2split", "q_cbrt2", "q_sqrtm3", "q_i", "q_zeta8", "q_zeta5", "q_zeta7", "q_zeta11", "q_zeta13"]


# ---------------------------------------------------------------------------
# Frobenius and local factors


def factor_pattern_mod_p(f: Sequence[int], p: int) -> list[int]:
    """Degrees of the irreducible factors of f mod p (sorted)."""
    fr = fpoly.reduce(list(f), p)
    if len(fr) != len(f) or not fpoly.is_squarefree(fr, p):
        raise RamifiedPrime(f"{p} divides the discriminant")
    return fpoly.distinct_degree_pattern(fr, p)


def _galois(F):
    return F.parent if isinstance(F, SubfieldView) else F


def frobenius_element(F, p: int) -> int:
    L = _galois(F)
    if p in L.ramified:
        raise RamifiedPrime(f"{p} is ramified in {L.name}")
    key = ("frob", p)
    if key not in L._cache:
        if L.frobenius_rule is not None:
            L._cache[key] = L.frobenius_rule(p)
        else:
            t = tuple(sorted(factor_pattern_mod_p(L.poly, p)))
            L._cache[key] = L.group.classes[L._type_to_class[t]].rep
    return L._cache[key]


def frobenius_class(F, p: int) -> int:
    L = _galois(F)
    return L.group.class_of[frobenius_element(L, p)]


def _newton(s: list) -> list:
    """Reciprocal polynomial prod(1 - a_i T) from power sums s[1..d]."""
    d = len(s) - 1
    e = [ONE]
    for k in range(1, d + 1):
        acc = ZERO
        for i in range(1, k + 1):
            term = e[k - i] * s[i]
            acc = acc + term if i % 2 == 1 else acc - term
        e.append(acc / k)
    return poly_trim([e[k] if k % 2 == 0 else -e[k] for k in range(d + 1)])


def _power_sums(chi: ClassFunction, g: int, d: int, inertia=None) -> list:
    G = chi.group
    s = [chi.degree]
    x = 0
    for _ in range(d):
        x = G.mul(x, g)
        if inertia is None:
            s.append(chi.values[G.class_of[x]])
        else:
            acc = ZERO
            for i in inertia:
                acc = acc + chi.values[G.class_of[G.mul(x, i)]]
            s.append(acc / len(inertia))
    return s


def local_factor(chi: ClassFunction, F, p: int) -> LocalFactor:
    L = _galois(F)
    if chi.group is not L.group:
        raise FieldMismatch("character is not on the field's Galois group")
    d = int(chi.degree)
    if p in L.ramified:
        data = L.ramified[p]
        coeffs = _newton(_power_sums(chi, data.frobenius, d, sorted(data.inertia)))
        return LocalFactor(p, tuple(coeffs))
    # unramified factors only depend on the Frobenius class
    k = L.group.class_of[frobenius_element(L, p)]
    key = ("lf", chi, k)
    if key not in L._cache:
        g = L.group.classes[k].rep
        L._cache[key] = tuple(_newton(_power_sums(chi, g, d)))
    return LocalFactor(p, L._cache[key])


# ---------------------------------------------------------------------------
# identities


@dataclass
class IdentityCheck:
    kind: str
    p: int
    passed: bool
    lhs: list
    rhs: list

    def row(self) -> tuple:
        return (self.p, self.passed, poly_str(self.lhs), poly_str(self.rhs))


IDENTITY_KINDS = ("additivity", "induction", "factorization", "regular", "grouped")


def check_local_identity(kind: str, F, p: int, data=None) -> IdentityCheck:
    L = _galois(F)
    G = L.group
    if p in L.ramified:
        raise RamifiedPrime(f"{p} is ramified in {L.name}")
    table = character_table(G)
    lf = lambda chi: list(local_factor(chi, L, p).coeffs)

    if kind == "additivity":
        pairs = [data] if data is not None else [(a, b) for a in table for b in table]
        lhs, rhs, ok = [ONE], [ONE], True
        for a, b in pairs:
            if a.group is not G or b.group is not G:
                raise FieldMismatch("characters are not on the field's Galois group")
            x, y = lf(a + b), poly_mul(lf(a), lf(b))
            ok &= x == y
            lhs, rhs = poly_mul(lhs, x), poly_mul(rhs, y)
        return IdentityCheck(kind, p, ok, lhs, rhs)

    if kind == "induction":
        if data is not None:
            cases = [data]
        else:
            cases = []
            for sf in L.subfields.values():
                for i, psi in enumerate(character_table(sf.subgroup.group)):
                    if psi.degree == 1:
                        cases.append((sf.name, i))
        lhs, rhs, ok = [ONE], [ONE], True
        for name, i in cases:
            if name not in L.subfields:
                raise FieldMismatch(f"{name} is not a built-in subfield of {L.name}")
            sf = L.subfields[name]
            psi = character_table(sf.subgroup.group)[i]
            ikey = ("ind", name, i)
            if ikey not in L._cache:
                L._cache[ikey] = induce(sf.subgroup, psi)
            x = lf(L._cache[ikey])
            y = sf.local(p, psi)
            ok &= x == y
            lhs, rhs = poly_mul(lhs, x), poly_mul(rhs, y)
        return IdentityCheck(kind, p, ok, lhs, rhs)

    if kind == "factorization":
        lhs = lf(regular_character(G))
        rhs = poly_product(poly_pow(lf(chi), int(chi.degree)) for chi in table)
        return IdentityCheck(kind, p, lhs == rhs, lhs, rhs)

    if kind == "regular":
        lhs = lf(regular_character(G))
        if L.frobenius_rule is None:
            f = 1
            for d in factor_pattern_mod_p(L.poly, p):
                f = f * d // gcd(f, d)
        else:
            f = G.element_order(frobenius_element(L, p))
        rhs = poly_pow(_binom(0, f, ONE), G.order // f)
        return IdentityCheck(kind, p, lhs == rhs, lhs, rhs)

    if kind == "grouped":
        lhs = lf(regular_character(G))
        by_degree: dict[int, list] = {}
        for chi in table:
            by_degree.setdefault(int(chi.degree), []).append(chi)
        rhs = [ONE]
        for n, chis in sorted(by_degree.items()):
            Ln = poly_product(lf(chi) for chi in chis)
            rhs = poly_mul(rhs, poly_pow(Ln, n))
        return IdentityCheck(kind, p, lhs == rhs, lhs, rhs)

    raise ValueError(f"unknown identity kind {kind!r}")


def check_aramata_local(F, p: int, decomposition) -> IdentityCheck:
    """(zeta_L / zeta_Q)^D against the product of induced factors to the powers D*lambda."""
    L = _galois(F)
    G = L.group
    D = 1
    for t in decomposition.terms:
        D = D * t.coefficient.denominator // gcd(D, t.coefficient.denominator)
    lf = lambda chi: list(local_factor(chi, L, p).coeffs)
    lhs = poly_pow(lf(regular_character(G)), D)
    rhs = poly_pow(lf(trivial_character(G)), D)
    for t in decomposition.terms:
        if t.induced.group is not G:
            raise FieldMismatch("decomposition is not on the field's Galois group")
        rhs = poly_mul(rhs, poly_pow(lf(t.induced), int(t.coefficient * D)))
    return IdentityCheck("aramata", p, lhs == rhs, lhs, rhs)


# ---------------------------------------------------------------------------
# Dirichlet series


@dataclass
class DirichletSeries:
    coefficients: list  # a_1 .. a_N at indices 0 .. N-1

    @property
    def N(self) -> int:
        return len(self.coefficients)

    def __getitem__(self, n: int):
        return self.coefficients[n - 1]

    def as_integers(self) -> list[int]:
        return [int(c) for c in self.coefficients]


def primes_up_to(n: int) -> list[int]:
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, int(n**0.5) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(sieve[i * i :: i]))
    return [i for i, v in enumerate(sieve) if v]


def _inverse_series(poly: list, k: int) -> list:
    """Coefficients of 1/poly up to T^k (poly has constant term 1)."""
    out = [ONE]
    for n in range(1, k + 1):
        acc = ZERO
        for j in range(1, min(n, len(poly) - 1) + 1):
            if not poly[j].is_zero():
                acc = acc - poly[j] * out[n - j]
        out.append(acc)
    return out


def dirichlet_coefficients(F, chi, N: int) -> DirichletSeries:
    """Coefficients a_1..a_N of L(s, chi) (chi = "zeta" selects the Dedekind zeta of F)."""
    if isinstance(chi, str):
        if chi != "zeta":
            raise ValueError(f"unknown selector {chi!r}")
        chi = F.zeta_character()
    L = _galois(F)
    local = {}
    for p in primes_up_to(N):
        k, q = 0, 1
        while q * p <= N:
            q *= p
            k += 1
        if p in L.ramified:
            if L.ramified[p] is None:
                raise MissingRamifiedData(f"no ramified data at {p}")
        local[p] = _inverse_series(list(local_factor(chi, L, p).coeffs), k)
    a = [ZERO] * (N + 1)
    a[1] = ONE
    # multiplicative assembly via smallest prime factor
    spf = list(range(N + 1))
    for p in primes_up_to(int(N**0.5) + 1):
        for m in range(p * p, N + 1, p):
            if spf[m] == m:
                spf[m] = p
    for n in range(2, N + 1):
        p = spf[n]
        m, k = n, 0
        while m % p == 0:
            m //= p
            k += 1
        a[n] = local[p][k] * a[m]
    return DirichletSeries([_simp(v) for v in a[1:]])


def _simp(v: Cyclotomic):
    return Cyclotomic.rational(v.to_fraction()) if v.is_rational() else v
