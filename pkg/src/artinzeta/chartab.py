"""Exact character tables and the character-theoretic toolkit.

Tables are computed by the Dixon-Schneider method: the class sums span the
centre of the group algebra, their structure constants give commuting
matrices whose common eigenvectors (over F_l for a prime l = 1 mod exp(G))
are the central characters, and each character value is recovered from its
eigenvalue multiplicities by an inverse discrete Fourier transform.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt
from typing import Sequence

from . import fpoly
from .cyclo import Cyclotomic
from .groups import (
    BoundExceeded,
    FiniteGroup,
    GroupError,
    Subgroup,
    is_solvable,
    is_supersolvable,
    normal_subgroups,
    quotient,
    subgroups_up_to_conjugacy,
    sylow_subgroup,
)

log = logging.getLogger(__name__)

ZERO = Cyclotomic.rational(0)
ONE = Cyclotomic.rational(1)


class CharacterError(Exception):
    pass


class InternalInconsistency(CharacterError):
    pass


class GroupMismatch(CharacterError):
    pass


class NotASubgroup(CharacterError):
    pass


class CliffordViolation(CharacterError):
    pass


def _simplify(v: Cyclotomic) -> Cyclotomic:
    return Cyclotomic.rational(v.to_fraction()) if v.m > 1 and v.is_rational() else v


@dataclass(frozen=True, eq=False)
class ClassFunction:
    group: FiniteGroup
    values: tuple

    def __post_init__(self):
        if len(self.values) != len(self.group.classes):
            raise ValueError("class function length differs from the number of classes")
        object.__setattr__(
            self, "values", tuple(_simplify(v if isinstance(v, Cyclotomic) else Cyclotomic.rational(v)) for v in self.values)
        )

    @property
    def degree(self) -> Cyclotomic:
        return self.values[0]

    def _check(self, other: "ClassFunction"):
        if not isinstance(other, ClassFunction):
            return NotImplemented
        if other.group is not self.group:
            raise GroupMismatch("class functions live on different groups")
        return other

    def __add__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return ClassFunction(self.group, tuple(a + b for a, b in zip(self.values, other.values)))

    def __sub__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return ClassFunction(self.group, tuple(a - b for a, b in zip(self.values, other.values)))

    def __neg__(self):
        return ClassFunction(self.group, tuple(-a for a in self.values))

    def __mul__(self, other):
        if isinstance(other, ClassFunction):
            self._check(other)
            return ClassFunction(self.group, tuple(a * b for a, b in zip(self.values, other.values)))
        return ClassFunction(self.group, tuple(a * other for a in self.values))

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, ClassFunction) and other.group is self.group and self.values == other.values

    def __hash__(self):
        return hash(self.values)

    def conjugate(self) -> "ClassFunction":
        return ClassFunction(self.group, tuple(v.conjugate() for v in self.values))

    def is_zero(self) -> bool:
        return all(v.is_zero() for v in self.values)

    def is_linear(self) -> bool:
        return self.values[0] == 1

    def to_json(self) -> list:
        return [v.to_json() for v in self.values]

    def __repr__(self):
        return f"ClassFunction({list(self.values)!r})"


@dataclass
class CharacterTable:
    group: FiniteGroup
    irreducibles: list[ClassFunction]
    prime: int

    @property
    def class_order(self) -> list[int]:
        return [c.rep for c in self.group.classes]

    @property
    def degrees(self) -> list[int]:
        return [int(chi.degree) for chi in self.irreducibles]

    def __len__(self):
        return len(self.irreducibles)

    def __getitem__(self, i) -> ClassFunction:
        return self.irreducibles[i]

    def __iter__(self):
        return iter(self.irreducibles)

    def to_json(self) -> dict:
        G = self.group
        return {
            "classes": [
                {"representative": list(G.elements[c.rep]), "size": c.size, "order": G.element_order(c.rep)}
                for c in G.classes
            ],
            "degrees": self.degrees,
            "values": [chi.to_json() for chi in self.irreducibles],
        }


@dataclass
class Decomposition:
    multiplicities: list
    is_genuine: bool

    def support(self) -> list[int]:
        return [i for i, m in enumerate(self.multiplicities) if m != 0]


# ---------------------------------------------------------------------------
# Dixon-Schneider


def _is_prime(n: int) -> bool:
    return n > 1 and all(n % d for d in range(2, isqrt(n) + 1))


def dixon_prime(order: int, exponent: int) -> int:
    bound = 2 * isqrt(order) + 2
    ell = exponent + 1
    while ell <= bound or not _is_prime(ell):
        ell += exponent
    return ell


def _primitive_root(ell: int) -> int:
    phi = ell - 1
    qs = [q for q in range(2, phi + 1) if phi % q == 0 and _is_prime(q)]
    for g in range(2, ell):
        if all(pow(g, phi // q, ell) != 1 for q in qs):
            return g
    return 1


def _inverse_classes(G: FiniteGroup) -> list[int]:
    return [G.class_of[G.inv[c.rep]] for c in G.classes]


def _class_matrix(G: FiniteGroup, j: int) -> list[list[int]]:
    """M[i][k] = #{x in C_j : x^-1 z_k in C_i}, z_k the representative of C_k."""
    r = len(G.classes)
    M = [[0] * r for _ in range(r)]
    inv, cls = G.inv, G.class_of
    members = G.classes[j].members
    for k, ck in enumerate(G.classes):
        z = ck.rep
        for x in members:
            M[cls[G.mul(inv[x], z)]][k] += 1
    return M


def _split_spaces(G: FiniteGroup, ell: int) -> list[list[int]]:
    r = len(G.classes)
    spaces = [[[1 if i == k else 0 for i in range(r)] for k in range(r)]]
    for j in range(1, r):
        if all(len(S) == 1 for S in spaces):
            break
        M = None
        nxt = []
        for S in spaces:
            if len(S) == 1:
                nxt.append(S)
                continue
            if M is None:
                M = _class_matrix(G, j)
            S, piv = fpoly.rref(S, ell)
            d = len(S)
            images = [[sum(M[i][k] * s[k] for k in range(r)) % ell for i in range(r)] for s in S]
            A = [[images[t][piv[s]] for t in range(d)] for s in range(d)]
            eig = fpoly.roots(fpoly.charpoly(A, ell), ell)
            if len(eig) == 1:
                nxt.append(S)
                continue
            for lam in eig:
                B = [[(A[s][t] - (lam if s == t else 0)) % ell for t in range(d)] for s in range(d)]
                coords = fpoly.nullspace(B, ell)
                sub = [[sum(c[t] * S[t][i] for t in range(d)) % ell for i in range(r)] for c in coords]
                nxt.append(fpoly.rref(sub, ell)[0])
        spaces = nxt
    if any(len(S) != 1 for S in spaces) or len(spaces) != r:
        raise InternalInconsistency("class algebra did not split into one-dimensional eigenspaces")
    return [S[0] for S in spaces]


def _value_key(v: Cyclotomic, e: int):
    if v.is_rational():
        return (0, -v.to_fraction())
    return (1, tuple(c for _, c in sorted(v.lift(e).terms())), tuple(e for e, _ in v.lift(e).terms()))


def character_table(G: FiniteGroup) -> CharacterTable:
    cached = getattr(G, "_character_table", None)
    if cached is not None:
        return cached
    r = len(G.classes)
    e = G.exponent
    ell = dixon_prime(G.order, e)
    z = pow(_primitive_root(ell), (ell - 1) // e, ell)
    invc = _inverse_classes(G)
    sizes = G.class_sizes
    vectors = _split_spaces(G, ell)

    # power maps: powclass[k][j] = class of rep_k ** j
    powclass = []
    for c in G.classes:
        o = G.element_order(c.rep)
        row, x = [], 0
        for _ in range(o):
            row.append(G.class_of[x])
            x = G.mul(x, c.rep)
        powclass.append(row)

    rows = []
    for w in vectors:
        w0 = pow(w[0], -1, ell)
        w = [x * w0 % ell for x in w]
        s = sum(w[k] * w[invc[k]] * pow(sizes[k], -1, ell) for k in range(r)) % ell
        dsq = G.order * pow(s, -1, ell) % ell
        d = next((d for d in range(1, isqrt(G.order) + 1) if d * d % ell == dsq), None)
        if d is None:
            raise InternalInconsistency("no degree matches the modular norm")
        chi_mod = [d * w[k] * pow(sizes[k], -1, ell) % ell for k in range(r)]
        values = []
        for k, c in enumerate(G.classes):
            o = len(powclass[k])
            zo = pow(z, e // o, ell)
            zinv = pow(zo, -1, ell)
            oinv = pow(o, -1, ell)
            terms = []
            for a in range(o):
                m = sum(chi_mod[powclass[k][j]] * pow(zinv, a * j, ell) for j in range(o)) * oinv % ell
                if m > ell // 2:
                    raise InternalInconsistency("eigenvalue multiplicity out of range")
                if m:
                    terms.append((a, m))
            values.append(Cyclotomic.from_exponents(o, terms))
        rows.append(ClassFunction(G, tuple(values)))

    def key(chi):
        trivial = all(v == 1 for v in chi.values)
        return (int(chi.degree), not trivial, tuple(_value_key(v, e) for v in chi.values))

    rows.sort(key=key)
    table = CharacterTable(G, rows, ell)
    _verify_orthogonality(G, table, invc)
    G._character_table = table
    return table


def _verify_orthogonality(G: FiniteGroup, table: CharacterTable, invc: list[int]) -> None:
    r = len(G.classes)
    sizes = G.class_sizes
    X = [chi.values for chi in table]
    for a in range(r):
        for b in range(a, r):
            s = sum((sizes[k] * (X[a][k] * X[b][invc[k]]) for k in range(r)), ZERO)
            if s != (G.order if a == b else 0):
                raise InternalInconsistency(f"row orthogonality fails for ({a}, {b})")
    cent = G.centralizer_orders
    for k in range(r):
        for l in range(k, r):
            s = sum((X[i][k] * X[i][invc[l]] for i in range(r)), ZERO)
            if s != (cent[k] if k == l else 0):
                raise InternalInconsistency(f"column orthogonality fails for ({k}, {l})")
    if sum(d * d for d in table.degrees) != G.order:
        raise InternalInconsistency("degree sum of squares differs from the group order")


# ---------------------------------------------------------------------------
# basic characters and operations


def trivial_character(G: FiniteGroup) -> ClassFunction:
    return ClassFunction(G, tuple([ONE] * len(G.classes)))


def regular_character(G: FiniteGroup) -> ClassFunction:
    return ClassFunction(G, tuple([Cyclotomic.rational(G.order)] + [ZERO] * (len(G.classes) - 1)))


def class_function(G: FiniteGroup, values: Sequence) -> ClassFunction:
    return ClassFunction(G, tuple(values))


def inner_product(a: ClassFunction, b: ClassFunction) -> Cyclotomic:
    if a.group is not b.group:
        raise GroupMismatch("class functions live on different groups")
    G = a.group
    s = ZERO
    for k, c in enumerate(G.classes):
        x, y = a.values[k], b.values[k].conjugate()
        if not x.is_zero() and not y.is_zero():
            s = s + x * y * c.size
    return _simplify(s / G.order)


def _require_subgroup(H: Subgroup, G: FiniteGroup):
    if not isinstance(H, Subgroup) or H.parent is not G:
        raise NotASubgroup("H is not a subgroup of the character's group")


def induce(H: Subgroup, psi: ClassFunction) -> ClassFunction:
    if psi.group is not H.group:
        raise NotASubgroup("psi is not a class function on H")
    G = H.parent
    Hg = H.group
    acc = [ZERO] * len(G.classes)
    for d, (cd, k) in enumerate(zip(Hg.classes, H.class_fusion)):
        v = psi.values[d]
        if not v.is_zero():
            acc[k] = acc[k] + v * cd.size
    cent = G.centralizer_orders
    return ClassFunction(G, tuple(acc[k] * Fraction(cent[k], H.order) for k in range(len(acc))))


def restrict(chi: ClassFunction, H: Subgroup) -> ClassFunction:
    _require_subgroup(H, chi.group)
    return ClassFunction(H.group, tuple(chi.values[k] for k in H.class_fusion))


def _as_number(v: Cyclotomic):
    return v.to_fraction() if v.is_rational() else v


def decompose(f: ClassFunction) -> Decomposition:
    table = character_table(f.group)
    mult = [_as_number(inner_product(f, chi)) for chi in table]
    genuine = all(isinstance(m, Fraction) and m.denominator == 1 and m >= 0 for m in mult)
    return Decomposition(mult, genuine)


# ---------------------------------------------------------------------------
# monomiality


@dataclass
class MonomialWitness:
    subgroup: Subgroup
    linear_index: int  # index into character_table(subgroup.group)

    def character(self) -> ClassFunction:
        return character_table(self.subgroup.group)[self.linear_index]


@dataclass
class MonomialResult:
    monomial: bool
    witnesses: dict[int, MonomialWitness] = field(default_factory=dict)
    offending: int | None = None


def monomial_source(chi: ClassFunction, subgroups: Sequence[Subgroup]) -> MonomialWitness | None:
    d = int(chi.degree)
    G = chi.group
    for H in subgroups:
        if H.order * d != G.order:
            continue
        res = restrict(chi, H)
        for i, lam in enumerate(character_table(H.group)):
            if lam.degree != 1:
                break
            if inner_product(res, lam) == 1:
                return MonomialWitness(H, i)
    return None


def is_monomial(G: FiniteGroup, limit: int = 500) -> MonomialResult:
    """Exhaustive search for a linear source of every irreducible."""
    table = character_table(G)
    subs = sorted(subgroups_up_to_conjugacy(G, limit), key=lambda H: -H.order)
    result = MonomialResult(True)
    for i, chi in enumerate(table):
        w = monomial_source(chi, subs)
        if w is None:
            return MonomialResult(False, result.witnesses, i)
        result.witnesses[i] = w
    return result


def huppert_criterion(G: FiniteGroup, limit: int = 500) -> Subgroup | None:
    """A normal N with N solvable, G/N supersolvable and abelian Sylows in N."""
    for N in normal_subgroups(G):
        if N.order == G.order:
            continue
        if not is_solvable(N.group):
            continue
        try:
            Q = G if N.order == 1 else quotient(G, N)[0]
            if not is_supersolvable(Q, limit):
                continue
        except BoundExceeded:
            continue
        ok = True
        n = N.order
        p = 2
        while n > 1 and ok:
            if n % p == 0:
                while n % p == 0:
                    n //= p
                ok = sylow_subgroup(N.group, p).group.is_abelian()
            p += 1
        if ok:
            return N
    return None


def clifford_split(chi: ClassFunction, N: Subgroup) -> list[tuple[int, int]]:
    if not N.is_normal():
        raise GroupError("N is not normal")
    dec = decompose(restrict(chi, N))
    table = character_table(N.group)
    parts = [(i, int(m)) for i, m in enumerate(dec.multiplicities) if m != 0]
    degrees = {table.degrees[i] for i, _ in parts}
    mults = {m for _, m in parts}
    if not dec.is_genuine or len(degrees) != 1 or len(mults) != 1:
        raise CliffordViolation(f"restriction constituents are not uniform: {parts}")
    if degrees.pop() * mults.pop() * len(parts) != int(chi.degree):
        raise CliffordViolation("constituent degrees do not add up")
    return parts


@dataclass
class ThetaResult:
    genuine: bool
    witness: int | None = None
    theta: ClassFunction | None = None


def theta_is_character(G: FiniteGroup, orders) -> ThetaResult:
    table = character_table(G)
    if isinstance(orders, dict):
        orders = [orders.get(i, 0) for i in range(len(table))]
    if len(orders) != len(table):
        raise ValueError("one order per irreducible expected")
    theta = ClassFunction(G, tuple([ZERO] * len(table)))
    for n, chi in zip(orders, table):
        if n:
            theta = theta + chi * int(n)
    dec = decompose(theta)
    for i, m in enumerate(dec.multiplicities):
        if not (isinstance(m, Fraction) and m.denominator == 1 and m >= 0):
            return ThetaResult(False, i, theta)
    return ThetaResult(True, None, theta)


@dataclass
class PermutationProbe:
    decomposition: Decomposition
    has_multiplicity_ge_2: bool


def permutation_character_probe(G: FiniteGroup, H: Subgroup) -> PermutationProbe:
    _require_subgroup(H, G)
    dec = decompose(induce(H, trivial_character(H.group)))
    return PermutationProbe(dec, any(m >= 2 for m in dec.multiplicities))
