"""Finite permutation groups: closure, conjugacy, subgroups, quotients.

Permutations are tuples of images on {0, ..., degree-1}.  Products are
function composition, ``mul(a, b)(x) = a(b(x))``: apply ``b`` first.

A :class:`FiniteGroup` stores its elements fully enumerated and sorted
lexicographically, so element index 0 is always the identity and all
orderings derived from indices are reproducible.
"""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass, field
from functools import cached_property, reduce
from math import gcd, isqrt, lcm
from typing import Iterable, Sequence

import numpy as np

from .finitefield import field as gf, prime_power

log = logging.getLogger(__name__)

Permutation = tuple  # tuple[int, ...]

DEFAULT_MAX_ORDER = 10**6
TABLE_LIMIT = 2048
SUBGROUP_LIMIT = 500


class GroupError(Exception):
    pass


class BoundExceeded(GroupError):
    pass


class InvalidPermutation(GroupError):
    pass


class UnsupportedParameter(GroupError):
    pass


class NotNormal(GroupError):
    pass


class PrimeDoesNotDivide(GroupError):
    pass


# ---------------------------------------------------------------------------
# permutation helpers


def check_perm(images: Sequence[int]) -> Permutation:
    images = tuple(int(x) for x in images)
    if sorted(images) != list(range(len(images))):
        raise InvalidPermutation(f"not a bijection on 0..{len(images) - 1}: {images}")
    return images


def perm_mul(a: Permutation, b: Permutation) -> Permutation:
    return tuple([a[x] for x in b])


def perm_inv(a: Permutation) -> Permutation:
    out = [0] * len(a)
    for i, x in enumerate(a):
        out[x] = i
    return tuple(out)


def identity(degree: int) -> Permutation:
    return tuple(range(degree))


def perm_order(a: Permutation) -> int:
    seen = [False] * len(a)
    o = 1
    for i in range(len(a)):
        if not seen[i]:
            k, j = 0, i
            while not seen[j]:
                seen[j] = True
                j = a[j]
                k += 1
            o = lcm(o, k)
    return o


def cycle_type(a: Permutation) -> tuple[int, ...]:
    seen = [False] * len(a)
    out = []
    for i in range(len(a)):
        if not seen[i]:
            k, j = 0, i
            while not seen[j]:
                seen[j] = True
                j = a[j]
                k += 1
            out.append(k)
    return tuple(sorted(out))


def perm_from_cycles(cycles: Iterable[Sequence[int]], degree: int | None = None) -> Permutation:
    cycles = [tuple(c) for c in cycles]
    pts = [x for c in cycles for x in c]
    if len(pts) != len(set(pts)):
        raise InvalidPermutation(f"cycles are not disjoint: {cycles}")
    if any(x < 0 for x in pts):
        raise InvalidPermutation("negative point")
    n = max(pts, default=-1) + 1
    if degree is None:
        degree = n
    if n > degree:
        raise InvalidPermutation(f"point {n - 1} outside degree {degree}")
    img = list(range(degree))
    for c in cycles:
        for i, x in enumerate(c):
            img[x] = c[(i + 1) % len(c)]
    return tuple(img)


def perm_to_cycles(a: Permutation) -> list[tuple[int, ...]]:
    seen = [False] * len(a)
    out = []
    for i in range(len(a)):
        if not seen[i] and a[i] != i:
            c, j = [], i
            while not seen[j]:
                seen[j] = True
                c.append(j)
                j = a[j]
            out.append(tuple(c))
    return out


# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GroupTag:
    family: str
    param: int | None = None

    PARAMETERIZED = {"Cyclic", "Dihedral", "Symmetric", "Alternating", "AGL1", "AGL1Prime", "PSL2", "Sz"}
    FIXED = {"PSL3_3", "Sz8", "SL2_3", "Q8", "Custom"}

    def __post_init__(self):
        if self.family in self.PARAMETERIZED:
            if self.param is None:
                raise UnsupportedParameter(f"{self.family} needs a parameter")
        elif self.family in self.FIXED:
            if self.param is not None:
                raise UnsupportedParameter(f"{self.family} takes no parameter")
        else:
            raise UnsupportedParameter(f"unknown family {self.family!r}")

    def __str__(self):
        return self.family if self.param is None else f"{self.family}({self.param})"


@dataclass
class ConjugacyClass:
    rep: int
    members: frozenset[int]

    @property
    def size(self) -> int:
        return len(self.members)


class FiniteGroup:
    """A permutation group with every element enumerated."""

    def __init__(
        self,
        generators: Sequence[Sequence[int]],
        degree: int | None = None,
        max_order: int = DEFAULT_MAX_ORDER,
        tag: GroupTag | None = None,
    ):
        gens = [check_perm(g) for g in generators]
        if degree is None:
            degree = len(gens[0]) if gens else 1
        if any(len(g) != degree for g in gens):
            raise InvalidPermutation("generators have differing degrees")
        self.degree = degree
        self.tag = tag
        e = identity(degree)
        self.generators = tuple(g for g in gens if g != e) or (e,)
        seen = {e}
        frontier = [e]
        while frontier:
            nxt = []
            for x in frontier:
                for g in self.generators:
                    y = perm_mul(x, g)
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
                        if len(seen) > max_order:
                            raise BoundExceeded(f"group order exceeds {max_order}")
            frontier = nxt
        self.elements: list[Permutation] = sorted(seen)
        self.index: dict[Permutation, int] = {x: i for i, x in enumerate(self.elements)}
        self.order = len(self.elements)
        self.inv = [self.index[perm_inv(x)] for x in self.elements]
        self.gen_idx = [self.index[g] for g in self.generators]
        self._compute_classes()

    # -- products ---------------------------------------------------------
    @cached_property
    def table(self) -> list[list[int]] | None:
        """Cayley table (list of rows) when the group is small enough."""
        n = self.order
        if n > TABLE_LIMIT:
            return None
        P = np.array(self.elements, dtype=np.int64).reshape(n, self.degree)
        rng = np.random.default_rng(12345)
        w = rng.integers(1, 2**61, size=self.degree, dtype=np.int64)
        keys = (P * w).sum(axis=1)  # wraps mod 2^64, fine as a hash
        order = np.argsort(keys, kind="stable")
        sk = keys[order]
        if len(np.unique(sk)) != n:
            return None
        rows = np.empty((n, n), dtype=np.int64)
        for j in range(n):
            comp = P[:, P[j]]  # comp[i] = elements[i] o elements[j]
            k = (comp * w).sum(axis=1)
            rows[:, j] = order[np.searchsorted(sk, k)]
        return rows.tolist()

    def mul(self, i: int, j: int) -> int:
        t = self.table
        if t is not None:
            return t[i][j]
        a, b = self.elements[i], self.elements[j]
        return self.index[tuple([a[x] for x in b])]

    def conj(self, g: int, x: int) -> int:
        """g x g^-1"""
        return self.mul(self.mul(g, x), self.inv[g])

    def power(self, i: int, k: int) -> int:
        r = 0
        for _ in range(k % self.element_order(i)):
            r = self.mul(r, i)
        return r

    def element_order(self, i: int) -> int:
        return self._orders[i]

    @cached_property
    def _orders(self) -> list[int]:
        return [perm_order(x) for x in self.elements]

    @cached_property
    def exponent(self) -> int:
        return reduce(lcm, (self.element_order(c.rep) for c in self.classes), 1)

    # -- conjugacy ----------------------------------------------------------
    def _compute_classes(self) -> None:
        n = self.order
        class_id = [-1] * n
        raw = []
        gens = self.gen_idx
        for x in range(n):
            if class_id[x] >= 0:
                continue
            cid = len(raw)
            members = [x]
            class_id[x] = cid
            k = 0
            while k < len(members):
                y = members[k]
                k += 1
                for g in gens:
                    z = self.conj(g, y)
                    if class_id[z] < 0:
                        class_id[z] = cid
                        members.append(z)
            raw.append(members)
        # deterministic ordering: size, then minimal element
        order = sorted(range(len(raw)), key=lambda c: (len(raw[c]), min(raw[c])))
        self.classes = [ConjugacyClass(min(raw[c]), frozenset(raw[c])) for c in order]
        remap = {c: k for k, c in enumerate(order)}
        self.class_of = [remap[c] for c in class_id]

    @property
    def class_sizes(self) -> list[int]:
        return [c.size for c in self.classes]

    @cached_property
    def centralizer_orders(self) -> list[int]:
        return [self.order // c.size for c in self.classes]

    # -- subgroups ----------------------------------------------------------
    def subgroup(self, gens: Iterable[int]) -> "Subgroup":
        gens = [g for g in dict.fromkeys(gens) if g != 0]
        els = frozenset([0])
        kept = []
        for g in gens:
            if g not in els:
                els = self.generate(kept + [g])
                kept.append(g)
        return Subgroup(self, els, tuple(kept))

    def generate(self, gens: Sequence[int]) -> frozenset[int]:
        seen = {0}
        frontier = [0]
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = self.mul(x, g)
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return frozenset(seen)

    def whole(self) -> "Subgroup":
        return Subgroup(self, frozenset(range(self.order)), tuple(self.gen_idx))

    def trivial(self) -> "Subgroup":
        return Subgroup(self, frozenset([0]), ())

    def is_abelian(self) -> bool:
        g = self.gen_idx
        return all(self.mul(a, b) == self.mul(b, a) for a in g for b in g)

    def contains_perm(self, p: Sequence[int]) -> bool:
        return tuple(p) in self.index

    def __len__(self):
        return self.order

    def __repr__(self):
        name = str(self.tag) if self.tag else "Group"
        return f"<{name} order={self.order} degree={self.degree}>"


class Subgroup:
    """A subgroup of ``parent`` given by element indices and generators."""

    def __init__(self, parent: FiniteGroup, elements: frozenset[int], generators: tuple[int, ...]):
        self.parent = parent
        self.elements = elements
        self.generators = generators
        if parent.order % len(elements):
            raise GroupError("subgroup order does not divide group order")

    @property
    def order(self) -> int:
        return len(self.elements)

    @cached_property
    def group(self) -> FiniteGroup:
        """The subgroup as a standalone permutation group (same points)."""
        P = self.parent
        gens = [P.elements[g] for g in self.generators] or [identity(P.degree)]
        H = FiniteGroup(gens, degree=P.degree)
        assert H.order == self.order
        return H

    @cached_property
    def class_fusion(self) -> list[int]:
        """Parent class index of each class of ``self.group``."""
        P, H = self.parent, self.group
        return [P.class_of[P.index[H.elements[c.rep]]] for c in H.classes]

    def generator_perms(self) -> list[Permutation]:
        return [self.parent.elements[g] for g in self.generators]

    def is_normal(self) -> bool:
        P = self.parent
        return all(P.conj(g, h) in self.elements for g in P.gen_idx for h in self.generators)

    def __contains__(self, i: int) -> bool:
        return i in self.elements

    def __repr__(self):
        return f"<Subgroup order={self.order} of {self.parent!r}>"


def group_from_generators(gens: Sequence[Sequence[int]], max_order: int = DEFAULT_MAX_ORDER, tag=None) -> FiniteGroup:
    return FiniteGroup(gens, max_order=max_order, tag=tag)


def conjugacy_classes(G: FiniteGroup) -> list[ConjugacyClass]:
    return G.classes


# ---------------------------------------------------------------------------
# catalog


def _act(mapping: dict, points: list) -> Permutation:
    index = {p: i for i, p in enumerate(points)}
    return tuple(index[mapping[p]] for p in points)


def _affine_group(q: int, squares_only: bool) -> list[Permutation]:
    F = gf(q)
    w = F.generator
    mult = F.mul(w, w) if squares_only else w
    pts = list(range(q))
    trans = {x: F.add(x, 1) for x in pts}
    scale = {x: F.mul(mult, x) for x in pts}
    return [_act(trans, pts), _act(scale, pts)]


def _proj_line_points(F) -> list:
    return [(x, 1) for x in range(F.q)] + [(1, 0)]


def _normalize_vec(F, v):
    for c in v:
        if c:
            inv = F.inv(c)
            return tuple(F.mul(inv, x) for x in v)
    raise ValueError("zero vector")


def _normalize_last(F, v):
    # projective normal form: last nonzero coordinate is 1
    for c in reversed(v):
        if c:
            inv = F.inv(c)
            return tuple(F.mul(inv, x) for x in v)
    raise ValueError("zero vector")


def _mat_vec(F, M, v):
    out = []
    for row in M:
        acc = 0
        for a, b in zip(row, v):
            acc = F.add(acc, F.mul(a, b))
        out.append(acc)
    return tuple(out)


def _projective_action(F, mats, points, normal) -> list[Permutation]:
    index = {p: i for i, p in enumerate(points)}
    return [tuple(index[normal(F, _mat_vec(F, M, p))] for p in points) for M in mats]


def _projective_points(F, dim: int) -> list:
    pts = set()
    for v in np.ndindex(*([F.q] * dim)):
        if any(v):
            pts.add(_normalize_vec(F, tuple(int(x) for x in v)))
    return sorted(pts)


def _psl2(q: int) -> list[Permutation]:
    F = gf(q)
    w = F.generator
    one, zero = 1, 0
    mats = [
        [[one, one], [zero, one]],
        [[w, zero], [zero, F.inv(w)]],
        [[zero, F.neg(one)], [one, zero]],
    ]
    pts = _proj_line_points(F)
    return _projective_action(F, mats, pts, _normalize_last)


def _psl3_3() -> list[Permutation]:
    F = gf(3)
    mats = [
        [[1, 1, 0], [0, 1, 0], [0, 0, 1]],
        [[1, 0, 0], [0, 1, 1], [0, 0, 1]],
        [[1, 0, 0], [0, 1, 0], [1, 0, 1]],
    ]
    return _projective_action(F, mats, _projective_points(F, 3), _normalize_vec)


def _sz8() -> list[Permutation]:
    # Suzuki group Sz(8) < Sp4(8): generators act on the 65-point orbit of <e4>
    F = gf(8)
    r = 4  # x -> x^r squares to the Frobenius x -> x^2 on GF(8)

    def p(a, k):
        return F.pow(a, k)

    add, mul = F.add, F.mul

    def unipotent(a, b):
        return [
            [1, 0, 0, 0],
            [a, 1, 0, 0],
            [b, p(a, r), 1, 0],
            [add(add(p(a, 2 + r), mul(a, b)), p(b, r)), add(p(a, 1 + r), b), a, 1],
        ]

    k = F.generator
    half = r // 2
    diag = [
        [p(k, 1 + half), 0, 0, 0],
        [0, p(k, half), 0, 0],
        [0, 0, F.inv(p(k, half)), 0],
        [0, 0, 0, F.inv(p(k, 1 + half))],
    ]
    w = [[0, 0, 0, 1], [0, 0, 1, 0], [0, 1, 0, 0], [1, 0, 0, 0]]
    mats = [unipotent(1, 0), unipotent(0, 1), diag, w]
    start = (0, 0, 0, 1)
    orbit = [start]
    seen = {start}
    i = 0
    while i < len(orbit):
        v = orbit[i]
        i += 1
        for M in mats:
            u = _normalize_vec(F, _mat_vec(F, M, v))
            if u not in seen:
                seen.add(u)
                orbit.append(u)
    orbit.sort()
    return _projective_action(F, mats, orbit, _normalize_vec)


def _sl2_3(only_q8: bool) -> list[Permutation]:
    F = gf(3)
    pts = [(a, b) for a in range(3) for b in range(3) if (a, b) != (0, 0)]
    if only_q8:
        mats = [[[0, 2], [1, 0]], [[1, 1], [1, 2]]]
    else:
        mats = [[[1, 1], [0, 1]], [[1, 0], [1, 1]]]
    return _projective_action(F, mats, pts, lambda F, v: v)


def validate_tag(tag: GroupTag) -> GroupTag:
    """Check catalog parameters without building the group."""
    fam, n = tag.family, tag.param
    if fam in ("Cyclic", "Symmetric", "Alternating") and n < 1:
        raise UnsupportedParameter(f"{fam}(n) needs n >= 1")
    if fam == "Dihedral" and n < 3:
        raise UnsupportedParameter("Dihedral(n) needs n >= 3")
    if fam in ("AGL1", "AGL1Prime", "PSL2") and prime_power(n) is None:
        raise UnsupportedParameter(f"{n} is not a prime power")
    if fam == "AGL1Prime" and n % 2 == 0:
        raise UnsupportedParameter("AGL1Prime(q) needs odd q")
    if fam == "Sz" and n != 8:
        raise UnsupportedParameter("only Sz(8) is constructed")
    if fam == "Custom":
        raise UnsupportedParameter("Custom groups are not in the catalog")
    return tag


def make_catalog(tag: GroupTag | str, param: int | None = None) -> FiniteGroup:
    """Construct a named group from the catalog."""
    if isinstance(tag, str):
        tag = GroupTag(tag, param)
    validate_tag(tag)
    fam, n = tag.family, tag.param
    if fam == "Cyclic":
        if n < 1:
            raise UnsupportedParameter("Cyclic(n) needs n >= 1")
        gens = [tuple((i + 1) % n for i in range(n))]
    elif fam == "Dihedral":
        if n < 3:
            raise UnsupportedParameter("Dihedral(n) needs n >= 3")
        gens = [tuple((i + 1) % n for i in range(n)), tuple((-i) % n for i in range(n))]
    elif fam == "Symmetric":
        if n < 1:
            raise UnsupportedParameter("Symmetric(n) needs n >= 1")
        gens = [identity(n)] if n == 1 else [perm_from_cycles([(0, 1)], n), tuple((i + 1) % n for i in range(n))]
    elif fam == "Alternating":
        if n < 1:
            raise UnsupportedParameter("Alternating(n) needs n >= 1")
        gens = [perm_from_cycles([(0, 1, k)], n) for k in range(2, n)] or [identity(n)]
    elif fam in ("AGL1", "AGL1Prime"):
        if prime_power(n) is None:
            raise UnsupportedParameter(f"{n} is not a prime power")
        if fam == "AGL1Prime" and n % 2 == 0:
            raise UnsupportedParameter("AGL1Prime(q) needs odd q")
        gens = _affine_group(n, fam == "AGL1Prime")
    elif fam == "PSL2":
        if prime_power(n) is None:
            raise UnsupportedParameter(f"{n} is not a prime power")
        gens = _psl2(n)
    elif fam == "Sz":
        if n != 8:
            raise UnsupportedParameter("only Sz(8) is constructed")
        return make_catalog(GroupTag("Sz8"))
    elif fam == "PSL3_3":
        gens = _psl3_3()
    elif fam == "Sz8":
        gens = _sz8()
    elif fam == "SL2_3":
        gens = _sl2_3(False)
    elif fam == "Q8":
        gens = _sl2_3(True)
    else:
        raise UnsupportedParameter(f"no catalog constructor for {tag}")
    return FiniteGroup(gens, tag=tag)


# Groups exercised by the test and acceptance suites.
CATALOG = [
    GroupTag("Cyclic", 2), GroupTag("Cyclic", 3), GroupTag("Cyclic", 4), GroupTag("Cyclic", 12),
    GroupTag("Dihedral", 3), GroupTag("Dihedral", 4), GroupTag("Dihedral", 5), GroupTag("Dihedral", 6),
    GroupTag("Symmetric", 3), GroupTag("Symmetric", 4), GroupTag("Symmetric", 5),
    GroupTag("Alternating", 4), GroupTag("Alternating", 5),
    GroupTag("Q8"), GroupTag("SL2_3"),
    GroupTag("AGL1", 3), GroupTag("AGL1", 4), GroupTag("AGL1", 5), GroupTag("AGL1", 7),
    GroupTag("AGL1", 8), GroupTag("AGL1", 9), GroupTag("AGL1", 11),
    GroupTag("AGL1Prime", 7), GroupTag("AGL1Prime", 9), GroupTag("AGL1Prime", 11),
    GroupTag("PSL2", 4), GroupTag("PSL2", 5), GroupTag("PSL2", 7), GroupTag("PSL2", 8),
    GroupTag("PSL2", 9), GroupTag("PSL2", 11),
    GroupTag("PSL3_3"), GroupTag("Sz8"),
]


# ---------------------------------------------------------------------------
# structure


def normal_closure(G: FiniteGroup, gens: Iterable[int], start: Subgroup | None = None) -> Subgroup:
    kept = list(start.generators) if start else []
    els = start.elements if start else frozenset([0])
    queue = list(gens)
    while queue:
        x = queue.pop()
        if x in els:
            continue
        kept.append(x)
        els = G.generate(kept)
        for y in kept:
            for g in G.gen_idx:
                z = G.conj(g, y)
                if z not in els:
                    queue.append(z)
    return Subgroup(G, els, tuple(kept))


def _reduce_gens(G: FiniteGroup, gens: Iterable[int]) -> tuple[frozenset[int], tuple[int, ...]]:
    els = frozenset([0])
    kept = []
    for g in gens:
        if g not in els:
            kept.append(g)
            els = G.generate(kept)
    return els, tuple(kept)


def commutator_subgroup(G: FiniteGroup, H: Subgroup | None = None) -> Subgroup:
    """[H, H] as a subgroup of G (H defaults to G)."""
    H = H or G.whole()
    gens = H.generators
    comms = []
    for a in gens:
        for b in gens:
            c = G.mul(G.mul(G.inv[a], G.inv[b]), G.mul(a, b))
            if c:
                comms.append(c)
    # normal closure inside H
    kept: list[int] = []
    els = frozenset([0])
    queue = comms
    while queue:
        x = queue.pop()
        if x in els:
            continue
        kept.append(x)
        els = G.generate(kept)
        for y in kept:
            for g in gens:
                z = G.conj(g, y)
                if z not in els:
                    queue.append(z)
    return Subgroup(G, els, tuple(kept))


def derived_series(G: FiniteGroup) -> list[Subgroup]:
    series = [G.whole()]
    while True:
        D = commutator_subgroup(G, series[-1])
        if D.order == series[-1].order:
            return series
        series.append(D)


def is_solvable(G: FiniteGroup) -> bool:
    return derived_series(G)[-1].order == 1


def is_nilpotent(G: FiniteGroup) -> bool:
    cur = G.whole()
    while cur.order > 1:
        comms = [G.mul(G.mul(G.inv[x], G.inv[g]), G.mul(x, g)) for x in cur.generators for g in G.gen_idx]
        nxt = normal_closure(G, [c for c in comms if c])
        if nxt.order == cur.order:
            return False
        cur = nxt
    return True


def normal_subgroups(G: FiniteGroup) -> list[Subgroup]:
    """All normal subgroups, ordered by (order, sorted elements)."""
    cached = getattr(G, "_normal_subgroups", None)
    if cached is not None:
        return cached
    found: dict[frozenset[int], Subgroup] = {}
    basic = []
    for c in G.classes:
        N = normal_closure(G, [c.rep])
        if N.elements not in found:
            found[N.elements] = N
            basic.append(N)
    frontier = list(found.values())
    while frontier:
        nxt = []
        for A in frontier:
            for B in basic:
                if B.elements <= A.elements:
                    continue
                J = normal_closure(G, B.generators, start=A)
                if J.elements not in found:
                    found[J.elements] = J
                    nxt.append(J)
        frontier = nxt
    G._normal_subgroups = sorted(found.values(), key=lambda N: (N.order, sorted(N.elements)))
    return G._normal_subgroups


def is_simple(G: FiniteGroup) -> bool:
    return G.order > 1 and len(normal_subgroups(G)) == 2


def quotient(G: FiniteGroup, N: Subgroup) -> tuple[FiniteGroup, list[int]]:
    """G/N acting on left cosets; returns the group and the projection map.

    The projection sends each element index of G to an element index of
    the quotient group.
    """
    if N.parent is not G:
        raise GroupError("N is not a subgroup of G")
    if not N.is_normal():
        raise NotNormal("N is not normal in G")
    coset_of = [-1] * G.order
    cosets = []
    for x in range(G.order):  # increasing index: coset ids ordered by minimal element
        if coset_of[x] >= 0:
            continue
        cid = len(cosets)
        members = [G.mul(x, n) for n in N.elements]
        for y in members:
            coset_of[y] = cid
        cosets.append(x)
    m = len(cosets)

    def action(g: int) -> Permutation:
        return tuple(coset_of[G.mul(g, r)] for r in cosets)

    Q = FiniteGroup([action(g) for g in G.gen_idx], degree=m)
    proj = [Q.index[action(x)] for x in range(G.order)]
    return Q, proj


def sylow_subgroup(G: FiniteGroup, p: int) -> Subgroup:
    if G.order % p:
        raise PrimeDoesNotDivide(f"{p} does not divide {G.order}")
    target = 1
    while G.order % (target * p) == 0:
        target *= p
    P = G.trivial()
    while P.order < target:
        for x in range(G.order):
            if x in P.elements:
                continue
            if G.element_order(x) % p:
                continue
            if all(G.conj(x, h) in P.elements for h in P.generators) and G.power(x, p) in P.elements:
                els = G.generate(list(P.generators) + [x])
                P = Subgroup(G, els, P.generators + (x,))
                break
        else:  # pragma: no cover - Sylow theory guarantees progress
            raise GroupError("Sylow search stalled")
    return P


def _conjugate_set(G: FiniteGroup, g: int, S: frozenset[int]) -> frozenset[int]:
    return frozenset(G.conj(g, s) for s in S)


def subgroups_up_to_conjugacy(G: FiniteGroup, limit: int = SUBGROUP_LIMIT) -> list[Subgroup]:
    """One representative per conjugacy class of subgroups.

    Every subgroup is a join of cyclic subgroups, and joins of class
    representatives with all cyclic subgroups reach every class.
    """
    cached = getattr(G, "_subgroup_classes", None)
    if cached is not None:
        return cached[0]
    if G.order > limit:
        raise BoundExceeded(f"|G| = {G.order} exceeds the subgroup enumeration limit {limit}")
    cyclic: dict[frozenset[int], int] = {}
    for x in range(G.order):
        C = G.generate([x])
        if C not in cyclic:
            cyclic[C] = x
    cyc_items = sorted(cyclic.items(), key=lambda kv: (len(kv[0]), kv[1]))
    class_id: dict[frozenset[int], int] = {}
    reps: list[Subgroup] = []
    sizes: list[int] = []

    def register(els: frozenset[int], gens: tuple[int, ...]) -> None:
        if els in class_id:
            return
        cid = len(reps)
        orbit = [els]
        class_id[els] = cid
        k = 0
        while k < len(orbit):
            S = orbit[k]
            k += 1
            for g in G.gen_idx:
                T = _conjugate_set(G, g, S)
                if T not in class_id:
                    class_id[T] = cid
                    orbit.append(T)
        best = min(orbit, key=lambda S: sorted(S))
        if best != els:
            g_best = None
            # find a conjugating element to carry generators along
            for g in range(G.order):
                if _conjugate_set(G, g, els) == best:
                    g_best = g
                    break
            gens = tuple(G.conj(g_best, h) for h in gens)
        reps.append(Subgroup(G, best, gens))
        sizes.append(len(orbit))

    register(frozenset([0]), ())
    k = 0
    while k < len(reps):
        H = reps[k]
        k += 1
        for C, x in cyc_items:
            if C <= H.elements:
                continue
            els, gens = _reduce_gens(G, list(H.generators) + [x])
            register(els, gens)
    order = sorted(range(len(reps)), key=lambda i: (reps[i].order, sorted(reps[i].elements)))
    result = [reps[i] for i in order]
    all_subgroups = [S for S in class_id]
    G._subgroup_classes = (result, [sizes[i] for i in order], all_subgroups)
    return result


def all_subgroups(G: FiniteGroup, limit: int = SUBGROUP_LIMIT) -> list[frozenset[int]]:
    subgroups_up_to_conjugacy(G, limit)
    return G._subgroup_classes[2]


def maximal_subgroups(G: FiniteGroup, limit: int = SUBGROUP_LIMIT) -> list[Subgroup]:
    reps = subgroups_up_to_conjugacy(G, limit)
    subs = all_subgroups(G, limit)
    out = []
    for H in reps:
        if H.order == G.order:
            continue
        if not any(
            H.order < len(K) < G.order and len(K) % H.order == 0 and H.elements < K for K in subs
        ):
            out.append(H)
    return out


def _is_prime(n: int) -> bool:
    return n > 1 and all(n % d for d in range(2, isqrt(n) + 1))


def is_supersolvable(G: FiniteGroup, limit: int = SUBGROUP_LIMIT) -> bool:
    """Huppert: G is supersolvable iff every maximal subgroup has prime index."""
    if G.order == 1 or G.is_abelian():
        return True
    if not is_solvable(G):
        return False
    return all(_is_prime(G.order // H.order) for H in maximal_subgroups(G, limit))


@dataclass(frozen=True)
class Predicates:
    is_abelian: bool
    is_solvable: bool
    is_supersolvable: bool
    is_simple: bool
    is_nilpotent: bool


def structural_predicates(G: FiniteGroup, limit: int = SUBGROUP_LIMIT) -> Predicates:
    return Predicates(
        is_abelian=G.is_abelian(),
        is_solvable=is_solvable(G),
        is_supersolvable=is_supersolvable(G, limit),
        is_simple=is_simple(G),
        is_nilpotent=is_nilpotent(G),
    )


# ---------------------------------------------------------------------------
# embeddings


def extend_to_homomorphism(source: FiniteGroup, target: FiniteGroup, images: Sequence[int]) -> dict[int, int] | None:
    """Extend generator images (target indices) to a homomorphism, or None.

    Walks the Cayley graph of ``source``; the map is well defined iff no
    edge produces a conflicting image.
    """
    phi = {0: 0}
    frontier = [0]
    while frontier:
        nxt = []
        for u in frontier:
            v = phi[u]
            for g, h in zip(source.gen_idx, images):
                u2 = source.mul(u, g)
                v2 = target.mul(v, h)
                got = phi.get(u2)
                if got is None:
                    phi[u2] = v2
                    nxt.append(u2)
                elif got != v2:
                    return None
        frontier = nxt
    return phi


@dataclass
class Embedding:
    subgroup: Subgroup
    source: FiniteGroup
    images: tuple[int, ...]  # parent indices of the images of source.gen_idx

    def image_perms(self) -> list[Permutation]:
        return [self.subgroup.parent.elements[i] for i in self.images]


def find_subgroup_isomorphic(
    G: FiniteGroup,
    target: FiniteGroup | GroupTag,
    seed: int = 0,
    max_attempts: int = 20000,
) -> Embedding | None:
    """Search for an injective homomorphism target -> G.

    Generator images are drawn from elements of matching order.  When the
    candidate space is no larger than the budget it is scanned exhaustively,
    so ``None`` is then a proof of absence; otherwise it is only advisory.
    """
    if isinstance(target, GroupTag):
        target = make_catalog(target)
    if G.order % target.order:
        return None
    if target.order > 1 and G.is_abelian() and not target.is_abelian():
        return None
    by_order: dict[int, list[int]] = {}
    for x in range(G.order):
        by_order.setdefault(G.element_order(x), []).append(x)
    cands = [by_order.get(target.element_order(g), []) for g in target.gen_idx]
    if any(not c for c in cands):
        return None
    space = 1
    for c in cands:
        space *= len(c)

    def attempt(imgs):
        phi = extend_to_homomorphism(target, G, imgs)
        if phi is None or len(set(phi.values())) != target.order:
            return None
        els = frozenset(phi.values())
        _, kept = _reduce_gens(G, imgs)
        return Embedding(Subgroup(G, els, kept), target, tuple(imgs))

    if space <= max_attempts:
        from itertools import product

        for imgs in product(*cands):
            emb = attempt(imgs)
            if emb:
                return emb
        return None
    rng = random.Random(seed)
    for _ in range(max_attempts):
        imgs = [rng.choice(c) for c in cands]
        emb = attempt(imgs)
        if emb:
            return emb
    return None
