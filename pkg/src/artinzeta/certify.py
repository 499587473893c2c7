"""Certificates of membership in the classes S_2 and S_3, and the
Aramata-Brauer decomposition of r_G - 1.

S_n is the class of finite groups G such that every Galois extension with
group G has a Dedekind zeta function with infinitely many nontrivial zeros
of multiplicity at least n.  A certificate is a tree: inner nodes pass to a
subgroup or a quotient (membership is inherited upwards), leaves exhibit a
monomial group with an irreducible of degree >= n, or one of the affine
groups AGL_1(q), AGL'_1(q), or an auxiliary-product configuration.

The verifier rebuilds every group from raw permutations and re-derives all
leaf claims; it never consults objects created during generation.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from . import lp
from .chartab import (
    ClassFunction,
    character_table,
    decompose,
    huppert_criterion,
    inner_product,
    is_monomial,
    regular_character,
    restrict,
    trivial_character,
)
from .cyclo import Cyclotomic
from .finitefield import prime_power
from .groups import (
    BoundExceeded,
    FiniteGroup,
    GroupError,
    GroupTag,
    Subgroup,
    extend_to_homomorphism,
    find_subgroup_isomorphic,
    is_solvable,
    is_supersolvable,
    make_catalog,
    maximal_subgroups,
    normal_subgroups,
    quotient,
    subgroups_up_to_conjugacy,
    sylow_subgroup,
)

log = logging.getLogger(__name__)

SCHEMA = "artinzeta.certificate/1"
ENUM_LIMIT = 500


class CertificationError(Exception):
    pass


class AbelianInput(CertificationError):
    pass


class NoDeg3Irreducible(CertificationError):
    pass


class CertificationFailed(CertificationError):
    pass


class Infeasible(CertificationError):
    pass


def _perms(G: FiniteGroup, idx) -> list[list[int]]:
    return [list(G.elements[i]) for i in idx]


# ---------------------------------------------------------------------------
# nodes


@dataclass
class LinearWitness:
    subgroup: list[list[int]]  # generators of H
    values: list[dict]  # linear character on those generators (cyclotomic json)

    def to_json(self):
        return {"subgroup": self.subgroup, "values": self.values}

    @classmethod
    def from_json(cls, d):
        return cls(d["subgroup"], d["values"])


@dataclass
class MonomialBase:
    group_order: int
    irreducible: int  # position in witnesses of the high-degree irreducible
    claimed_multiplicity: int
    witnesses: list[LinearWitness]
    kind: str = "MonomialBase"


@dataclass
class HuppertBase:
    group_order: int
    normal: list[list[int]]
    claimed_multiplicity: int
    kind: str = "HuppertBase"


@dataclass
class SubgroupStep:
    subgroup: list[list[int]]
    order: int
    child: Any
    kind: str = "SubgroupStep"


@dataclass
class QuotientStep:
    normal: list[list[int]]
    order: int
    child: Any
    kind: str = "QuotientStep"


@dataclass
class AGLBase:
    q: int
    claimed_multiplicity: int
    images: list[list[int]]
    kind: str = "AGLBase"


@dataclass
class AGLPrimeBase:
    q: int
    claimed_multiplicity: int
    images: list[list[int]]
    kind: str = "AGLPrimeBase"


@dataclass
class AuxiliaryProduct:
    normal: list[list[int]]
    prime: int
    witnesses: list[LinearWitness]
    claimed_multiplicity: int
    kind: str = "AuxiliaryProduct"


@dataclass
class ClassificationLookup:
    tag: str
    witness_tag: str
    claimed_multiplicity: int = 3
    kind: str = "ClassificationLookup"


NODE_TYPES = {
    c.__name__: c
    for c in (MonomialBase, HuppertBase, SubgroupStep, QuotientStep, AGLBase, AGLPrimeBase, AuxiliaryProduct, ClassificationLookup)
}


def node_to_json(node) -> dict:
    out = {"kind": node.kind}
    for k, v in node.__dict__.items():
        if k == "kind":
            continue
        if k == "child":
            out[k] = node_to_json(v)
        elif k == "witnesses":
            out[k] = [w.to_json() for w in v]
        else:
            out[k] = v
    return out


def node_from_json(d: dict):
    kind = d.get("kind")
    if kind not in NODE_TYPES:
        raise ValueError(f"unknown node kind {kind!r}")
    kw = {k: v for k, v in d.items() if k != "kind"}
    if "child" in kw:
        kw["child"] = node_from_json(kw["child"])
    if "witnesses" in kw:
        kw["witnesses"] = [LinearWitness.from_json(w) for w in kw["witnesses"]]
    return NODE_TYPES[kind](**kw)


@dataclass
class Certificate:
    target: int
    group: dict  # {"order", "degree", "generators"}
    root: Any
    strategies: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "schema": SCHEMA,
            "target": self.target,
            "group": self.group,
            "root": node_to_json(self.root),
            "strategies": self.strategies,
        }

    @classmethod
    def from_json(cls, d: dict) -> "Certificate":
        return cls(int(d["target"]), d["group"], node_from_json(d["root"]), list(d.get("strategies", [])))

    def leaves(self):
        node = self.root
        while hasattr(node, "child"):
            node = node.child
        return [node]


def _group_json(G: FiniteGroup) -> dict:
    return {"order": G.order, "degree": G.degree, "generators": [list(g) for g in G.generators]}


# ---------------------------------------------------------------------------
# generation helpers


def _linear_witness(W) -> LinearWitness:
    H = W.subgroup
    Hg = H.group
    lam = W.character()
    gens = H.generator_perms()
    vals = [lam.values[Hg.class_of[Hg.index[g]]].to_json() for g in gens]
    return LinearWitness([list(g) for g in gens], vals)


def _max_degree(G: FiniteGroup) -> int:
    return max(character_table(G).degrees)


def _monomial_base(G: FiniteGroup, n: int) -> MonomialBase | None:
    if G.order > ENUM_LIMIT:
        return None
    res = is_monomial(G, ENUM_LIMIT)
    if not res.monomial:
        return None
    degrees = character_table(G).degrees
    best = max(range(len(degrees)), key=lambda i: (degrees[i], -i))
    if degrees[best] < n:
        return None
    witnesses = [_linear_witness(res.witnesses[i]) for i in range(len(degrees))]
    return MonomialBase(G.order, best, degrees[best], witnesses)


def _huppert_base(G: FiniteGroup, n: int) -> HuppertBase | None:
    if _max_degree(G) < n:
        return None
    N = huppert_criterion(G, ENUM_LIMIT)
    if N is None:
        return None
    return HuppertBase(G.order, _perms(G, N.generators), _max_degree(G))


def _quotients(G: FiniteGroup):
    for N in sorted(normal_subgroups(G), key=lambda N: (N.order, sorted(N.elements))):
        if 1 < N.order < G.order:
            yield N


# Small nonabelian groups tried as subgroup targets when G is too large to enumerate.
S2_TARGETS = [
    GroupTag("Symmetric", 3), GroupTag("Dihedral", 5), GroupTag("Dihedral", 4), GroupTag("Q8"),
    GroupTag("Dihedral", 7), GroupTag("Alternating", 4), GroupTag("AGL1", 5), GroupTag("AGL1Prime", 7),
]


def certify_S2(G: FiniteGroup, seed: int = 0) -> Certificate:
    if G.is_abelian():
        raise AbelianInput("abelian groups are not in S_2 by this route")
    trace: list[str] = []
    root = _s2(G, seed, trace)
    return Certificate(2, _group_json(G), root, trace)


def _s2(G: FiniteGroup, seed: int, trace: list[str]):
    node = _monomial_base(G, 2)
    if node:
        trace.append(f"monomial base |G|={G.order}")
        return node
    if G.order > ENUM_LIMIT:
        node = _huppert_base(G, 2)
        if node:
            trace.append(f"huppert base |G|={G.order}")
            return node
    if G.order <= ENUM_LIMIT:
        for H in sorted(subgroups_up_to_conjugacy(G, ENUM_LIMIT), key=lambda H: -H.order):
            if H.order < G.order and not H.group.is_abelian():
                trace.append(f"subgroup {H.order} of {G.order}")
                return SubgroupStep(_perms(G, H.generators), H.order, _s2(H.group, seed, trace))
    else:
        for tag in S2_TARGETS:
            emb = find_subgroup_isomorphic(G, tag, seed=seed)
            if emb and emb.subgroup.order < G.order:
                H = emb.subgroup
                trace.append(f"subgroup {tag} of {G.order}")
                return SubgroupStep(_perms(G, H.generators), H.order, _s2(H.group, seed, trace))
    for N in _quotients(G):
        Q, _ = quotient(G, N)
        if not Q.is_abelian():
            trace.append(f"quotient by {N.order}")
            return QuotientStep(_perms(G, N.generators), N.order, _s2(Q, seed, trace))
    raise CertificationFailed(f"no S_2 route for group of order {G.order}")


# -- S_3 -------------------------------------------------------------------


def _psl2_order(q: int) -> int:
    return q * (q * q - 1) // (2 if q % 2 else 1)


def _sz_order(q: int) -> int:
    return q * q * (q * q + 1) * (q - 1)


def _is_prime(n: int) -> bool:
    return n > 1 and all(n % d for d in range(2, int(n**0.5) + 1))


def _affine_targets(G: FiniteGroup, n: int) -> list[GroupTag]:
    out = []
    for q in range(4, G.order + 1):
        if q * (q - 1) > G.order * 2:
            break
        if prime_power(q) is None:
            continue
        if q - 1 >= n and G.order % (q * (q - 1)) == 0:
            out.append(GroupTag("AGL1", q))
        if q % 2 and (q - 1) // 2 >= n and G.order % (q * (q - 1) // 2) == 0:
            out.append(GroupTag("AGL1Prime", q))
    return out


def _preferred_affine(tag: GroupTag | None) -> list[GroupTag]:
    """Subgroup witnesses attached to the minimal simple families."""
    if tag is None:
        return []
    if tag.family == "PSL2":
        q = tag.param
        if q % 2 == 0:
            return [GroupTag("AGL1", q)]
        if q >= 7:
            return [GroupTag("AGL1Prime", q)]
    if tag.family == "PSL3_3":
        return [GroupTag("AGL1", 4)]
    if tag.family == "Sz8":
        return [GroupTag("AGL1", 5)]
    return []


def _affine_leaf(G: FiniteGroup, tag: GroupTag, emb) -> Any:
    q = tag.param
    images = [list(p) for p in emb.image_perms()]
    if tag.family == "AGL1":
        return AGLBase(q, q - 1, images)
    return AGLPrimeBase(q, (q - 1) // 2, images)


def _affine_node(G: FiniteGroup, n: int, seed: int, trace: list[str]):
    targets = _preferred_affine(G.tag if G.tag and G.tag.family != "Custom" else thompson_match(G))
    targets += [t for t in _affine_targets(G, n) if t not in targets]
    for tag in targets:
        T = make_catalog(tag)
        emb = find_subgroup_isomorphic(G, T, seed=seed)
        if emb is None:
            continue
        trace.append(f"affine {tag} in |G|={G.order}")
        leaf = _affine_leaf(G, tag, emb)
        if emb.subgroup.order == G.order:
            return leaf
        H = emb.subgroup
        return SubgroupStep(_perms(G, H.generators), H.order, leaf)
    return None


def _auxiliary_node(G: FiniteGroup, n: int):
    if _max_degree(G) < n:
        return None
    for N in normal_subgroups(G):
        idx = G.order // N.order
        if N.order == G.order or not _is_prime(idx):
            continue
        if max(character_table(N.group).degrees) > 2 or N.order > ENUM_LIMIT:
            continue
        res = is_monomial(N.group, ENUM_LIMIT)
        if not res.monomial:
            continue
        ws = [_linear_witness(res.witnesses[i]) for i in range(len(res.witnesses))]
        return AuxiliaryProduct(_perms(G, N.generators), idx, ws, _max_degree(G))
    return None


def certify_S3(G: FiniteGroup, seed: int = 0) -> Certificate | None:
    if _max_degree(G) < 3:
        return None
    trace: list[str] = []
    root = _s3(G, seed, trace)
    if root is None:
        raise CertificationFailed(f"every strategy failed; trace: {trace}")
    return Certificate(3, _group_json(G), root, trace)


def _s3(G: FiniteGroup, seed: int, trace: list[str]):
    if _max_degree(G) < 3:
        return None
    # (1) base
    node = _monomial_base(G, 3) or (_huppert_base(G, 3) if G.order > ENUM_LIMIT else None)
    if node:
        trace.append(f"base {node.kind} |G|={G.order}")
        return node
    simple = len(normal_subgroups(G)) == 2
    # (3) affine witnesses, ahead of subquotients for simple groups
    if simple:
        node = _affine_node(G, 3, seed, trace)
        if node:
            return node
    # (2) subquotients
    if G.order <= ENUM_LIMIT:
        for H in sorted(subgroups_up_to_conjugacy(G, ENUM_LIMIT), key=lambda H: -H.order):
            if H.order < G.order and _max_degree(H.group) >= 3:
                child = _s3(H.group, seed, trace)
                if child:
                    trace.append(f"subgroup {H.order} of {G.order}")
                    return SubgroupStep(_perms(G, H.generators), H.order, child)
    for N in _quotients(G):
        Q, _ = quotient(G, N)
        if _max_degree(Q) >= 3:
            child = _s3(Q, seed, trace)
            if child:
                trace.append(f"quotient by {N.order}")
                return QuotientStep(_perms(G, N.generators), N.order, child)
    if not simple:
        node = _affine_node(G, 3, seed, trace)
        if node:
            return node
    # (4) auxiliary products
    node = _auxiliary_node(G, 3)
    if node:
        trace.append(f"auxiliary product |G|={G.order}")
        return node
    # (5) classification
    tag = thompson_match(G)
    if tag is not None:
        trace.append(f"classification {tag}")
        return ClassificationLookup(str(tag), str(_lookup_witness(tag)))
    return None


# ---------------------------------------------------------------------------
# minimal simple groups


def _thompson_families(order: int) -> list[GroupTag]:
    """Members of the five minimal simple families with the given order."""
    out = []
    q = 2
    while q * (q * q - 1) // 2 <= order:
        if _psl2_order(q) == order:
            pp = prime_power(q)
            if pp:
                p, k = pp
                if (p == 2 and _is_prime(k)) or (p == 3 and k % 2 and _is_prime(k)) or (
                    k == 1 and p > 3 and p % 5 in (2, 3)
                ):
                    out.append(GroupTag("PSL2", q))
        q += 1
    if order == 5616:
        out.append(GroupTag("PSL3_3"))
    k = 3
    while _sz_order(2**k) <= order:
        if _sz_order(2**k) == order and _is_prime(k):
            out.append(GroupTag("Sz8") if k == 3 else GroupTag("Sz", 2**k))
        k += 2
    return out


def _lookup_witness(tag: GroupTag) -> GroupTag:
    if tag.family == "PSL2":
        q = tag.param
        return GroupTag("AGL1", q) if q % 2 == 0 else GroupTag("AGL1Prime", q)
    if tag.family == "PSL3_3":
        return GroupTag("AGL1", 4)
    return GroupTag("AGL1", 5)


def thompson_match(G: FiniteGroup, seed: int = 0) -> GroupTag | None:
    if G.order < 60 or G.is_abelian():
        return None
    for tag in _thompson_families(G.order):
        if G.tag == tag:
            return tag
        try:
            T = make_catalog(tag)
        except GroupError:
            continue
        emb = find_subgroup_isomorphic(G, T, seed=seed)
        if emb is not None:
            return tag
    return None


def is_minimal_simple(G: FiniteGroup, limit: int = 1000) -> bool:
    if G.is_abelian() or len(normal_subgroups(G)) != 2:
        return False
    if G.order > limit:
        raise BoundExceeded(f"|G| = {G.order} exceeds the subgroup enumeration limit {limit}")
    return all(is_solvable(H.group) for H in maximal_subgroups(G, limit))


# ---------------------------------------------------------------------------
# verification


@dataclass
class Verdict:
    accepted: bool
    reason: str = ""

    @property
    def result(self) -> str:
        return "accept" if self.accepted else "reject"

    def to_json(self):
        return {"result": self.result, "reason": self.reason}


class _Reject(Exception):
    pass


def _need(cond: bool, reason: str) -> None:
    if not cond:
        raise _Reject(reason)


def _sub_from_perms(G: FiniteGroup, perms) -> tuple[FiniteGroup, list[int]]:
    idx = []
    for p in perms:
        t = tuple(p)
        _need(len(t) == G.degree and t in G.index, "generator is not an element of the group")
        idx.append(G.index[t])
    H = FiniteGroup([G.elements[i] for i in idx] or [G.elements[0]], degree=G.degree)
    return H, idx


def _linear_on(H: FiniteGroup, values) -> list[Cyclotomic]:
    """Extend generator values to a homomorphism H -> C*, element by element."""
    gens = [H.index[g] for g in H.generators]
    _need(len(values) == len(gens) or (len(values) == 0 and H.order == 1), "wrong number of character values")
    vals = [Cyclotomic.from_json(v) for v in values]
    for v in vals:
        _need(v * v.conjugate() == 1, "character value is not a root of unity")
    out: list[Cyclotomic | None] = [None] * H.order
    out[0] = Cyclotomic.rational(1)
    frontier = [0]
    while frontier:
        nxt = []
        for u in frontier:
            for g, v in zip(gens, vals):
                w = H.mul(u, g)
                val = out[u] * v
                if out[w] is None:
                    out[w] = val
                    nxt.append(w)
                else:
                    _need(out[w] == val, "linear character is not a homomorphism")
        frontier = nxt
    return out


def _induced_from_linear(G: FiniteGroup, H: FiniteGroup, lam: list) -> list[Cyclotomic]:
    acc = [Cyclotomic.rational(0)] * len(G.classes)
    for h, perm in enumerate(H.elements):
        k = G.class_of[G.index[perm]]
        acc[k] = acc[k] + lam[h]
    cent = G.centralizer_orders
    return [acc[k] * Fraction(cent[k], H.order) for k in range(len(acc))]


def _norm(G: FiniteGroup, f: list[Cyclotomic]) -> Cyclotomic:
    s = Cyclotomic.rational(0)
    for k, c in enumerate(G.classes):
        if not f[k].is_zero():
            s = s + f[k] * f[k].conjugate() * c.size
    return s / G.order


def _check_monomial_witnesses(G: FiniteGroup, witnesses) -> list[int]:
    """All irreducibles of G are induced from the given linear characters; returns degrees."""
    _need(len(witnesses) == len(G.classes), "witness count differs from the class count")
    seen = set()
    degrees = []
    for w in witnesses:
        H, _ = _sub_from_perms(G, w.subgroup)
        lam = _linear_on(H, w.values)
        ind = _induced_from_linear(G, H, lam)
        _need(_norm(G, ind) == 1, "induced character is not irreducible")
        key = tuple(ind)
        _need(key not in seen, "two witnesses induce the same irreducible")
        seen.add(key)
        degrees.append(int(ind[0]))
    return degrees


def _verify_affine(G: FiniteGroup, node, n: int) -> None:
    prime = node.kind == "AGLPrimeBase"
    q = node.q
    _need(prime_power(q) is not None, f"{q} is not a prime power")
    if prime:
        _need(q % 2 == 1, "AGL1Prime needs odd q")
    expected = q * (q - 1) // (2 if prime else 1)
    _need(G.order == expected, f"order mismatch: |G| = {G.order}, expected {expected}")
    claimed = (q - 1) // 2 if prime else q - 1
    _need(node.claimed_multiplicity == claimed, "claimed multiplicity differs from the affine degree")
    _need(claimed >= n, f"multiplicity {claimed} is below the target {n}")
    A = make_catalog(GroupTag("AGL1Prime" if prime else "AGL1", q))
    _need(len(node.images) == len(A.generators), "wrong number of generator images")
    imgs = []
    for p in node.images:
        _need(tuple(p) in G.index, "image is not an element of the group")
        imgs.append(G.index[tuple(p)])
    phi = extend_to_homomorphism(A, G, imgs)
    _need(phi is not None and len(set(phi.values())) == A.order, "images do not define an isomorphism")
    table = character_table(A)
    nonlinear = [chi for chi in table if chi.degree != 1]
    if prime:
        _need(all(int(chi.degree) >= claimed for chi in nonlinear), "a nonlinear degree is below (q-1)/2")
    else:
        _need(len(nonlinear) == 1 and int(nonlinear[0].degree) == q - 1, "no unique irreducible of degree q-1")
    # monomial source: the translation subgroup (fixed-point-free elements and 1)
    trans = [x for x in A.elements if all(x[i] != i for i in range(len(x))) or x == A.elements[0]]
    _need(len(trans) == q, "translation subgroup has the wrong size")
    Ts = A.subgroup([A.index[x] for x in trans])
    _need(Ts.order == q, "translations do not form a subgroup")
    lin = character_table(Ts.group)
    for chi in nonlinear:
        res = restrict(chi, Ts)
        _need(any(inner_product(res, lam) == 1 for lam in lin), "nonlinear irreducible has no linear source on translations")


def _verify_node(G: FiniteGroup, node, n: int) -> None:
    kind = node.kind
    if kind == "MonomialBase":
        _need(node.group_order == G.order, f"order mismatch: node {node.group_order}, group {G.order}")
        degrees = _check_monomial_witnesses(G, node.witnesses)
        _need(0 <= node.irreducible < len(degrees), "irreducible index out of range")
        d = degrees[node.irreducible]
        _need(d == node.claimed_multiplicity, "claimed multiplicity differs from the witness degree")
        _need(d >= n, f"degree {d} is below the target {n}")
    elif kind == "HuppertBase":
        _need(node.group_order == G.order, f"order mismatch: node {node.group_order}, group {G.order}")
        _, idx = _sub_from_perms(G, node.normal)
        N = G.subgroup(idx)
        _need(N.order < G.order, "Huppert witness is not proper")
        _need(N.is_normal(), "Huppert witness is not normal")
        _need(is_solvable(N.group), "Huppert witness is not solvable")
        Q = G if N.order == 1 else quotient(G, N)[0]
        _need(is_supersolvable(Q, ENUM_LIMIT), "quotient is not supersolvable")
        m = N.order
        p = 2
        while m > 1:
            if m % p == 0:
                while m % p == 0:
                    m //= p
                _need(sylow_subgroup(N.group, p).group.is_abelian(), f"Sylow {p}-subgroup is nonabelian")
            p += 1
        d = max(character_table(G).degrees)
        _need(node.claimed_multiplicity <= d, "claimed multiplicity exceeds every degree")
        _need(node.claimed_multiplicity >= n, "claimed multiplicity is below the target")
    elif kind == "SubgroupStep":
        H, _ = _sub_from_perms(G, node.subgroup)
        _need(H.order == node.order, "subgroup order mismatch")
        _need(H.order < G.order, "subgroup is not proper")
        _verify_node(H, node.child, n)
    elif kind == "QuotientStep":
        _, idx = _sub_from_perms(G, node.normal)
        N = G.subgroup(idx)
        _need(N.order == node.order, "normal subgroup order mismatch")
        _need(1 < N.order < G.order, "quotient not proper")
        _need(N.is_normal(), "subgroup is not normal")
        Q, _ = quotient(G, N)
        _verify_node(Q, node.child, n)
    elif kind in ("AGLBase", "AGLPrimeBase"):
        _verify_affine(G, node, n)
    elif kind == "AuxiliaryProduct":
        _, idx = _sub_from_perms(G, node.normal)
        N = G.subgroup(idx)
        _need(N.is_normal(), "subgroup is not normal")
        _need(G.order // N.order == node.prime and _is_prime(node.prime), "index is not the claimed prime")
        degrees = _check_monomial_witnesses(N.group, node.witnesses)
        _need(max(degrees) <= 2, "normal subgroup has an irreducible of degree above 2")
        d = max(character_table(G).degrees)
        _need(node.claimed_multiplicity <= d and node.claimed_multiplicity >= 3, "no irreducible of degree >= 3")
        _need(n <= 3, "auxiliary products certify S_3 at most")
    elif kind == "ClassificationLookup":
        tag = _parse_tag(node.tag)
        fams = _thompson_families(G.order)
        _need(tag in fams, f"{node.tag} is not a minimal simple family member of order {G.order}")
        _need(str(_lookup_witness(tag)) == node.witness_tag, "witness does not match the family")
        _need(n <= 3, "classification certifies S_3 at most")
    else:
        raise _Reject(f"unknown node kind {kind!r}")


def _parse_tag(s: str) -> GroupTag:
    if "(" in s:
        fam, par = s.rstrip(")").split("(")
        return GroupTag(fam, int(par))
    return GroupTag(s)


def verify_certificate(G: FiniteGroup | dict | None, cert: Certificate | dict) -> Verdict:
    """Re-check a certificate from scratch.  Never raises; rejection is a value."""
    try:
        if isinstance(cert, dict):
            cert = Certificate.from_json(cert)
        _need(cert.target in (2, 3), "target must be 2 or 3")
        gens = [tuple(g) for g in (G.generators if isinstance(G, FiniteGroup) else cert.group["generators"])]
        degree = G.degree if isinstance(G, FiniteGroup) else cert.group["degree"]
        fresh = FiniteGroup(gens, degree=degree)
        _need(fresh.order == cert.group["order"], "group order differs from the certificate")
        cert_fresh = FiniteGroup([tuple(g) for g in cert.group["generators"]], degree=cert.group["degree"])
        _need(set(cert_fresh.elements) == set(fresh.elements), "certificate refers to a different group")
        _verify_node(fresh, cert.root, cert.target)
        return Verdict(True, "all nodes verified")
    except _Reject as e:
        return Verdict(False, str(e))
    except (GroupError, ValueError, KeyError, TypeError, ZeroDivisionError) as e:
        return Verdict(False, f"malformed certificate: {e}")


# ---------------------------------------------------------------------------
# Aramata-Brauer


@dataclass
class AramataTerm:
    generator: int  # element index generating the cyclic subgroup
    order: int
    exponent: int  # psi(x^j) = zeta_order^(exponent * j)
    coefficient: Fraction
    induced: ClassFunction
    group_size: int = 1  # number of (C, psi) pairs inducing the same character

    def to_json(self, G: FiniteGroup) -> dict:
        return {
            "generator": list(G.elements[self.generator]),
            "order": self.order,
            "exponent": self.exponent,
            "coefficient": str(self.coefficient),
            "grouped": self.group_size,
        }


@dataclass
class AramataDecomposition:
    terms: list[AramataTerm]
    residual: ClassFunction

    def to_json(self, G: FiniteGroup) -> dict:
        return {"terms": [t.to_json(G) for t in self.terms], "residual_zero": self.residual.is_zero()}


def cyclic_subgroups_up_to_conjugacy(G: FiniteGroup) -> list[int]:
    """One generator per conjugacy class of cyclic subgroups."""
    from math import gcd

    seen = set()
    out = []
    for c in G.classes:
        x = c.rep
        o = G.element_order(x)
        key = frozenset(G.class_of[G.power(x, k)] for k in range(1, o + 1) if gcd(k, o) == 1)
        if key not in seen:
            seen.add(key)
            out.append(x)
    return out


def _induce_cyclic(G: FiniteGroup, x: int, a: int) -> ClassFunction:
    o = G.element_order(x)
    acc: list[list] = [[] for _ in G.classes]
    y = 0
    for j in range(o):
        acc[G.class_of[y]].append((a * j, 1))
        y = G.mul(y, x)
    cent = G.centralizer_orders
    vals = [
        Cyclotomic.from_exponents(o, terms) * Fraction(cent[k], o) if terms else Cyclotomic.rational(0)
        for k, terms in enumerate(acc)
    ]
    return ClassFunction(G, tuple(vals))


def _aramata_columns(G: FiniteGroup):
    table = character_table(G)
    cols: list[tuple[list[int], AramataTerm]] = []
    index: dict[tuple, int] = {}
    for x in cyclic_subgroups_up_to_conjugacy(G):
        o = G.element_order(x)
        for a in range(o):
            ind = _induce_cyclic(G, x, a)
            mult = tuple(int(m) for m in decompose(ind).multiplicities)
            if mult in index:
                cols[index[mult]][1].group_size += 1
                continue
            index[mult] = len(cols)
            cols.append((list(mult), AramataTerm(x, o, a, Fraction(0), ind)))
    target = [d - (1 if i == 0 else 0) for i, d in enumerate(table.degrees)]
    return table, cols, target


def aramata_brauer_decompose(G: FiniteGroup) -> AramataDecomposition:
    table, cols, target = _aramata_columns(G)
    A = [[col[0][i] for col in cols] for i in range(len(target))]
    try:
        sol = lp.solve(A, target)
    except lp.Infeasible as e:
        raise Infeasible(str(e)) from e
    terms = []
    residual = regular_character(G) - trivial_character(G)
    for (mult, term), lam in zip(cols, sol.x):
        if lam > 0:
            term.coefficient = lam
            terms.append(term)
            residual = residual - term.induced * lam
    return AramataDecomposition(terms, residual)


@dataclass
class RemarkProbe:
    optimum: Fraction
    argmax: AramataTerm
    epsilon: Fraction
    exceeds: bool  # optimum >= 1 + epsilon

    def to_json(self, G: FiniteGroup) -> dict:
        return {
            "optimum": str(self.optimum),
            "argmax": self.argmax.to_json(G),
            "epsilon": str(self.epsilon),
            "exceeds_one_plus_epsilon": self.exceeds,
        }


def remark_probe(G: FiniteGroup, epsilon=Fraction(1, 1000)) -> RemarkProbe:
    """Largest coefficient any feasible grouped decomposition can carry."""
    table, cols, target = _aramata_columns(G)
    A = [[col[0][i] for col in cols] for i in range(len(target))]
    best = None
    for j in range(len(cols)):
        c = [1 if k == j else 0 for k in range(len(cols))]
        val = lp.solve(A, target, c).value
        if best is None or val > best[0]:
            best = (val, j)
    epsilon = Fraction(epsilon)
    return RemarkProbe(best[0], cols[best[1]][1], epsilon, best[0] >= 1 + epsilon)
