import numpy as np
import pytest

from artinzeta.chartab import (
    CliffordViolation,
    GroupMismatch,
    character_table,
    clifford_split,
    decompose,
    huppert_criterion,
    induce,
    inner_product,
    is_monomial,
    permutation_character_probe,
    regular_character,
    restrict,
    theta_is_character,
    trivial_character,
)
from artinzeta.groups import GroupTag, normal_subgroups, subgroups_up_to_conjugacy
from conftest import catalog_group
from oracles import numeric_character_table

ORACLE_TAGS = [
    GroupTag("Symmetric", 3), GroupTag("Dihedral", 4), GroupTag("Q8"), GroupTag("Alternating", 4),
    GroupTag("SL2_3"), GroupTag("Symmetric", 4), GroupTag("Alternating", 5), GroupTag("AGL1", 7),
    GroupTag("AGL1Prime", 11), GroupTag("Cyclic", 12), GroupTag("PSL2", 7),
]


def as_matrix(table):
    return np.array([[complex(v) for v in chi.values] for chi in table])


def same_rows(A, B, tol=1e-8):
    left = [list(r) for r in B]
    for r in A:
        hit = [i for i, s in enumerate(left) if np.allclose(r, s, atol=tol)]
        if not hit:
            return False
        left.pop(hit[0])
    return not left


@pytest.mark.parametrize("tag", ORACLE_TAGS, ids=str)
def test_matches_numeric_oracle(tag):
    G = catalog_group(tag)
    ref = numeric_character_table(
        list(range(G.order)), G.mul, lambda x: G.inv[x], [sorted(c.members) for c in G.classes]
    )
    assert same_rows(as_matrix(character_table(G)), ref)


@pytest.mark.parametrize("tag", ORACLE_TAGS, ids=str)
def test_orthogonality_exact(tag):
    G = catalog_group(tag)
    T = character_table(G)
    for i, a in enumerate(T):
        for j, b in enumerate(T):
            assert inner_product(a, b) == (1 if i == j else 0)
    assert sum(d * d for d in T.degrees) == G.order
    assert T.degrees[0] == 1 and all(v == 1 for v in T[0].values)


def test_known_degrees():
    assert sorted(character_table(catalog_group(GroupTag("Alternating", 5))).degrees) == [1, 3, 3, 4, 5]
    assert sorted(character_table(catalog_group(GroupTag("PSL2", 7))).degrees) == [1, 3, 3, 6, 7, 8]
    assert sorted(character_table(catalog_group(GroupTag("SL2_3"))).degrees) == [1, 1, 1, 2, 2, 2, 3]


def test_frobenius_reciprocity():
    G = catalog_group(GroupTag("Symmetric", 4))
    T = character_table(G)
    for H in subgroups_up_to_conjugacy(G):
        for psi in character_table(H.group):
            ind = induce(H, psi)
            for chi in T:
                assert inner_product(ind, chi) == inner_product(psi, restrict(chi, H))


def test_decompose_regular():
    G = catalog_group(GroupTag("Alternating", 5))
    dec = decompose(regular_character(G))
    assert dec.is_genuine
    assert [int(m) for m in dec.multiplicities] == character_table(G).degrees


def test_group_mismatch():
    a = trivial_character(catalog_group(GroupTag("Symmetric", 3)))
    b = trivial_character(catalog_group(GroupTag("Cyclic", 3)))
    with pytest.raises(GroupMismatch):
        a + b


def test_monomial():
    assert not is_monomial(catalog_group(GroupTag("SL2_3"))).monomial
    r = is_monomial(catalog_group(GroupTag("Symmetric", 4)))
    assert r.monomial and len(r.witnesses) == 5
    assert huppert_criterion(catalog_group(GroupTag("SL2_3"))) is None
    assert huppert_criterion(catalog_group(GroupTag("AGL1", 7))) is not None


def test_clifford():
    G = catalog_group(GroupTag("Symmetric", 4))
    T = character_table(G)
    for N in normal_subgroups(G):
        for chi in T:
            parts = clifford_split(chi, N)
            assert parts


def test_clifford_violation_is_reported():
    G = catalog_group(GroupTag("Symmetric", 4))
    T = character_table(G)
    N = [N for N in normal_subgroups(G) if N.order == 12][0]
    bad = T[0] + T[[i for i, d in enumerate(T.degrees) if d == 3][0]]
    with pytest.raises(CliffordViolation):
        clifford_split(bad, N)


def test_theta_and_probe():
    G = catalog_group(GroupTag("Alternating", 5))
    T = character_table(G)
    assert theta_is_character(G, [1] * len(T)).genuine
    H = [H for H in subgroups_up_to_conjugacy(G) if H.order == 12][0]
    probe = permutation_character_probe(G, H)
    assert probe.decomposition.is_genuine
    assert not probe.has_multiplicity_ge_2
