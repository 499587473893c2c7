import pytest

from artinzeta import groups
from artinzeta.groups import (
    CATALOG,
    GroupTag,
    FiniteGroup,
    InvalidPermutation,
    UnsupportedParameter,
    BoundExceeded,
    is_nilpotent,
    is_simple,
    is_solvable,
    is_supersolvable,
    make_catalog,
    normal_subgroups,
    perm_from_cycles,
    perm_mul,
    perm_to_cycles,
    quotient,
    subgroups_up_to_conjugacy,
    sylow_subgroup,
)
from conftest import catalog_group
from oracles import sympy_group

EXPECTED_ORDERS = {
    GroupTag("Symmetric", 4): 24,
    GroupTag("Alternating", 5): 60,
    GroupTag("Q8"): 8,
    GroupTag("SL2_3"): 24,
    GroupTag("AGL1", 8): 56,
    GroupTag("AGL1", 9): 72,
    GroupTag("AGL1Prime", 11): 55,
    GroupTag("PSL2", 7): 168,
    GroupTag("PSL2", 8): 504,
    GroupTag("PSL2", 9): 360,
    GroupTag("PSL2", 11): 660,
    GroupTag("PSL3_3"): 5616,
    GroupTag("Sz8"): 29120,
}


@pytest.mark.parametrize("tag", list(EXPECTED_ORDERS), ids=str)
def test_orders(tag):
    assert catalog_group(tag).order == EXPECTED_ORDERS[tag]


@pytest.mark.parametrize("tag", [t for t in CATALOG if t.family not in ("PSL3_3", "Sz8")], ids=str)
def test_against_sympy(tag):
    G = catalog_group(tag)
    S = sympy_group(G.generators)
    assert S.order() == G.order
    assert len(S.conjugacy_classes()) == len(G.classes)
    assert S.is_solvable == is_solvable(G)
    assert S.is_nilpotent == is_nilpotent(G)
    assert S.is_abelian == G.is_abelian()
    assert sorted(len(c) for c in S.conjugacy_classes()) == sorted(G.class_sizes)


def test_class_order_deterministic():
    G = make_catalog("Symmetric", 3)
    assert G.class_sizes == [1, 2, 3]
    assert G.classes[0].rep == 0
    assert make_catalog("Symmetric", 3).class_sizes == G.class_sizes


def test_simplicity():
    for tag, simple in [
        (GroupTag("Alternating", 5), True),
        (GroupTag("PSL2", 7), True),
        (GroupTag("PSL2", 8), True),
        (GroupTag("Symmetric", 4), False),
        (GroupTag("AGL1", 5), False),
    ]:
        assert is_simple(catalog_group(tag)) is simple


def test_supersolvable():
    assert is_supersolvable(catalog_group(GroupTag("Dihedral", 4)))
    assert is_supersolvable(catalog_group(GroupTag("Symmetric", 3)))
    assert not is_supersolvable(catalog_group(GroupTag("Alternating", 4)))
    assert not is_supersolvable(catalog_group(GroupTag("Symmetric", 4)))
    assert is_supersolvable(catalog_group(GroupTag("AGL1", 5)))


def test_subgroup_classes_s4_a5():
    # S4 has 11 conjugacy classes of subgroups, A5 has 9
    assert len(subgroups_up_to_conjugacy(catalog_group(GroupTag("Symmetric", 4)))) == 11
    assert len(subgroups_up_to_conjugacy(catalog_group(GroupTag("Alternating", 5)))) == 9


def test_normal_subgroups_and_quotient():
    G = catalog_group(GroupTag("Symmetric", 4))
    orders = sorted(N.order for N in normal_subgroups(G))
    assert orders == [1, 4, 12, 24]
    V4 = [N for N in normal_subgroups(G) if N.order == 4][0]
    Q, _ = quotient(G, V4)
    assert Q.order == 6 and not Q.is_abelian()


def test_sylow():
    G = catalog_group(GroupTag("PSL2", 7))
    assert sylow_subgroup(G, 2).order == 8
    assert sylow_subgroup(G, 7).order == 7
    with pytest.raises(groups.PrimeDoesNotDivide):
        sylow_subgroup(G, 5)


def test_perm_helpers():
    a = perm_from_cycles([(0, 1, 2)], 4)
    assert perm_to_cycles(a) == [(0, 1, 2)]
    b = perm_from_cycles([(0, 3)], 4)
    # composition applies the right factor first
    assert perm_mul(a, b)[3] == a[b[3]]
    with pytest.raises(InvalidPermutation):
        FiniteGroup([(0, 0, 1)])


def test_unsupported_and_bounds():
    with pytest.raises(UnsupportedParameter):
        make_catalog("Sz", 32)
    with pytest.raises(UnsupportedParameter):
        make_catalog("AGL1", 6)
    with pytest.raises(UnsupportedParameter):
        make_catalog("AGL1Prime", 8)
    with pytest.raises(BoundExceeded):
        FiniteGroup(make_catalog("Symmetric", 6).generators, max_order=100)


def test_embedding_search():
    G = catalog_group(GroupTag("PSL2", 7))
    emb = groups.find_subgroup_isomorphic(G, GroupTag("AGL1Prime", 7))
    assert emb is not None
    H = FiniteGroup(emb.image_perms(), degree=G.degree)
    assert H.order == 21
    assert groups.find_subgroup_isomorphic(G, GroupTag("Alternating", 5)) is None
