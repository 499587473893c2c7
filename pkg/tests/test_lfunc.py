from math import comb

import mpmath
import pytest

from artinzeta.chartab import character_table, regular_character
from artinzeta.cyclo import Cyclotomic
from artinzeta.lfunc import (
    AmbiguousCycleType,
    FIELD_NAMES,
    FieldMismatch,
    GaloisNumberField,
    IDENTITY_KINDS,
    RamifiedPrime,
    check_aramata_local,
    check_local_identity,
    dirichlet_coefficients,
    factor_pattern_mod_p,
    frobenius_class,
    get_field,
    local_factor,
    poly_str,
    primes_up_to,
)
from artinzeta.certify import aramata_brauer_decompose
from artinzeta.groups import GroupTag
from conftest import catalog_group
from oracles import (
    cbrt2_zeta_coeffs,
    cyclotomic_zeta_coeffs,
    eisenstein_zeta_coeffs,
    gaussian_zeta_coeffs,
    splitting_field_x3m2_pattern,
)

L = get_field("x3m2split")


def test_field_registry():
    for name in FIELD_NAMES:
        F = get_field(name)
        assert F.degree == sum(a * b for a, b in zip((1, 2), F.signature))
    assert L.discriminant == -34992
    assert get_field("q_cbrt2").discriminant == -108
    with pytest.raises(Exception):
        get_field("q_sqrt5")


@pytest.mark.parametrize("N", [200])
def test_coefficients_against_oracles(N):
    assert dirichlet_coefficients(get_field("q_cbrt2"), "zeta", N).as_integers() == cbrt2_zeta_coeffs(N)
    assert dirichlet_coefficients(get_field("q_i"), "zeta", N).as_integers() == gaussian_zeta_coeffs(N)
    assert dirichlet_coefficients(get_field("q_sqrtm3"), "zeta", N).as_integers() == eisenstein_zeta_coeffs(N)
    for n in (5, 7, 8, 11, 13):
        assert dirichlet_coefficients(get_field(f"q_zeta{n}"), "zeta", N).as_integers() == cyclotomic_zeta_coeffs(n, N)


def test_splitting_field_zeta_factor_against_sextic():
    chi = L.zeta_character()
    for p in primes_up_to(400):
        pat = splitting_field_x3m2_pattern(p)
        if pat is None or p in L.ramified:
            continue
        f = pat[0]
        assert set(pat) == {f}
        expect = [Cyclotomic.rational(0)] * 7
        # (1 - T^f)^(6/f)
        g = 6 // f
        for k in range(g + 1):
            expect[k * f] = Cyclotomic.rational(comb(g, k) * (-1) ** k)
        assert list(local_factor(chi, L, p).coeffs) == expect


def test_ramified_factors():
    chi = L.zeta_character()
    # 2 is totally ramified in Q(cbrt 2) and ramified in Q(sqrt -3) with residue degree 2
    assert poly_str(local_factor(chi, L, 2).coeffs) == "1 - T^2"
    assert poly_str(local_factor(chi, L, 3).coeffs) == "1 - T"
    sig = {int(c.degree): c for c in character_table(L.group)}
    assert poly_str(local_factor(sig[2], L, 2).coeffs) == "1"


def test_frobenius_and_patterns():
    with pytest.raises(RamifiedPrime):
        factor_pattern_mod_p([-2, 0, 0, 1], 3)
    assert sorted(factor_pattern_mod_p([-2, 0, 0, 1], 31)) == [1, 1, 1]
    assert frobenius_class(L, 31) == 0
    assert L.group.element_order(L.group.classes[frobenius_class(L, 7)].rep) == 3
    assert L.group.element_order(L.group.classes[frobenius_class(L, 5)].rep) == 2
    with pytest.raises(RamifiedPrime):
        frobenius_class(L, 2)


def test_abelian_frobenius_is_residue():
    F = get_field("q_zeta7")
    for p in (2, 3, 5, 11, 13, 29):
        g = F.group.classes[frobenius_class(F, p)].rep
        assert F.group.element_order(g) == next(k for k in range(1, 7) if pow(p, k, 7) == 1)


@pytest.mark.parametrize("kind", IDENTITY_KINDS)
def test_identities_small_primes(kind):
    for p in primes_up_to(300):
        if p in L.ramified:
            continue
        assert check_local_identity(kind, L, p).passed


def test_identity_errors():
    with pytest.raises(RamifiedPrime):
        check_local_identity("regular", L, 3)
    with pytest.raises(ValueError):
        check_local_identity("bogus", L, 5)
    other = character_table(catalog_group(GroupTag("Symmetric", 3)))
    with pytest.raises(FieldMismatch):
        local_factor(other[1], L, 5)


def test_aramata_local():
    dec = aramata_brauer_decompose(L.group)
    for p in (5, 7, 11, 13, 31, 43):
        assert check_aramata_local(L, p, dec).passed


def test_ambiguous_cycle_types_detected():
    G = catalog_group(GroupTag("Cyclic", 4))
    with pytest.raises(AmbiguousCycleType):
        GaloisNumberField("bad", (1, 0, 0, 0, 1), G, {}, 256, (0, 2))


def _euler_product(F, s, pmax):
    chi = F.zeta_character()
    out = mpmath.mpf(1)
    for p in primes_up_to(pmax):
        c = local_factor(chi, F, p).coeffs
        out /= sum(mpmath.mpf(complex(a).real) * mpmath.mpf(p) ** (-s * k) for k, a in enumerate(c))
    return out


def test_euler_product_gaussian():
    ref = mpmath.zeta(2) * mpmath.catalan
    assert abs(_euler_product(get_field("q_i"), 2, 10**4) / ref - 1) < 1e-4


def test_euler_product_eisenstein():
    ref = mpmath.zeta(2) * (mpmath.zeta(2, mpmath.mpf(1) / 3) - mpmath.zeta(2, mpmath.mpf(2) / 3)) / 9
    assert abs(_euler_product(get_field("q_sqrtm3"), 2, 10**4) / ref - 1) < 1e-4
