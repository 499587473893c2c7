import random

import flint
import mpmath
import pytest

from artinzeta.analytic import (
    CompletedZeta,
    UnsupportedField,
    ZeroReport,
    double_zero_analysis,
    double_zero_report,
    locate_zeros_on_line,
    zero_count_box,
    zeta_value,
)
from oracles import chi2_zeros, lambda_chi2, riemann_zeros

mpmath.mp.dps = 30


def L_chi2(s):
    """L(s) of the level-108 form from the oracle's completed function."""
    A = mpmath.sqrt(108) / (2 * mpmath.pi)
    return lambda_chi2(s) / (A**s * mpmath.gamma(s))


def L_minus3(s):
    return (mpmath.zeta(s, mpmath.mpf(1) / 3) - mpmath.zeta(s, mpmath.mpf(2) / 3)) / mpmath.mpf(3) ** s


def L_minus4(s):
    return (mpmath.zeta(s, mpmath.mpf(1) / 4) - mpmath.zeta(s, mpmath.mpf(3) / 4)) / mpmath.mpf(4) ** s


REFERENCE = {
    "rationals": lambda s: mpmath.zeta(s),
    "q_i": lambda s: mpmath.zeta(s) * L_minus4(s),
    "q_sqrtm3": lambda s: mpmath.zeta(s) * L_minus3(s),
    "q_cbrt2": lambda s: mpmath.zeta(s) * L_chi2(s),
    "x3m2split": lambda s: mpmath.zeta(s) * L_minus3(s) * L_chi2(s) ** 2,
}


def test_zeta_two():
    v = zeta_value(CompletedZeta("rationals"), 2)
    with flint.ctx.workprec(200):
        exact = flint.arb.pi() ** 2 / 6
    assert v.zeta.real.overlaps(exact) and v.zeta.imag.overlaps(flint.arb(0))
    assert v.zeta.rad() < 2.0**-60


@pytest.mark.parametrize("name", sorted(REFERENCE))
def test_values_against_mpmath(name):
    Z = CompletedZeta(name)
    rng = random.Random(name)
    for _ in range(4):
        s = complex(rng.uniform(-0.5, 2.5), rng.uniform(-12, 12))
        if abs(s - 1) < 0.1 or abs(s) < 0.1:
            continue
        ref = complex(REFERENCE[name](mpmath.mpc(s)))
        got = complex(zeta_value(Z, s).zeta.mid())
        assert abs(got - ref) <= 1e-12 * max(1.0, abs(ref)), (s, got, ref)


def reflect(s: complex) -> flint.acb:
    # 1 - s formed exactly; a float subtraction would round
    with flint.ctx.workprec(300):
        return 1 - flint.acb(flint.arb(s.real), flint.arb(s.imag))


@pytest.mark.parametrize("name", sorted(REFERENCE))
def test_functional_equation(name):
    Z = CompletedZeta(name)
    rng = random.Random(7)
    for _ in range(10):
        s = complex(rng.uniform(0.05, 0.95), rng.uniform(-30, 30))
        a = zeta_value(Z, s, c=1.3).Lambda
        b = zeta_value(Z, reflect(s), c=1.3).Lambda
        assert a.overlaps(b)


def test_riemann_zeros_located():
    zs = locate_zeros_on_line(CompletedZeta("rationals"), 1, 35)
    ref = riemann_zeros(35)
    assert len(zs) == len(ref) == 5
    for z, r in zip(zs, ref):
        assert abs(z.t - r) <= z.radius + 1e-12 and z.radius <= 1e-6
    assert not zs.flags


def test_counts_rationals():
    Z = CompletedZeta("rationals")
    assert zero_count_box(Z, 0, 1) == 0
    assert zero_count_box(Z, 0, 20) == 1
    assert zero_count_box(Z, 0, 40) == len(riemann_zeros(40))


def test_cbrt2_low_zeros_against_oracle():
    ref = chi2_zeros(10)
    zs = locate_zeros_on_line(CompletedZeta("q_cbrt2"), 0.1, 10)
    assert len(zs) == len(ref)
    for z, r in zip(zs, ref):
        assert abs(z.t - r) < 1e-6


def test_guards():
    with pytest.raises(UnsupportedField):
        CompletedZeta("q_zeta7")
    with pytest.raises(ValueError):
        CompletedZeta("rationals", precision=32)
    with pytest.raises(ValueError):
        zeta_value(CompletedZeta("rationals"), 1)
    with pytest.raises(ValueError):
        ZeroReport(1.0, 0.0)
    with pytest.raises(ValueError):
        ZeroReport(1.0, 1e-7, 0)
    with pytest.raises(ValueError):
        double_zero_analysis(60)


def test_double_zero_report_low():
    assert double_zero_report(1) == []
    res = double_zero_analysis(10)
    assert len(res.reports) == len(chi2_zeros(10)) and not res.shared and not res.unresolved
    assert all(r.factorMultiplicity == 2 and r.excludedSimpleOverlap for r in res.reports)
