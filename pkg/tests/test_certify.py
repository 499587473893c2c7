import copy
import json
from fractions import Fraction

import pytest

from artinzeta.certify import (
    AbelianInput,
    Certificate,
    aramata_brauer_decompose,
    certify_S2,
    certify_S3,
    is_minimal_simple,
    remark_probe,
    thompson_match,
    verify_certificate,
)
from artinzeta.chartab import regular_character, trivial_character
from artinzeta.groups import GroupTag
from conftest import catalog_group


def cert_json(tag, target=2):
    G = catalog_group(tag)
    c = certify_S2(G) if target == 2 else certify_S3(G)
    return G, json.loads(json.dumps(c.to_json()))


def test_abelian_rejected():
    with pytest.raises(AbelianInput):
        certify_S2(catalog_group(GroupTag("Cyclic", 12)))


def test_roundtrip_and_accept():
    G, d = cert_json(GroupTag("Symmetric", 4), 3)
    assert Certificate.from_json(d).to_json() == d
    assert verify_certificate(G, d).accepted
    assert verify_certificate(None, d).accepted


def test_inflated_multiplicity_rejected():
    G, d = cert_json(GroupTag("Symmetric", 3))
    bad = copy.deepcopy(d)
    bad["target"] = 3
    bad["root"]["claimed_multiplicity"] = 3
    assert not verify_certificate(G, bad).accepted


def test_tampered_witness_rejected():
    G, d = cert_json(GroupTag("Symmetric", 4), 3)
    bad = copy.deepcopy(d)
    w = bad["root"]["witnesses"][-1]
    w["values"] = [{"m": 1, "terms": [[0, "2/1"]]} for _ in w["values"]]
    assert not verify_certificate(G, bad).accepted


def test_wrong_group_rejected():
    _, d = cert_json(GroupTag("Symmetric", 4), 3)
    v = verify_certificate(catalog_group(GroupTag("Alternating", 5)), d)
    assert not v.accepted and v.result == "reject"


def test_garbage_never_raises():
    G = catalog_group(GroupTag("Symmetric", 3))
    for junk in ({}, {"target": 2}, {"target": 7, "group": {}, "root": {}}, {"target": 2, "group": {"order": 6}, "root": {"kind": "Nope"}}):
        assert not verify_certificate(G, junk).accepted


def test_s3_absent_for_s3_and_q8():
    assert certify_S3(catalog_group(GroupTag("Symmetric", 3))) is None
    assert certify_S3(catalog_group(GroupTag("Q8"))) is None


def test_sl2_3_goes_through_quotient():
    G, d = cert_json(GroupTag("SL2_3"), 3)
    assert d["root"]["kind"] == "QuotientStep"
    assert verify_certificate(G, d).accepted


def test_thompson():
    assert str(thompson_match(catalog_group(GroupTag("PSL2", 7)))) == "PSL2(7)"
    assert str(thompson_match(catalog_group(GroupTag("Alternating", 5)))) == "PSL2(4)"
    assert thompson_match(catalog_group(GroupTag("Symmetric", 4))) is None
    assert is_minimal_simple(catalog_group(GroupTag("PSL2", 8)))
    assert not is_minimal_simple(catalog_group(GroupTag("PSL2", 9)))


def test_aramata_small():
    G = catalog_group(GroupTag("Symmetric", 3))
    dec = aramata_brauer_decompose(G)
    assert dec.residual.is_zero()
    assert all(isinstance(t.coefficient, Fraction) and t.coefficient > 0 for t in dec.terms)
    total = trivial_character(G)
    for t in dec.terms:
        total = total + t.induced * t.coefficient
    assert total == regular_character(G)


def test_remark_probe_s3():
    assert remark_probe(catalog_group(GroupTag("Symmetric", 3))).optimum == 1
