import csv
import io
import json

import pytest

from artinzeta.cli import ParseError, PermSpec, build_group, parse_group_spec, run
from artinzeta.groups import GroupTag


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


@pytest.mark.parametrize(
    "text, tag",
    [
        ("catalog:S(4)", GroupTag("Symmetric", 4)),
        ("catalog:Sym(4)", GroupTag("Symmetric", 4)),
        ("catalog:C(12)", GroupTag("Cyclic", 12)),
        ("catalog:D(5)", GroupTag("Dihedral", 5)),
        ("catalog:AGL1'(7)", GroupTag("AGL1Prime", 7)),
        ("catalog:PSL2(8)", GroupTag("PSL2", 8)),
        ("catalog:SL2(3)", GroupTag("SL2_3")),
        ("catalog:PSL3(3)", GroupTag("PSL3_3")),
        ("catalog:Q8", GroupTag("Q8")),
    ],
)
def test_parse_catalog(text, tag):
    assert parse_group_spec(text) == tag


def test_parse_perm():
    spec = parse_group_spec("perm:[(0 1 2),(0 1)]")
    assert isinstance(spec, PermSpec)
    assert build_group(spec).order == 6


@pytest.mark.parametrize("bad", ["catalog:S(", "catalog:Foo(3)", "perm:[(0 1 1)]", "nope", "catalog:SL2(5)", "catalog:Sz(32)"])
def test_parse_errors(bad):
    with pytest.raises(ParseError) as info:
        parse_group_spec(bad)
    assert info.value.position >= 0 and info.value.expected


def test_sz32_message_and_exit():
    code, out, err = call("chartab", "--group", "catalog:Sz(32)")
    assert code == 1
    assert "only Sz(8)" in err and "position" in err


def test_chartab_report():
    code, out, _ = call("chartab", "--group", "catalog:S(3)")
    assert code == 0
    d = json.loads(out)
    assert d["schema"] == "artinzeta.report/1"
    assert d["table"]["degrees"] == [1, 1, 2]
    assert d["config"]["seed"] == 0


def test_monomial_sl23():
    code, out, _ = call("monomial", "--group", "catalog:SL2(3)")
    assert code == 0 and json.loads(out)["monomial"] is False


def test_certify_and_verify(tmp_path):
    path = tmp_path / "cert.json"
    code, _, _ = call("certify", "--group", "catalog:PSL2(7)", "--target", "3", "--output", str(path))
    assert code == 0
    report = json.loads(path.read_text())
    assert report["result"] == "accept"
    code, out, _ = call("certify", "--verify-only", str(path))
    assert code == 0 and json.loads(out)["result"] == "accept"
    code, out, _ = call("certify", "--group", "catalog:A(5)", "--verify-only", str(path))
    assert code == 0 and json.loads(out)["result"] == "reject"


def test_euler_check_csv():
    code, out, _ = call("euler-check", "--field", "x3m2split", "--identity", "factorization", "--pmax", "60")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert rows and all(r["pass"] == "true" for r in rows)
    assert [int(r["p"]) for r in rows][:3] == [5, 7, 11]


def test_zeros_rationals():
    code, out, _ = call("zeros", "--field", "rationals", "--tmax", "22")
    d = json.loads(out)
    ts = [float(z["t"]) for z in d["zeros"]]
    assert code == 0 and len(ts) == 2 and abs(ts[0] - 14.134725) < 1e-5


def test_computation_error_exit_code():
    code, _, err = call("zeros", "--field", "q_zeta7", "--tmax", "5")
    assert code == 2 and err


def test_aramata_report():
    code, out, _ = call("aramata", "--group", "catalog:S(3)")
    d = json.loads(out)
    assert code == 0 and d["decomposition"]["residual_zero"] is True
