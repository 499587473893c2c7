"""Batch command-line front end.  Every subcommand writes one JSON report
(euler-check writes CSV unless --format json is given)."""

from __future__ import annotations

import argparse
import csv
import hashlib
import io
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from . import __version__
from .groups import CATALOG, FiniteGroup, GroupError, GroupTag, UnsupportedParameter, perm_from_cycles, validate_tag

REPORT_SCHEMA = "artinzeta.report/1"
PRECISION_ENV = "ARTINZETA_PRECISION"


class ParseError(ValueError):
    def __init__(self, message: str, position: int, expected: str):
        super().__init__(f"{message} at position {position} (expected {expected})")
        self.position = position
        self.expected = expected


# ---------------------------------------------------------------------------
# group spec mini-language

_ALIASES = {
    "C": "Cyclic", "Cyclic": "Cyclic",
    "D": "Dihedral", "Dihedral": "Dihedral",
    "S": "Symmetric", "Sym": "Symmetric", "Symmetric": "Symmetric",
    "A": "Alternating", "Alt": "Alternating", "Alternating": "Alternating",
    "AGL1": "AGL1", "AGL1Prime": "AGL1Prime", "AGL1'": "AGL1Prime",
    "PSL2": "PSL2", "Sz": "Sz",
}
# families that exist only at one parameter
_PINNED = {"SL2": (3, "SL2_3"), "PSL3": (3, "PSL3_3")}
_FIXED = {"Q8", "SL2_3", "PSL3_3", "Sz8"}


@dataclass
class PermSpec:
    generators: list
    degree: int


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.i = 0

    def skip(self):
        while self.i < len(self.text) and self.text[self.i].isspace():
            self.i += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.i] if self.i < len(self.text) else ""

    def expect(self, ch: str):
        if self.peek() != ch:
            raise ParseError(f"unexpected {self.peek()!r}" if self.peek() else "unexpected end", self.i, repr(ch))
        self.i += 1

    def name(self) -> str:
        self.skip()
        j = self.i
        while j < len(self.text) and (self.text[j].isalnum() or self.text[j] in "_'"):
            j += 1
        if j == self.i:
            raise ParseError("missing name", self.i, "a group name")
        out, self.i = self.text[self.i : j], j
        return out

    def integer(self) -> int:
        self.skip()
        j = self.i
        while j < len(self.text) and self.text[j].isdigit():
            j += 1
        if j == self.i:
            raise ParseError("missing integer", self.i, "a non-negative integer")
        out, self.i = int(self.text[self.i : j]), j
        return out

    def end(self):
        self.skip()
        if self.i != len(self.text):
            raise ParseError(f"trailing input {self.text[self.i:]!r}", self.i, "end of input")


def parse_group_spec(s: str):
    """``catalog:NAME(params)`` gives a GroupTag, ``perm:[(0 1 2),(0 1)]`` a PermSpec."""
    sc = _Scanner(s)
    scheme = sc.name()
    sc.expect(":")
    if scheme == "catalog":
        return _parse_catalog(sc)
    if scheme == "perm":
        return _parse_perm(sc)
    raise ParseError(f"unknown scheme {scheme!r}", 0, "'catalog' or 'perm'")


def _parse_catalog(sc: _Scanner) -> GroupTag:
    pos = sc.i
    name = sc.name()
    param = None
    if sc.peek() == "(":
        sc.expect("(")
        param = sc.integer()
        sc.expect(")")
    sc.end()
    try:
        if name in _PINNED:
            need, fixed = _PINNED[name]
            if param != need:
                raise UnsupportedParameter(f"{name} is only available at parameter {need}")
            return validate_tag(GroupTag(fixed))
        if name in _FIXED:
            if param is not None:
                raise UnsupportedParameter(f"{name} takes no parameter")
            return validate_tag(GroupTag(name))
        if name not in _ALIASES:
            raise ParseError(f"unknown group name {name!r}", pos, "a catalog family")
        if param is None:
            raise ParseError(f"{name} needs a parameter", sc.i, "'('")
        return validate_tag(GroupTag(_ALIASES[name], param))
    except UnsupportedParameter as e:
        raise ParseError(f"unsupported parameter: {e}", pos, "a supported catalog entry") from e


def _parse_perm(sc: _Scanner) -> PermSpec:
    sc.expect("[")
    gens_cycles = []
    while True:
        cycles = []
        while sc.peek() == "(":
            sc.expect("(")
            cyc = []
            while sc.peek() not in (")", ""):
                cyc.append(sc.integer())
                if sc.peek() == ",":
                    sc.expect(",")
            sc.expect(")")
            if len(set(cyc)) != len(cyc):
                raise ParseError("repeated point in a cycle", sc.i, "distinct points")
            cycles.append(cyc)
        if not cycles:
            raise ParseError("empty generator", sc.i, "'('")
        gens_cycles.append(cycles)
        if sc.peek() == ",":
            sc.expect(",")
            continue
        sc.expect("]")
        break
    sc.end()
    degree = 1 + max((p for g in gens_cycles for c in g for p in c), default=0)
    gens = []
    for cycles in gens_cycles:
        perm = list(range(degree))
        for cyc in reversed(cycles):  # rightmost cycle acts first
            c = perm_from_cycles([cyc], degree) if len(cyc) > 1 else range(degree)
            perm = [c[x] for x in perm]
        gens.append(tuple(perm))
    return PermSpec(gens, degree)


def build_group(spec) -> FiniteGroup:
    from .groups import make_catalog

    if isinstance(spec, str):
        spec = parse_group_spec(spec)
    if isinstance(spec, GroupTag):
        return make_catalog(spec)
    return FiniteGroup(spec.generators, degree=spec.degree, tag=GroupTag("Custom"))


# ---------------------------------------------------------------------------
# reports


def catalog_hash() -> str:
    from .lfunc import FIELD_NAMES

    blob = json.dumps({"groups": [str(t) for t in CATALOG], "fields": FIELD_NAMES, "version": __version__})
    return hashlib.sha256(blob.encode()).hexdigest()


def _jsonable(x):
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return x


def dumps(obj) -> str:
    return json.dumps(_jsonable(obj), sort_keys=True, indent=2) + "\n"


@dataclass
class RunConfig:
    command: str
    options: dict = field(default_factory=dict)
    seed: int = 0
    precision: int = 128
    threads: int = 1

    def __post_init__(self):
        if self.precision < 64:
            raise ValueError("precision must be at least 64 bits")

    def to_json(self) -> dict:
        return {"command": self.command, "options": self.options, "seed": self.seed, "precision": self.precision}


def envelope(cfg: RunConfig, body: dict) -> dict:
    out = {"schema": REPORT_SCHEMA, "config": cfg.to_json(), "catalog_hash": catalog_hash()}
    out.update(body)
    return out


# ---------------------------------------------------------------------------
# commands


def _group_summary(G: FiniteGroup) -> dict:
    return {
        "tag": str(G.tag) if G.tag else None,
        "order": G.order,
        "degree": G.degree,
        "generators": [list(g) for g in G.generators],
        "class_sizes": list(G.class_sizes),
    }


def cmd_chartab(cfg, args):
    from .chartab import character_table

    G = build_group(args.group)
    return {"result": "ok", "group": _group_summary(G), "table": character_table(G).to_json()}


def cmd_monomial(cfg, args):
    from .chartab import is_monomial

    G = build_group(args.group)
    res = is_monomial(G, limit=args.limit)
    wit = {
        str(i): {"subgroup_order": w.subgroup.order, "subgroup": [list(p) for p in w.subgroup.generator_perms()], "linear_index": w.linear_index}
        for i, w in sorted(res.witnesses.items())
    }
    return {"result": "ok", "group": _group_summary(G), "monomial": res.monomial, "witnesses": wit, "offending": res.offending}


def cmd_aramata(cfg, args):
    from .certify import aramata_brauer_decompose

    G = build_group(args.group)
    dec = aramata_brauer_decompose(G)
    return {"result": "ok", "group": _group_summary(G), "decomposition": dec.to_json(G)}


def cmd_certify(cfg, args):
    from .certify import certify_S2, certify_S3, verify_certificate

    if args.verify_only:
        with open(args.verify_only) as fh:
            cert = json.load(fh)
        cert = cert.get("certificate", cert)  # accept a full certify report too
        G = build_group(args.group) if args.group else None
        v = verify_certificate(G, cert)
        return {"result": v.result, "reason": v.reason}
    G = build_group(args.group)
    cert = certify_S2(G, seed=cfg.seed) if args.target == 2 else certify_S3(G, seed=cfg.seed)
    if cert is None:
        return {"result": "none", "reason": "no irreducible of degree >= 3", "group": _group_summary(G)}
    v = verify_certificate(G, cert)
    return {"result": v.result, "reason": v.reason, "certificate": cert.to_json()}


def _euler_rows(args, threads: int):
    from .lfunc import IDENTITY_KINDS, check_local_identity, get_field, primes_up_to

    F = get_field(args.field)
    L = getattr(F, "parent", F)
    kinds = IDENTITY_KINDS if args.identity == "all" else (args.identity,)
    primes = [p for p in primes_up_to(args.pmax) if p not in L.ramified]
    jobs = [(k, p) for p in primes for k in kinds]
    # results are collected in job order, so the output does not depend on scheduling
    with ThreadPoolExecutor(max_workers=max(1, threads)) as ex:
        return list(ex.map(lambda kp: check_local_identity(kp[0], L, kp[1]), jobs))


def cmd_euler_check(cfg, args):
    rows = _euler_rows(args, cfg.threads)
    ok = all(r.passed for r in rows)
    if args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        multi = args.identity == "all"
        w.writerow((["kind"] if multi else []) + ["p", "pass", "lhs", "rhs"])
        for r in rows:
            p, passed, lhs, rhs = r.row()
            w.writerow(([r.kind] if multi else []) + [p, "true" if passed else "false", lhs, rhs])
        return buf.getvalue(), 0
    body = {
        "result": "accept" if ok else "reject",
        "field": args.field,
        "rows": [{"kind": r.kind, "p": r.p, "pass": r.passed, "lhs": r.row()[2], "rhs": r.row()[3]} for r in rows],
    }
    return body


def cmd_zeros(cfg, args):
    from .analytic import CompletedZeta, locate_zeros_on_line, zeta_value

    Z = CompletedZeta(args.field, cfg.precision)
    zs = locate_zeros_on_line(Z, 0.0, args.tmax)
    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            w = csv.writer(fh, lineterminator="\n")
            w.writerow(["t", "Lambda"])
            steps = max(1, int(args.tmax / args.sample_step))
            for i in range(1, steps + 1):
                t = i * args.tmax / steps
                w.writerow([f"{t:.6f}", f"{zeta_value(Z, complex(0.5, t)).mid.real:.12e}"])
    return {"result": "ok", "field": args.field, "zeros": [z.to_json() for z in zs], "flags": zs.flags}


def cmd_double_zeros(cfg, args):
    from .analytic import double_zero_analysis

    res = double_zero_analysis(args.tmax, cfg.precision)
    return {
        "result": "ok",
        "field": "x3m2split",
        "reports": [z.to_json() for z in res.reports],
        "shared_with_zeta_Q": [z.to_json() for z in res.shared],
        "unresolved": [z.to_json() for z in res.unresolved],
    }


def cmd_probe(cfg, args):
    from .chartab import permutation_character_probe
    from .groups import subgroups_up_to_conjugacy

    G = build_group(args.group)
    reps = subgroups_up_to_conjugacy(G, limit=args.limit)
    rows = []
    for H in reps:
        if H.order == G.order:
            continue
        pr = permutation_character_probe(G, H)
        rows.append(
            {
                "subgroup_order": H.order,
                "subgroup": [list(p) for p in H.generator_perms()],
                "multiplicities": [str(m) for m in pr.decomposition.multiplicities],
                "has_multiplicity_ge_2": pr.has_multiplicity_ge_2,
            }
        )
    return {"result": "ok", "group": _group_summary(G), "probes": rows}


COMMANDS = {
    "chartab": cmd_chartab,
    "monomial": cmd_monomial,
    "aramata": cmd_aramata,
    "certify": cmd_certify,
    "euler-check": cmd_euler_check,
    "zeros": cmd_zeros,
    "double-zeros": cmd_double_zeros,
    "probe-conjecture1": cmd_probe,
}


def _default_precision() -> int:
    try:
        return int(os.environ.get(PRECISION_ENV, "128"))
    except ValueError:
        return 128


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--precision", type=int, default=_default_precision())
    common.add_argument("--threads", type=int, default=1)
    common.add_argument("--output", "-o", default=None, help="write the report here instead of stdout")

    p = argparse.ArgumentParser(prog="artinzeta", description="Character theory and Dedekind zeta zeros.")
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    def group_cmd(name, required=True):
        sp = sub.add_parser(name, parents=[common])
        sp.add_argument("--group", required=required)
        return sp

    group_cmd("chartab")
    group_cmd("monomial").add_argument("--limit", type=int, default=500)
    group_cmd("aramata")
    sp = group_cmd("certify", required=False)
    sp.add_argument("--target", type=int, choices=(2, 3), default=2)
    sp.add_argument("--verify-only", default=None, metavar="CERT")
    sp = sub.add_parser("euler-check", parents=[common])
    sp.add_argument("--field", default="x3m2split")
    sp.add_argument("--identity", default="all", choices=("all", "additivity", "induction", "factorization", "regular", "grouped"))
    sp.add_argument("--pmax", type=int, default=1000)
    sp.add_argument("--format", choices=("csv", "json"), default="csv")
    sp = sub.add_parser("zeros", parents=[common])
    sp.add_argument("--field", default="q_cbrt2")
    sp.add_argument("--tmax", type=float, default=30.0)
    sp.add_argument("--csv", default=None, help="also write (t, Lambda(1/2+it)) samples")
    sp.add_argument("--sample-step", type=float, default=0.05)
    sp = sub.add_parser("double-zeros", parents=[common])
    sp.add_argument("--tmax", type=float, default=30.0)
    group_cmd("probe-conjecture1").add_argument("--limit", type=int, default=500)
    return p


_OPTION_SKIP = {"command", "seed", "precision", "threads", "output", "csv"}  # output locations are not part of a run


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 1 if e.code else 0
    try:
        cfg = RunConfig(
            args.command,
            {k: v for k, v in sorted(vars(args).items()) if k not in _OPTION_SKIP},
            args.seed,
            args.precision,
            args.threads,
        )
        if getattr(args, "group", None):
            parse_group_spec(args.group)
    except (ParseError, ValueError) as e:
        print(f"error: {e}", file=stderr)
        return 1
    if args.command == "certify" and not args.group and not args.verify_only:
        print("error: certify needs --group", file=stderr)
        return 1
    try:
        out = COMMANDS[args.command](cfg, args)
    except ParseError as e:
        print(f"error: {e}", file=stderr)
        return 1
    except Exception as e:  # computation failures map to exit 2
        print(f"error: {type(e).__name__}: {e}", file=stderr)
        return 2
    if isinstance(out, tuple):
        text, code = out
    else:
        text, code = dumps(envelope(cfg, out)), 0
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        stdout.write(text)
    return code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
