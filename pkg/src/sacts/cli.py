"""Command line interface: ``sacts check|compute|suite|enumerate``.

Exit codes: 0 the property holds (or the command succeeded), 1 it fails and a
witness is printed, 2 input error.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import predicates as P
from .catalog import MonoidSpec, catalog, parse_spec
from .claims import UnknownClaim
from .core import (
    ActError, Subact, Subset, amalgam, coproduct, lattice, rees_quotient,
)
from .enumeration import enumerate_acts
from .io import ActFile, ActFileError, actfile_dict, dumps, load_actfile, write_actfile
from . import suite as S


class UsageError(Exception):
    pass


PROPERTIES = {
    # name: number of subacts, needs hom
    "superfluous": (1, False),
    "coessential": (1, False),
    "maximal": (1, False),
    "has-supplement": (1, False),
    "supplement": (2, False),
    "cover": (0, True),
    "hollow": (0, False),
    "co-uniform": (0, False),
    "indecomposable": (0, False),
    "cyclic": (0, False),
    "locally-cyclic": (0, False),
    "simple": (0, False),
    "local": (0, False),
    "uniserial": (0, False),
    "supplemented": (0, False),
    "projective": (0, False),
}

COMPUTATIONS = ("subacts", "maximals", "radical", "decompose", "min-gens", "supplements",
                "quotient", "coproduct", "amalgam")


def _labels(x) -> list[str]:
    if isinstance(x, (Subact, Subset)):
        return [x.parent.label(a) for a in x.members]
    return list(x)


def _witness(w):
    if w is None:
        return None
    if isinstance(w, (Subact, Subset)):
        return _labels(w)
    if isinstance(w, tuple):
        return [_witness(x) for x in w]
    return str(w)


def _fmt(labels) -> str:
    return "{" + ", ".join(labels) + "}" if labels else "∅"


def _subacts(af: ActFile, names: list[str] | None) -> list[Subact]:
    out = []
    for n in names or []:
        if n not in af.subacts:
            raise UsageError(f"unknown subact {n!r}; file defines {sorted(af.subacts)}")
        out.append(af.subacts[n])
    return out


def evaluate(af: ActFile, prop: str, subact_names=None, hom=None, mode=P.RELAXED) -> P.PropertyVerdict:
    """Evaluate one named property against an ActFile."""
    if prop not in PROPERTIES:
        raise UsageError(f"unknown property {prop!r}")
    arity, needs_hom = PROPERTIES[prop]
    subs = _subacts(af, subact_names)
    if len(subs) != arity:
        raise UsageError(f"property {prop!r} needs {arity} subact(s), got {len(subs)}")
    if needs_hom:
        if not hom or hom not in af.homs:
            raise UsageError(f"property {prop!r} needs --hom naming one of {sorted(af.homs)}")
    a = af.act
    if prop == "superfluous":
        return P.is_superfluous(a, subs[0])
    if prop == "coessential":
        return P.is_coessential(a, subs[0])
    if prop == "maximal":
        b = subs[0].mask
        ok = b in lattice(a).maximals
        return P.PropertyVerdict(ok, None if ok else "not a maximal subact")
    if prop == "has-supplement":
        if subs[0].mask == a.full:
            raise UsageError("B must be a proper subact")
        found = P.supplements_of(a, subs[0], mode)
        return P.PropertyVerdict(bool(found), None if found else "no supplement")
    if prop == "supplement":
        return P.is_supplement(a, subs[0], subs[1], mode)
    if prop == "cover":
        return P.is_cover(af.homs[hom])
    if prop == "hollow":
        return P.is_hollow(a)
    if prop == "co-uniform":
        return P.is_co_uniform(a)
    if prop == "indecomposable":
        return P.is_indecomposable(a)
    if prop == "cyclic":
        return P.is_cyclic(a)
    if prop == "locally-cyclic":
        return P.is_locally_cyclic(a)
    if prop == "simple":
        return P.is_simple(a)
    if prop == "local":
        return P.is_local_act(a)
    if prop == "uniserial":
        return P.is_uniserial(a)
    if prop == "supplemented":
        return P.is_supplemented(a, mode)
    return P.is_projective(a)


# -- commands ----------------------------------------------------------------------

def cmd_check(args) -> int:
    af = load_actfile(args.file)
    v = evaluate(af, args.property, args.subact, args.hom, args.mode)
    report = {"file": str(args.file), "property": args.property, "subacts": args.subact or [],
              "hom": args.hom, "mode": args.mode, "holds": v.holds, "witness": _witness(v.witness)}
    if args.json:
        print(dumps(report))
    else:
        line = f"{args.property}: {'holds' if v.holds else 'fails'}"
        if not v.holds and v.witness is not None:
            w = v.witness
            if isinstance(w, tuple):
                line += f" (witness B = {_fmt(_labels(w[0]))}, C = {_fmt(_labels(w[1]))})"
            elif isinstance(w, (Subact, Subset)):
                line += f" (witness {_fmt(_labels(w))})"
            else:
                line += f" ({w})"
        print(line)
    return 0 if v.holds else 1


def _one_subact(af, args, what) -> Subact:
    subs = _subacts(af, args.subact)
    if len(subs) != 1:
        raise UsageError(f"{what} needs exactly one --subact")
    return subs[0]


def _emit_act(args, act, subacts=None):
    if args.out:
        write_actfile(args.out, act, subacts)
    return actfile_dict(act, subacts)


def cmd_compute(args) -> int:
    af = load_actfile(args.file)
    a = af.act
    L = lattice(a)
    what = args.what
    if what == "subacts":
        result = [_labels(Subact(a, m)) for m in L.subacts]
    elif what == "maximals":
        result = [_labels(Subact(a, m)) for m in L.maximals]
    elif what == "radical":
        r = P.radical(a)
        result = {"radical": _labels(r.subset), "is_whole": r.is_whole,
                  "maximals": [_labels(m) for m in r.maximals]}
    elif what == "decompose":
        result = [_labels(c) for c in P.decompose(a)]
    elif what == "min-gens":
        result = [[a.label(x) for x in g] for g in P.minimal_generating_sets(a)]
    elif what == "supplements":
        b = _one_subact(af, args, what)
        result = [_labels(c) for c in P.supplements_of(a, b, args.mode)]
    elif what == "quotient":
        q, _ = rees_quotient(a, _one_subact(af, args, what))
        result = _emit_act(args, q)
    elif what == "amalgam":
        result = _emit_act(args, amalgam(a, _one_subact(af, args, what)))
    elif what == "coproduct":
        others = [load_actfile(f).act for f in args.with_ or []]
        c, _ = coproduct([a] + others)
        result = _emit_act(args, c)
    else:
        raise UsageError(f"unknown computation {what!r}")
    if isinstance(result, dict) and "act" in result:
        if not args.out or args.json:
            print(dumps(result))
    elif args.json:
        print(dumps({"compute": what, "result": result}))
    elif what == "radical":
        tag = " (no maximal subacts, Rad = A)" if result["is_whole"] else ""
        print(f"radical: {_fmt(result['radical'])}{tag}")
        print("maximals: " + (", ".join(_fmt(m) for m in result["maximals"]) or "none"))
    else:
        for item in result:
            print(_fmt(item))
    return 0


def _monoid_specs(items) -> list[MonoidSpec]:
    if not items or items == ["catalog"]:
        return catalog()
    out = []
    for it in items:
        if it == "catalog":
            out.extend(catalog())
        elif it.endswith(".json") or Path(it).is_file():
            out.append(MonoidSpec("table", (it,)))
        else:
            out.append(parse_spec(it))
    for s in out:
        s.build()
    return out


def cmd_suite(args) -> int:
    specs = _monoid_specs(args.monoids)
    claim_ids = None if not args.claims or args.claims == ["all"] else args.claims
    want_strictness = claim_ids is None or S.STRICTNESS in claim_ids
    reports = S.run_suite(specs, args.max_size, claim_ids, args.mode, up_to_iso=not args.raw,
                          raw_max_size=args.raw_oracle_size, keep_failures=args.keep_failures,
                          cache=not args.no_cache)
    if want_strictness:
        reports.append(S.strictness_report(S.strictness_witness_search(specs, args.max_size, not args.no_cache)))
    text = S.dumps_reports(reports, timing=not args.no_timing)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    if args.json:
        sys.stdout.write(text)
    else:
        for r in reports:
            status = "PASS" if r.passed else "FAIL"
            kind = "gating" if r.gating else ("open" if r.open_question else
                                              "edge" if r.literal_edge else "non-gating")
            print(f"{r.claim:<24} {r.mode or '-':<8} {status}  instances={r.instances_checked} "
                  f"failures={r.failures_total} [{kind}]")
    bad = S.gating_failures(reports)
    if bad and not args.json:
        print(f"{len(bad)} gating claim(s) failed: {', '.join(r.claim for r in bad)}")
    return 1 if bad else 0


def cmd_enumerate(args) -> int:
    m = parse_spec(args.monoid).build()
    count = 0
    for a in enumerate_acts(m, args.size, args.up_to_iso, args.seed_order):
        count += 1
        if not args.count:
            print(dumps(actfile_dict(a)))
    if args.count:
        print(count)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="sacts", description="Finite right acts over finite monoids.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", help="test one property of an act file")
    c.add_argument("file")
    c.add_argument("--property", required=True)
    c.add_argument("--subact", action="append", help="named subact from the file (repeatable)")
    c.add_argument("--hom", help="named hom from the file")
    c.add_argument("--mode", choices=P.MODES, default=P.RELAXED, help="supplement reading")
    c.add_argument("--json", action="store_true")
    c.set_defaults(func=cmd_check)

    c = sub.add_parser("compute", help="list or construct")
    c.add_argument("file")
    c.add_argument("what", choices=COMPUTATIONS)
    c.add_argument("--subact", action="append")
    c.add_argument("--with", dest="with_", nargs="+", metavar="FILE", help="extra act files for coproduct")
    c.add_argument("--mode", choices=P.MODES, default=P.RELAXED)
    c.add_argument("--out", help="write a constructed act as an ActFile")
    c.add_argument("--json", action="store_true")
    c.set_defaults(func=cmd_compute)

    c = sub.add_parser("suite", help="run the claim registry over an enumerated corpus")
    c.add_argument("--monoids", nargs="+", default=["catalog"],
                   help="'catalog', catalog specs such as S2 or cyclic_monoid(2,1), or monoid JSON files")
    c.add_argument("--max-size", type=int, default=3)
    c.add_argument("--claims", nargs="+", default=["all"])
    c.add_argument("--mode", choices=P.MODES + ("both",), default="both")
    c.add_argument("--raw", action="store_true", help="run on raw acts instead of iso representatives")
    c.add_argument("--raw-oracle-size", type=int, default=0,
                   help="also run the oracle cross-checks on raw acts up to this size")
    c.add_argument("--keep-failures", type=int, default=3)
    c.add_argument("--no-cache", action="store_true")
    c.add_argument("--no-timing", action="store_true", help="omit elapsed times for byte-stable output")
    c.add_argument("--out")
    c.add_argument("--json", action="store_true")
    c.set_defaults(func=cmd_suite)

    c = sub.add_parser("enumerate", help="list acts of a given size as JSON lines")
    c.add_argument("--monoid", required=True)
    c.add_argument("--size", type=int, required=True)
    c.add_argument("--up-to-iso", action="store_true")
    c.add_argument("--seed-order", choices=("lex", "revlex"), default="lex")
    c.add_argument("--count", action="store_true", help="print only the number of acts")
    c.set_defaults(func=cmd_enumerate)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        return args.func(args)
    except UnknownClaim as exc:
        print(f"error: unknown claim {exc.args[0]!r}", file=sys.stderr)
        return 2
    except (UsageError, ActFileError, ActError, OSError, KeyError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
