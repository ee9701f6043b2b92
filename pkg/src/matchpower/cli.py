"""Command-line front end.

Subcommands: compute (invariants of one power), verify (formula sweeps),
scan (conjectured formulas over a range), identities (randomized suites).
Exit codes: 0 all good, 1 usage or input error, 2 a proven statement
failed, 3 a conjectural formula mismatched.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import formulas as fm
from . import graphs as gr
from . import homalg as ha
from . import identities as ident
from . import sweeps as sw
from . import ideals as idl
from ._kernels import backend_name
from .errors import CapExceededError, MatchPowerError
from .simplicial import FieldSpec


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        sys.exit(1)


def _parse_range(text: str) -> range:
    lo, sep, hi = text.partition("..")
    if not sep:
        v = int(text)
        return range(v, v + 1)
    return range(int(lo), int(hi) + 1)


def _parse_ks(text: str | None):
    """None (all k), "N", "A,B,...", or "A.." / "A..B"."""
    if text is None:
        return None, None
    if ".." in text:
        lo, _, hi = text.partition("..")
        if hi:
            return list(range(int(lo), int(hi) + 1)), None
        return None, int(lo)
    return [int(x) for x in text.split(",")], None


def _field(args) -> FieldSpec:
    return FieldSpec(args.char)


def _write_outputs(report: sw.VerificationReport, args) -> None:
    sys.stdout.write(report.to_text())
    if getattr(args, "json", None):
        with open(args.json, "w", encoding="utf-8") as fh:
            fh.write(report.to_json())
    if getattr(args, "csv", None):
        with open(args.csv, "w", encoding="utf-8") as fh:
            fh.write(report.to_csv())


def _add_common(p: argparse.ArgumentParser):
    p.add_argument("--char", type=int, default=32003,
                   help="field characteristic (0 for exact rationals)")
    p.add_argument("--route", default="hochster",
                   choices=("hochster", "facet", "taylor"),
                   help="Betti table route")
    p.add_argument("--max-n", type=int, default=None,
                   help="raise the variable-count cap (default 18)")
    p.add_argument("--json", metavar="PATH", help="write a JSON report")


def cmd_compute(args) -> int:
    if args.edges:
        with open(args.edges, "r", encoding="utf-8") as fh:
            g = gr.parse_edge_list(fh.read())
        name = args.descriptor or args.edges
    else:
        if not args.descriptor:
            print("error: need a family descriptor or --edges", file=sys.stderr)
            return 1
        g = gr.from_descriptor(args.descriptor)
        name = args.descriptor
    field = _field(args)
    k = args.k
    nu = gr.matching_number(g)
    ideal = idl.sqf_power(g, k)
    print(f"{name}: {g.n_vertices} vertices, {g.n_edges()} edges, "
          f"matching number {nu}, k={k}, backend={backend_name()}")
    if ideal.is_unit():
        print("power 0 is the unit ideal; invariants of the zero ring "
              "are undefined")
        return 0
    if ideal.is_zero():
        n = ideal.ambient_n
        print(f"zero ideal (k exceeds the matching number {nu}): "
              f"reg = 1 by convention, depth = dim = {n}, pd = 0")
        return 0
    bundle = ha.invariant_bundle(ideal, field, args.route, args.max_n)
    print(f"generators: {ideal.n_gens()} (degree "
          f"{sorted(set(ideal.degrees()))})")
    print(f"reg={bundle.reg} depth={bundle.depth_quotient} "
          f"dim={bundle.krull_dim_quotient} pd={bundle.pd_quotient} "
          f"cohen_macaulay={bundle.is_cm} "
          f"linear_resolution={bundle.linear_resolution}")
    if args.betti:
        table = ha.betti_table(ideal, field, args.route, args.max_n)
        print(table.diagram())
    if args.csv:
        table = ha.betti_table(ideal, field, args.route, args.max_n)
        with open(args.csv, "w", encoding="utf-8") as fh:
            fh.write("\n".join(table.csv_rows()) + "\n")
    if args.json:
        doc = {"schema": sw.SCHEMA_VERSION, "input": name, "k": k,
               "characteristic": field.characteristic,
               "ideal": ideal.to_json_dict(),
               "invariants": bundle.to_json_dict()}
        if args.betti:
            doc["betti"] = [list(e) for e in
                            ha.betti_table(ideal, field, args.route,
                                           args.max_n).entries]
        with open(args.json, "w", encoding="utf-8") as fh:
            fh.write(json.dumps(doc, indent=2, sort_keys=True) + "\n")
    return 0


def cmd_verify(args) -> int:
    ks, k_min = _parse_ks(args.k)
    if k_min is not None:
        ks = None
    invariants = args.invariant.split(",")
    for inv in invariants:
        if inv not in ("reg", "depth", "cm", "linres"):
            print(f"error: unknown invariant {inv!r}", file=sys.stderr)
            return 1
    cases = sw.verify_cases(
        args.family, invariants,
        n_range=_parse_range(args.n) if args.n else None,
        m_range=_parse_range(args.m) if args.m else None,
        r_range=_parse_range(args.r) if args.r else None,
        mult_choices=[int(x) for x in args.whisker_multiplicities.split(",")]
        if args.whisker_multiplicities else None,
        max_tree_vertices=args.max_tree_vertices,
        ks=ks)
    if k_min is not None:
        cases = [c for c in cases if c.k >= k_min]
    report = sw.evaluate_cases(
        cases, _field(args), args.route, args.max_n, args.threads,
        args.timings, args.checkpoint,
        config_extra={"command": "verify", "family": args.family})
    _write_outputs(report, args)
    return report.exit_code()


def cmd_scan(args) -> int:
    cases = sw.scan_cases(
        args.conjecture,
        n_range=_parse_range(args.n) if args.n else None,
        m_range=_parse_range(args.m) if args.m else None)
    report = sw.evaluate_cases(
        cases, _field(args), args.route, args.max_n, args.threads,
        args.timings, args.checkpoint,
        config_extra={"command": "scan",
                      "conjecture": fm.conjecture_name(args.conjecture)})
    _write_outputs(report, args)
    return report.exit_code()


def cmd_identities(args) -> int:
    results = ident.run_suites(trials=args.trials, seed=args.seed)
    failures = 0
    for res in results:
        status = "ok" if res.ok() else "FAIL"
        failures += len(res.failures)
        print(f"{res.name:<36} cases={res.cases:<5} {status}")
        for f in res.failures[:3]:
            print(f"    reproducer: {json.dumps(f, sort_keys=True)}")
    print(f"suites={len(results)} trials={args.trials} seed={args.seed} "
          f"failures={failures}")
    if args.json:
        doc = {"schema": sw.SCHEMA_VERSION, "trials": args.trials,
               "seed": args.seed,
               "suites": [r.to_json_dict() for r in results]}
        with open(args.json, "w", encoding="utf-8") as fh:
            fh.write(json.dumps(doc, indent=2, sort_keys=True) + "\n")
    return 2 if failures else 0


def main(argv=None) -> int:
    parser = _Parser(
        prog="matchpower",
        description="Matching powers of edge ideals: exact invariants, "
                    "formula sweeps, and conjecture scans. Practical caps: "
                    "Betti tables (also needed for depth) are capped at 18 "
                    "variables by default; --max-n raises the cap, and full "
                    "tables stay practical to roughly 22 variables. The "
                    "admissible-matching search is limited to 16 edges.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="invariants of one matching power")
    p.add_argument("descriptor", nargs="?",
                   help="family descriptor, e.g. path:6, cycle:13, wcycle:5, "
                        "mwcycle:5:2, mwpath:3:1,2,1, cmforest:a-b,b-c")
    p.add_argument("--edges", metavar="FILE",
                   help="edge-list file ('u v' per line, # comments)")
    p.add_argument("--k", type=int, default=1, help="matching power (default 1)")
    p.add_argument("--betti", action="store_true", help="print the Betti table")
    p.add_argument("--csv", metavar="PATH", help="write the Betti table as CSV")
    _add_common(p)
    p.set_defaults(fn=cmd_compute)

    p = sub.add_parser("verify", help="sweep a family against proven formulas")
    p.add_argument("family", choices=sorted(fm.FAMILIES))
    p.add_argument("--n", help="vertex range A..B (path, cycle)")
    p.add_argument("--m", help="base size range A..B (whiskered families)")
    p.add_argument("--r", help="pendant multiplicity range A..B (mwcycle)")
    p.add_argument("--whisker-multiplicities", metavar="SET",
                   help="comma set, e.g. 1,2: sweep all assignments (mwpath)")
    p.add_argument("--max-tree-vertices", type=int,
                   help="bound for the cmforest tree enumeration")
    p.add_argument("--k", help="k values: N, A,B,.., A..B, or A.. "
                               "(default: every valid k)")
    p.add_argument("--all-k", action="store_true",
                   help="sweep every valid k (the default)")
    p.add_argument("--invariant", default="reg",
                   help="comma list from reg,depth,cm,linres")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--timings", action="store_true",
                   help="record per-case timings (breaks byte-identical output)")
    p.add_argument("--checkpoint", metavar="PATH",
                   help="JSONL progress file, resumed when present")
    p.add_argument("--csv", metavar="PATH", help="write a CSV report")
    _add_common(p)
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("scan", help="compare a conjectured formula to computation")
    p.add_argument("conjecture",
                   help="cycle-depth (alias 6.1), wcycle-reg (6.2), "
                        "wcycle-depth (6.3)")
    p.add_argument("--n", help="vertex range A..B (cycle-depth)")
    p.add_argument("--m", help="base size range A..B (wcycle scans)")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--timings", action="store_true")
    p.add_argument("--checkpoint", metavar="PATH")
    p.add_argument("--csv", metavar="PATH")
    _add_common(p)
    p.set_defaults(fn=cmd_scan)

    p = sub.add_parser("identities", help="randomized identity suites")
    p.add_argument("--trials", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", metavar="PATH")
    p.set_defaults(fn=cmd_identities)

    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except CapExceededError as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return 1
    except MatchPowerError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
