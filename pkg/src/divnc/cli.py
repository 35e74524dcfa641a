"""Command-line front end.

Exit codes: 0 success, 1 a verification mismatch, 2 invalid input or a
size guard was hit. Results go to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path

from . import __version__, chains, formulas, homology
from .cache import default_cache_dir, get_poset, write_atomic
from .errors import DivncError
from .groups import CONVENTION_TAG, build_group
from .ncposet import DEFAULT_MAX_ELEMENTS, truncate
from .verify import SUITES, Verifier

SCHEMA_VERSION = 1

EXIT_OK, EXIT_MISMATCH, EXIT_INPUT = 0, 1, 2


def _header(args, label=None):
    return {"schema_version": SCHEMA_VERSION, "library_version": __version__,
            "convention": CONVENTION_TAG, "group": label or args.group, "m": args.m}


def _dump_json(obj):
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _csv(rows, header):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _poset(args):
    G = build_group(args.group)
    return G, get_poset(G, args.m, args.cache_dir, args.max_elements)


def cmd_enumerate(args):
    G, P = _poset(args)
    expected = formulas.cat_int(G.degree_table, args.m)
    ok = len(P) == expected
    if args.format == "json":
        report = _header(args, G.label)
        report.update(cardinality=len(P), expected=expected, cardinality_check=ok,
                      rank_sizes=P.rank_sizes(),
                      elements=[{"rank": int(P.rank[i]), "parts": pi.serialize()}
                                for i, pi in enumerate(P.elements)])
        out = _dump_json(report)
    elif args.format == "csv":
        out = _csv([[i, int(P.rank[i]), json.dumps(pi.serialize(), separators=(",", ":"))]
                    for i, pi in enumerate(P.elements)], ["index", "rank", "parts"])
    else:
        lines = [f"NC^({args.m})({G.label}): {len(P)} elements, Cat = {expected} "
                 f"[{'ok' if ok else 'MISMATCH'}]", f"rank sizes: {P.rank_sizes()}"]
        lines += [f"{int(P.rank[i])}  {json.dumps(pi.serialize(), separators=(',', ':'))}"
                  for i, pi in enumerate(P.elements)]
        out = "\n".join(lines) + "\n"
    return out, ok


def cmd_euler(args):
    G, P = _poset(args)
    direct = chains.euler_reduced(truncate(P))
    closed = chains.euler_closed_form_pipeline(G.degree_table, args.m)
    ok = direct == closed
    status = "agree" if ok else "disagree"
    if args.format == "json":
        report = _header(args, G.label)
        report.update(euler_direct=direct, euler_closed_form=closed, status=status)
        out = _dump_json(report)
    elif args.format == "csv":
        out = _csv([[G.label, args.m, direct, closed, status]],
                   ["group", "m", "euler_direct", "euler_closed_form", "status"])
    else:
        out = f"{G.label} m={args.m}: direct = {direct}, closed-form = {closed}, status {status}\n"
    return out, ok


def cmd_chains(args):
    G, P = _poset(args)
    D = G.degree_table
    stats = chains.chain_statistics(P, max_parts=args.max_parts)
    closed = chains.euler_closed_form_pipeline(D, args.m)
    zeta = {str(l): {"count": v, "expected": int(formulas.cat(D, args.m * l))}
            for l, v in stats.zeta_values.items()}
    ok = stats.euler_reduced == closed and all(z["count"] == z["expected"] for z in zeta.values())
    report = _header(args, G.label)
    report.update(case=f"{G.label} m={args.m}", f_vector=stats.f_vector,
                  euler_direct=stats.euler_reduced, euler_closed_form=closed, zeta=zeta)
    rw_rows = [[" ".join(map(str, s)), v] for s, v in stats.rank_selected.items()]
    fv_rows = [[d, f] for d, f in enumerate(stats.f_vector)]
    if args.out_dir:
        out_dir = Path(args.out_dir)
        write_atomic(out_dir / "rank_selected.csv", _csv(rw_rows, ["composition", "count"]))
        write_atomic(out_dir / "f_vector.csv", _csv(fv_rows, ["dimension", "faces"]))
        write_atomic(out_dir / "report.json", _dump_json(report))
    if args.format == "json":
        out = _dump_json(report)
    elif args.format == "csv":
        out = _csv(rw_rows, ["composition", "count"])
    else:
        lines = [f"{G.label} m={args.m}", f"f-vector: {stats.f_vector}",
                 f"euler: direct = {stats.euler_reduced}, closed-form = {closed}"]
        lines += [f"multichains l={l}: {z['count']} (Cat = {z['expected']})" for l, z in zeta.items()]
        lines += [f"R({' '.join(map(str, s))}) = {v}" for s, v in stats.rank_selected.items()]
        out = "\n".join(lines) + "\n"
    return out, ok


def cmd_homology(args):
    G, P = _poset(args)
    K = homology.order_complex(truncate(P), args.max_simplices)
    H = homology.homology(K)
    chi = formulas.euler_value(G.degree_table, args.m)
    n = G.rank
    expected = {n - 2: abs(chi)} if chi else {}
    ok = not H.torsion and H.nonzero_betti() == expected and H.euler() == chi
    if args.export_boundary:
        out_dir = Path(args.export_boundary)
        out_dir.mkdir(parents=True, exist_ok=True)
        for d, cols in enumerate(homology.boundary_matrices(K), start=1):
            homology.write_triplets(cols, out_dir / f"boundary_{d}.txt")
    if args.format == "json":
        report = _header(args, G.label)
        report.update(f_vector=K.f_vector(), euler_closed_form=chi, concentrated=ok, **H.to_dict())
        out = _dump_json(report)
    elif args.format == "csv":
        out = _csv([[d, b, " ".join(map(str, H.torsion.get(d, [])))]
                    for d, b in sorted(H.betti.items())], ["dimension", "betti", "torsion"])
    else:
        out = (f"{G.label} m={args.m}: reduced betti {H.nonzero_betti()}, torsion {H.torsion}, "
               f"expected rank {abs(chi)} in dimension {n - 2} "
               f"[{'ok' if ok else 'MISMATCH'}]\n")
    return out, ok


def cmd_formulas(args):
    D = formulas.degree_table(args.group)
    m_max = args.m
    rep = formulas.verify_identities(D, m_max)
    values = []
    for m in range(-1, m_max + 1):
        row = {"m": m, "cat": str(formulas.cat(D, m))}
        if m >= 0:
            row["cat_plus"] = formulas.cat_plus(D, m)
        values.append(row)
    if args.format == "json":
        report = _header(args, D.label)
        report.update(degree_table=D.to_dict(), values=values, identities=rep.to_dict())
        out = _dump_json(report)
    elif args.format == "csv":
        out = _csv([[v["m"], v["cat"], v.get("cat_plus", "")] for v in values],
                   ["m", "cat", "cat_plus"])
    else:
        lines = [f"{D.label}: degrees {list(D.degrees)}, h = {D.h}, real = {D.real}"]
        lines += [f"m={v['m']}: Cat = {v['cat']}" + (f", Cat_+ = {v['cat_plus']}" if "cat_plus" in v else "")
                  for v in values]
        lines.append(f"identities: {rep.checked} checks, "
                     + ("all pass" if rep.ok else f"FAILURES {rep.failures}")
                     + (f", skipped {rep.skipped}" if rep.skipped else ""))
        out = "\n".join(lines) + "\n"
    return out, rep.ok


def cmd_verify(args):
    names = SUITES if args.suite == "all" else tuple(args.suite.split(","))
    unknown = [s for s in names if s not in SUITES]
    if unknown:
        raise argparse.ArgumentTypeError(f"unknown suite(s) {unknown}; choose from {SUITES}")
    checks = Verifier(args.max_elements, args.max_simplices, args.cache_dir).run(names)
    failed = [c for c in checks if not c.ok]
    if args.format == "json":
        out = _dump_json({"schema_version": SCHEMA_VERSION, "library_version": __version__,
                          "convention": CONVENTION_TAG, "suites": list(names),
                          "checks": [vars(c) for c in checks], "failed": len(failed)})
    elif args.format == "csv":
        out = _csv([[c.criterion, c.case, "skip" if c.skipped else ("pass" if c.ok else "fail"), c.detail]
                    for c in checks], ["criterion", "case", "status", "detail"])
    else:
        out = "\n".join(c.line() for c in checks)
        out += f"\n{len(checks) - len(failed)}/{len(checks)} checks passed\n"
    for c in failed:
        print(f"mismatch: {c.criterion} {c.case}: {c.detail}", file=sys.stderr)
    return out, not failed


COMMANDS = {"enumerate": cmd_enumerate, "euler": cmd_euler, "chains": cmd_chains,
            "homology": cmd_homology, "formulas": cmd_formulas, "verify": cmd_verify}


def build_parser():
    parser = argparse.ArgumentParser(
        prog="divnc", description="m-divisible noncrossing partitions of reflection groups")
    parser.add_argument("--version", action="version", version=__version__)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common.add_argument("--cache-dir", default=default_cache_dir(),
                        help="poset cache directory (default: $DIVNC_CACHE_DIR)")
    common.add_argument("--max-elements", type=int, default=DEFAULT_MAX_ELEMENTS)
    common.add_argument("--max-simplices", type=int, default=homology.DEFAULT_MAX_SIMPLICES)
    common.add_argument("--output", "-o", help="write results to this file instead of stdout")
    case = argparse.ArgumentParser(add_help=False)
    case.add_argument("--group", required=True, help="e.g. A3, B2, D4, I2(6), H3")
    case.add_argument("--m", type=int, required=True)

    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("enumerate", parents=[common, case], help="list NC^(m)(W)")
    sub.add_parser("euler", parents=[common, case], help="direct vs closed-form Euler characteristic")
    p = sub.add_parser("chains", parents=[common, case], help="f-vector, multichains, R_W table")
    p.add_argument("--max-parts", type=int, default=4)
    p.add_argument("--out-dir", help="also write rank_selected.csv, f_vector.csv, report.json")
    p = sub.add_parser("homology", parents=[common, case], help="reduced homology of the truncated order complex")
    p.add_argument("--export-boundary", metavar="DIR", help="write boundary matrices as triplet files")
    p = sub.add_parser("formulas", parents=[common], help="Fuss-Catalan values and identity checks")
    p.add_argument("--group", required=True, help="any degree-table label, e.g. E8 or G(3,1,2)")
    p.add_argument("--m", type=int, default=4, help="largest m to check")
    p = sub.add_parser("verify", parents=[common], help="run the verification matrix")
    p.add_argument("--suite", default="all", help=f"'all' or a comma list of {','.join(SUITES)}")
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command != "formulas" and getattr(args, "m", 1) < 1:
        print("error: --m must be a positive integer", file=sys.stderr)
        return EXIT_INPUT
    try:
        out, ok = COMMANDS[args.command](args)
    except (DivncError, argparse.ArgumentTypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if args.output:
        write_atomic(args.output, out)
    else:
        sys.stdout.write(out)
    if not ok:
        print("verification mismatch", file=sys.stderr)
    return EXIT_OK if ok else EXIT_MISMATCH


if __name__ == "__main__":
    sys.exit(main())
