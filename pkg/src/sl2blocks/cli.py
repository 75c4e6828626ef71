"""Command-line interface.

Subcommands:

    blocks      labels, idempotent polynomials, block and coinvariant dims
    filtration  cumulative and graded dimension tables for one filtration
    verify      the full exact check suite over ranges of p and characters

Output formats: json (default, schema in docs/schema.json), csv (RFC 4180),
md (tables laid out row-per-block, column-per-degree).  Exit codes: 0 on
success, 1 on verification failure, 2 on usage errors.  JSON output is
byte-identical across runs; wall times appear only with --timing.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time

from .ffield import DEFAULT_MAX_P, MAX_REGULAR_P, is_odd_prime
from .pbw import Character
from . import verify as verify_mod

SCHEMA_VERSION = 1


def _chi_list(arg: str) -> list[str]:
    kinds = [s.strip() for s in arg.split(",") if s.strip()]
    for k in kinds:
        if k not in ("zero", "e", "regular"):
            raise argparse.ArgumentTypeError(f"unknown character {k!r}")
    return kinds


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="sl2blocks",
        description="Exact block decomposition and PBW filtrations of the "
        "reduced enveloping algebras of sl2.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    def common(sp, with_p=True):
        if with_p:
            sp.add_argument("--p", type=int, required=True, help="odd prime, 3..13")
        sp.add_argument("--chi", type=str, default="zero",
                        help="character: zero | e | regular (comma list for verify)")
        sp.add_argument("--a", type=int, default=None,
                        help="parameter of the regular character a*h/2")
        sp.add_argument("--format", choices=("json", "csv", "md"), default="json")
        sp.add_argument("--out", type=str, default=None, help="write output to FILE")
        sp.add_argument("--timing", action="store_true",
                        help="include wall time in the output")

    sp_blocks = sub.add_parser("blocks", help="block decomposition summary")
    common(sp_blocks)

    sp_filt = sub.add_parser("filtration", help="filtration dimension tables")
    common(sp_filt)
    sp_filt.add_argument("--kind", choices=("pf", "int", "sh"), required=True)
    sp_filt.add_argument("--omega", type=int, default=None, help="block selector")
    sp_filt.add_argument("--alpha", type=int, default=None,
                         help="block selector by Casimir scalar (prime-field code)")

    sp_ver = sub.add_parser("verify", help="run the full exact check suite")
    common(sp_ver, with_p=False)
    sp_ver.set_defaults(chi="zero,e")
    sp_ver.add_argument("--p", type=int, default=None, help="single prime")
    sp_ver.add_argument("--max-p", type=int, default=None,
                        help="run all odd primes 3..max-p")
    sp_ver.add_argument("--jobs", type=int, default=1,
                        help="parallel workers over (p, chi) units")
    sp_ver.add_argument("--corrupt-idempotent", action="store_true",
                        help=argparse.SUPPRESS)
    return ap


def _fail_usage(msg: str) -> int:
    print(f"sl2blocks: error: {msg}", file=sys.stderr)
    return 2


def _validate_p(p: int, max_p: int = DEFAULT_MAX_P) -> str | None:
    if not is_odd_prime(p):
        return f"p = {p} is not an odd prime"
    if p > max_p:
        return f"p = {p} exceeds the supported bound {max_p}"
    return None


def _chi_objects(p: int, kinds: list[str], a: int | None):
    """Expand character kinds into Character objects for one p."""
    out = []
    for k in kinds:
        if k == "regular":
            if p > MAX_REGULAR_P:
                raise ValueError(f"regular characters run at p <= {MAX_REGULAR_P}")
            avals = [a] if a is not None else list(range(1, p))
            for av in avals:
                if av % p == 0:
                    raise ValueError("a must be nonzero mod p")
                out.append(Character.regular(av))
        else:
            out.append(Character(k))
    return out


def _render_json(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True) + "\n"


def _render_csv(report: dict) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\r\n")
    cmd = report["command"]
    if cmd == "blocks":
        w.writerow(["p", "chi", "omega", "alpha", "dim", "coinvariant_dim",
                    "idempotent_poly"])
        for r in report["results"]:
            for b in r["blocks"]:
                w.writerow([r["p"], r["chi"], b["omega"], b["alpha"], b["dim"],
                            b["coinvariant_dim"], b["idempotent_poly"]])
    elif cmd == "filtration":
        w.writerow(["p", "chi", "omega", "alpha", "kind", "i", "cumulative", "graded"])
        for r in report["results"]:
            for t in r["tables"]:
                for i, (c, g) in enumerate(zip(t["cumulative"], t["graded"])):
                    w.writerow([r["p"], r["chi"], t["omega"], t["alpha"],
                                t["kind"], i, c, g])
    else:
        w.writerow(["p", "chi", "check", "block", "expected", "computed",
                    "provenance", "pass"])
        for r in report["results"]:
            for c in r["checks"]:
                w.writerow([r["p"], r["chi"], c["name"], c["block"] or "",
                            json.dumps(c["expected"]), json.dumps(c["computed"]),
                            c["provenance"], c["pass"]])
    return buf.getvalue()


def _md_table(header: list[str], rows: list[list]) -> str:
    out = ["| " + " | ".join(str(h) for h in header) + " |"]
    out.append("|" + "|".join("---" for _ in header) + "|")
    for row in rows:
        out.append("| " + " | ".join(str(x) for x in row) + " |")
    return "\n".join(out) + "\n"


def _render_md(report: dict) -> str:
    parts = []
    cmd = report["command"]
    for r in report["results"]:
        if cmd == "blocks":
            parts.append(f"## blocks p={r['p']} chi={r['chi']}\n")
            parts.append(
                _md_table(
                    ["block", "alpha", "dim", "coinv dim", "idempotent poly"],
                    [
                        [
                            f"omega={b['omega']}" if b["omega"] is not None else "-",
                            b["alpha"], b["dim"], b["coinvariant_dim"],
                            b["idempotent_poly"],
                        ]
                        for b in r["blocks"]
                    ],
                )
            )
        elif cmd == "filtration" and r["tables"]:
            kind = r["tables"][0]["kind"]
            n = len(r["tables"][0]["cumulative"])
            parts.append(f"## filtration kind={kind} p={r['p']} chi={r['chi']}\n")
            rowname = {
                "pf": "dim pi_{w}(V_i)",
                "int": "dim V_i cap A_{w}",
                "sh": "dim V_i^sh on A_{w}",
            }[kind]
            rows = []
            for t in r["tables"]:
                w = t["omega"] if t["omega"] is not None else t["alpha"]
                rows.append([rowname.format(w=w)] + list(t["cumulative"]))
            parts.append(_md_table(["i"] + list(range(n)), rows))
        if r["checks"]:
            parts.append(f"## checks p={r['p']} chi={r['chi']}\n")
            parts.append(
                _md_table(
                    ["check", "block", "expected", "computed", "pass"],
                    [
                        [c["name"], c["block"] or "-", c["expected"], c["computed"],
                         "pass" if c["pass"] else "FAIL"]
                        for c in r["checks"]
                    ],
                )
            )
    if "pass" in report:
        parts.append(f"\noverall: {'PASS' if report['pass'] else 'FAIL'}\n")
    if "elapsed_seconds" in report:
        parts.append(f"elapsed: {report['elapsed_seconds']:.3f} s\n")
    return "\n".join(parts)


def _emit(report: dict, fmt: str, out: str | None) -> None:
    text = {"json": _render_json, "csv": _render_csv, "md": _render_md}[fmt](report)
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv: list[str] | None = None) -> int:
    ap = _build_parser()
    args = ap.parse_args(argv)
    t0 = time.perf_counter()

    try:
        kinds = _chi_list(args.chi)
    except argparse.ArgumentTypeError as exc:
        return _fail_usage(str(exc))

    if args.command == "verify":
        if args.p is None and args.max_p is None:
            return _fail_usage("verify needs --p or --max-p")
        ps = [args.p] if args.p is not None else [
            q for q in range(3, args.max_p + 1) if is_odd_prime(q)
        ]
        for p in ps:
            err = _validate_p(p)
            if err:
                return _fail_usage(err)
        a_values = {}
        if "regular" in kinds:
            for p in ps:
                if p > MAX_REGULAR_P:
                    return _fail_usage(
                        f"regular characters run at p <= {MAX_REGULAR_P}"
                    )
                a_values[p] = [args.a] if args.a is not None else list(range(1, p))
        corrupt = "idempotent" if args.corrupt_idempotent else None
        rep = verify_mod.run_verify(ps, kinds, a_values, corrupt, jobs=args.jobs)
        report = {
            "schema_version": SCHEMA_VERSION,
            "command": "verify",
            "params": {"p": ps, "chi": kinds, "a": args.a, "jobs": args.jobs},
            "results": rep["results"],
            "pass": rep["pass"],
        }
        if args.timing:
            report["elapsed_seconds"] = round(time.perf_counter() - t0, 3)
        _emit(report, args.format, args.out)
        return 0 if rep["pass"] else 1

    err = _validate_p(args.p)
    if err:
        return _fail_usage(err)
    try:
        chis = _chi_objects(args.p, kinds, args.a)
    except ValueError as exc:
        return _fail_usage(str(exc))

    results = []
    ok = True
    for chi in chis:
        if args.command == "blocks":
            from .pbw import algebra
            from . import blocks as blocks_mod

            alg = algebra(args.p, chi)
            checks = verify_mod.idempotent_checks(alg, blocks_mod.get_blocks(alg))
            checks += verify_mod.center_checks(alg, blocks_mod.get_blocks(alg))
            ok = ok and all(c.passed for c in checks)
            results.append(
                {
                    "p": args.p,
                    "chi": str(chi),
                    "blocks": verify_mod.block_summaries(args.p, chi),
                    "tables": [],
                    "checks": [c.as_dict() for c in checks],
                }
            )
        else:
            from .pbw import algebra

            fieldsize = algebra(args.p, chi).field.q
            selector = None
            if args.omega is not None:
                selector = lambda lab: lab.omega == args.omega
            elif args.alpha is not None:
                selector = lambda lab: lab.alpha == args.alpha % fieldsize
            tables = verify_mod.filtration_tables(args.p, chi, args.kind, selector)
            if not tables:
                return _fail_usage("block selector matched no block")
            results.append(
                {
                    "p": args.p,
                    "chi": str(chi),
                    "blocks": [],
                    "tables": tables,
                    "checks": [],
                }
            )
    report = {
        "schema_version": SCHEMA_VERSION,
        "command": args.command,
        "params": {
            "p": args.p,
            "chi": kinds,
            "a": args.a,
            "kind": getattr(args, "kind", None),
            "omega": getattr(args, "omega", None),
            "alpha": getattr(args, "alpha", None),
        },
        "results": results,
        "pass": ok,
    }
    if args.timing:
        report["elapsed_seconds"] = round(time.perf_counter() - t0, 3)
    _emit(report, args.format, args.out)
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
