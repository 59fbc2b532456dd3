"""Command-line front end.

Exit status: 0 when every checked claim holds, 1 when one is falsified (the
witness is in the JSON), 2 on usage errors.  Standard output is
deterministic; timings go to standard error unless ``--timing`` is given.
"""

from __future__ import annotations

import argparse
import json
import platform
import sys
import time
from fractions import Fraction
from typing import List, Optional

from . import __version__
from .acceptance import CRITERIA, DEFAULT_SEED, run
from .central import casimir, det_family, g2_G, pfaffian_family
from .graphs import InvariantGraph, compile_graph
from .invariants import family_poly, is_invariant
from .lie_algebras import jacobi_violations, make_algebra, representation_violations
from .mpoly import MPolynomial
from .octonions import omega_table_lines, table_fingerprint
from .relations import charpoly_pfaffian_identity, check_relation
from .uea import UEAElement, is_central
from .verdict import Verdict


class UsageError(Exception):
    pass


def jsonable(obj):
    """Convert verdict payloads (rationals, polynomials, elements) to JSON values."""
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, UEAElement):
        return obj.to_json()
    if isinstance(obj, MPolynomial):
        return repr(obj)
    if isinstance(obj, Verdict):
        return {"ok": obj.ok, "witness": jsonable(obj.witness), "details": jsonable(obj.details)}
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(v) for v in obj]
    if obj is None or isinstance(obj, (bool, int, float, str)):
        return obj
    return str(obj)


def manifest(args, argv) -> dict:
    return {
        "command": list(argv),
        "seed": args.seed,
        "threads": args.threads,
        "fingerprint": table_fingerprint(),
        "versions": {"invcentral": __version__, "python": platform.python_version()},
    }


def _emit(args, argv, payload: dict, t0: float, stream=None) -> None:
    payload = dict(payload)
    payload["manifest"] = manifest(args, argv)
    wall = round(time.perf_counter() - t0, 4)
    if args.timing:
        payload["manifest"]["wall_time"] = wall
    else:
        print(f"wall time {wall} s", file=sys.stderr)
    print(json.dumps(jsonable(payload), sort_keys=True), file=stream or sys.stdout)


def _params(text: str) -> dict:
    try:
        out = json.loads(text)
    except json.JSONDecodeError as e:
        raise UsageError(f"--params is not valid JSON: {e}")
    if not isinstance(out, dict):
        raise UsageError("--params must be a JSON object")
    return out


def _status(ok: bool) -> int:
    return 0 if ok else 1


# commands

def cmd_algebra_info(args, argv, t0):
    alg = make_algebra(args.name)
    payload = {
        "algebra": alg.name,
        "kind": alg.kind,
        "dim": alg.dim,
        "rep_dim": alg.rep_dim,
        "basis_labels": list(alg.basis_labels),
        "metadata": alg.metadata,
        "jacobi_ok": not jacobi_violations(alg),
        "representation_ok": not representation_violations(alg),
    }
    _emit(args, argv, payload, t0)
    return _status(payload["jacobi_ok"] and payload["representation_ok"])


def cmd_omega_table(args, argv, t0):
    for line in omega_table_lines(args.k):
        print(line)
    payload = {"k": args.k, "manifest": manifest(args, argv)}
    print(json.dumps(payload, sort_keys=True), file=sys.stderr)
    return 0


def cmd_poly_verify(args, argv, t0):
    alg = make_algebra(args.algebra)
    params = _params(args.params)
    if args.family == "graph":
        if not args.graph:
            raise UsageError("--family graph needs --graph FILE")
        with open(args.graph) as fh:
            poly, skew = compile_graph(InvariantGraph.from_json(json.load(fh)), alg.rep_dim), False
    else:
        n = params.pop("N", alg.rep_dim)
        if n != alg.rep_dim:
            raise UsageError(f"N={n} does not match {alg.name} (N={alg.rep_dim})")
        poly, skew = family_poly(args.family, n, **params)
    v = is_invariant(alg, poly, skew=skew)
    _emit(args, argv, {"algebra": alg.name, "family": args.family, "params": params, "skew": skew,
                       "polynomial_terms": len(poly), "verdict": v}, t0)
    return _status(v.ok)


def _build_report(family: str, params: dict, args):
    threads = args.threads
    if family == "casimir":
        alg = make_algebra(params.get("algebra", "g2" if "N" not in params else f"so{params['N']}"))
        return casimir(alg, threads)
    if family == "det":
        kind = params.get("algebra", "gl")
        n = params["N"]
        return det_family(make_algebra(f"{kind}{n}"), params.get("k", n), threads)
    if family == "pf":
        return pfaffian_family(make_algebra(f"so{params['N']}"), full=True, threads=threads)
    if family == "sumpf2":
        return pfaffian_family(make_algebra(f"so{params['N']}"), k=params["k"], threads=threads)
    if family == "g2G":
        rows, cols = params["rows"], params["cols"]
        if sum(rows) >= 7 and not args.allow_long:
            raise UsageError("degree-7 g2 elements are long-running; pass --allow-long")
        if sum(rows) >= 7:
            print("building degree-7 g2 element (this can take a while)", file=sys.stderr)
        groups = params.get("groups")
        if groups is not None:
            groups = [[(side, int(t)) for side, t in g] for g in groups]
        return g2_G(rows, cols, groups=groups, alg=make_algebra("g2"), threads=threads)
    raise UsageError(f"unknown family {family!r}")


def cmd_element_build(args, argv, t0):
    params = _params(args.params)
    try:
        rep = _build_report(args.family, params, args)
    except KeyError as e:
        raise UsageError(f"--params is missing {e}")
    payload = rep.to_json(timing=args.timing)
    if args.out:
        with open(args.out, "w") as fh:
            json.dump(jsonable({**payload, "manifest": manifest(args, argv)}), fh, sort_keys=True, indent=1)
    _emit(args, argv, payload, t0)
    return _status(rep.centrality.ok)


def cmd_element_verify(args, argv, t0):
    with open(args.infile) as fh:
        doc = json.load(fh)
    if "element" in doc:
        doc = doc["element"]
    if doc.get("algebra") is None or "terms" not in doc:
        raise UsageError("input is not an element document")
    elem = UEAElement.from_json(doc)
    v = is_central(elem.algebra, elem, threads=args.threads)
    _emit(args, argv, {"algebra": elem.algebra.name, "terms": len(elem), "degree": elem.degree(),
                       "central": v.ok, "verdict": v}, t0)
    return _status(v.ok)


def cmd_relations_check(args, argv, t0):
    params = _params(args.params)
    if args.id == "charpoly":
        v = charpoly_pfaffian_identity(params.get("n", 4))
    else:
        try:
            rid = int(args.id)
        except ValueError:
            raise UsageError(f"--id must be 1..4 or charpoly, got {args.id!r}")
        v = check_relation(rid, **params)
    _emit(args, argv, {"relation": args.id, "params": params, "holds": v.ok, "verdict": v}, t0)
    return _status(v.ok)


def cmd_selftest(args, argv, t0):
    results = run(fast=not args.full, seed=args.seed, threads=args.threads)
    rows = []
    for cid, title, v, dt in results:
        print(f"criterion {cid:2d} {title}: {'PASS' if v else 'FAIL'} ({dt:.2f} s)", file=sys.stderr)
        rows.append({"criterion": cid, "title": title, "ok": v.ok, "witness": v.witness})
    ok = all(r["ok"] for r in rows)
    _emit(args, argv, {"selftest": rows, "ok": ok, "fast": not args.full}, t0)
    return _status(ok)


BENCH_CASES = [
    ("casimir so6", lambda a: casimir(make_algebra("so6"), a.threads)),
    ("pf so6", lambda a: pfaffian_family(make_algebra("so6"), full=True, threads=a.threads)),
    ("det gl3", lambda a: det_family(make_algebra("gl3"), 3, a.threads)),
    ("g2 G(4,4)", lambda a: g2_G([4], [4], alg=make_algebra("g2"), threads=a.threads)),
]


def cmd_bench(args, argv, t0):
    rows = []
    for name, fn in BENCH_CASES:
        t = time.perf_counter()
        rep = fn(args)
        dt = round(time.perf_counter() - t, 4)
        row = {"case": name, "central": rep.centrality.ok, "element_terms": len(rep.element)}
        if args.timing:
            row["seconds"] = dt
        else:
            print(f"{name}: {dt} s", file=sys.stderr)
        rows.append(row)
    _emit(args, argv, {"bench": rows}, t0)
    return _status(all(r["central"] for r in rows))


# parser

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=DEFAULT_SEED, help=f"seed for randomized checks (default {DEFAULT_SEED})")
    common.add_argument("--threads", type=int, default=1, help="worker threads for centrality checks")
    common.add_argument("--allow-long", action="store_true", help="permit long-running computations")
    common.add_argument("--timing", action="store_true", help="put wall times in the JSON output")

    p = argparse.ArgumentParser(prog="invcentral", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="group", required=True)

    alg = sub.add_parser("algebra").add_subparsers(dest="cmd", required=True)
    q = alg.add_parser("info", parents=[common])
    q.add_argument("--name", required=True, help="glN, soN or g2")
    q.set_defaults(fn=cmd_algebra_info)

    om = sub.add_parser("omega").add_subparsers(dest="cmd", required=True)
    q = om.add_parser("table", parents=[common])
    q.add_argument("--k", type=int, required=True, choices=range(2, 8))
    q.set_defaults(fn=cmd_omega_table)

    poly = sub.add_parser("poly").add_subparsers(dest="cmd", required=True)
    q = poly.add_parser("verify-invariant", parents=[common])
    q.add_argument("--algebra", required=True)
    q.add_argument("--family", required=True, choices=["trace", "det", "ck", "sumpf2", "pf", "g", "graph"])
    q.add_argument("--params", default="{}")
    q.add_argument("--graph", help="graph JSON file for --family graph")
    q.set_defaults(fn=cmd_poly_verify)

    el = sub.add_parser("element").add_subparsers(dest="cmd", required=True)
    q = el.add_parser("build", parents=[common])
    q.add_argument("--family", required=True, choices=["casimir", "det", "pf", "sumpf2", "g2G"])
    q.add_argument("--params", default="{}")
    q.add_argument("--out", help="also write the report JSON to this file")
    q.set_defaults(fn=cmd_element_build)
    q = el.add_parser("verify-central", parents=[common])
    q.add_argument("--in", dest="infile", required=True)
    q.set_defaults(fn=cmd_element_verify)

    rel = sub.add_parser("relations").add_subparsers(dest="cmd", required=True)
    q = rel.add_parser("check", parents=[common])
    q.add_argument("--id", required=True, help="1..4 or charpoly")
    q.add_argument("--params", default="{}")
    q.set_defaults(fn=cmd_relations_check)

    q = sub.add_parser("selftest", parents=[common])
    q.add_argument("--full", action="store_true", help="run the full acceptance sizes")
    q.set_defaults(fn=cmd_selftest)

    q = sub.add_parser("bench", parents=[common])
    q.set_defaults(fn=cmd_bench)
    return p


def main(argv: Optional[List[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    if args.threads < 1:
        print("--threads must be >= 1", file=sys.stderr)
        return 2
    t0 = time.perf_counter()
    try:
        return args.fn(args, argv, t0)
    except (UsageError, ValueError, OSError) as e:
        print(f"invcentral: error: {e}", file=sys.stderr)
        return 2
