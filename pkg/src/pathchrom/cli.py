"""Command line for path-chromatic computations and claim checks.

Exit status: 0 when everything checked passes, 1 when something fails, 2 on
usage or input errors.
"""

from __future__ import annotations

import argparse
import logging
import os
import sys
import tempfile
from pathlib import Path

from . import claims
from .coloring import chromatic_number, color_mask
from .constructions import mycielski, r_product
from .decomposition import decomposition_chromatic_number, validate
from .dp import exists_special_enumeration, path_chromatic_number
from .errors import PathChromError, SizeLimitError
from .graph import make_complete, make_cycle
from .io import decomposition_from_json, dump_json, graph_to_json, read_graph, write_dimacs

log = logging.getLogger("pathchrom")


def _emit(text: str, out: str | None):
    if out is None:
        sys.stdout.write(text)
        return
    target = Path(out)
    fd, tmp = tempfile.mkstemp(dir=target.parent or ".", prefix=f".{target.name}.")
    with os.fdopen(fd, "w") as fh:
        fh.write(text)
    os.replace(tmp, target)


def _load(args, path):
    fmt = None if args.format is None else args.format
    return read_graph(path, fmt)


def _parse_params(items):
    params = {}
    for item in items:
        if "=" not in item:
            raise PathChromError(f"parameter {item!r} is not of the form key=value")
        key, value = item.split("=", 1)
        key = key.strip().replace("-", "_")
        try:
            params[key] = int(value)
        except ValueError:
            params[key] = value
    return params


def cmd_chromatic(args):
    G = _load(args, args.graph)
    k = chromatic_number(G)
    coloring = color_mask(G.adj, G.full_mask, k)
    _emit(dump_json({"n": G.n, "chromatic_number": k, "coloring": [coloring[v] for v in range(G.n)]}), args.out)
    return 0


def cmd_path_chromatic(args):
    G = _load(args, args.graph)
    rep = path_chromatic_number(G, size_override=args.size_override, max_k=args.max_k)
    doc = {"n": G.n, "path_chromatic_number": rep.answer, "states_explored": rep.states_explored,
           "per_k": {str(k): v for k, v in rep.per_k.items()}}
    if args.max_k is not None and rep.answer is None:
        doc["path_chromatic_number"] = None
        doc["exceeds"] = args.max_k
    if args.witness and rep.witness is not None:
        doc["witness"] = list(rep.witness)
    if args.timing:
        doc["elapsed"] = round(rep.elapsed, 3)
    _emit(dump_json(doc), args.out)
    return 0


def cmd_special(args):
    G = _load(args, args.graph)
    rep = exists_special_enumeration(G, size_override=args.size_override)
    doc = {"n": G.n, "special_enumeration": None if rep.answer is None else list(rep.answer),
           "states_explored": rep.states_explored}
    _emit(dump_json(doc), args.out)
    return 0


def cmd_construct(args):
    labels = None
    if args.family == "cycle":
        G = make_cycle(args.size)
    elif args.family == "complete":
        G = make_complete(args.size)
    elif args.family == "mycielski":
        L = mycielski(args.size)
        G, labels = L.graph, L.labels
    else:
        if args.base is None:
            raise PathChromError("construct rm needs --base GRAPH")
        R = r_product(_load(args, args.base), args.size)
        G, labels = R.graph, R.labels
    if args.format == "dimacs":
        _emit(write_dimacs(G), args.out)
    else:
        _emit(dump_json(graph_to_json(G, labels)), args.out)
    return 0


def cmd_decomp_check(args):
    G = _load(args, args.graph)
    D = decomposition_from_json(Path(args.decomposition).read_text())
    report = validate(G, D)
    doc = {"valid": report.ok, "kind": type(D).__name__}
    if report.ok:
        doc["chromatic_number"] = decomposition_chromatic_number(G, D)
    else:
        doc["violation"] = {"axiom": report.axiom, "witness": report.witness}
    _emit(dump_json(doc), args.out)
    return 0 if report.ok else 1


def cmd_verify(args):
    if args.claim == "all":
        runs = []
        for cid, params in claims.DEFAULT_RUNS:
            params = dict(params)
            if args.seed is not None and cid in ("lemma1-conversion", "dp-vs-bruteforce"):
                params["seed"] = args.seed
            runs.append((cid, params))
        reports = claims.run_all(args.jobs, runs)
    else:
        params = _parse_params(args.params)
        if args.seed is not None:
            params.setdefault("seed", args.seed)
        reports = [claims.run_claim(args.claim, params)]
    for r in reports:
        log.info("%-24s %-40s %s", r.claim_id, r.parameters, r.verdict)
    doc = {"schema": claims.SCHEMA, "reports": [r.to_dict(args.timing) for r in reports]}
    _emit(dump_json(doc), args.out)
    return 1 if any(r.verdict == claims.FAIL for r in reports) else 0


def cmd_recheck(args):
    import json

    doc = json.loads(Path(args.report).read_text())
    ok = True
    for rep in doc["reports"]:
        if rep["verdict"] != claims.PASS:
            continue
        good = claims.recheck(rep)
        ok &= good
        print(f"{'ok  ' if good else 'FAIL'} {rep['claim_id']} {rep['parameters']}")
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("dimacs", "json"), default=None,
                        help="graph format (input is auto-detected when omitted)")
    common.add_argument("--out", default=None, help="write output to PATH instead of stdout")
    common.add_argument("--size-override", action="store_true", help="lift the DP vertex limit")
    common.add_argument("--jobs", type=int, default=1, help="worker processes for 'verify all'")
    common.add_argument("--seed", type=int, default=None, help="seed for randomized claim corpora")
    common.add_argument("--timing", action="store_true", help="include elapsed times (breaks byte-stability)")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(prog="pathchrom", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("chromatic", parents=[common], help="exact chromatic number")
    p.add_argument("graph")
    p.set_defaults(func=cmd_chromatic)

    p = sub.add_parser("path-chromatic", parents=[common], help="exact path-chromatic number")
    p.add_argument("graph")
    p.add_argument("--max-k", type=int, default=None)
    p.add_argument("--witness", action="store_true", help="print an optimal enumeration")
    p.set_defaults(func=cmd_path_chromatic)

    p = sub.add_parser("special", parents=[common], help="search for a special enumeration")
    p.add_argument("graph")
    p.set_defaults(func=cmd_special)

    p = sub.add_parser("construct", parents=[common], help="build a graph")
    p.add_argument("family", choices=("cycle", "complete", "mycielski", "rm"))
    p.add_argument("size", type=int, help="n for cycle/complete, k for mycielski, m for rm")
    p.add_argument("--base", help="base graph file for rm")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("decomp", parents=[common], help="decomposition tools")
    dsub = p.add_subparsers(dest="decomp_command", required=True)
    c = dsub.add_parser("check", parents=[common], help="validate a decomposition and report its chromatic number")
    c.add_argument("graph")
    c.add_argument("decomposition")
    c.set_defaults(func=cmd_decomp_check)

    p = sub.add_parser("verify", parents=[common], help="run a registered claim, or 'all'")
    p.add_argument("claim", choices=sorted(claims.REGISTRY) + ["all"])
    p.add_argument("params", nargs="*", help="key=value parameters")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("recheck", parents=[common], help="re-validate certificates in a verify report")
    p.add_argument("report")
    p.set_defaults(func=cmd_recheck)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr)
    try:
        return args.func(args)
    except SizeLimitError as exc:
        print(f"pathchrom: {exc}", file=sys.stderr)
        return 2
    except (PathChromError, OSError) as exc:
        print(f"pathchrom: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
