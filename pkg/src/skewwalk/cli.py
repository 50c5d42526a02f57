"""Command-line surface: analyze, generate, find-walk, verify, expand, batch.

Exit codes: 0 success, 1 verification-false, 2 not-found, 3 usage or parse
error.  Every JSON payload embeds a run manifest (command, arguments, seed,
tool version, input/output digests); identical manifests imply identical
outputs.  Big integers are serialised as decimal strings.
"""

import argparse
import hashlib
import json
import math
import os
import sys
from concurrent.futures import ThreadPoolExecutor

from . import __version__, generators, walks
from .errors import (
    EdgeListParseError,
    InvalidDegreeError,
    NotBipartiteError,
    PipelineNotFoundError,
    SkewwalkError,
)
from .graph import (
    bipartition,
    degree_summary,
    directed_girth,
    load_edge_list,
    save_edge_list,
    shen_girth_bound,
)
from .oracle import has_closed_walk
from .pipeline import find_closed_walk_of_length

EXIT_OK = 0
EXIT_FALSE = 1
EXIT_NOT_FOUND = 2
EXIT_USAGE = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _sha256_file(path):
    h = hashlib.sha256()
    with open(path, "rb") as fh:
        h.update(fh.read())
    return h.hexdigest()


def _canonical_json(payload):
    return json.dumps(payload, sort_keys=True, separators=(",", ":"))


def _run_manifest(command, arguments, seed, input_digest, payload):
    return {
        "command": command,
        "arguments": arguments,
        "seed": seed,
        "version": __version__,
        "input_digest": input_digest,
        "output_digest": hashlib.sha256(
            _canonical_json(payload).encode()
        ).hexdigest(),
    }


def _emit(payload, json_path):
    text = json.dumps(payload, indent=2, sort_keys=True)
    if json_path:
        with open(json_path, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _wrap(command, args, payload, seed=None, input_digest=None):
    return {
        "result": payload,
        "manifest": _run_manifest(command, args, seed, input_digest, payload),
    }


# -- analyze -----------------------------------------------------------------

def cmd_analyze(args):
    g = load_edge_list(args.graph)
    summary = degree_summary(g)
    girth, witness = directed_girth(g)
    payload = {
        "n": g.n,
        "m": g.edge_count,
        "degrees": {
            "min_out": summary.min_out,
            "min_in": summary.min_in,
            "min_semi": summary.min_semi,
            "min_underlying": summary.min_underlying,
        },
        "girth": None if girth == math.inf else girth,
        "girth_witness": None if witness is None else list(witness.vertices),
    }
    try:
        v1, v2 = bipartition(g)
        payload["bipartite"] = True
        payload["classes"] = [list(v1), list(v2)]
    except NotBipartiteError as exc:
        payload["bipartite"] = False
        payload["odd_cycle_length"] = exc.witness.length
    try:
        payload["girth_bound_at_min_out"] = shen_girth_bound(g.n, summary.min_out)
    except InvalidDegreeError:
        payload["girth_bound_at_min_out"] = None
    _emit(
        _wrap("analyze", [args.graph], payload, input_digest=_sha256_file(args.graph)),
        args.json,
    )
    return EXIT_OK


# -- generate ----------------------------------------------------------------

def _parse_params(tokens):
    params = {}
    for tok in tokens or []:
        if "=" not in tok:
            raise ValueError(f"parameter {tok!r} is not key=value")
        key, val = tok.split("=", 1)
        params[key] = int(val)
    return params


_FAMILIES = {
    "blowup": (generators.blow_up_cycle, ("k", "m"), False),
    "tournament": (generators.regular_tournament, ("m",), False),
    "glued": (lambda k, ell: generators.glued_tournaments(generators.GlueSpec(k, ell)), ("k", "ell"), False),
    "regime": (generators.regime_instance, ("k", "n"), True),
    "chorded": (generators.bipartite_chorded_cycle, ("r", "chords"), True),
}


def cmd_generate(args):
    fn, names, takes_seed = _FAMILIES[args.family]
    params = _parse_params(args.params)
    missing = [p for p in names if p not in params]
    if missing:
        raise ValueError(f"family {args.family} needs parameters {missing}")
    call = [params[p] for p in names]
    g = fn(*call, args.seed) if takes_seed else fn(*call)
    save_edge_list(g, args.out)
    payload = {
        "family": args.family,
        "params": params,
        "n": g.n,
        "m": g.edge_count,
        "out": args.out,
        "file_digest": _sha256_file(args.out),
    }
    _emit(_wrap("generate", [args.family, args.out], payload, seed=args.seed), args.json)
    return EXIT_OK


# -- find-walk ----------------------------------------------------------------

def cmd_find_walk(args):
    g = load_edge_list(args.graph)
    ell = int(args.ell)
    digest = _sha256_file(args.graph)
    try:
        report = find_closed_walk_of_length(g, ell, k=args.k)
    except PipelineNotFoundError as exc:
        payload = {
            "found": False,
            "stage": exc.stage,
            "reason": exc.reason,
            "diagnostics": exc.diagnostics,
        }
        _emit(_wrap("find-walk", [args.graph, str(ell)], payload, input_digest=digest), args.json)
        return EXIT_NOT_FOUND
    payload = {"found": True, "report": report.to_json_dict()}
    _emit(_wrap("find-walk", [args.graph, str(ell)], payload, input_digest=digest), args.json)
    return EXIT_OK


# -- verify -------------------------------------------------------------------

def cmd_verify(args):
    g = load_edge_list(args.graph)
    ell = int(args.ell)
    res = has_closed_walk(g, ell)
    payload = {"exists": res.exists, "witness": res.witness}
    _emit(
        _wrap("verify", [args.graph, str(ell)], payload, input_digest=_sha256_file(args.graph)),
        args.json,
    )
    return EXIT_OK if res.exists else EXIT_FALSE


# -- expand -------------------------------------------------------------------

def cmd_expand(args):
    with open(args.expr, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    expr = walks.WalkExpression.from_json_dict(
        data["result"]["report"]["expression"] if "result" in data else data
    )
    walk = walks.expand(expr, int(args.limit))
    if walk is None:
        payload = {"too_long": True, "total_length": str(expr.total_length)}
    else:
        payload = {
            "too_long": False,
            "vertices": list(walk.vertices),
            "length": str(walk.length),
        }
    _emit(
        _wrap("expand", [args.expr, str(args.limit)], payload, input_digest=_sha256_file(args.expr)),
        args.json,
    )
    return EXIT_OK


# -- batch --------------------------------------------------------------------

def _build_row_graph(row, base_dir):
    if "generator" in row:
        spec = row["generator"]
        fn, names, takes_seed = _FAMILIES[spec["family"]]
        params = spec.get("params", {})
        call = [params[p] for p in names]
        if takes_seed:
            return fn(*call, spec.get("seed"))
        return fn(*call)
    path = row["graph"]
    if not os.path.isabs(path):
        path = os.path.join(base_dir, path)
    return load_edge_list(path)


def _run_row(index, row, base_dir):
    out = {"row": index, "name": row.get("name", f"row-{index}")}
    try:
        g = _build_row_graph(row, base_dir)
        ell = int(row["ell"])
        expect = row["expect"]
        if expect in ("exists", "absent"):
            res = has_closed_walk(g, ell)
            out["observed"] = "exists" if res.exists else "absent"
            out["passed"] = out["observed"] == expect
        elif expect == "walk":
            try:
                report = find_closed_walk_of_length(g, ell, k=row.get("k"))
            except PipelineNotFoundError as exc:
                out["observed"] = f"not-found:{exc.reason}"
                out["passed"] = False
            else:
                valid = report.expression.validate(g) is None
                confirmed = has_closed_walk(g, ell).exists
                out["observed"] = report.branch
                out["passed"] = valid and confirmed
        else:
            raise ValueError(f"unknown expectation {expect!r}")
    except SkewwalkError as exc:
        out["observed"] = f"error:{exc}"
        out["passed"] = False
    return out


def cmd_batch(args):
    with open(args.manifest, "r", encoding="utf-8") as fh:
        try:
            manifest = json.load(fh)
        except json.JSONDecodeError as exc:
            raise EdgeListParseError(exc.lineno, f"manifest: {exc.msg}") from exc
    rows = manifest.get("rows")
    if not isinstance(rows, list):
        raise ValueError("manifest must contain a 'rows' list")
    base_dir = os.path.dirname(os.path.abspath(args.manifest))
    workers = int(os.environ.get("SKEWWALK_THREADS", "0")) or min(8, os.cpu_count() or 1)
    with ThreadPoolExecutor(max_workers=workers) as pool:
        results = list(
            pool.map(lambda iv: _run_row(iv[0], iv[1], base_dir), enumerate(rows))
        )
    passed = sum(1 for r in results if r["passed"])
    payload = {"rows": results, "passed": passed, "total": len(results)}
    _emit(
        _wrap("batch", [args.manifest], payload, seed=args.seed, input_digest=_sha256_file(args.manifest)),
        args.json,
    )
    return EXIT_OK if passed == len(results) else EXIT_FALSE


# -- entry point ---------------------------------------------------------------

def build_parser():
    parser = _Parser(prog="skewwalk", description=__doc__)
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="degree/girth/bipartiteness report")
    p.add_argument("--graph", required=True)
    p.add_argument("--json", help="write JSON here instead of stdout")
    p.set_defaults(fn=cmd_analyze)

    p = sub.add_parser("generate", help="write a generated instance as an edge list")
    p.add_argument("--family", required=True, choices=sorted(_FAMILIES))
    p.add_argument("--params", nargs="*", metavar="KEY=VAL")
    p.add_argument("--out", required=True)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--json")
    p.set_defaults(fn=cmd_generate)

    p = sub.add_parser("find-walk", help="closed walk expression of exact length")
    p.add_argument("--graph", required=True)
    p.add_argument("--ell", required=True)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--json")
    p.set_defaults(fn=cmd_find_walk)

    p = sub.add_parser("verify", help="oracle: does a closed ell-walk exist?")
    p.add_argument("--graph", required=True)
    p.add_argument("--ell", required=True)
    p.add_argument("--json")
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("expand", help="expand an expression JSON to vertices")
    p.add_argument("--expr", required=True)
    p.add_argument("--limit", required=True)
    p.add_argument("--json")
    p.set_defaults(fn=cmd_expand)

    p = sub.add_parser("batch", help="run a manifest of generator/expectation rows")
    p.add_argument("--manifest", required=True)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--json")
    p.set_defaults(fn=cmd_batch)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (EdgeListParseError, ValueError, OSError, KeyError) as exc:
        print(f"skewwalk: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except PipelineNotFoundError as exc:  # pragma: no cover - handled per-command
        print(f"skewwalk: {exc}", file=sys.stderr)
        return EXIT_NOT_FOUND


if __name__ == "__main__":
    sys.exit(main())
