"""Command-line front end.

Thin adapters only: every verb parses its input, calls the library, and
formats the result (human table by default, stable JSON with --json).
Exit codes: 0 success / all certificates pass, 1 certificate failure,
2 usage or input error, 3 solver non-convergence.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

import numpy as np

from . import certify as certify_mod
from . import report as report_mod
from .combinatorics import (
    bipartition_width,
    design_edge_connectivity_bounds,
    detect_2_design,
    edge_connectivity,
    isoperimetric_number,
)
from .corpus import default_corpus
from .hypergraph import (
    GENERATORS,
    DisconnectedError,
    Hypergraph,
    diameter,
    eccentricity,
    generate,
    is_connected,
    parse,
    radius,
    render,
)
from .perron import EnumerationLimitError, SolverOptions, perron_summary

EXIT_OK = 0
EXIT_CERT_FAIL = 1
EXIT_USAGE = 2
EXIT_NO_CONVERGENCE = 3

_GEN_PARAM_FLAGS = ("n", "k", "m", "length", "gen_seed")


def _num(x: float) -> str:
    return f"{x:.10g}"


def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="hyperperron",
        description="inverse Perron values, connectivity bounds and resistance "
                    "quantities of k-uniform hypergraphs",
    )
    sub = top.add_subparsers(dest="verb", required=True)

    def add_source(p, corpus=False):
        grp = p.add_mutually_exclusive_group(required=True)
        grp.add_argument("--input", metavar="FILE", help="hypergraph file in the canonical format")
        grp.add_argument("--gen", metavar="NAME", choices=sorted(GENERATORS),
                         help="generate a named instance inline")
        if corpus:
            grp.add_argument("--corpus", metavar="NAME", choices=["default", "connected", "designs"],
                             help="certify a whole generated corpus")
        for flag in ("--n", "--k", "--m", "--length"):
            p.add_argument(flag, type=int, default=None, help=f"generator parameter {flag[2:]}")
        p.add_argument("--gen-seed", type=int, default=None,
                       help="generator seed (defaults to --seed)")

    def add_solver(p):
        p.add_argument("--tol", type=float, default=1e-8)
        p.add_argument("--max-iter", type=int, default=50_000)
        p.add_argument("--starts", type=int, default=16)
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--method", choices=["auto", "pg", "power", "both"], default="auto")
        p.add_argument("--threads", type=int, default=os.cpu_count() or 1)
        p.add_argument("--json", action="store_true", help="emit stable JSON instead of a table")

    for verb, text in (
        ("alpha", "per-vertex inverse Perron values and the connectivity summary"),
        ("bounds", "exact cut quantities: bipartition width, isoperimetric number, "
                   "edge connectivity, eccentricities"),
        ("resistance", "resistance distances, Kirchhoff index and their certificates (graphs)"),
        ("design", "2-design detection and edge-connectivity bounds"),
        ("certify", "run every applicable certificate"),
        ("gen", "emit a generated hypergraph in the canonical format"),
    ):
        p = sub.add_parser(verb, help=text)
        if verb == "gen":
            p.add_argument("family", choices=sorted(GENERATORS))
            for flag in ("--n", "--k", "--m", "--length"):
                p.add_argument(flag, type=int, default=None)
            p.add_argument("--seed", type=int, default=0)
            p.add_argument("--json", action="store_true")
        else:
            add_source(p, corpus=(verb == "certify"))
            add_solver(p)
    return top


def _gen_params(args) -> dict:
    params = {}
    for name in ("n", "k", "m", "length"):
        v = getattr(args, name, None)
        if v is not None:
            params[name] = v
    return params


def _load_instance(args) -> tuple[str, Hypergraph]:
    if getattr(args, "input", None):
        with open(args.input, "rb") as fh:
            return f"file:{args.input}", parse(fh.read())
    params = _gen_params(args)
    if args.gen == "random_uniform":
        params["seed"] = args.gen_seed if args.gen_seed is not None else args.seed
    h = generate(args.gen, **params)
    tag = "_".join(f"{k}{v}" for k, v in sorted(params.items()))
    return f"gen:{args.gen}" + (f"/{tag}" if tag else ""), h


def _solver_options(args) -> SolverOptions:
    return SolverOptions(
        tol=args.tol,
        max_iter=args.max_iter,
        starts=args.starts,
        seed=args.seed,
        method=args.method,
        threads=args.threads,
    )


def _emit(payload: dict, as_json: bool, text: str) -> None:
    if as_json:
        print(json.dumps(payload, indent=2, allow_nan=False))
    else:
        print(text, end="")


def _header(args, instance_id: str, h: Hypergraph) -> str:
    return (f"# {args.verb} {instance_id}  n={h.n} k={h.k} m={h.m}  "
            f"seed={args.seed} method={args.method}\n")


def _cmd_gen(args) -> int:
    params = _gen_params(args)
    if args.family == "random_uniform":
        params["seed"] = args.seed
    h = generate(args.family, **params)
    tag = " ".join(f"{k}={v}" for k, v in sorted(params.items()))
    body = f"# gen {args.family}" + (f" {tag}" if tag else "") + "\n" + render(h)
    if args.json:
        print(json.dumps({
            "command": "gen", "family": args.family, "params": params,
            "n": h.n, "k": h.k, "m": h.m, "edges": [list(e) for e in h.edges],
        }, indent=2))
    else:
        print(body, end="")
    return EXIT_OK


def _cmd_alpha(args) -> int:
    instance_id, h = _load_instance(args)
    opts = _solver_options(args)
    summary = perron_summary(h, opts)
    payload = {
        "command": "alpha",
        "instance": instance_id,
        "n": h.n, "k": h.k, "m": h.m,
        "seed": args.seed,
        "method": args.method,
        "results": [
            {
                "vertex": r.vertex,
                "value": float(f"{r.value:.12g}"),
                "kkt_residual": float(f"{r.kkt_residual:.3g}"),
                "iterations": r.iterations,
                "method": r.method,
                "converged": r.converged,
            }
            for r in summary.per_vertex
        ],
        "alpha": float(f"{summary.alpha:.12g}"),
        "beta": float(f"{summary.beta:.12g}"),
        "argmin_vertex": summary.argmin_vertex,
        "argmax_vertex": summary.argmax_vertex,
        "converged": summary.converged,
    }
    lines = [_header(args, instance_id, h)]
    lines.append(f"{'vertex':>6} {'alpha_j':>16} {'kkt':>10} {'iters':>8} {'method':>20} conv\n")
    for r in summary.per_vertex:
        lines.append(f"{r.vertex:>6} {_num(r.value):>16} {r.kkt_residual:>10.1e} "
                     f"{r.iterations:>8} {r.method:>20} {str(r.converged):>5}\n")
    lines.append(f"alpha={_num(summary.alpha)} (vertex {summary.argmin_vertex})  "
                 f"beta={_num(summary.beta)} (vertex {summary.argmax_vertex})  "
                 f"connected={is_connected(h)}\n")
    _emit(payload, args.json, "".join(lines))
    return EXIT_OK if summary.converged else EXIT_NO_CONVERGENCE


def _cmd_bounds(args) -> int:
    instance_id, h = _load_instance(args)
    bw, bw_wit = bipartition_width(h)
    iso, iso_wit = isoperimetric_number(h)
    ec, ec_wit = edge_connectivity(h)
    connected = is_connected(h)
    eccs = {v: eccentricity(h, v) for v in range(1, h.n + 1)} if connected else None
    payload = {
        "command": "bounds",
        "instance": instance_id,
        "n": h.n, "k": h.k, "m": h.m,
        "seed": args.seed,
        "bipartition_width": {"value": bw, "witness": list(bw_wit)},
        "isoperimetric_number": {"value": float(f"{iso:.12g}"), "witness": list(iso_wit)},
        "edge_connectivity": {"value": ec, "witness": list(ec_wit)},
        "connected": connected,
        "diameter": diameter(h) if connected else None,
        "radius": radius(h) if connected else None,
        "eccentricities": [eccs[v] for v in sorted(eccs)] if eccs else None,
    }
    text = [_header(args, instance_id, h)]
    text.append(f"bipartition width   bw = {bw}   witness {list(bw_wit)}\n")
    text.append(f"isoperimetric       i  = {_num(iso)}   witness {list(iso_wit)}\n")
    text.append(f"edge connectivity   e  = {ec}   witness {list(ec_wit)}\n")
    if connected:
        text.append(f"diameter = {payload['diameter']}   radius = {payload['radius']}\n")
    else:
        text.append("disconnected: eccentricities are infinite\n")
    _emit(payload, args.json, "".join(text))
    return EXIT_OK


def _cmd_resistance(args) -> int:
    from .resistance import resistance_matrix

    instance_id, h = _load_instance(args)
    opts = _solver_options(args)
    rep = resistance_matrix(h, seed=args.seed)
    summary = perron_summary(h, opts)
    certs = certify_mod.check_section4(h, summary, instance_id=instance_id, seed=args.seed)
    payload = {
        "command": "resistance",
        "instance": instance_id,
        "n": h.n, "k": h.k, "m": h.m,
        "seed": args.seed,
        "r": [[float(f"{x:.12g}") for x in row] for row in rep.r],
        "kirchhoff_index": float(f"{rep.kf:.12g}"),
        "resistance_centrality": [float(f"{x:.12g}") for x in rep.kf_i],
        "resistance_eccentricity": [float(f"{x:.12g}") for x in rep.r_i],
        "certificates": [c.as_dict() for c in certs],
    }
    text = [_header(args, instance_id, h)]
    text.append("r matrix:\n")
    for row in rep.r:
        text.append("  " + " ".join(f"{x:>12.10g}" for x in row) + "\n")
    text.append(f"Kf = {_num(rep.kf)}\n")
    text.append("Kf_i = " + " ".join(_num(x) for x in rep.kf_i) + "\n")
    text.append("r_i  = " + " ".join(_num(x) for x in rep.r_i) + "\n")
    text.append(certify_mod.render_certificates(certs))
    _emit(payload, args.json, "".join(text))
    if any(c.status == report_mod.FAIL for c in certs):
        return EXIT_CERT_FAIL
    if not summary.converged:
        return EXIT_NO_CONVERGENCE
    return EXIT_OK


def _cmd_design(args) -> int:
    instance_id, h = _load_instance(args)
    params = detect_2_design(h)
    payload = {
        "command": "design",
        "instance": instance_id,
        "n": h.n, "k": h.k, "m": h.m,
        "seed": args.seed,
        "is_design": params is not None,
    }
    text = [_header(args, instance_id, h)]
    if params is None:
        payload["params"] = None
        text.append("not a 2-design\n")
    else:
        lower, upper = design_edge_connectivity_bounds(params)
        payload["params"] = {
            "n": params.n, "b": params.b, "k": params.k,
            "r": params.r, "lambda": params.lam, "symmetric": params.symmetric,
        }
        payload["edge_connectivity_bounds"] = [float(f"{lower:.12g}"), float(f"{upper:.12g}")]
        text.append(f"2-({params.n},{params.b},{params.k},{params.r},{params.lam}) design"
                    f"{' (symmetric)' if params.symmetric else ''}\n")
        text.append(f"edge connectivity bounds: {_num(lower)} <= e <= {_num(upper)}\n")
        if params.symmetric:
            text.append(f"symmetric design: e = k = r = {params.k}\n")
    _emit(payload, args.json, "".join(text))
    return EXIT_OK


def _cmd_certify(args) -> int:
    opts = _solver_options(args)
    if getattr(args, "corpus", None):
        conn = {"default": "include_disconnected", "connected": "connected_only",
                "designs": "connected_only"}[args.corpus]
        spec = default_corpus(seed=args.seed, connectivity=conn)
        rep = certify_mod.certify_corpus(spec, opts)
        if args.corpus == "designs":
            kept = []
            for iid, certs in rep.instances:
                if any(c.theorem_id == "T3.9" and c.status != report_mod.SKIP for c in certs):
                    kept.append((iid, certs))
            rep = certify_mod.CorpusReport(seed=rep.seed, connectivity=rep.connectivity,
                                           instances=kept)
        payload = {
            "command": "certify",
            "corpus": args.corpus,
            "seed": args.seed,
            "instances": [
                {"instance_id": iid, "certificates": [c.as_dict() for c in certs]}
                for iid, certs in rep.instances
            ],
            "tallies": rep.tallies,
            "all_pass": rep.all_pass,
        }
        _emit(payload, args.json, certify_mod.render_corpus_report(rep))
        if not rep.all_pass:
            return EXIT_CERT_FAIL
        if rep.indeterminate_rate > 0:
            return EXIT_NO_CONVERGENCE
        return EXIT_OK
    instance_id, h = _load_instance(args)
    certs = certify_mod.certify_instance(h, opts, instance_id=instance_id)
    payload = {
        "command": "certify",
        "instance": instance_id,
        "n": h.n, "k": h.k, "m": h.m,
        "seed": args.seed,
        "certificates": [c.as_dict() for c in certs],
        "all_pass": all(c.status != report_mod.FAIL for c in certs),
    }
    text = _header(args, instance_id, h) + certify_mod.render_certificates(certs)
    _emit(payload, args.json, text)
    if any(c.status == report_mod.FAIL for c in certs):
        return EXIT_CERT_FAIL
    if any(c.status == report_mod.INDETERMINATE for c in certs):
        return EXIT_NO_CONVERGENCE
    return EXIT_OK


_COMMANDS = {
    "gen": _cmd_gen,
    "alpha": _cmd_alpha,
    "bounds": _cmd_bounds,
    "resistance": _cmd_resistance,
    "design": _cmd_design,
    "certify": _cmd_certify,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return _COMMANDS[args.verb](args)
    except (ValueError, EnumerationLimitError, DisconnectedError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ArithmeticError as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return EXIT_NO_CONVERGENCE


if __name__ == "__main__":
    sys.exit(main())
