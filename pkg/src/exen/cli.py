"""Command-line driver: compute | verify | sweep | catalog.

stdout carries exactly one JSON document (or the text catalog); logs and
progress go to stderr.  Exit codes: 0 success, 1 at least one violated
bound, 2 input/parse failure, 3 numeric failure.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from pathlib import Path

from .bounds import GraphContext, Tolerances, catalog, resolve_bound_filter, evaluate_bounds
from .graphs import (
    EdgeListParseError,
    Graph6ParseError,
    make_family,
    parse_edge_list,
    parse_graph6,
    serialize_graph6,
)
from .linalg import ConvergenceError
from .oracle import EXHAUSTIVE, RANDOM_GNP, CORPUS, SweepConfig, run_sweep, sweep_graphs

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_PARSE = 2
EXIT_NUMERIC = 3

SCHEMA_VERSION = "1"


def _round12(obj):
    """Clamp every real number in a document to 12 significant digits."""
    if isinstance(obj, float):
        return float(f"{obj:.12g}")
    if isinstance(obj, dict):
        return {k: _round12(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_round12(v) for v in obj]
    return obj


def _emit(doc) -> None:
    sys.stdout.write(json.dumps(_round12(doc), indent=2, allow_nan=False) + "\n")


def _log(msg) -> None:
    sys.stderr.write(msg + "\n")


def _threads(args) -> int:
    if args.threads is not None:
        return args.threads
    env = os.environ.get("EXEN_THREADS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            raise SystemExit(EXIT_PARSE) from None
    return 1


def _tolerances(args) -> Tolerances:
    return Tolerances(eq_rel=args.tol_eq, viol_rel=args.tol_viol)


def _load_graph(args, seed):
    """Resolve the single-graph input options; returns (graph, descriptor)."""
    sources = [s for s in ("g6", "edgelist", "family") if getattr(args, s, None)]
    if len(sources) != 1:
        _log("error: exactly one of --g6 / --edgelist / --family is required")
        raise SystemExit(EXIT_PARSE)
    kind = sources[0]
    if kind == "g6":
        g = parse_graph6(args.g6)
        return g, {"kind": "graph6", "value": args.g6}
    if kind == "edgelist":
        text = Path(args.edgelist).read_text(encoding="ascii")
        g = parse_edge_list(text)
        return g, {"kind": "edgelist", "value": args.edgelist}
    g = make_family(args.family, seed=seed)
    return g, {"kind": "family", "value": args.family}


def _check_dict(check, cat):
    return {
        "bound_id": check.bound_id,
        "scope": check.scope,
        "vertex": check.vertex,
        "lhs": check.lhs,
        "rhs": check.rhs,
        "slack": check.slack,
        "status": check.status,
        "witness_note": check.witness_note,
        "source": cat[check.bound_id].source,
    }


def cmd_compute(args) -> int:
    try:
        g, descriptor = _load_graph(args, args.seed)
    except (Graph6ParseError, EdgeListParseError, ValueError, OSError) as exc:
        _log(f"error: {exc}")
        return EXIT_PARSE
    if args.vertex is not None and not 0 <= args.vertex < g.n:
        _log(f"error: --vertex {args.vertex} out of range for n={g.n}")
        return EXIT_PARSE

    try:
        ctx = GraphContext(g, tols=_tolerances(args))
        ids = resolve_bound_filter(None, include_pairs=args.pairs)
        checks = evaluate_bounds(ctx, ids)
    except ConvergenceError as exc:
        _log(f"numeric failure: {exc}")
        return EXIT_NUMERIC

    if args.vertex is not None:
        checks = [c for c in checks if c.vertex is None or c.vertex == args.vertex]

    report = ctx.report
    cat = catalog()
    doc = {
        "schema_version": SCHEMA_VERSION,
        "input": descriptor,
        "indexing": "0-based",
        "graph": {
            "n": g.n,
            "edge_count": g.edge_count,
            "graph6": serialize_graph6(g),
            "degrees": list(ctx.profile.degrees),
        },
        "energy": {
            "ordinary_energy": report.ordinary_energy,
            "extended_energy": report.extended_energy,
            "vertex_energies": [float(x) for x in report.vertex_energies],
            "extended_vertex_energies": [float(x) for x in report.extended_vertex_energies],
            "adjacency_spectral_radius": report.adjacency_spectral_radius,
            "extended_spectral_radius": report.extended_spectral_radius,
            "spectrum": [float(x) for x in report.spectrum],
            "extended_spectrum": [float(x) for x in report.extended_spectrum],
        },
        "bounds": [_check_dict(c, cat) for c in checks],
    }
    _emit(doc)
    return EXIT_OK


def _parse_bounds_arg(text):
    if text is None or text == "all":
        return None
    return tuple(b.strip() for b in text.split(",") if b.strip())


def _sweep_config(args, mode, **kw) -> SweepConfig:
    return SweepConfig(
        mode=mode,
        seed=args.seed,
        bound_filter=_parse_bounds_arg(args.bounds),
        connected_only=args.connected_only,
        complement_pairs=args.pairs,
        threads=_threads(args),
        eq_tol_rel=args.tol_eq,
        viol_tol_rel=args.tol_viol,
        **kw,
    )


def _summary_exit(summary) -> int:
    if summary.failures:
        return EXIT_NUMERIC
    if summary.violations_total > 0:
        return EXIT_VIOLATION
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        if args.exhaustive is not None:
            cfg = _sweep_config(args, EXHAUSTIVE, n_min=1, n_max=args.exhaustive)
            summary = run_sweep(cfg)
        elif args.corpus:
            cfg = _sweep_config(args, CORPUS, corpus_path=args.corpus)
            summary = run_sweep(cfg)
        else:
            g, _ = _load_graph(args, args.seed)
            cfg = _sweep_config(args, EXHAUSTIVE)
            summary = sweep_graphs([g], cfg)
    except (Graph6ParseError, EdgeListParseError, ValueError, OSError) as exc:
        _log(f"error: {exc}")
        return EXIT_PARSE
    _emit(summary.to_json_dict())
    _log(f"verify: {summary.graphs_processed} graphs, {summary.violations_total} violations "
         f"({summary.runtime_seconds:.2f}s)")
    return _summary_exit(summary)


def cmd_sweep(args) -> int:
    out_dir = Path(args.out)
    try:
        if args.exhaustive is not None:
            cfg = _sweep_config(args, EXHAUSTIVE, n_min=1, n_max=args.exhaustive)
        elif args.random:
            probs = tuple(float(p) for p in args.p.split(","))
            cfg = _sweep_config(
                args, RANDOM_GNP,
                n_min=args.n, n_max=args.n,
                sample_count=args.samples,
                edge_probabilities=probs,
            )
        elif args.corpus:
            cfg = _sweep_config(args, CORPUS, corpus_path=args.corpus)
        else:
            _log("error: one of --exhaustive / --random / --corpus is required")
            return EXIT_PARSE
        summary = run_sweep(cfg)
    except (Graph6ParseError, ValueError, OSError) as exc:
        _log(f"error: {exc}")
        return EXIT_PARSE

    doc = {
        "schema_version": SCHEMA_VERSION,
        "config": _round12({
            "mode": cfg.mode,
            "n_min": cfg.n_min,
            "n_max": cfg.n_max,
            "sample_count": cfg.sample_count,
            "edge_probabilities": list(cfg.edge_probabilities),
            "seed": cfg.seed,
            "bounds": sorted(cfg.resolved_bounds()),
            "connected_only": cfg.connected_only,
            "complement_pairs": cfg.complement_pairs,
            "corpus": cfg.corpus_path,
        }),
        "summary": summary.to_json_dict(),
    }
    out_dir.mkdir(parents=True, exist_ok=True)
    payload = json.dumps(_round12(doc), indent=2, allow_nan=False) + "\n"
    (out_dir / "summary.json").write_text(payload, encoding="ascii")
    with (out_dir / "slacks.csv").open("w", newline="", encoding="ascii") as fh:
        writer = csv.writer(fh)
        writer.writerow(["bound_id", "worst_slack", "witness_g6", "equality_count"])
        for bid, tally in sorted(summary.tallies.items()):
            slack = "" if tally.worst_slack is None else f"{tally.worst_slack:.12g}"
            writer.writerow([bid, slack, tally.worst_witness or "", tally.equality_count])
    sys.stdout.write(payload)
    _log(f"sweep: {summary.graphs_processed} graphs, {summary.violations_total} violations "
         f"({summary.runtime_seconds:.2f}s) -> {out_dir}/summary.json, {out_dir}/slacks.csv")
    return _summary_exit(summary)


def cmd_catalog(args) -> int:
    entries = [
        {
            "bound_id": bid,
            "scope": bd.scope,
            "kind": bd.kind,
            "description": bd.description,
            "precondition": bd.precondition_text,
            "source": bd.source,
        }
        for bid, bd in sorted(catalog().items())
    ]
    if args.json:
        _emit({"schema_version": SCHEMA_VERSION, "count": len(entries), "bounds": entries})
    else:
        for e in entries:
            print(f"{e['bound_id']}  [{e['scope']}, {e['kind']}]")
            print(f"    {e['description']}")
            print(f"    precondition: {e['precondition']}")
            print(f"    source: {e['source']}")
        print(f"total: {len(entries)} checks")
    return EXIT_OK


def _add_common(parser):
    parser.add_argument("--json", action="store_true", help="JSON output where a text form exists")
    parser.add_argument("--seed", type=int, default=0, help="seed for randomized inputs")
    parser.add_argument("--tol-eq", type=float, default=1e-7, dest="tol_eq",
                        help="relative equality tolerance")
    parser.add_argument("--tol-viol", type=float, default=1e-9, dest="tol_viol",
                        help="relative violation tolerance")
    parser.add_argument("--threads", type=int, default=None,
                        help="worker processes (default: EXEN_THREADS or 1)")


def _add_graph_inputs(parser):
    parser.add_argument("--g6", help="graph6 string")
    parser.add_argument("--edgelist", help="edge-list file path")
    parser.add_argument("--family", help="family spec, e.g. path:3 or complete_bipartite:2,3")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="exen",
                                 description="extended graph energy: computation and bound certification")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="energy report plus all applicable bound checks for one graph")
    _add_common(p)
    _add_graph_inputs(p)
    p.add_argument("--vertex", type=int, default=None, help="restrict per-vertex checks to one vertex")
    p.add_argument("--pairs", action="store_true", help="include complement-pair checks")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("verify", help="run bound checks over a corpus, family, or exhaustive range")
    _add_common(p)
    _add_graph_inputs(p)
    p.add_argument("--exhaustive", type=int, default=None, metavar="N",
                   help="all labeled graphs with 1 <= n <= N (N <= 7)")
    p.add_argument("--corpus", help="graph6 corpus file (one graph per line, # comments)")
    p.add_argument("--bounds", default="all", help="comma-separated bound ids, 'all', or 'dominance:*'")
    p.add_argument("--pairs", action="store_true", help="enable complement-pair checks")
    p.add_argument("--connected-only", action="store_true", dest="connected_only")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sweep", help="like verify, but writes summary.json and slacks.csv")
    _add_common(p)
    p.add_argument("--exhaustive", type=int, default=None, metavar="N")
    p.add_argument("--random", action="store_true", help="G(n,p) sampling mode")
    p.add_argument("--n", type=int, default=10, help="order for random mode")
    p.add_argument("--p", default="0.5", help="edge probabilities, comma-separated")
    p.add_argument("--samples", type=int, default=100, help="samples per (n, p) cell")
    p.add_argument("--corpus", help="graph6 corpus file")
    p.add_argument("--bounds", default="all")
    p.add_argument("--pairs", action="store_true")
    p.add_argument("--connected-only", action="store_true", dest="connected_only")
    p.add_argument("--out", required=True, help="output directory")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("catalog", help="list every registered bound with precondition and source")
    _add_common(p)
    p.set_defaults(func=cmd_catalog)

    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ConvergenceError as exc:
        _log(f"numeric failure: {exc}")
        return EXIT_NUMERIC


if __name__ == "__main__":
    sys.exit(main())
