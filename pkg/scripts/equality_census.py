#!/usr/bin/env python3
"""Census of equality witnesses: which graphs attain each bound exactly?

Enumerates all labeled graphs up to --n-max and lists, per bound, the graphs
whose check lands on equality, grouped by witness classification.  Useful for
eyeballing the sharpness structure of the catalog.

Usage:
    python scripts/equality_census.py [--n-max 5] [--bound ID ...]
"""

import argparse
from collections import Counter, defaultdict

from exen.bounds import EQUALITY, GraphContext, catalog, evaluate_bound
from exen.graphs import serialize_graph6
from exen.oracle import enumerate_labeled


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--n-max", type=int, default=5)
    ap.add_argument("--bound", action="append", default=None,
                    help="bound id (repeatable); default: every non-dominance bound")
    ap.add_argument("--show", type=int, default=6, help="witnesses to print per class")
    args = ap.parse_args()

    cat = catalog()
    ids = args.bound or [b for b in cat if not b.startswith("dominance:")]

    witnesses = defaultdict(lambda: defaultdict(list))
    for n in range(1, args.n_max + 1):
        for g in enumerate_labeled(n):
            ctx = GraphContext(g)
            for bid in ids:
                for check in evaluate_bound(bid, ctx):
                    if check.status == EQUALITY:
                        note = check.witness_note or "unclassified"
                        witnesses[bid][note].append(serialize_graph6(g))
                        break  # one record per graph per bound

    for bid in ids:
        classes = witnesses.get(bid)
        print(f"{bid}:")
        if not classes:
            print("  (no equality cases in range)")
            continue
        for note, graphs in sorted(classes.items()):
            dedup = Counter(graphs)
            sample = ", ".join(list(dedup)[: args.show])
            more = "" if len(dedup) <= args.show else f", ... ({len(dedup)} total)"
            print(f"  {note}: {len(graphs)} graphs  [{sample}{more}]")


if __name__ == "__main__":
    main()
