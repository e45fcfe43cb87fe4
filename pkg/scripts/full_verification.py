#!/usr/bin/env python3
"""Run the complete desk-scale verification: exhaustive n <= 6 over the full
bound catalog with complement pairs, plus the linear-algebra identity suite.

Usage:
    python scripts/full_verification.py [--n-max 6] [--threads T] [--seed S]

Exits nonzero if any bound is violated or any identity residual exceeds its
tolerance.
"""

import argparse
import sys
import time

from exen.oracle import SweepConfig, identity_suite, run_sweep


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--n-max", type=int, default=6)
    ap.add_argument("--threads", type=int, default=2)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    def progress(done, total):
        if done % (1 << 15) < 4096 or done == total:
            sys.stderr.write(f"\r  {done}/{total} graphs")
            sys.stderr.flush()

    print(f"exhaustive sweep: n <= {args.n_max}, full catalog, complement pairs on")
    cfg = SweepConfig(n_min=1, n_max=args.n_max, complement_pairs=True, threads=args.threads)
    t0 = time.perf_counter()
    summary = run_sweep(cfg, progress=progress)
    sys.stderr.write("\n")
    print(f"  {summary.graphs_processed} graphs in {time.perf_counter() - t0:.1f}s")

    width = max(len(bid) for bid in summary.tallies)
    print(f"  {'check':<{width}}  {'holds':>7} {'equal':>6} {'viol':>5} {'n/a':>6}  worst slack")
    for bid, t in sorted(summary.tallies.items()):
        slack = "-" if t.worst_slack is None else f"{t.worst_slack:+.3e}"
        print(f"  {bid:<{width}}  {t.holds:>7} {t.equality:>6} {t.violated:>5} "
              f"{t.not_applicable:>6}  {slack}")
    ok = summary.violations_total == 0 and not summary.failures
    print(f"  violations: {summary.violations_total}, eigensolver failures: {len(summary.failures)}")

    print("identity suite: connected graphs n <= 5 plus seeded matrix samples")
    id_summary = identity_suite(
        SweepConfig(n_min=1, n_max=5, connected_only=True, seed=args.seed)
    )
    for key, rec in sorted(id_summary.identities.items()):
        mark = "ok" if rec["pass"] else "FAIL"
        print(f"  {key:<22} residual {rec['max_residual']:.3e} "
              f"(tol {rec['tolerance']:.0e}, {rec['checks']} checks) {mark}")
    ok = ok and id_summary.identities_pass()

    print("PASS" if ok else "FAIL")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
