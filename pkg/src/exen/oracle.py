"""Exhaustive and randomized graph sweeps: the brute-force verification layer.

Labeled enumeration keeps isomorphic duplicates; inequality truth is
isomorphism-invariant, so duplicates only cost time and double as a
consistency check.  Sweeps distribute graphs over a worker pool; partial
summaries merge as a commutative monoid keyed by stream index, so results
do not depend on scheduling.
"""

from __future__ import annotations

import itertools
import json
import math
import time
from dataclasses import dataclass, field
from multiprocessing import Pool

import numpy as np

from .bounds import (
    EQUALITY,
    HOLDS,
    NOT_APPLICABLE,
    PER_VERTEX,
    VIOLATED,
    GraphContext,
    Tolerances,
    catalog,
    resolve_bound_filter,
    evaluate_bound,
)
from .graphs import (
    Graph,
    is_bidegree_extreme,
    is_componentwise_regular,
    is_connected,
    is_perfect_matching,
    parse_graph6,
    random_gnp,
    serialize_graph6,
    strongly_regular_params,
)
from .linalg import (
    ConvergenceError,
    NotApplicableError,
    kronecker,
    matrix_abs,
    operator_norm,
    polar_factor,
    trace,
    vec,
    verify_S_identity,
)

EXHAUSTIVE = "exhaustive-labeled"
RANDOM_GNP = "random-gnp"
CORPUS = "corpus-file"

WITNESS_CAP = 100  # stored equality witnesses per bound; counts are exact
_CHUNK = 4096


@dataclass(frozen=True)
class SweepConfig:
    n_min: int = 1
    n_max: int = 6
    mode: str = EXHAUSTIVE
    sample_count: int = 0
    edge_probabilities: tuple = ()
    seed: int = 0
    bound_filter: tuple | None = None  # None = every registered bound
    connected_only: bool = False
    complement_pairs: bool = False
    corpus_path: str | None = None
    threads: int = 1
    eq_tol_rel: float = 1e-7
    viol_tol_rel: float = 1e-9

    def __post_init__(self):
        if self.mode not in (EXHAUSTIVE, RANDOM_GNP, CORPUS):
            raise ValueError(f"unknown sweep mode {self.mode!r}")
        if self.mode == EXHAUSTIVE and not (1 <= self.n_min <= self.n_max <= 7):
            raise ValueError("exhaustive mode requires 1 <= n_min <= n_max <= 7")
        if self.mode == RANDOM_GNP and (self.sample_count < 1 or not self.edge_probabilities):
            raise ValueError("random mode needs sample_count >= 1 and an edge-probability grid")
        if self.mode == CORPUS and not self.corpus_path:
            raise ValueError("corpus mode needs corpus_path")

    def resolved_bounds(self) -> list:
        return resolve_bound_filter(self.bound_filter, self.complement_pairs)

    def tolerances(self) -> Tolerances:
        return Tolerances(eq_rel=self.eq_tol_rel, viol_rel=self.viol_tol_rel)


def enumerate_labeled(n: int):
    """All 2^(n(n-1)/2) labeled simple graphs on n vertices, in mask order."""
    if not 1 <= n <= 7:
        raise ValueError("labeled enumeration supports 1 <= n <= 7")
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield _graph_from_mask(n, pairs, mask)


def _graph_from_mask(n, pairs, mask):
    edges = frozenset(p for k, p in enumerate(pairs) if (mask >> k) & 1)
    return Graph(n, edges)


# ---------------------------------------------------------------------------
# per-graph evaluation and per-bound accumulation
# ---------------------------------------------------------------------------


def _graph_level(checks):
    """Collapse the per-vertex checks of one bound on one graph to one row."""
    statuses = [c.status for c in checks]
    if VIOLATED in statuses:
        status = VIOLATED
    elif EQUALITY in statuses:
        status = EQUALITY
    elif HOLDS in statuses:
        status = HOLDS
    else:
        status = NOT_APPLICABLE
    slacks = [c.slack for c in checks if c.slack is not None]
    slack = min(slacks) if slacks else None
    note = next((c.witness_note for c in checks if c.status == EQUALITY and c.witness_note), "")
    return status, slack, note


class _Tally:
    __slots__ = (
        "holds", "equality", "violated", "not_applicable",
        "worst_slack", "worst_index", "worst_witness", "witnesses",
    )

    def __init__(self):
        self.holds = 0
        self.equality = 0
        self.violated = 0
        self.not_applicable = 0
        self.worst_slack = None
        self.worst_index = None
        self.worst_witness = None
        self.witnesses = []  # (stream index, graph6) of equality graphs

    def add(self, index, g6, status, slack):
        if status == HOLDS:
            self.holds += 1
        elif status == EQUALITY:
            self.equality += 1
            self.witnesses.append((index, g6))
        elif status == VIOLATED:
            self.violated += 1
        else:
            self.not_applicable += 1
        if slack is not None and (
            self.worst_slack is None
            or slack < self.worst_slack
            or (slack == self.worst_slack and index < self.worst_index)
        ):
            self.worst_slack = slack
            self.worst_index = index
            self.worst_witness = g6

    def merge(self, other):
        self.holds += other.holds
        self.equality += other.equality
        self.violated += other.violated
        self.not_applicable += other.not_applicable
        if other.worst_slack is not None:
            if (
                self.worst_slack is None
                or other.worst_slack < self.worst_slack
                or (other.worst_slack == self.worst_slack and other.worst_index < self.worst_index)
            ):
                self.worst_slack = other.worst_slack
                self.worst_index = other.worst_index
                self.worst_witness = other.worst_witness
        self.witnesses.extend(other.witnesses)


def _evaluate_graph(g, index, ids, tols, need_vertex, tallies, failures):
    g6 = serialize_graph6(g)
    try:
        ctx = GraphContext(g, tols=tols, include_vertex=need_vertex)
        for bid in ids:
            status, slack, _ = _graph_level(evaluate_bound(bid, ctx))
            tallies[bid].add(index, g6, status, slack)
    except ConvergenceError as exc:
        failures.append({"index": index, "graph6": g6, "error": str(exc)})


def _stream_units(cfg: SweepConfig):
    """Work units: (kind, payload, base stream index)."""
    units = []
    base = 0
    if cfg.mode == EXHAUSTIVE:
        for n in range(cfg.n_min, cfg.n_max + 1):
            total = 1 << (n * (n - 1) // 2)
            for lo in range(0, total, _CHUNK):
                hi = min(lo + _CHUNK, total)
                units.append(("exh", (n, lo, hi), base + lo))
            base += total
    elif cfg.mode == RANDOM_GNP:
        samples = []
        for n in range(cfg.n_min, cfg.n_max + 1):
            for p in cfg.edge_probabilities:
                for _ in range(cfg.sample_count):
                    samples.append((n, p))
        for lo in range(0, len(samples), 64):
            chunk = samples[lo : lo + 64]
            units.append(("rnd", chunk, lo))
    else:
        with open(cfg.corpus_path, "r", encoding="ascii") as fh:
            lines = [ln.strip() for ln in fh]
        lines = [ln for ln in lines if ln and not ln.startswith("#")]
        for ln in lines:  # fail fast on malformed corpus
            parse_graph6(ln.removeprefix(">>graph6<<"))
        for lo in range(0, len(lines), _CHUNK):
            units.append(("cor", lines[lo : lo + _CHUNK], lo))
    return units


def _unit_graphs(kind, payload, base, cfg):
    if kind == "exh":
        n, lo, hi = payload
        pairs = list(itertools.combinations(range(n), 2))
        for mask in range(lo, hi):
            yield base + (mask - lo), _graph_from_mask(n, pairs, mask)
    elif kind == "rnd":
        for k, (n, p) in enumerate(payload):
            idx = base + k
            rng = np.random.Generator(np.random.PCG64(np.random.SeedSequence(entropy=cfg.seed, spawn_key=(idx,))))
            yield idx, random_gnp(n, p, rng)
    else:
        for k, ln in enumerate(payload):
            yield base + k, parse_graph6(ln.removeprefix(">>graph6<<"))


def _run_unit(args):
    cfg, ids, need_vertex, unit = args
    kind, payload, base = unit
    tols = cfg.tolerances()
    tallies = {bid: _Tally() for bid in ids}
    failures = []
    processed = 0
    for index, g in _unit_graphs(kind, payload, base, cfg):
        if cfg.connected_only and not is_connected(g):
            continue
        processed += 1
        _evaluate_graph(g, index, ids, tols, need_vertex, tallies, failures)
    return processed, tallies, failures


# ---------------------------------------------------------------------------
# summaries
# ---------------------------------------------------------------------------


@dataclass
class BoundTallyResult:
    bound_id: str
    holds: int
    equality: int
    violated: int
    not_applicable: int
    worst_slack: float | None
    worst_witness: str | None
    equality_count: int
    equality_witnesses: list


@dataclass
class SweepSummary:
    graphs_processed: int
    tallies: dict
    violations_total: int
    failures: list
    runtime_seconds: float
    identities: dict = field(default_factory=dict)

    def to_json_dict(self) -> dict:
        # runtime is intentionally excluded: identical configs must serialize
        # byte-identically
        doc = {
            "schema_version": "1",
            "graphs_processed": self.graphs_processed,
            "violations_total": self.violations_total,
            "failures": self.failures,
            "bounds": [
                {
                    "bound_id": t.bound_id,
                    "holds": t.holds,
                    "equality": t.equality,
                    "violated": t.violated,
                    "not_applicable": t.not_applicable,
                    "worst_slack": _round12(t.worst_slack),
                    "worst_witness": t.worst_witness,
                    "equality_count": t.equality_count,
                    "equality_witnesses": list(t.equality_witnesses),
                }
                for _, t in sorted(self.tallies.items())
            ],
        }
        if self.identities:
            doc["identities"] = {
                key: {
                    "checks": rec["checks"],
                    "not_applicable": rec["not_applicable"],
                    "max_residual": _round12(rec["max_residual"]),
                    "tolerance": _round12(rec["tolerance"]),
                    "pass": rec["pass"],
                }
                for key, rec in sorted(self.identities.items())
            }
        return doc

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2, allow_nan=False, sort_keys=False)

    def identities_pass(self) -> bool:
        return all(rec["pass"] for rec in self.identities.values())


def _round12(x):
    if x is None:
        return None
    return float(f"{float(x):.12g}")


def _finalize(ids, tallies, failures, processed, t0) -> SweepSummary:
    result_tallies = {}
    for bid in ids:
        t = tallies[bid]
        t.witnesses.sort()
        result_tallies[bid] = BoundTallyResult(
            bound_id=bid,
            holds=t.holds,
            equality=t.equality,
            violated=t.violated,
            not_applicable=t.not_applicable,
            worst_slack=t.worst_slack,
            worst_witness=t.worst_witness,
            equality_count=t.equality,
            equality_witnesses=[g6 for _, g6 in t.witnesses[:WITNESS_CAP]],
        )
    failures.sort(key=lambda f: f["index"])
    return SweepSummary(
        graphs_processed=processed,
        tallies=result_tallies,
        violations_total=sum(t.violated for t in result_tallies.values()),
        failures=failures,
        runtime_seconds=time.perf_counter() - t0,
    )


def run_sweep(cfg: SweepConfig, progress=None) -> SweepSummary:
    """Evaluate every selected bound on every streamed graph.

    `progress`, when given, is called after each finished work unit with
    (graphs_done, graphs_total).
    """
    t0 = time.perf_counter()
    ids = cfg.resolved_bounds()
    cat = catalog()
    need_vertex = any(cat[bid].scope == PER_VERTEX for bid in ids)
    units = _stream_units(cfg)
    total = _total_graphs(units)
    args = [(cfg, ids, need_vertex, u) for u in units]

    processed = 0
    seen = 0
    tallies = {bid: _Tally() for bid in ids}
    failures = []

    def consume(partials):
        nonlocal processed, seen
        for unit, (part_processed, part_tallies, part_failures) in zip(units, partials):
            processed += part_processed
            seen += _unit_size(unit)
            for bid in ids:
                tallies[bid].merge(part_tallies[bid])
            failures.extend(part_failures)
            if progress is not None:
                progress(seen, total)

    if cfg.threads > 1 and len(units) > 1:
        with Pool(cfg.threads) as pool:
            consume(pool.imap(_run_unit, args, chunksize=1))
    else:
        consume(map(_run_unit, args))
    return _finalize(ids, tallies, failures, processed, t0)


def _unit_size(unit):
    kind, payload, _ = unit
    if kind == "exh":
        _, lo, hi = payload
        return hi - lo
    return len(payload)


def _total_graphs(units):
    return sum(_unit_size(u) for u in units)


def sweep_graphs(graph_list, cfg: SweepConfig) -> SweepSummary:
    """Run the configured bound checks over an explicit list of graphs."""
    t0 = time.perf_counter()
    ids = cfg.resolved_bounds()
    cat = catalog()
    need_vertex = any(cat[bid].scope == PER_VERTEX for bid in ids)
    tols = cfg.tolerances()
    tallies = {bid: _Tally() for bid in ids}
    failures = []
    processed = 0
    for index, g in enumerate(graph_list):
        if cfg.connected_only and not is_connected(g):
            continue
        processed += 1
        _evaluate_graph(g, index, ids, tols, need_vertex, tallies, failures)
    return _finalize(ids, tallies, failures, processed, t0)


# ---------------------------------------------------------------------------
# equality witnesses with family cross-checks
# ---------------------------------------------------------------------------


def _km_family(g):
    if is_perfect_matching(g) or g.edge_count == g.n * (g.n - 1) // 2:
        return True
    return strongly_regular_params(g) is not None


_FAMILY_CHECKS = {
    "das_i": lambda g: g.edge_count == 0 or is_perfect_matching(g),
    "new_star_sum": lambda g: g.edge_count == 0 or is_perfect_matching(g),
    "mm22_ex": is_perfect_matching,
    "sandwich_left": is_componentwise_regular,
    "sandwich_right": is_bidegree_extreme,
    "koolen_moulton_ex": _km_family,
}


def find_equality_witnesses(cfg: SweepConfig, bound_id: str) -> list:
    """All graphs in an exhaustive range whose check reports equality.

    When the bound has a stated equality family, every witness is
    cross-checked against it structurally.
    """
    if cfg.mode != EXHAUSTIVE:
        raise ValueError("witness search requires exhaustive mode")
    ids = resolve_bound_filter([bound_id], include_pairs=True)
    cat = catalog()
    need_vertex = cat[ids[0]].scope == PER_VERTEX
    tols = cfg.tolerances()
    family = _FAMILY_CHECKS.get(bound_id)
    out = []
    for n in range(cfg.n_min, cfg.n_max + 1):
        for g in enumerate_labeled(n):
            if cfg.connected_only and not is_connected(g):
                continue
            ctx = GraphContext(g, tols=tols, include_vertex=need_vertex)
            status, _, _ = _graph_level(evaluate_bound(bound_id, ctx))
            if status == EQUALITY:
                g6 = serialize_graph6(g)
                if family is not None and not family(g):
                    raise AssertionError(
                        f"equality witness {g6!r} for {bound_id} falls outside the stated family"
                    )
                out.append(g6)
    return out


# ---------------------------------------------------------------------------
# linear-algebra identity suite
# ---------------------------------------------------------------------------

_IDENTITY_TOL = 1e-8


def identity_suite(cfg: SweepConfig) -> SweepSummary:
    """Numerical verification of the factorization identities.

    Graph part: the S-identity residual on every streamed graph (n <= 10,
    graphs with isolated vertices count as not-applicable).  Matrix part:
    polar reconstruction, vec/Kronecker identities, the trace-inequality
    corollary and the root-mean-square comparison on seeded random samples.
    """
    t0 = time.perf_counter()
    identities = {}

    def record(key, checks, max_residual, tolerance, ok, not_applicable=0):
        identities[key] = {
            "checks": checks,
            "not_applicable": not_applicable,
            "max_residual": max_residual,
            "tolerance": tolerance,
            "pass": ok,
        }

    processed = 0
    skipped = 0
    worst = 0.0
    for kind, payload, base in _stream_units(cfg):
        for _, g in _unit_graphs(kind, payload, base, cfg):
            if g.n > 10:
                raise ValueError("identity suite is restricted to n <= 10")
            if cfg.connected_only and not is_connected(g):
                continue
            try:
                worst = max(worst, verify_S_identity(g))
                processed += 1
            except NotApplicableError:
                skipped += 1
    record("s_identity", processed, worst, _IDENTITY_TOL, worst <= _IDENTITY_TOL, skipped)

    rng = np.random.default_rng(np.random.SeedSequence(entropy=cfg.seed, spawn_key=(1,)))

    worst = 0.0
    worst_orth = 0.0
    count = max(cfg.sample_count, 200)
    for _ in range(count):
        n = int(rng.integers(1, 9))
        x = rng.standard_normal((n, n))
        x = (x + x.T) / 2.0
        u = polar_factor(x)
        worst = max(worst, float(np.max(np.abs(x - matrix_abs(x) @ u))))
        worst_orth = max(worst_orth, float(np.max(np.abs(u.T @ u - np.eye(n)))))
    record("polar_reconstruction", count, worst, _IDENTITY_TOL, worst <= _IDENTITY_TOL)
    record("polar_orthogonality", count, worst_orth, 1e-10, worst_orth <= 1e-10)

    worst = 0.0
    count = max(cfg.sample_count, 100)
    for _ in range(count):
        x1, x2, x3, x4 = (rng.standard_normal((3, 3)) for _ in range(4))
        mixed = kronecker(x1, x2) @ kronecker(x3, x4) - kronecker(x1 @ x3, x2 @ x4)
        worst = max(worst, float(np.max(np.abs(mixed))))
        triple = vec(x1 @ x2 @ x3) - kronecker(x3.T, x1) @ vec(x2)
        worst = max(worst, float(np.max(np.abs(triple))))
        d1 = np.diag(rng.uniform(0.5, 2.0, 3))
        d2 = np.diag(rng.uniform(0.5, 2.0, 3))
        inv = np.linalg.inv(kronecker(d1, d2)) - kronecker(np.linalg.inv(d1), np.linalg.inv(d2))
        worst = max(worst, float(np.max(np.abs(inv))))
    record("vec_kronecker", count, worst, 1e-10, worst <= 1e-10)

    worst = 0.0
    count = max(cfg.sample_count, 100)
    for _ in range(count):
        n = int(rng.integers(2, 7))
        x1 = rng.standard_normal((n, n))
        x1 = (x1 + x1.T) / 2.0
        b = rng.standard_normal((n, n))
        x2 = b @ b.T  # positive semidefinite
        margin = operator_norm(x1) * trace(x2) - abs(trace(x1 @ x2))
        worst = max(worst, -margin)
    record("trace_inequality", count, worst, 1e-9, worst <= 1e-9)

    worst = 0.0
    count = max(cfg.sample_count, 1000)
    equality_misses = 0
    for _ in range(count):
        r = int(rng.integers(1, 11))
        t = rng.uniform(0.0, 100.0, r)
        lhs = float(np.sum(np.sqrt(t)))
        rhs = math.sqrt(r * float(np.sum(t)))
        worst = max(worst, lhs - rhs)
        if abs(lhs - rhs) <= 1e-12 and not np.all(np.abs(t - t[0]) <= 1e-12 * (1.0 + t[0])):
            equality_misses += 1
    const = rng.uniform(0.0, 100.0)
    tconst = np.full(7, const)
    if abs(float(np.sum(np.sqrt(tconst))) - math.sqrt(7 * float(np.sum(tconst)))) > 1e-9:
        equality_misses += 1
    record("rms_mean_comparison", count + 1, worst, 1e-12, worst <= 1e-12 and equality_misses == 0)

    return SweepSummary(
        graphs_processed=processed + skipped,
        tallies={},
        violations_total=0 if all(r["pass"] for r in identities.values()) else 1,
        failures=[],
        runtime_seconds=time.perf_counter() - t0,
        identities=identities,
    )
