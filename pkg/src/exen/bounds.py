"""The full inequality catalog as uniformly-shaped, checkable predicates.

Every bound is registered with a stable identifier, scope, precondition and
formula, so sweeps and the CLI can enumerate them uniformly.  Checks report
signed slack (oriented so that slack >= 0 means the bound holds), a status,
and a structural classification of the witness when equality is detected.

Conventions adopted for degenerate inputs:
  * bounds whose right side is a multiple of sqrt(...e...) evaluate to 0 on
    edgeless graphs, so the empty graph realizes its stated equality cases
    without ever forming a 0/0 degree ratio;
  * any other formula containing the minimum degree in a denominator is
    not-applicable when an isolated vertex is present;
  * terms of the form F / (n * d^2) are taken as 0 when F = 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .energy import energy_report, extended_adjacency_matrix
from .graphs import (
    Graph,
    degree_profile,
    is_bidegree_extreme,
    is_complete_bipartite,
    is_componentwise_regular,
    is_connected,
    is_perfect_matching,
    is_regular,
    is_star_center,
    is_union_of_complete_bipartite_extremes,
    bipartition,
    connected_components,
    strongly_regular_params,
)
from .linalg import eigvals_symmetric

HOLDS = "holds"
EQUALITY = "equality"
VIOLATED = "violated"
NOT_APPLICABLE = "not-applicable"

PER_VERTEX = "per-vertex"
WHOLE_GRAPH = "whole-graph"
GRAPH_PAIR = "graph-pair"


@dataclass(frozen=True)
class Tolerances:
    """Relative tolerances; equality detection is looser than violation
    detection because witnesses are classified structurally afterwards."""

    eq_rel: float = 1e-7
    viol_rel: float = 1e-9


DEFAULT_TOLERANCES = Tolerances()


@dataclass(frozen=True)
class BoundCheck:
    """One evaluated inequality instance."""

    bound_id: str
    scope: str
    lhs: float | None
    rhs: float | None
    slack: float | None
    status: str
    witness_note: str = ""
    vertex: int | None = None


def _status_of(slack: float, rhs: float, tols: Tolerances) -> str:
    eq_tol = tols.eq_rel * (1.0 + abs(rhs))
    viol_tol = tols.viol_rel * (1.0 + abs(rhs))
    if abs(slack) <= eq_tol:
        return EQUALITY
    if slack < -viol_tol:
        return VIOLATED
    return HOLDS


class PairData:
    """Complement-side quantities needed by the graph-pair bounds."""

    def __init__(self, graph: Graph):
        gbar = graph.complement()
        spec_bar = eigvals_symmetric(extended_adjacency_matrix(gbar))
        self.extended_energy_bar = float(abs(spec_bar).sum())
        self.extended_radius_bar = float(abs(spec_bar).max())
        self.connected = is_connected(graph)
        self.connected_bar = is_connected(gbar)


class GraphContext:
    """One graph with its degree profile and (shared) energy report.

    Bound evaluators read everything through the context so that a single
    eigendecomposition per graph feeds every check.
    """

    def __init__(self, graph: Graph, report=None, tols: Tolerances = DEFAULT_TOLERANCES,
                 include_vertex: bool = True):
        self.graph = graph
        self.profile = degree_profile(graph)
        self.report = report if report is not None else energy_report(graph, include_vertex=include_vertex)
        self.tols = tols
        self._pair = None
        self._neighbor_sq = None

    @property
    def ratio_sum(self) -> float:
        """delta_max/delta_min + delta_min/delta_max (needs delta_min >= 1)."""
        p = self.profile
        return p.delta_max / p.delta_min + p.delta_min / p.delta_max

    @property
    def half_ratio(self) -> float:
        return 0.5 * self.ratio_sum

    @property
    def pair(self) -> PairData:
        if self._pair is None:
            self._pair = PairData(self.graph)
        return self._pair

    def neighbor_square_sum(self, i: int) -> int:
        if self._neighbor_sq is None:
            d = self.profile.degrees
            adj = self.graph.neighbor_sets()
            self._neighbor_sq = [sum(d[j] ** 2 for j in adj[i]) for i in range(self.graph.n)]
        return self._neighbor_sq[i]


# ---------------------------------------------------------------------------
# equality-witness classifiers (invoked only when equality is detected)
# ---------------------------------------------------------------------------


def _note_left_sandwich(ctx: GraphContext) -> str:
    if is_regular(ctx.graph):
        return "regular"
    if is_componentwise_regular(ctx.graph):
        return "componentwise regular"
    return "unclassified equality"


def _note_right_sandwich(ctx: GraphContext) -> str:
    g = ctx.graph
    if is_regular(g):
        return "regular"
    if is_complete_bipartite(g):
        p = ctx.profile
        return f"complete bipartite K_{{{p.delta_max},{p.delta_min}}}"
    if is_union_of_complete_bipartite_extremes(g):
        p = ctx.profile
        return f"union of complete bipartite K_{{{p.delta_max},{p.delta_min}}}"
    if is_bidegree_extreme(g):
        return "bi-degree edges"
    return "unclassified equality"


def _note_matching_or_empty(ctx: GraphContext) -> str:
    if ctx.profile.edge_count == 0:
        return "empty graph"
    if is_perfect_matching(ctx.graph):
        return "(n/2)K_2"
    return "unclassified equality"


def _note_koolen_moulton(ctx: GraphContext) -> str:
    g, p = ctx.graph, ctx.profile
    if is_perfect_matching(g):
        return "(n/2)K_2"
    if p.edge_count == g.n * (g.n - 1) // 2:
        return "K_n"
    params = strongly_regular_params(g)
    if params is not None:
        mean = 2.0 * p.edge_count / g.n
        target = math.sqrt((2.0 * p.edge_count - mean * mean) / (g.n - 1))
        spec = ctx.report.spectrum
        others = [abs(x) for x in spec if abs(abs(x) - p.delta_max) > 1e-7]
        if all(abs(x - target) <= 1e-6 * (1.0 + target) for x in others):
            return f"strongly regular {params} with non-trivial eigenvalues +-{target:.6f}"
        return f"strongly regular {params}"
    return "unclassified equality"


def _note_conference_srg(ctx: GraphContext) -> str:
    g = ctx.graph
    params = strongly_regular_params(g)
    if params is not None:
        n = g.n
        root = math.isqrt(n)
        if root * root == n and params == (n, n // 2 + root // 2, n // 4 + root // 2, n // 4 + root // 2):
            return f"srg{params}"
        return f"strongly regular {params}"
    return "unclassified equality"


def _note_vertex_lower(ctx: GraphContext) -> str:
    g, p = ctx.graph, ctx.profile
    if p.delta_min == p.delta_max:
        comps = connected_components(g)
        if all(
            is_complete_bipartite(g.induced_subgraph(c)) and len(c) == 2 * p.delta_max
            for c in comps
        ):
            return f"K_{{{p.delta_max},{p.delta_max}}}" + (" components" if len(comps) > 1 else "")
        if bipartition(g) is not None:
            return "regular bipartite"
    return "unclassified equality"


def _note_regular(ctx: GraphContext) -> str:
    return "regular" if is_regular(ctx.graph) else "unclassified equality"


def _note_none(ctx: GraphContext) -> str:
    return "equality (no characterization stated)"


# ---------------------------------------------------------------------------
# right-hand-side formulas (pure degree/count arithmetic)
# ---------------------------------------------------------------------------


def _rhs_das_i(ctx):
    p = ctx.profile
    if p.edge_count == 0:
        return 0.0
    return ctx.half_ratio * math.sqrt(2.0 * p.n * p.edge_count)


def _rhs_das_ii(ctx):
    p = ctx.profile
    if p.edge_count == 0:
        return 0.0
    return math.sqrt(ctx.ratio_sum) * math.sqrt(p.n * p.forgotten / (2.0 * p.delta_min**2))


def _rhs_new_star_sum(ctx):
    p = ctx.profile
    if p.edge_count == 0:
        return 0.0
    inner = (p.n - 2) * (2 * p.edge_count - p.delta_min - p.delta_max)
    return ctx.half_ratio * (math.sqrt(inner) + math.sqrt(p.delta_min) + math.sqrt(p.delta_max))


def _rhs_new_forgotten(ctx):
    p = ctx.profile
    if p.edge_count == 0:
        return 0.0
    return math.sqrt(p.n * p.forgotten / (2.0 * p.delta_min**2) + p.n * p.edge_count)


def _rhs_koolen_moulton(ctx):
    p = ctx.profile
    mean = 2.0 * p.edge_count / p.n
    return ctx.half_ratio * (mean + math.sqrt((p.n - 1) * (2.0 * p.edge_count - mean * mean)))


def _rhs_mm22(ctx):
    p = ctx.profile
    spread = (math.sqrt(p.delta_max) - math.sqrt(p.delta_min)) ** 2
    return ctx.half_ratio * math.sqrt(2.0 * p.n * p.edge_count - 0.5 * p.n * spread)


def _rhs_n_only(ctx):
    p = ctx.profile
    return 0.25 * p.n * ctx.ratio_sum * (1.0 + math.sqrt(p.n))


def _rhs_wang_n_only(ctx):
    p = ctx.profile
    return 0.125 * p.n * (1.0 + math.sqrt(p.n)) * ctx.ratio_sum**2


def _complement_half_ratio(ctx):
    p = ctx.profile
    lo = p.n_hat - p.delta_max  # complement minimum degree
    hi = p.n_hat - p.delta_min
    return 0.5 * (hi / lo + lo / hi)


def _rhs_ng_sum_split(ctx):
    p = ctx.profile
    first = ctx.half_ratio * math.sqrt(2.0 * p.n * p.edge_count) if p.edge_count else 0.0
    ebar2 = p.n * p.n_hat - 2 * p.edge_count
    second = _complement_half_ratio(ctx) * math.sqrt(p.n * ebar2) if ebar2 else 0.0
    return first + second


def _rhs_ng_sum_double(ctx):
    p = ctx.profile
    if p.edge_count == 0:
        return 0.0
    return ctx.ratio_sum * math.sqrt(2.0 * p.n * p.edge_count)


def _wang_ratio(ctx):
    p = ctx.profile
    return (p.delta_max * (p.n_hat - p.delta_min)) / (p.delta_min * (p.n_hat - p.delta_max))


def _rhs_ng_wang(ctx):
    p = ctx.profile
    m = _wang_ratio(ctx)
    return math.sqrt(2.0 * p.n * p.edge_count) * math.sqrt(m * m + 1.0 / (m * m) + 2.0)


def _rhs_ng_radius_wang(ctx):
    p = ctx.profile
    term1 = p.forgotten / (p.n * p.delta_max**2) if p.forgotten else 0.0
    fbar = sum((p.n_hat - d) ** 3 for d in p.degrees)
    term2 = fbar / (p.n * (p.n_hat - p.delta_min) ** 2) if fbar else 0.0
    return term1 + term2


# ---------------------------------------------------------------------------
# preconditions
# ---------------------------------------------------------------------------


def _pre_ratio_or_edgeless(ctx):
    p = ctx.profile
    if p.edge_count == 0 or p.delta_min >= 1:
        return None
    return "isolated vertex (min degree 0 with edges present)"


def _pre_min_degree(ctx):
    if ctx.profile.delta_min >= 1:
        return None
    return "isolated vertex (min degree 0)"


def _pre_km(ctx):
    reason = _pre_min_degree(ctx)
    if reason:
        return reason
    p = ctx.profile
    if 2 * p.edge_count < p.n:
        return f"needs 2e >= n (2e={2 * p.edge_count}, n={p.n})"
    return None


def _pre_mm22(ctx):
    if ctx.profile.n < 2:
        return "needs n >= 2"
    return _pre_min_degree(ctx)


def _pre_wang_n_only(ctx):
    if ctx.profile.n < 9:
        return f"needs n >= 9 (n={ctx.profile.n})"
    return _pre_min_degree(ctx)


def _pre_no_isolated_pair(ctx):
    p = ctx.profile
    if p.delta_min < 1:
        return "isolated vertex in G"
    if p.n_hat - p.delta_max < 1:
        return "isolated vertex in complement"
    return None


def _pre_ng_double(ctx):
    reason = _pre_no_isolated_pair(ctx)
    if reason:
        return reason
    if ctx.report.extended_energy < ctx.pair.extended_energy_bar - 1e-9:
        return "extended energy of G below that of complement"
    return None


def _pre_ng_wang(ctx):
    reason = _pre_no_isolated_pair(ctx)
    if reason:
        return reason
    if not ctx.pair.connected:
        return "G not connected"
    if ctx.report.extended_energy < ctx.pair.extended_energy_bar - 1e-9:
        return "extended energy of G below that of complement"
    return None


def _pre_both_connected(ctx):
    if not ctx.pair.connected:
        return "G not connected"
    if not ctx.pair.connected_bar:
        return "complement not connected"
    return None


def _pre_star_sum(ctx):
    if ctx.profile.n < 2:
        return "needs n >= 2 (min/max degree split degenerates)"
    return _pre_ratio_or_edgeless(ctx)


def _pre_none(ctx):
    return None


# ---------------------------------------------------------------------------
# the catalog
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BoundDef:
    bound_id: str
    scope: str
    kind: str  # "upper" | "lower"
    description: str
    source: str
    precondition_text: str
    precondition: callable
    evaluate: callable  # GraphContext -> list[BoundCheck]


def _make_checks(bound_def, ctx, rows):
    """rows: iterable of (lhs, rhs, note_fn, vertex)."""
    out = []
    for lhs, rhs, note_fn, vertex in rows:
        slack = rhs - lhs if bound_def.kind == "upper" else lhs - rhs
        status = _status_of(slack, rhs, ctx.tols)
        note = note_fn(ctx) if (status == EQUALITY and note_fn is not None) else ""
        out.append(
            BoundCheck(
                bound_id=bound_def.bound_id,
                scope=bound_def.scope,
                lhs=float(lhs),
                rhs=float(rhs),
                slack=float(slack),
                status=status,
                witness_note=note,
                vertex=vertex,
            )
        )
    return out


def _na_check(bound_def, reason):
    return [
        BoundCheck(
            bound_id=bound_def.bound_id,
            scope=bound_def.scope,
            lhs=None,
            rhs=None,
            slack=None,
            status=NOT_APPLICABLE,
            witness_note=reason,
        )
    ]


def _whole_graph_eval(rhs_fn, note_fn, lhs_fn=None):
    def evaluate(bound_def, ctx):
        reason = bound_def.precondition(ctx)
        if reason:
            return _na_check(bound_def, reason)
        lhs = lhs_fn(ctx) if lhs_fn else ctx.report.extended_energy
        return _make_checks(bound_def, ctx, [(lhs, rhs_fn(ctx), note_fn, None)])

    return evaluate


def _eval_vertex_upper_star(bound_def, ctx):
    reason = bound_def.precondition(ctx)
    if reason:
        return _na_check(bound_def, reason)
    hr = ctx.half_ratio
    d = ctx.profile.degrees
    vx = ctx.report.extended_vertex_energies
    rows = []
    for i in range(ctx.graph.n):
        note = (lambda c, i=i: "star center" if is_star_center(c.graph, i) else "unclassified equality")
        rows.append((vx[i], hr * math.sqrt(d[i]), note, i))
    return _make_checks(bound_def, ctx, rows)


def _eval_vertex_upper_forgotten(bound_def, ctx):
    reason = bound_def.precondition(ctx)
    if reason:
        return _na_check(bound_def, reason)
    p = ctx.profile
    denom = 4.0 * p.delta_min**2
    vx = ctx.report.extended_vertex_energies
    rows = []
    for i in range(ctx.graph.n):
        rhs = math.sqrt(ctx.neighbor_square_sum(i) / denom + p.degrees[i] ** 3 / denom + 0.5 * p.degrees[i])
        rows.append((vx[i], rhs, _note_none, i))
    return _make_checks(bound_def, ctx, rows)


def _eval_vertex_lower(bound_def, ctx):
    reason = bound_def.precondition(ctx)
    if reason:
        return _na_check(bound_def, reason)
    k = ctx.half_ratio * ctx.profile.delta_max
    vx = ctx.report.extended_vertex_energies
    rows = [(vx[i], ctx.profile.degrees[i] / k, _note_vertex_lower, i) for i in range(ctx.graph.n)]
    return _make_checks(bound_def, ctx, rows)


def _eval_sandwich_left(bound_def, ctx):
    # Gutman direction: ordinary energy never exceeds extended energy.
    return _make_checks(
        bound_def, ctx,
        [(ctx.report.extended_energy, ctx.report.ordinary_energy, _note_left_sandwich, None)],
    )


def _eval_dominance(new_rhs_fn, old_rhs_fn, note_fn):
    """slack = old bound - new bound (the new one must never be weaker)."""

    def evaluate(bound_def, ctx):
        reason = bound_def.precondition(ctx)
        if reason:
            return _na_check(bound_def, reason)
        return _make_checks(bound_def, ctx, [(new_rhs_fn(ctx), old_rhs_fn(ctx), note_fn, None)])

    return evaluate


def _pair_lhs_energy(ctx):
    return ctx.report.extended_energy + ctx.pair.extended_energy_bar


def _pair_lhs_radius(ctx):
    return ctx.report.extended_spectral_radius + ctx.pair.extended_radius_bar


_CATALOG: dict = {}
_DOMINANCE: dict = {}


def _register(table, bound_def):
    table[bound_def.bound_id] = bound_def


def _build_catalog():
    ratio_pre_text = "no isolated vertices (edgeless graphs evaluate to 0 = 0)"

    _register(_CATALOG, BoundDef(
        "vertex_upper_star", PER_VERTEX, "upper",
        "extended vertex energy <= (1/2)(dM/dm + dm/dM) sqrt(d_i)",
        "per-vertex bound attained exactly at star centers",
        "min degree >= 1",
        _pre_min_degree, _eval_vertex_upper_star))
    _register(_CATALOG, BoundDef(
        "vertex_upper_forgotten", PER_VERTEX, "upper",
        "extended vertex energy <= sqrt(sum_{j~i} d_j^2/(4 dm^2) + d_i^3/(4 dm^2) + d_i/2)",
        "per-vertex bound in forgotten-index style",
        "min degree >= 1",
        _pre_min_degree, _eval_vertex_upper_forgotten))
    _register(_CATALOG, BoundDef(
        "vertex_lower", PER_VERTEX, "lower",
        "extended vertex energy >= d_i / k with k = (1/2)(dM/dm + dm/dM) dM",
        "per-vertex lower bound; equality stated for K_{dM,dM}",
        "e > 0 and min degree >= 1",
        lambda ctx: ("needs at least one edge" if ctx.profile.edge_count == 0 else _pre_min_degree(ctx)),
        _eval_vertex_lower))

    _register(_CATALOG, BoundDef(
        "sandwich_left", WHOLE_GRAPH, "lower",
        "extended energy >= ordinary energy (Gutman's conjecture direction)",
        "energy comparison, left side; equality on (componentwise) regular graphs",
        "none",
        _pre_none, _eval_sandwich_left))
    _register(_CATALOG, BoundDef(
        "sandwich_right", WHOLE_GRAPH, "upper",
        "extended energy <= (1/2)(dM/dm + dm/dM) * ordinary energy",
        "energy comparison, right side; equality on regular or complete bipartite graphs",
        "min degree >= 1",
        _pre_min_degree,
        _whole_graph_eval(lambda ctx: ctx.half_ratio * ctx.report.ordinary_energy, _note_right_sandwich)))
    _register(_CATALOG, BoundDef(
        "sr_sandwich_left", WHOLE_GRAPH, "lower",
        "extended spectral radius >= adjacency spectral radius",
        "spectral radius comparison, left side",
        "min degree >= 1",
        _pre_min_degree,
        _whole_graph_eval(lambda ctx: ctx.report.adjacency_spectral_radius, _note_left_sandwich,
                          lhs_fn=lambda ctx: ctx.report.extended_spectral_radius)))
    _register(_CATALOG, BoundDef(
        "sr_sandwich_right", WHOLE_GRAPH, "upper",
        "extended spectral radius <= (1/2)(dM/dm + dm/dM) * adjacency spectral radius",
        "spectral radius comparison, right side",
        "min degree >= 1",
        _pre_min_degree,
        _whole_graph_eval(lambda ctx: ctx.half_ratio * ctx.report.adjacency_spectral_radius,
                          _note_right_sandwich, lhs_fn=lambda ctx: ctx.report.extended_spectral_radius)))

    _register(_CATALOG, BoundDef(
        "das_i", WHOLE_GRAPH, "upper",
        "extended energy <= (1/2)(dM/dm + dm/dM) sqrt(2ne)",
        "Das et al. ratio-scaled McClelland bound",
        ratio_pre_text,
        _pre_ratio_or_edgeless,
        _whole_graph_eval(_rhs_das_i, _note_matching_or_empty)))
    _register(_CATALOG, BoundDef(
        "das_ii", WHOLE_GRAPH, "upper",
        "extended energy <= sqrt(dM/dm + dm/dM) sqrt(nF / (2 dm^2))",
        "Das et al. forgotten-index bound",
        ratio_pre_text,
        _pre_ratio_or_edgeless,
        _whole_graph_eval(_rhs_das_ii, _note_none)))
    _register(_CATALOG, BoundDef(
        "new_star_sum", WHOLE_GRAPH, "upper",
        "extended energy <= (1/2)(dM/dm + dm/dM)(sqrt((n-2)(2e - dm - dM)) + sqrt(dm) + sqrt(dM))",
        "summed per-vertex star bound; improves das_i",
        "n >= 2; " + ratio_pre_text,
        _pre_star_sum,
        _whole_graph_eval(_rhs_new_star_sum, _note_matching_or_empty)))
    _register(_CATALOG, BoundDef(
        "new_forgotten", WHOLE_GRAPH, "upper",
        "extended energy <= sqrt(nF / (2 dm^2) + ne)",
        "summed per-vertex forgotten-index bound; improves das_ii",
        ratio_pre_text,
        _pre_ratio_or_edgeless,
        _whole_graph_eval(_rhs_new_forgotten, _note_none)))
    _register(_CATALOG, BoundDef(
        "koolen_moulton_ex", WHOLE_GRAPH, "upper",
        "extended energy <= (1/2)(dM/dm + dm/dM)(2e/n + sqrt((n-1)(2e - (2e/n)^2)))",
        "ratio-scaled Koolen-Moulton bound",
        "2e >= n and min degree >= 1",
        _pre_km,
        _whole_graph_eval(_rhs_koolen_moulton, _note_koolen_moulton)))
    _register(_CATALOG, BoundDef(
        "mm22_ex", WHOLE_GRAPH, "upper",
        "extended energy <= (1/2)(dM/dm + dm/dM) sqrt(2ne - (n/2)(sqrt(dM) - sqrt(dm))^2)",
        "ratio-scaled degree-spread refinement of McClelland",
        "n >= 2 and min degree >= 1",
        _pre_mm22,
        _whole_graph_eval(_rhs_mm22, _note_matching_or_empty)))
    _register(_CATALOG, BoundDef(
        "n_only_ex", WHOLE_GRAPH, "upper",
        "extended energy <= (n/4)(dM/dm + dm/dM)(1 + sqrt(n))",
        "ratio-scaled order-only bound; equality on conference-type strongly regular graphs",
        "min degree >= 1",
        _pre_min_degree,
        _whole_graph_eval(_rhs_n_only, _note_conference_srg)))
    _register(_CATALOG, BoundDef(
        "wang_n_only", WHOLE_GRAPH, "upper",
        "extended energy <= (n/8)(1 + sqrt(n))(dM/dm + dm/dM)^2",
        "Wang et al. order-only bound (n >= 9)",
        "n >= 9 and min degree >= 1",
        _pre_wang_n_only,
        _whole_graph_eval(_rhs_wang_n_only, _note_none)))

    _register(_CATALOG, BoundDef(
        "ng_sum_split", GRAPH_PAIR, "upper",
        "ext. energy of G plus complement <= ratio-of-G term sqrt(2ne) + ratio-of-complement term sqrt(n^2(n-1) - 2ne)",
        "complement-pair sum bound, split form",
        "no isolated vertices in G or complement",
        _pre_no_isolated_pair,
        _whole_graph_eval(_rhs_ng_sum_split, _note_none, lhs_fn=_pair_lhs_energy)))
    _register(_CATALOG, BoundDef(
        "ng_sum_double", GRAPH_PAIR, "upper",
        "ext. energy of G plus complement <= (dM/dm + dm/dM) sqrt(2ne)",
        "complement-pair sum bound via doubling; improves ng_wang",
        "no isolated vertices in G or complement; ext. energy of G >= that of complement",
        _pre_ng_double,
        _whole_graph_eval(_rhs_ng_sum_double, _note_none, lhs_fn=_pair_lhs_energy)))
    _register(_CATALOG, BoundDef(
        "ng_wang", GRAPH_PAIR, "upper",
        "ext. energy of G plus complement <= sqrt(2ne) sqrt(M^2 + 1/M^2 + 2), M = dM(n-1-dm)/(dm(n-1-dM))",
        "Wang et al. complement-pair sum bound",
        "G connected; no isolated vertices in G or complement; ext. energy of G >= that of complement",
        _pre_ng_wang,
        _whole_graph_eval(_rhs_ng_wang, _note_none, lhs_fn=_pair_lhs_energy)))
    _register(_CATALOG, BoundDef(
        "ng_radius_lower", GRAPH_PAIR, "lower",
        "ext. spectral radius of G plus complement >= n - 1",
        "complement-pair spectral radius lower bound; improves ng_radius_wang",
        "G and complement connected",
        _pre_both_connected,
        _whole_graph_eval(lambda ctx: float(ctx.profile.n_hat), _note_regular,
                          lhs_fn=_pair_lhs_radius)))
    _register(_CATALOG, BoundDef(
        "ng_radius_wang", GRAPH_PAIR, "lower",
        "ext. spectral radius of G plus complement >= F/(n dM^2) + Fbar/(n(n-1-dm)^2)",
        "Wang et al. complement-pair spectral radius bound; equality on regular graphs",
        "none (zero-numerator terms taken as 0)",
        _pre_none,
        _whole_graph_eval(_rhs_ng_radius_wang, _note_regular, lhs_fn=_pair_lhs_radius)))
    _register(_CATALOG, BoundDef(
        "ng_energy_lower", GRAPH_PAIR, "lower",
        "ext. energy of G plus complement >= 2(n - 1)",
        "complement-pair energy lower bound",
        "G and complement connected",
        _pre_both_connected,
        _whole_graph_eval(lambda ctx: 2.0 * ctx.profile.n_hat, _note_none, lhs_fn=_pair_lhs_energy)))

    # Dominance pairs: the newer bound's right side must never exceed the
    # older one's (resp. never fall below it, for the lower-bound pair).
    _register(_DOMINANCE, BoundDef(
        "dominance:new_star_sum_vs_das_i", WHOLE_GRAPH, "upper",
        "rhs(new_star_sum) <= rhs(das_i); they coincide exactly when dM = dm",
        "bound comparison",
        "n >= 2; " + ratio_pre_text,
        _pre_star_sum,
        _eval_dominance(_rhs_new_star_sum, _rhs_das_i, _note_regular)))
    _register(_DOMINANCE, BoundDef(
        "dominance:new_forgotten_vs_das_ii", WHOLE_GRAPH, "upper",
        "rhs(new_forgotten) <= rhs(das_ii)",
        "bound comparison",
        ratio_pre_text,
        _pre_ratio_or_edgeless,
        _eval_dominance(_rhs_new_forgotten, _rhs_das_ii, _note_none)))
    _register(_DOMINANCE, BoundDef(
        "dominance:n_only_ex_vs_wang_n_only", WHOLE_GRAPH, "upper",
        "rhs(n_only_ex) <= rhs(wang_n_only) on the n >= 9 range",
        "bound comparison",
        "n >= 9 and min degree >= 1",
        _pre_wang_n_only,
        _eval_dominance(_rhs_n_only, _rhs_wang_n_only, _note_regular)))
    _register(_DOMINANCE, BoundDef(
        "dominance:ng_sum_double_vs_ng_wang", WHOLE_GRAPH, "upper",
        "rhs(ng_sum_double) <= rhs(ng_wang)",
        "bound comparison",
        "no isolated vertices in G or complement",
        _pre_no_isolated_pair,
        _eval_dominance(_rhs_ng_sum_double, _rhs_ng_wang, _note_regular)))
    _register(_DOMINANCE, BoundDef(
        "dominance:ng_radius_lower_vs_ng_radius_wang", WHOLE_GRAPH, "lower",
        "rhs(ng_radius_lower) = n - 1 >= rhs(ng_radius_wang)",
        "bound comparison (lower bounds: larger is stronger)",
        "none",
        _pre_none,
        # lower-bound pair: slack = lhs - rhs = (n - 1) - older bound
        _eval_dominance(lambda ctx: float(ctx.profile.n_hat), _rhs_ng_radius_wang, _note_regular)))


_build_catalog()


def catalog() -> dict:
    """All registered bounds and dominance comparisons, id -> BoundDef."""
    merged = dict(_CATALOG)
    merged.update(_DOMINANCE)
    return merged


def bound_ids(include_dominance: bool = True, include_pairs: bool = True) -> list:
    ids = []
    for bid, bd in _CATALOG.items():
        if bd.scope == GRAPH_PAIR and not include_pairs:
            continue
        ids.append(bid)
    if include_dominance:
        ids.extend(_DOMINANCE.keys())
    return ids


def resolve_bound_filter(names, include_pairs: bool) -> list:
    """Expand a CLI-style bound filter ('all', 'dominance:*', explicit ids)."""
    if names is None:
        return bound_ids(include_pairs=include_pairs)
    out = []
    for name in names:
        if name == "all":
            out.extend(bound_ids(include_pairs=include_pairs))
        elif name == "dominance:*":
            out.extend(_DOMINANCE.keys())
        elif name in _CATALOG or name in _DOMINANCE:
            out.append(name)
        else:
            raise ValueError(f"unknown bound_id {name!r}")
    seen = set()
    unique = []
    for bid in out:
        if bid not in seen:
            seen.add(bid)
            unique.append(bid)
    return unique


def evaluate_bound(bound_id: str, ctx: GraphContext) -> list:
    table = _CATALOG if bound_id in _CATALOG else _DOMINANCE
    if bound_id not in table:
        raise ValueError(f"unknown bound_id {bound_id!r}")
    bd = table[bound_id]
    return bd.evaluate(bd, ctx)


def evaluate_bounds(ctx: GraphContext, ids) -> list:
    out = []
    for bid in ids:
        out.extend(evaluate_bound(bid, ctx))
    return out


# ---------------------------------------------------------------------------
# named operation surface (thin wrappers over the registry)
# ---------------------------------------------------------------------------


def _ctx(g, report=None, tols=DEFAULT_TOLERANCES):
    return GraphContext(g, report=report, tols=tols)


def check_vertex_upper_star(g: Graph, report=None) -> list:
    return evaluate_bound("vertex_upper_star", _ctx(g, report))


def check_vertex_upper_forgotten(g: Graph, report=None) -> list:
    return evaluate_bound("vertex_upper_forgotten", _ctx(g, report))


def check_vertex_lower(g: Graph, report=None) -> list:
    return evaluate_bound("vertex_lower", _ctx(g, report))


def check_sandwich(g: Graph, report=None):
    ctx = _ctx(g, report)
    (left,) = evaluate_bound("sandwich_left", ctx)
    (right,) = evaluate_bound("sandwich_right", ctx)
    return left, right


def check_spectral_radius_sandwich(g: Graph, report=None):
    ctx = _ctx(g, report)
    (left,) = evaluate_bound("sr_sandwich_left", ctx)
    (right,) = evaluate_bound("sr_sandwich_right", ctx)
    return left, right


_GLOBAL_UPPER_IDS = (
    "das_i", "das_ii", "new_star_sum", "new_forgotten",
    "koolen_moulton_ex", "mm22_ex", "n_only_ex", "wang_n_only",
)

_NG_IDS = (
    "ng_sum_split", "ng_sum_double", "ng_wang",
    "ng_radius_lower", "ng_radius_wang", "ng_energy_lower",
)


def check_global_upper(bound_id: str, g: Graph, report=None) -> BoundCheck:
    if bound_id not in _GLOBAL_UPPER_IDS:
        raise ValueError(f"unknown global upper bound {bound_id!r}")
    (check,) = evaluate_bound(bound_id, _ctx(g, report))
    return check


def check_ng(bound_id: str, g: Graph) -> BoundCheck:
    if bound_id not in _NG_IDS:
        raise ValueError(f"unknown complement-pair bound {bound_id!r}")
    (check,) = evaluate_bound(bound_id, _ctx(g))
    return check


def check_dominance(pair_id: str, g: Graph) -> BoundCheck:
    key = pair_id if pair_id.startswith("dominance:") else f"dominance:{pair_id}"
    if key not in _DOMINANCE:
        raise ValueError(f"unknown dominance pair {pair_id!r}")
    (check,) = evaluate_bound(key, _ctx(g))
    return check
