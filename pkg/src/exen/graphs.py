"""Simple undirected graphs: representation, parsing, generators, degree data.

Vertices are 0-indexed everywhere.  Graphs are immutable after construction
and safe to share across workers.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np


class Graph6ParseError(ValueError):
    """Malformed graph6 input; the message names the offending byte offset."""


class EdgeListParseError(ValueError):
    """Malformed edge-list input."""


@dataclass(frozen=True)
class Graph:
    """Simple graph on vertices 0..n-1 with edges stored once as (i, j), i < j."""

    n: int
    edges: frozenset

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("graph order must be >= 1")
        for i, j in self.edges:
            if i == j:
                raise ValueError(f"self-loop {{{i},{i}}} not allowed")
            if not (0 <= i < j < self.n):
                raise ValueError(f"edge ({i},{j}) out of range for n={self.n}")

    @classmethod
    def from_edges(cls, n: int, pairs: Iterable[Sequence[int]]) -> "Graph":
        """Build a graph, normalizing pair order and collapsing duplicates."""
        norm = set()
        for pair in pairs:
            i, j = int(pair[0]), int(pair[1])
            if i == j:
                raise ValueError(f"self-loop {{{i},{i}}} not allowed")
            if i > j:
                i, j = j, i
            norm.add((i, j))
        return cls(n, frozenset(norm))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def degrees(self) -> list:
        d = [0] * self.n
        for i, j in self.edges:
            d[i] += 1
            d[j] += 1
        return d

    def neighbor_sets(self) -> list:
        adj = [set() for _ in range(self.n)]
        for i, j in self.edges:
            adj[i].add(j)
            adj[j].add(i)
        return adj

    def has_edge(self, i: int, j: int) -> bool:
        if i > j:
            i, j = j, i
        return (i, j) in self.edges

    def complement(self) -> "Graph":
        """Edge {i,j} present iff absent here, i != j."""
        edges = {
            (i, j)
            for i in range(self.n)
            for j in range(i + 1, self.n)
            if (i, j) not in self.edges
        }
        return Graph(self.n, frozenset(edges))

    def induced_subgraph(self, vertices: Sequence[int]) -> "Graph":
        """Subgraph on the given vertices, relabeled 0..k-1 in the given order."""
        index = {v: k for k, v in enumerate(vertices)}
        keep = set(vertices)
        edges = {
            (min(index[i], index[j]), max(index[i], index[j]))
            for i, j in self.edges
            if i in keep and j in keep
        }
        return Graph(len(vertices), frozenset(edges))


def disjoint_union(*graphs: Graph) -> Graph:
    if not graphs:
        raise ValueError("need at least one graph")
    offset = 0
    edges = set()
    for g in graphs:
        edges.update((i + offset, j + offset) for i, j in g.edges)
        offset += g.n
    return Graph(offset, frozenset(edges))


# ---------------------------------------------------------------------------
# graph6 encoding (de-facto standard: 6-bit big-endian packing of the upper
# triangle, column-major (j, then i < j), bias 63)
# ---------------------------------------------------------------------------

_G6_MAX_N = 258047  # largest order the 4-byte size header can carry


def _g6_check_bytes(text: str) -> bytes:
    data = text.encode("ascii", errors="replace")
    for off, b in enumerate(data):
        if not 63 <= b <= 126:
            raise Graph6ParseError(f"byte {off}: value {b} outside graph6 range 63..126")
    return data


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 line into a Graph."""
    line = text.strip()
    if not line:
        raise Graph6ParseError("byte 0: empty graph6 string")
    data = _g6_check_bytes(line)
    pos = 0
    if data[0] == 126:  # '~' marks an extended size header
        if len(data) >= 2 and data[1] == 126:
            raise Graph6ParseError("byte 1: 8-byte size header not supported")
        if len(data) < 4:
            raise Graph6ParseError(f"byte {len(data)}: truncated 4-byte size header")
        n = ((data[1] - 63) << 12) | ((data[2] - 63) << 6) | (data[3] - 63)
        pos = 4
    else:
        n = data[0] - 63
        pos = 1
    if n < 1:
        raise Graph6ParseError("byte 0: graph order 0 not supported")
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = data[pos:]
    if len(body) < need:
        raise Graph6ParseError(
            f"byte {pos + len(body)}: truncated bit stream "
            f"(need {need} body bytes for n={n}, got {len(body)})"
        )
    if len(body) > need:
        raise Graph6ParseError(f"byte {pos + need}: unexpected trailing bytes")
    edges = set()
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = body[k // 6] - 63
            if (byte >> (5 - k % 6)) & 1:
                edges.add((i, j))
            k += 1
    return Graph(n, frozenset(edges))


def serialize_graph6(g: Graph) -> str:
    """Canonical graph6 encoding (minimal size header, zero-padded last byte)."""
    n = g.n
    if n > _G6_MAX_N:
        raise ValueError(f"graph6 supports n <= {_G6_MAX_N}, got {n}")
    if n <= 62:
        header = [n + 63]
    else:
        header = [126, (n >> 12) + 63, ((n >> 6) & 63) + 63, (n & 63) + 63]
    nbits = n * (n - 1) // 2
    body = [0] * ((nbits + 5) // 6)
    k = 0
    for j in range(1, n):
        for i in range(j):
            if (i, j) in g.edges:
                body[k // 6] |= 1 << (5 - k % 6)
            k += 1
    return bytes(header + [b + 63 for b in body]).decode("ascii")


# ---------------------------------------------------------------------------
# edge-list text format: first line "n <count>", then whitespace-separated
# integer pairs
# ---------------------------------------------------------------------------


def parse_edge_list(text: str) -> Graph:
    tokens = text.split()
    if len(tokens) < 2:
        raise EdgeListParseError("expected header 'n <count>'")
    try:
        n = int(tokens[0])
        int(tokens[1])  # declared edge count; informational only
    except ValueError as exc:
        raise EdgeListParseError(f"non-integer token in header: {exc}") from None
    rest = tokens[2:]
    if len(rest) % 2 != 0:
        raise EdgeListParseError("odd number of vertex tokens after header")
    pairs = []
    for k in range(0, len(rest), 2):
        try:
            i, j = int(rest[k]), int(rest[k + 1])
        except ValueError:
            raise EdgeListParseError(
                f"non-integer token {rest[k]!r} or {rest[k + 1]!r}"
            ) from None
        if i == j:
            raise EdgeListParseError(f"self-loop listed at vertex {i}")
        if not (0 <= i < n and 0 <= j < n):
            raise EdgeListParseError(f"vertex index out of range in pair ({i}, {j})")
        pairs.append((i, j))
    try:
        return Graph.from_edges(n, pairs)
    except ValueError as exc:
        raise EdgeListParseError(str(exc)) from None


# ---------------------------------------------------------------------------
# degree data
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class DegreeProfile:
    """Degree sequence with its standard aggregates (all exact integers)."""

    degrees: tuple
    delta_min: int
    delta_max: int
    edge_count: int
    forgotten: int

    @property
    def n(self) -> int:
        return len(self.degrees)

    @property
    def n_hat(self) -> int:
        return len(self.degrees) - 1


def degree_profile(g: Graph) -> DegreeProfile:
    """Compute degrees, extremes, e and the forgotten index F = sum d_i^3.

    F is computed both as sum of cubes and as the edge sum of d_i^2 + d_j^2;
    the two must agree exactly in integer arithmetic.
    """
    d = g.degrees()
    f_cubes = sum(x**3 for x in d)
    f_edges = sum(d[i] ** 2 + d[j] ** 2 for i, j in g.edges)
    if f_cubes != f_edges:
        raise AssertionError(f"forgotten index mismatch: {f_cubes} != {f_edges}")
    return DegreeProfile(
        degrees=tuple(d),
        delta_min=min(d),
        delta_max=max(d),
        edge_count=len(g.edges),
        forgotten=f_cubes,
    )


def connected_components(g: Graph) -> list:
    """Vertex sets of the components, ordered by smallest member."""
    adj = g.neighbor_sets()
    seen = [False] * g.n
    comps = []
    for start in range(g.n):
        if seen[start]:
            continue
        stack = [start]
        seen[start] = True
        comp = []
        while stack:
            u = stack.pop()
            comp.append(u)
            for w in adj[u]:
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        comps.append(sorted(comp))
    comps.sort(key=lambda c: c[0])
    return comps


def is_connected(g: Graph) -> bool:
    return len(connected_components(g)) == 1


# ---------------------------------------------------------------------------
# structural predicates used for equality-witness classification
# ---------------------------------------------------------------------------


def is_regular(g: Graph) -> bool:
    d = g.degrees()
    return min(d) == max(d)


def is_componentwise_regular(g: Graph) -> bool:
    """True iff every edge joins two vertices of equal degree.

    Equivalent to every component being regular (isolated vertices allowed);
    exactly the class on which the extended adjacency matrix coincides with
    the ordinary one.
    """
    d = g.degrees()
    return all(d[i] == d[j] for i, j in g.edges)


def is_bidegree_extreme(g: Graph) -> bool:
    """True iff every edge joins a minimum-degree vertex to a maximum-degree one."""
    d = g.degrees()
    lo, hi = min(d), max(d)
    return all({d[i], d[j]} == {lo, hi} or (d[i] == d[j] == lo == hi) for i, j in g.edges)


def bipartition(g: Graph):
    """2-coloring (X, Y) if g is bipartite, else None."""
    adj = g.neighbor_sets()
    color = [-1] * g.n
    for start in range(g.n):
        if color[start] != -1:
            continue
        color[start] = 0
        stack = [start]
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if color[w] == -1:
                    color[w] = 1 - color[u]
                    stack.append(w)
                elif color[w] == color[u]:
                    return None
    x = [v for v in range(g.n) if color[v] == 0]
    y = [v for v in range(g.n) if color[v] == 1]
    return x, y


def is_complete_bipartite(g: Graph) -> bool:
    """Connected complete bipartite graph K_{a,b} (K_2 = K_{1,1} included)."""
    if not is_connected(g) or g.edge_count == 0:
        return False
    parts = bipartition(g)
    if parts is None:
        return False
    x, y = parts
    return g.edge_count == len(x) * len(y)


def is_union_of_complete_bipartite_extremes(g: Graph) -> bool:
    """Every component is K_{a,b} with {a, b} = {delta_min, delta_max} of g."""
    d = g.degrees()
    lo, hi = min(d), max(d)
    if lo < 1:
        return False
    for comp in connected_components(g):
        sub = g.induced_subgraph(comp)
        if not is_complete_bipartite(sub):
            return False
        ds = set(sub.degrees())
        if ds != {lo, hi} and ds != {lo}:  # {lo} covers the regular K_{a,a} case
            return False
    return True


def is_star_center(g: Graph, i: int) -> bool:
    """True iff the component containing i is a star with center i.

    A one-vertex component counts as a degenerate star; K_2 counts with
    either endpoint as center.
    """
    for comp in connected_components(g):
        if i in comp:
            break
    d = g.degrees()
    k = len(comp) - 1
    if d[i] != k:
        return False
    return all(d[v] == 1 for v in comp if v != i)


def is_perfect_matching(g: Graph) -> bool:
    return g.n % 2 == 0 and all(x == 1 for x in g.degrees())


def strongly_regular_params(g: Graph):
    """(n, k, lam, mu) if g is strongly regular (excluding K_n and empty), else None."""
    d = g.degrees()
    if min(d) != max(d):
        return None
    k = d[0]
    if k == 0 or k == g.n - 1:
        return None
    adj = g.neighbor_sets()
    lam = mu = None
    for u in range(g.n):
        for v in range(u + 1, g.n):
            common = len(adj[u] & adj[v])
            if v in adj[u]:
                if lam is None:
                    lam = common
                elif lam != common:
                    return None
            else:
                if mu is None:
                    mu = common
                elif mu != common:
                    return None
    return (g.n, k, lam, mu)


# ---------------------------------------------------------------------------
# generator families
# ---------------------------------------------------------------------------

# Fixed adjacency table of the complement of the Clebsch graph: the unique
# srg(16, 10, 6, 6).  Row v is a bitmask over vertices adjacent to v.
_CLEBSCH_COMPLEMENT_ROWS = (
    32488, 48596, 56242, 59249, 59278, 56141, 48427, 32279,
    59518, 54461, 45787, 29159, 36583, 19931, 11197, 6014,
)


def complete(n: int) -> Graph:
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def empty(n: int) -> Graph:
    return Graph(n, frozenset())


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star(n: int) -> Graph:
    """Star K_{1,n-1} with the center at vertex 0."""
    if n < 2:
        raise ValueError("star needs n >= 2")
    return Graph.from_edges(n, [(0, i) for i in range(1, n)])


def complete_bipartite(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise ValueError("complete bipartite parts must be >= 1")
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def matching(n: int) -> Graph:
    """Perfect matching (n/2) K_2 on n vertices."""
    if n < 2 or n % 2 != 0:
        raise ValueError("matching needs an even total order >= 2")
    return Graph.from_edges(n, [(i, i + 1) for i in range(0, n, 2)])


def circulant(n: int, steps: Sequence[int]) -> Graph:
    if n < 1:
        raise ValueError("circulant needs n >= 1")
    edges = []
    for s in steps:
        s = s % n
        if s == 0:
            raise ValueError("circulant step 0 would create self-loops")
        for i in range(n):
            edges.append((i, (i + s) % n))
    return Graph.from_edges(n, edges)


def _is_prime(q: int) -> bool:
    if q < 2:
        return False
    if q % 2 == 0:
        return q == 2
    f = 3
    while f * f <= q:
        if q % f == 0:
            return False
        f += 2
    return True


def paley(q: int) -> Graph:
    """Paley graph on a prime q = 1 (mod 4): i ~ j iff i - j is a nonzero square."""
    if not _is_prime(q) or q % 4 != 1:
        raise ValueError(f"paley parameter must be a prime = 1 mod 4, got {q}")
    residues = {(x * x) % q for x in range(1, q)}
    return Graph.from_edges(q, [(i, j) for i in range(q) for j in range(i + 1, q) if (j - i) % q in residues])


def clebsch_complement() -> Graph:
    """The srg(16, 10, 6, 6), shipped as a fixed table and re-verified at load."""
    edges = [
        (u, v)
        for u in range(16)
        for v in range(u + 1, 16)
        if (_CLEBSCH_COMPLEMENT_ROWS[u] >> v) & 1
    ]
    g = Graph.from_edges(16, edges)
    if strongly_regular_params(g) != (16, 10, 6, 6):
        raise AssertionError("clebsch complement table failed its (16,10,6,6) self-check")
    return g


def random_gnp(n: int, p: float, seed) -> Graph:
    """Erdos-Renyi G(n, p); seed may be an int or a numpy SeedSequence/Generator."""
    if not 0.0 <= p <= 1.0:
        raise ValueError("edge probability must lie in [0, 1]")
    rng = seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    coins = rng.random(len(pairs))
    return Graph.from_edges(n, [pq for pq, c in zip(pairs, coins) if c < p])


_FAMILY_HELP = (
    "complete:n, empty:n, path:n, cycle:n, star:n, complete_bipartite:a,b, "
    "matching:n, circulant:n,s1[,s2...], paley:q, clebsch_complement, gnp:n,p"
)


def make_family(spec: str, seed: int = 0) -> Graph:
    """Build a named family from a CLI-style spec string like 'path:3'."""
    name, _, arg = spec.partition(":")
    name = name.strip().lower()
    args = [a for a in arg.split(",") if a] if arg else []
    try:
        if name == "complete":
            return complete(int(args[0]))
        if name == "empty":
            return empty(int(args[0]))
        if name == "path":
            return path(int(args[0]))
        if name == "cycle":
            return cycle(int(args[0]))
        if name == "star":
            return star(int(args[0]))
        if name in ("complete_bipartite", "k_ab"):
            return complete_bipartite(int(args[0]), int(args[1]))
        if name in ("matching", "mk2"):
            return matching(int(args[0]))
        if name == "circulant":
            return circulant(int(args[0]), [int(a) for a in args[1:]])
        if name == "paley":
            return paley(int(args[0]))
        if name == "clebsch_complement":
            return clebsch_complement()
        if name in ("gnp", "random_gnp"):
            return random_gnp(int(args[0]), float(args[1]), seed)
    except (IndexError, ValueError) as exc:
        if isinstance(exc, ValueError) and str(exc):
            raise ValueError(f"family {spec!r}: {exc}") from None
        raise ValueError(f"family {spec!r}: bad or missing parameters ({_FAMILY_HELP})") from None
    raise ValueError(f"unknown family {name!r} (known: {_FAMILY_HELP})")
