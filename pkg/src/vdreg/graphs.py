"""Finite simple graphs on at most 64 vertices.

Vertices carry 1-based labels x_1..x_n at the API surface; adjacency is kept
as one int bitmask per vertex (bit k = label k+1). All enumeration routines
are pure functions with deterministic output order (ascending bitmask), so
their results are directly comparable across runs.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .bitsets import iter_bits, labels_of, mask_of

MAX_VERTICES = 64


@dataclass(frozen=True)
class Graph:
    """Simple graph: vertex count plus per-vertex neighbor masks.

    Invariants (enforced at construction): symmetric adjacency, no loops,
    n <= 64. Instances are immutable and safe to share between workers.
    """

    n: int
    adj: tuple[int, ...]
    labels: tuple[str, ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        if not 0 <= self.n <= MAX_VERTICES:
            raise ValueError(f"vertex count must be in 0..{MAX_VERTICES}, got {self.n}")
        if len(self.adj) != self.n:
            raise ValueError("adjacency length does not match vertex count")
        full = (1 << self.n) - 1
        for i, m in enumerate(self.adj):
            if m & ~full:
                raise ValueError(f"neighbor mask of x_{i + 1} leaves the vertex range")
            if m >> i & 1:
                raise ValueError(f"loop at x_{i + 1}")
            for j in iter_bits(m):
                if not self.adj[j] >> i & 1:
                    raise ValueError(f"adjacency not symmetric at x_{i + 1}, x_{j + 1}")

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def edges(self) -> list[tuple[int, int]]:
        """Edge list as sorted 1-based pairs, lexicographic."""
        out = []
        for i in range(self.n):
            for j in iter_bits(self.adj[i]):
                if j > i:
                    out.append((i + 1, j + 1))
        return out

    def edge_count(self) -> int:
        return sum(m.bit_count() for m in self.adj) // 2

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return self.adj[v - 1].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool(self.adj[u - 1] >> (v - 1) & 1)

    def neighbors(self, v: int) -> tuple[int, ...]:
        self._check_vertex(v)
        return labels_of(self.adj[v - 1])

    def induced_subgraph(self, vertices) -> Graph:
        """Induced subgraph on the given 1-based labels, relabeled 1..k."""
        keep = sorted(set(vertices))
        mask = mask_of(keep, self.n)
        index = {v: i for i, v in enumerate(keep)}
        adj = []
        for v in keep:
            m = 0
            for j in iter_bits(self.adj[v - 1] & mask):
                m |= 1 << index[j + 1]
            adj.append(m)
        return Graph(len(keep), tuple(adj))

    def _check_vertex(self, v: int):
        if not 1 <= v <= self.n:
            raise ValueError(f"vertex {v} out of range 1..{self.n}")


def from_edges(n: int, edges) -> Graph:
    """Graph on n vertices from 1-based edge pairs."""
    adj = [0] * n
    for u, v in edges:
        if not (1 <= u <= n and 1 <= v <= n):
            raise ValueError(f"edge ({u},{v}) out of range 1..{n}")
        if u == v:
            raise ValueError(f"loop edge ({u},{v})")
        adj[u - 1] |= 1 << (v - 1)
        adj[v - 1] |= 1 << (u - 1)
    return Graph(n, tuple(adj))


def circulant(n: int, dists) -> Graph:
    """Circulant graph: x_i ~ x_j iff the cyclic distance of i and j lies in dists."""
    if n < 1:
        raise ValueError("circulant needs n >= 1")
    S = set(dists)
    for d in S:
        if not 1 <= d <= n // 2:
            raise ValueError(f"distance {d} outside 1..{n // 2}")
    adj = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if min(j - i, n - (j - i)) in S:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return Graph(n, tuple(adj))


def closed_neighborhood(g: Graph, v: int) -> tuple[int, ...]:
    """N[v] = N(v) together with v itself, as sorted 1-based labels."""
    g._check_vertex(v)
    return labels_of(g.adj[v - 1] | 1 << (v - 1))


def is_three_disjoint(g: Graph, e1, e2) -> bool:
    """Whether two edges induce a disconnected subgraph on their 4 endpoints.

    With both pairs being edges, this holds exactly when no edge of g joins
    an endpoint of e1 to an endpoint of e2.
    """
    a, b = e1
    c, d = e2
    for u, v in (e1, e2):
        if not g.has_edge(u, v):
            raise ValueError(f"({u},{v}) is not an edge")
    if len({a, b, c, d}) != 4:
        raise ValueError("edge pairs share an endpoint")
    m1 = 1 << (a - 1) | 1 << (b - 1)
    m2 = 1 << (c - 1) | 1 << (d - 1)
    return not ((g.adj[a - 1] | g.adj[b - 1]) & m2) and not (
        (g.adj[c - 1] | g.adj[d - 1]) & m1
    )


def max_induced_matching(g: Graph) -> list[tuple[int, int]]:
    """A maximum set of pairwise 3-disjoint edges, found by exact branch and bound."""
    edges = g.edges()
    m = len(edges)
    if m == 0:
        return []
    # compat[i] = bitmask of edges 3-disjoint from edge i
    masks = []
    closed = []
    for u, v in edges:
        masks.append(1 << (u - 1) | 1 << (v - 1))
        closed.append(g.adj[u - 1] | g.adj[v - 1] | 1 << (u - 1) | 1 << (v - 1))
    compat = [0] * m
    for i in range(m):
        for j in range(i + 1, m):
            if not (closed[i] & masks[j]) and not (closed[j] & masks[i]):
                compat[i] |= 1 << j
                compat[j] |= 1 << i

    best: list[int] = []

    def extend(chosen: list[int], cand: int):
        nonlocal best
        if len(chosen) + cand.bit_count() <= len(best):
            return
        if cand == 0:
            if len(chosen) > len(best):
                best = chosen[:]
            return
        while cand:
            if len(chosen) + cand.bit_count() <= len(best):
                return
            low = cand & -cand
            i = low.bit_length() - 1
            cand ^= low
            chosen.append(i)
            extend(chosen, cand & compat[i])
            chosen.pop()

    extend([], (1 << m) - 1)
    return [edges[i] for i in sorted(best)]


def induced_matching_number(g: Graph) -> int:
    """a(G): maximum size of a pairwise 3-disjoint edge set; 0 if edgeless."""
    return len(max_induced_matching(g))


def mis_masks(adj, alive: int) -> list[int]:
    """Maximal independent sets of the induced subgraph on `alive`, as masks.

    Bron-Kerbosch with pivoting, run on the complement: maximal cliques of
    the complement restricted to `alive` are exactly the maximal independent
    sets. Returns masks in ascending order.
    """
    # co[u] = complement neighbors of u inside alive
    co = [
        (~a & alive & ~(1 << i)) if alive >> i & 1 else 0
        for i, a in enumerate(adj)
    ]
    out: list[int] = []

    def bk(r: int, p: int, x: int):
        if p == 0 and x == 0:
            out.append(r)
            return
        # pivot: member of p|x with the most candidates among its neighbors
        best = -1
        pivot_nb = 0
        px = p | x
        while px:
            low = px & -px
            px ^= low
            nb = p & co[low.bit_length() - 1]
            c = nb.bit_count()
            if c > best:
                best = c
                pivot_nb = nb
        cand = p & ~pivot_nb
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            bk(r | low, p & co[v], x & co[v])
            p ^= low
            x |= low

    bk(0, alive, 0)
    out.sort()
    return out


def maximal_independent_sets(g: Graph) -> list[tuple[int, ...]]:
    """All inclusion-maximal independent sets, each once, ascending by bitmask."""
    return [labels_of(m) for m in mis_masks(g.adj, g.full_mask)]


@dataclass(frozen=True)
class GraphStats:
    independence_number: int
    min_vertex_cover_size: int
    is_well_covered: bool
    has_degree_one_vertex: bool
    isolated_vertices: tuple[int, ...]


def graph_stats(g: Graph) -> GraphStats:
    """Independence number, cover size, well-coveredness and degree anomalies."""
    sets = mis_masks(g.adj, g.full_mask)
    sizes = {m.bit_count() for m in sets} or {0}
    alpha = max(sizes)
    return GraphStats(
        independence_number=alpha,
        min_vertex_cover_size=g.n - alpha,
        is_well_covered=len(sizes) == 1,
        has_degree_one_vertex=any(m.bit_count() == 1 for m in g.adj),
        isolated_vertices=tuple(i + 1 for i, m in enumerate(g.adj) if m == 0),
    )
