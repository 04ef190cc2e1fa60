"""Immutable simple graphs over integer vertex ids with bitset adjacency.

Vertex ids are exactly 0..n-1.  Adjacency rows are Python ints used as
bitsets, so every set operation is a word operation regardless of n.
All functions here are pure; graphs are safe to share across threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator


class CapExceeded(RuntimeError):
    """A configured size or count cap would be exceeded."""


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def bits_list(mask: int) -> list[int]:
    return list(iter_bits(mask))


class Graph:
    """Finite simple undirected graph; immutable after construction.

    ``adj[v]`` is the neighbor bitset of ``v``.  Use :func:`build_graph`
    to construct from an edge list with validation.
    """

    __slots__ = ("n", "adj", "_hash")

    def __init__(self, n: int, adj: tuple[int, ...]):
        self.n = n
        self.adj = adj
        self._hash = None

    # -- basic accessors --------------------------------------------------

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return bits_list(self.adj[v])

    def vertices(self) -> range:
        return range(self.n)

    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for u in range(self.n):
            rest = self.adj[u] >> (u + 1) << (u + 1)
            for v in iter_bits(rest):
                out.append((u, v))
        return out

    def edge_count(self) -> int:
        return sum(self.degree(v) for v in range(self.n)) // 2

    def max_degree(self) -> int:
        return max((self.degree(v) for v in range(self.n)), default=0)

    def complement(self) -> "Graph":
        full = self.full_mask()
        adj = tuple((full & ~self.adj[v]) & ~(1 << v) for v in range(self.n))
        return Graph(self.n, adj)

    # -- dunder -----------------------------------------------------------

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, self.adj))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count()})"


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph on vertices 0..n-1 from an edge list.

    Duplicate edges are merged.  Raises ``ValueError`` on out-of-range
    vertex ids or self-loops.
    """
    if n < 0:
        raise ValueError(f"vertex count must be nonnegative, got {n}")
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u},{v}) out of range for n={n}")
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


@dataclass(frozen=True)
class LayerDecomposition:
    """BFS distance layers from a source vertex set.

    ``layers[i-1]`` holds the vertices at distance exactly i from the
    source; ``unreachable`` holds vertices in no layer.
    """

    source: frozenset[int]
    layers: tuple[frozenset[int], ...]
    unreachable: frozenset[int]

    def layer(self, i: int) -> frozenset[int]:
        """Vertices at distance exactly ``i`` (i >= 1); empty beyond the last layer."""
        if i < 1:
            raise ValueError("layer index starts at 1")
        if i > len(self.layers):
            return frozenset()
        return self.layers[i - 1]

    def at_least(self, i: int) -> frozenset[int]:
        """Union of all layers at distance >= i."""
        out: set[int] = set()
        for layer in self.layers[max(i - 1, 0):]:
            out |= layer
        return frozenset(out)


def layers(g: Graph, source: Iterable[int]) -> LayerDecomposition:
    """Decompose V(g) into BFS distance layers from a nonempty source set."""
    src_mask = mask_of(source)
    if src_mask == 0:
        raise ValueError("source set must be nonempty")
    if src_mask >> g.n:
        raise ValueError("source contains out-of-range vertices")
    seen = src_mask
    frontier = src_mask
    out: list[frozenset[int]] = []
    while True:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= g.adj[v]
        nxt &= ~seen
        if not nxt:
            break
        out.append(frozenset(iter_bits(nxt)))
        seen |= nxt
        frontier = nxt
    unreachable = g.full_mask() & ~seen
    return LayerDecomposition(
        source=frozenset(iter_bits(src_mask)),
        layers=tuple(out),
        unreachable=frozenset(iter_bits(unreachable)),
    )


def induced(g: Graph, vertices: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Induced subgraph on ``vertices``, relabeled to 0..k-1.

    Returns ``(subgraph, vmap)`` where ``vmap[i]`` is the host vertex that
    new vertex ``i`` came from (ascending host order).
    """
    vs = sorted(set(vertices))
    if vs and not (0 <= vs[0] and vs[-1] < g.n):
        raise ValueError("vertices out of range")
    index = {v: i for i, v in enumerate(vs)}
    adj = [0] * len(vs)
    for i, v in enumerate(vs):
        for w in iter_bits(g.adj[v]):
            j = index.get(w)
            if j is not None:
                adj[i] |= 1 << j
    return Graph(len(vs), tuple(adj)), tuple(vs)


def components(g: Graph) -> list[frozenset[int]]:
    """Connected components as vertex sets, ordered by smallest member."""
    seen = 0
    comps = []
    for v in range(g.n):
        if seen >> v & 1:
            continue
        comp = _component_mask(g, 1 << v, g.full_mask())
        seen |= comp
        comps.append(frozenset(iter_bits(comp)))
    return comps


def _component_mask(g: Graph, start_mask: int, within: int) -> int:
    """Mask of the component of ``start_mask`` inside the induced set ``within``."""
    comp = start_mask & within
    frontier = comp
    while frontier:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= g.adj[v]
        nxt &= within & ~comp
        comp |= nxt
        frontier = nxt
    return comp


def is_connected_mask(g: Graph, mask: int) -> bool:
    """True iff the induced subgraph on ``mask`` is connected (empty set counts as connected)."""
    if mask == 0:
        return True
    start = mask & -mask
    return _component_mask(g, start, mask) == mask


def is_t_connected(g: Graph, t: int) -> bool:
    """Exact t-connectivity: |V| >= t+1 and no vertex cut of size < t.

    Complete graphs are (n-1)-connected.  Decided by Menger-style
    unit-vertex-capacity max-flow between nonadjacent pairs.
    """
    if t < 1:
        raise ValueError(f"t must be >= 1, got {t}")
    return _t_connected_mask(g, g.full_mask(), t)


def _t_connected_mask(g: Graph, mask: int, t: int) -> bool:
    """t-connectivity of the induced subgraph on ``mask`` without relabeling."""
    verts = bits_list(mask)
    k = len(verts)
    if k < t + 1:
        return False
    complete = all((g.adj[v] & mask).bit_count() == k - 1 for v in verts)
    if complete:
        return True
    # kappa <= delta: cheap reject before running any flow
    if min((g.adj[v] & mask).bit_count() for v in verts) < t:
        return False
    for i, u in enumerate(verts):
        for v in verts[i + 1:]:
            if not g.has_edge(u, v):
                if _vertex_flow_at_least(g, mask, u, v, t) < t:
                    return False
    return True


def _vertex_flow_at_least(g: Graph, mask: int, s: int, t_vertex: int, need: int) -> int:
    """Count internally vertex-disjoint s..t paths inside ``mask``, stopping at ``need``.

    Standard vertex-split construction: node 2v is the in-copy, 2v+1 the
    out-copy; the v_in->v_out arc has capacity 1 for internal vertices.
    """
    verts = bits_list(mask)
    idx = {v: i for i, v in enumerate(verts)}
    k = len(verts)
    size = 2 * k
    cap = [[0] * size for _ in range(size)]
    for v in verts:
        i = idx[v]
        cap[2 * i][2 * i + 1] = 1
    big = k + 1
    for v in verts:
        i = idx[v]
        for w in iter_bits(g.adj[v] & mask):
            j = idx[w]
            cap[2 * i + 1][2 * j] = big
    source = 2 * idx[s] + 1
    sink = 2 * idx[t_vertex]
    flow = 0
    while flow < need:
        # BFS augmenting path
        parent = [-1] * size
        parent[source] = source
        queue = [source]
        while queue and parent[sink] == -1:
            nxt_queue = []
            for a in queue:
                row = cap[a]
                for b in range(size):
                    if row[b] > 0 and parent[b] == -1:
                        parent[b] = a
                        nxt_queue.append(b)
            queue = nxt_queue
        if parent[sink] == -1:
            break
        b = sink
        while b != source:
            a = parent[b]
            cap[a][b] -= 1
            cap[b][a] += 1
            b = a
        flow += 1
    return flow


def degeneracy(g: Graph) -> tuple[int, tuple[int, ...]]:
    """Degeneracy and a matching elimination order.

    Repeatedly removes a minimum-degree vertex (lowest id on ties).  In
    the returned order every vertex has at most the returned value of
    neighbors occurring later.
    """
    remaining = g.full_mask()
    deg = [g.degree(v) for v in range(g.n)]
    order = []
    best = 0
    for _ in range(g.n):
        v = min(iter_bits(remaining), key=lambda u: (deg[u], u))
        best = max(best, deg[v])
        order.append(v)
        remaining &= ~(1 << v)
        for w in iter_bits(g.adj[v] & remaining):
            deg[w] -= 1
    return best, tuple(order)
