"""Shared test oracles and graph builders.

Oracles here are deliberately independent of the production code paths
they check: brute-force enumeration over injective maps, exhaustive
color assignments, explicit subset cuts.
"""

from __future__ import annotations

import random
from itertools import combinations, permutations

import numpy as np

from chibound.graph import Graph, build_graph


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return build_graph(n, edges)


def path_graph(k: int) -> Graph:
    return build_graph(k, [(i, i + 1) for i in range(k - 1)])


def cycle_graph(k: int) -> Graph:
    return build_graph(k, [(i, (i + 1) % k) for i in range(k)])


def complete_graph(n: int) -> Graph:
    return build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def petersen_graph() -> Graph:
    edges = []
    for i in range(5):
        edges.append((i, (i + 1) % 5))
        edges.append((5 + i, 5 + (i + 2) % 5))
        edges.append((i, 5 + i))
    return build_graph(10, edges)


def adjacency_matrix(g: Graph) -> np.ndarray:
    a = np.zeros((g.n, g.n), dtype=bool)
    for u, v in g.edges():
        a[u, v] = a[v, u] = True
    return a


_PERM_CACHE: dict[tuple[int, int], np.ndarray] = {}


def _perm_array(n: int, k: int) -> np.ndarray:
    key = (n, k)
    if key not in _PERM_CACHE:
        _PERM_CACHE[key] = np.array(list(permutations(range(n), k)), dtype=np.int8)
    return _PERM_CACHE[key]


def brute_force_occurs(g: Graph, h: Graph, induced: bool) -> bool:
    """Exhaustive injective-map search for ``h`` in ``g`` (vectorized)."""
    if h.n > g.n:
        return False
    if h.n == 0:
        return True
    a = adjacency_matrix(g)
    perms = _perm_array(g.n, h.n)
    valid = np.ones(len(perms), dtype=bool)
    for i in range(h.n):
        for j in range(i + 1, h.n):
            host_adj = a[perms[:, i], perms[:, j]]
            if h.has_edge(i, j):
                valid &= host_adj
            elif induced:
                valid &= ~host_adj
            if not valid.any():
                return False
    return bool(valid.any())


def brute_force_chromatic(g: Graph) -> int:
    """Chromatic number by exhaustive color-assignment enumeration.

    Vertex 0 is pinned to color 0 (colorings are closed under color
    permutation); all assignments to the remaining vertices are checked
    in chunks.
    """
    n = g.n
    if n == 0:
        return 0
    if g.edge_count() == 0:
        return 1
    edge_list = g.edges()
    for k in range(2, n + 1):
        total = k ** (n - 1)
        chunk = 1 << 16
        for start in range(0, total, chunk):
            stop = min(start + chunk, total)
            codes = np.arange(start, stop, dtype=np.int64)
            cols = np.zeros((stop - start, n), dtype=np.int8)
            for v in range(1, n):
                codes, rem = np.divmod(codes, k)
                cols[:, v] = rem
            ok = np.ones(stop - start, dtype=bool)
            for u, v in edge_list:
                ok &= cols[:, u] != cols[:, v]
                if not ok.any():
                    break
            if ok.any():
                return k
    return n


def brute_force_clique(g: Graph) -> int:
    best = 0
    for size in range(g.n, 0, -1):
        for combo in combinations(range(g.n), size):
            if all(g.has_edge(u, v) for u, v in combinations(combo, 2)):
                return size
    return best


def brute_force_is_t_connected(g: Graph, t: int) -> bool:
    """Direct cut enumeration: no vertex subset of size < t disconnects g."""
    if g.n < t + 1:
        return False
    for size in range(0, t):
        for cut in combinations(range(g.n), size):
            rest = [v for v in range(g.n) if v not in cut]
            if not rest:
                continue
            if not _is_connected_on(g, rest):
                return False
    return True


def _is_connected_on(g: Graph, vertices: list[int]) -> bool:
    allowed = set(vertices)
    seen = {vertices[0]}
    stack = [vertices[0]]
    while stack:
        v = stack.pop()
        for w in g.neighbors(v):
            if w in allowed and w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(allowed)


def bfs_distances(g: Graph, source: int) -> list[int]:
    """Single-source distances, -1 when unreachable (independent of layers())."""
    dist = [-1] * g.n
    dist[source] = 0
    frontier = [source]
    d = 0
    while frontier:
        d += 1
        nxt = []
        for v in frontier:
            for w in g.neighbors(v):
                if dist[w] < 0:
                    dist[w] = d
                    nxt.append(w)
        frontier = nxt
    return dist
