"""Exact clique number, chromatic number and independence number.

Everything here is exact: past the configurable size caps the solvers
refuse instead of approximating, since downstream verification depends
on true values of chi and omega.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .graph import CapExceeded, Graph, bits_list, induced, iter_bits


@dataclass(frozen=True)
class Coloring:
    """A proper vertex coloring; ``colors[v]`` is the color of vertex v."""

    colors: tuple[int, ...]
    count: int

    def is_proper(self, g: Graph) -> bool:
        if len(self.colors) != g.n:
            return False
        for u, v in g.edges():
            if self.colors[u] == self.colors[v]:
                return False
        return len(set(self.colors)) == self.count


def clique_number(g: Graph) -> tuple[int, frozenset[int]]:
    """Exact maximum clique size with a witness.

    Branch and bound with greedy-coloring upper bounds; candidates are
    scanned in ascending vertex id so the witness is reproducible.
    """
    if g.n == 0:
        return 0, frozenset()
    adj = g.adj
    best_mask = 0
    best_size = 0

    def color_sort(p_mask: int) -> tuple[list[int], list[int]]:
        order: list[int] = []
        bounds: list[int] = []
        color = 0
        rest = p_mask
        while rest:
            color += 1
            avail = rest
            while avail:
                low = avail & -avail
                v = low.bit_length() - 1
                order.append(v)
                bounds.append(color)
                avail &= ~adj[v]
                avail ^= low
                rest ^= low
        return order, bounds

    def expand(r_mask: int, size: int, p_mask: int) -> None:
        nonlocal best_mask, best_size
        if not p_mask:
            if size > best_size:
                best_size = size
                best_mask = r_mask
            return
        order, bounds = color_sort(p_mask)
        for i in range(len(order) - 1, -1, -1):
            if size + bounds[i] <= best_size:
                return
            v = order[i]
            bit = 1 << v
            expand(r_mask | bit, size + 1, p_mask & adj[v])
            p_mask &= ~bit

    expand(0, 0, g.full_mask())
    return best_size, frozenset(iter_bits(best_mask))


def independence_number(g: Graph) -> tuple[int, frozenset[int]]:
    """Exact independence number, computed as the clique number of the complement."""
    size, members = clique_number(g.complement())
    return size, members


def _greedy_dsatur(g: Graph) -> Coloring:
    """Greedy DSATUR coloring; an upper bound, not necessarily optimal."""
    n = g.n
    colors = [-1] * n
    neighbor_colors = [0] * n
    for _ in range(n):
        v = max(
            (u for u in range(n) if colors[u] < 0),
            key=lambda u: (neighbor_colors[u].bit_count(), g.degree(u), -u),
        )
        c = 0
        taken = neighbor_colors[v]
        while taken >> c & 1:
            c += 1
        colors[v] = c
        for w in iter_bits(g.adj[v]):
            neighbor_colors[w] |= 1 << c
    count = max(colors) + 1 if n else 0
    return Coloring(tuple(colors), count)


def _k_colorable(g: Graph, k: int, clique: Iterable[int]) -> Coloring | None:
    """Exact k-colorability via saturation-ordered backtracking.

    A maximum clique is precolored and new colors are only introduced in
    first-use order, which breaks color symmetry.
    """
    n = g.n
    colors = [-1] * n
    neighbor_colors = [0] * n
    clique_list = sorted(clique)[:k]
    for i, v in enumerate(clique_list):
        colors[v] = i
        for w in iter_bits(g.adj[v]):
            neighbor_colors[w] |= 1 << i
    uncolored = n - len(clique_list)

    def assign(remaining: int, max_used: int) -> bool:
        if remaining == 0:
            return True
        v = -1
        v_key = None
        for u in range(n):
            if colors[u] >= 0:
                continue
            key = (neighbor_colors[u].bit_count(), g.degree(u), -u)
            if v_key is None or key > v_key:
                v, v_key = u, key
        limit = min(k, max_used + 2)
        allowed = ~neighbor_colors[v] & ((1 << limit) - 1)
        for c in iter_bits(allowed):
            colors[v] = c
            touched = []
            for w in iter_bits(g.adj[v]):
                if not neighbor_colors[w] >> c & 1:
                    neighbor_colors[w] |= 1 << c
                    touched.append(w)
            if assign(remaining - 1, max(max_used, c)):
                return True
            colors[v] = -1
            for w in touched:
                neighbor_colors[w] &= ~(1 << c)
        return False

    if assign(uncolored, len(clique_list) - 1):
        return Coloring(tuple(colors), max(colors) + 1)
    return None


def chromatic_number(g: Graph, max_n: int = 40) -> tuple[int, Coloring]:
    """Exact chromatic number with a witnessing proper coloring.

    Iterative deepening on k between the clique lower bound and a greedy
    DSATUR upper bound.  Refuses graphs above ``max_n`` vertices rather
    than returning a heuristic answer.
    """
    if g.n > max_n:
        raise CapExceeded(f"chromatic_number cap is {max_n} vertices, got {g.n}")
    if g.n == 0:
        return 0, Coloring((), 0)
    if g.edge_count() == 0:
        return 1, Coloring((0,) * g.n, 1)
    lb, clique = clique_number(g)
    ub_coloring = _greedy_dsatur(g)
    if lb == ub_coloring.count:
        return lb, ub_coloring
    for k in range(lb, ub_coloring.count):
        witness = _k_colorable(g, k, clique)
        if witness is not None:
            return k, witness
    return ub_coloring.count, ub_coloring


def chi_of_subset(g: Graph, vertices: Iterable[int], max_n: int = 40) -> int:
    """Chromatic number of the induced subgraph on ``vertices`` (0 for the empty set)."""
    sub, _ = induced(g, vertices)
    if sub.n == 0:
        return 0
    value, _ = chromatic_number(sub, max_n=max_n)
    return value


def optimal_binding_point(corpus: Iterable[Graph], w: int) -> int | None:
    """Max chi over corpus graphs whose clique number equals ``w``.

    Returns ``None`` when no corpus graph attains that clique number,
    which is distinct from a chromatic value of 0.
    """
    best: int | None = None
    for g in corpus:
        omega, _ = clique_number(g)
        if omega != w:
            continue
        chi, _ = chromatic_number(g)
        if best is None or chi > best:
            best = chi
    return best
