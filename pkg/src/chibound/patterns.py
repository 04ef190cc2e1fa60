"""Named pattern constructors and induced / not-necessarily-induced detection.

The pattern zoo covers paths, cycles, cliques, stars, brooms, flags,
two-arm stars, broom-plus trees, complete multipartite graphs, bicliques
and uniform rooted trees.  Vertex 0 of every constructed pattern is its
distinguished vertex (broom/star center, flag attachment vertex, tree
root).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .graph import Graph, bits_list, build_graph, iter_bits


@dataclass(frozen=True)
class PatternSpec:
    """A named pattern with integer parameters, e.g. broom(t=2, k=2)."""

    kind: str
    params: tuple[tuple[str, int], ...]

    def __getitem__(self, name: str) -> int:
        for key, value in self.params:
            if key == name:
                return value
        raise KeyError(name)

    def __str__(self) -> str:
        if not self.params:
            return self.kind
        inner = ",".join(f"{k}={v}" for k, v in self.params)
        return f"{self.kind}:{inner}"

    # convenience constructors ------------------------------------------

    @staticmethod
    def path(k: int) -> "PatternSpec":
        return PatternSpec("path", (("k", k),))

    @staticmethod
    def cycle(k: int) -> "PatternSpec":
        return PatternSpec("cycle", (("k", k),))

    @staticmethod
    def complete(n: int) -> "PatternSpec":
        return PatternSpec("complete", (("n", n),))

    @staticmethod
    def star(k: int) -> "PatternSpec":
        return PatternSpec("star", (("k", k),))

    @staticmethod
    def broom(t: int, k: int) -> "PatternSpec":
        return PatternSpec("broom", (("t", t), ("k", k)))

    @staticmethod
    def flag(p: int) -> "PatternSpec":
        return PatternSpec("flag", (("p", p),))

    @staticmethod
    def two_arm_star(t: int, p: int) -> "PatternSpec":
        return PatternSpec("twoarmstar", (("t", t), ("p", p)))

    @staticmethod
    def bplus(p: int, k: int, t: int) -> "PatternSpec":
        return PatternSpec("bplus", (("p", p), ("k", k), ("t", t)))

    @staticmethod
    def kdt(d: int, t: int) -> "PatternSpec":
        return PatternSpec("kdt", (("d", d), ("t", t)))

    @staticmethod
    def biclique(s: int, t: int) -> "PatternSpec":
        return PatternSpec("biclique", (("s", s), ("t", t)))

    @staticmethod
    def uniform_tree(zeta: int, eta: int) -> "PatternSpec":
        return PatternSpec("uniformtree", (("zeta", zeta), ("eta", eta)))


@dataclass(frozen=True)
class Occurrence:
    """Injective placement of a pattern into a host graph.

    ``mapping[i]`` is the host vertex carrying pattern vertex ``i``.
    With ``induced`` set, non-edges are preserved as well.
    """

    mapping: tuple[int, ...]
    induced: bool


def _require(cond: bool, spec: PatternSpec, rule: str) -> None:
    if not cond:
        raise ValueError(f"invalid pattern {spec}: requires {rule}")


def make_pattern(spec: PatternSpec) -> Graph:
    """Construct the pattern graph for ``spec`` (cached; graphs are immutable)."""
    return _make_pattern_cached(spec)


@lru_cache(maxsize=None)
def _make_pattern_cached(spec: PatternSpec) -> Graph:
    kind = spec.kind
    if kind == "path":
        k = spec["k"]
        _require(k >= 1, spec, "k >= 1")
        return build_graph(k, [(i, i + 1) for i in range(k - 1)])
    if kind == "cycle":
        k = spec["k"]
        _require(k >= 3, spec, "k >= 3")
        return build_graph(k, [(i, (i + 1) % k) for i in range(k)])
    if kind == "complete":
        n = spec["n"]
        _require(n >= 1, spec, "n >= 1")
        return build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])
    if kind == "star":
        k = spec["k"]
        _require(k >= 1, spec, "k >= 1")
        return build_graph(k + 1, [(0, i) for i in range(1, k + 1)])
    if kind == "broom":
        t, k = spec["t"], spec["k"]
        _require(t >= 1 and k >= 1, spec, "t >= 1 and k >= 1")
        # K_{1,t+1} with one edge subdivided k times: center 0, leaves
        # 1..t, then a path of length k+1 ending at the subdivided leaf.
        edges = [(0, i) for i in range(1, t + 1)]
        chain = [0] + list(range(t + 1, t + k + 2))
        edges += [(chain[i], chain[i + 1]) for i in range(len(chain) - 1)]
        return build_graph(t + k + 2, edges)
    if kind == "flag":
        p = spec["p"]
        _require(p >= 1, spec, "p >= 1")
        # triangle 0,1,2 plus a path of length p hanging off vertex 0
        edges = [(0, 1), (1, 2), (0, 2)]
        chain = [0] + list(range(3, 3 + p))
        edges += [(chain[i], chain[i + 1]) for i in range(len(chain) - 1)]
        return build_graph(3 + p, edges)
    if kind == "twoarmstar":
        t, p = spec["t"], spec["p"]
        _require(t >= 5 and p >= 1, spec, "t >= 5 and p >= 1")
        # center 0 with t-4 pendant leaves, an arm of length 4 and an arm
        # of length p
        n_leaves = t - 4
        edges = [(0, i) for i in range(1, n_leaves + 1)]
        arm4 = [0] + list(range(n_leaves + 1, n_leaves + 5))
        edges += [(arm4[i], arm4[i + 1]) for i in range(4)]
        armp = [0] + list(range(n_leaves + 5, n_leaves + 5 + p))
        edges += [(armp[i], armp[i + 1]) for i in range(p)]
        return build_graph(1 + n_leaves + 4 + p, edges)
    if kind == "bplus":
        p, k, t = spec["p"], spec["k"], spec["t"]
        _require(p >= 2 and k >= 2 and t >= 3, spec, "p >= 2, k >= 2, t >= 3")
        # center 0 with t-1 leaves, a path of length p+k, and one extra
        # pendant at the path vertex at distance k from the center
        edges = [(0, i) for i in range(1, t)]
        chain = [0] + list(range(t, t + p + k))
        edges += [(chain[i], chain[i + 1]) for i in range(p + k)]
        pendant = t + p + k
        edges.append((chain[k], pendant))
        return build_graph(t + p + k + 1, edges)
    if kind == "kdt":
        d, t = spec["d"], spec["t"]
        _require(d >= 1 and t >= 1, spec, "d >= 1 and t >= 1")
        n = d * t
        edges = []
        for u in range(n):
            for v in range(u + 1, n):
                if u // t != v // t:
                    edges.append((u, v))
        return build_graph(n, edges)
    if kind == "biclique":
        s, t = spec["s"], spec["t"]
        _require(s >= 1 and t >= 1, spec, "s >= 1 and t >= 1")
        return build_graph(s + t, [(i, s + j) for i in range(s) for j in range(t)])
    if kind == "uniformtree":
        zeta, eta = spec["zeta"], spec["eta"]
        _require(zeta >= 2 and eta >= 1, spec, "zeta >= 2 and eta >= 1")
        # perfect zeta-ary tree of depth eta, root 0, breadth-first ids
        edges = []
        level = [0]
        nxt_id = 1
        for _ in range(eta):
            nxt_level = []
            for parent in level:
                for _ in range(zeta):
                    edges.append((parent, nxt_id))
                    nxt_level.append(nxt_id)
                    nxt_id += 1
            level = nxt_level
        return build_graph(nxt_id, edges)
    raise ValueError(f"unknown pattern kind {kind!r}")


def validate_occurrence(g: Graph, h: Graph, occ: Occurrence) -> bool:
    """Re-check that ``occ`` maps ``h`` into ``g`` correctly."""
    m = occ.mapping
    if len(m) != h.n or len(set(m)) != h.n:
        return False
    if any(not 0 <= v < g.n for v in m):
        return False
    for i in range(h.n):
        for j in range(i + 1, h.n):
            if h.has_edge(i, j):
                if not g.has_edge(m[i], m[j]):
                    return False
            elif occ.induced and g.has_edge(m[i], m[j]):
                return False
    return True


# ---------------------------------------------------------------------------
# Backtracking search


def _pattern_order(h: Graph, first: int | None = None) -> list[int]:
    """Connectivity-first deterministic processing order for pattern vertices."""
    if h.n == 0:
        return []
    if first is None:
        first = max(range(h.n), key=lambda v: (h.degree(v), -v))
    order = [first]
    placed = 1 << first
    while len(order) < h.n:
        best = None
        best_key = None
        for v in range(h.n):
            if placed >> v & 1:
                continue
            key = ((h.adj[v] & placed).bit_count(), h.degree(v), -v)
            if best_key is None or key > best_key:
                best, best_key = v, key
        order.append(best)
        placed |= 1 << best
    return order


def _neighbor_degree_profile(g: Graph, v: int) -> list[int]:
    return sorted((g.degree(w) for w in iter_bits(g.adj[v])), reverse=True)


def _profile_dominates(host: list[int], pat: list[int]) -> bool:
    if len(host) < len(pat):
        return False
    return all(host[i] >= pat[i] for i in range(len(pat)))


def find_occurrence(
    g: Graph,
    h: Graph,
    induced: bool = True,
    require_vertex: int | None = None,
) -> Occurrence | None:
    """Find one placement of ``h`` in ``g``, or ``None``.

    Backtracking over a fixed connectivity-first pattern order with
    degree and neighbor-degree-profile pruning; host candidates are
    tried in ascending id, so the result is deterministic.  With
    ``require_vertex`` the image must contain that host vertex.
    """
    if h.n < 1:
        raise ValueError("pattern must have at least one vertex")
    if h.n > g.n:
        return None

    host_profiles = [_neighbor_degree_profile(g, v) for v in range(g.n)]
    pat_profiles = [_neighbor_degree_profile(h, x) for x in range(h.n)]

    def attempt(order: list[int], preassigned: dict[int, int]) -> tuple[int, ...] | None:
        image = [-1] * h.n
        used = 0
        placed_pattern = 0
        for x, w in preassigned.items():
            image[x] = w
            used |= 1 << w
            placed_pattern |= 1 << x

        def feasible(x: int, w: int) -> bool:
            if g.degree(w) < h.degree(x):
                return False
            if not _profile_dominates(host_profiles[w], pat_profiles[x]):
                return False
            for y in iter_bits(placed_pattern):
                if y == x:
                    continue
                if h.has_edge(x, y):
                    if not g.has_edge(w, image[y]):
                        return False
                elif induced and g.has_edge(w, image[y]):
                    return False
            return True

        def extend(depth: int) -> bool:
            nonlocal used, placed_pattern
            if depth == len(order):
                return True
            x = order[depth]
            if image[x] >= 0:
                return extend(depth + 1)
            placed_nbrs = h.adj[x] & placed_pattern
            if placed_nbrs:
                cands = g.full_mask()
                for y in iter_bits(placed_nbrs):
                    cands &= g.adj[image[y]]
                cands &= ~used
            else:
                cands = g.full_mask() & ~used
            for w in iter_bits(cands):
                if feasible(x, w):
                    image[x] = w
                    used |= 1 << w
                    placed_pattern |= 1 << x
                    if extend(depth + 1):
                        return True
                    image[x] = -1
                    used &= ~(1 << w)
                    placed_pattern &= ~(1 << x)
            return False

        if extend(0):
            return tuple(image)
        return None

    if require_vertex is None:
        order = _pattern_order(h)
        image = attempt(order, {})
        return Occurrence(image, induced) if image is not None else None

    # anchored search: the required host vertex must carry some pattern vertex
    for x in range(h.n):
        if g.degree(require_vertex) < h.degree(x):
            continue
        if not _profile_dominates(host_profiles[require_vertex], pat_profiles[x]):
            continue
        order = _pattern_order(h, first=x)
        image = attempt(order, {x: require_vertex})
        if image is not None:
            return Occurrence(image, induced)
    return None


def find_induced(g: Graph, h: Graph) -> Occurrence | None:
    """First induced occurrence of ``h`` in ``g`` under the fixed search order."""
    return find_occurrence(g, h, induced=True)


def find_subgraph(g: Graph, h: Graph) -> Occurrence | None:
    """Not-necessarily-induced occurrence of ``h`` in ``g``.

    Complete multipartite patterns (including bicliques and cliques) are
    recognized structurally and searched by part assignment, which is
    far faster than generic backtracking for those shapes.
    """
    parts = _multipartite_parts(h)
    if parts is not None and len(parts) > 1:
        found = _find_multipartite_subgraph(g, [len(p) for p in parts])
        if found is None:
            return None
        # pair each pattern part with an unused found part of equal size;
        # within-part pattern edges do not exist, so any bijection works
        mapping = [-1] * h.n
        remaining = list(found)
        for members in parts:
            for i, host_part in enumerate(remaining):
                if host_part is not None and len(host_part) == len(members):
                    for x, w in zip(members, host_part):
                        mapping[x] = w
                    remaining[i] = None
                    break
        return Occurrence(tuple(mapping), False)
    if parts is not None and len(parts) == 1:
        # edgeless pattern: any |part| distinct vertices
        size = len(parts[0])
        if g.n < size:
            return None
        return Occurrence(tuple(range(size)), False)
    return find_occurrence(g, h, induced=False)


def _multipartite_parts(h: Graph) -> list[list[int]] | None:
    """Part member lists when ``h`` is complete multipartite, else ``None``.

    A graph is complete multipartite iff the components of its
    complement are all cliques; the parts are those components, ordered
    by smallest member.
    """
    comp = h.complement()
    seen = 0
    parts = []
    for v in range(h.n):
        if seen >> v & 1:
            continue
        mask = 1 << v
        frontier = mask
        while frontier:
            nxt = 0
            for u in iter_bits(frontier):
                nxt |= comp.adj[u]
            nxt &= ~mask
            mask |= nxt
            frontier = nxt
        members = bits_list(mask)
        for u in members:
            for w in members:
                if u < w and not comp.has_edge(u, w):
                    return None
        seen |= mask
        parts.append(members)
    return parts


def _find_multipartite_subgraph(g: Graph, parts: list[int]) -> list[list[int]] | None:
    """Search for disjoint, mutually complete vertex sets of the given sizes."""
    from itertools import combinations

    total = sum(parts)
    if total > g.n:
        return None
    sizes = sorted(parts, reverse=True)
    # iterative core reduction: a usable vertex must see at least
    # total - max_part vertices that themselves survive
    need = total - sizes[0]
    alive = g.full_mask()
    changed = True
    while changed:
        changed = False
        for v in bits_list(alive):
            if (g.adj[v] & alive).bit_count() < need:
                alive &= ~(1 << v)
                changed = True
    if alive.bit_count() < total:
        return None

    chosen: list[list[int]] = []

    def place(idx: int, cands: int, min_start: int) -> bool:
        if idx == len(sizes):
            return True
        size = sizes[idx]
        remaining_need = sum(sizes[idx:])
        if cands.bit_count() < remaining_need:
            return False
        cand_list = [v for v in bits_list(cands) if v >= min_start] if min_start else bits_list(cands)
        for combo in combinations(cand_list, size):
            common = cands
            for v in combo:
                common &= g.adj[v]
            chosen.append(list(combo))
            nxt_min = combo[0] + 1 if idx + 1 < len(sizes) and sizes[idx + 1] == size else 0
            if place(idx + 1, common, nxt_min):
                return True
            chosen.pop()
        return False

    if not place(0, alive, 0):
        return None
    return [list(part) for part in chosen]


def is_family_free(
    g: Graph, family: list[PatternSpec], induced: bool = True
) -> tuple[bool, Occurrence | None]:
    """True iff no family member occurs in ``g`` (induced or subgraph mode).

    On failure returns the first witness occurrence found, scanning the
    family in the given order.
    """
    if not family:
        raise ValueError("family must be nonempty")
    for spec in family:
        h = make_pattern(spec)
        if h.n > g.n:
            continue
        occ = find_induced(g, h) if induced else find_subgraph(g, h)
        if occ is not None:
            return False, occ
    return True, None


def occurs_with_vertex(g: Graph, h: Graph, vertex: int, induced: bool) -> bool:
    """Whether some occurrence of ``h`` uses the given host vertex.

    Used for incremental filtering: when a vertex is added to a graph
    known to be pattern-free, any new occurrence must involve it.
    """
    return find_occurrence(g, h, induced=induced, require_vertex=vertex) is not None
