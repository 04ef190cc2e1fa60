"""Composite structures: balloons, bicliques, minimal cutsets, class membership.

A (p,t)-balloon is an induced p-vertex path whose endpoint lands in a
t-connected body, with strict attachment rules for the earlier path
vertices; its value is the chromatic number of the endpoint plus its
non-neighbors inside the body.  A t-biclique pairs a t-set with a set
completely joined to it; its value is the chromatic number of the
joined set.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator, Mapping

from .graph import (
    CapExceeded,
    Graph,
    _component_mask,
    _t_connected_mask,
    bits_list,
    build_graph,
    induced,
    is_connected_mask,
    is_t_connected,
    iter_bits,
    mask_of,
)
from .patterns import Occurrence, PatternSpec, is_family_free
from .solvers import chi_of_subset, clique_number

BALLOON_MAX_N = 16
CUTSET_MAX_N = 16


@dataclass(frozen=True)
class Balloon:
    """Witness record for a (p,t)-balloon.

    ``path`` is the induced path v_1..v_p in order; ``body`` is the
    t-connected set containing v_p; ``z_set`` is v_p plus its
    non-neighbors in the body; ``value`` is chi of the z_set.
    """

    path: tuple[int, ...]
    body: frozenset[int]
    z_set: frozenset[int]
    value: int
    t: int

    @property
    def tip(self) -> int:
        return self.path[-1]


@dataclass(frozen=True)
class Biclique:
    """Witness record for a t-biclique (X completely joined to Y)."""

    x_set: frozenset[int]
    y_set: frozenset[int]
    value: int


@dataclass(frozen=True)
class ClassCertificate:
    """Named witnesses for a class-membership decision."""

    class_id: str
    case: int | None
    witnesses: dict[str, object] = field(hash=False)

    def to_json_dict(self) -> dict:
        out: dict[str, object] = {"class_id": self.class_id, "case": self.case}
        wit = {}
        for key, value in self.witnesses.items():
            if isinstance(value, (frozenset, set, tuple, list)):
                wit[key] = sorted(value)
            else:
                wit[key] = value
        out["witnesses"] = wit
        return out


# ---------------------------------------------------------------------------
# Balloons


def _induced_paths(g: Graph, p: int) -> Iterator[tuple[int, ...]]:
    """All ordered induced p-vertex paths in lexicographic sequence order."""
    if p == 1:
        for v in range(g.n):
            yield (v,)
        return

    def extend(seq: list[int], seq_mask: int, forbidden: int) -> Iterator[tuple[int, ...]]:
        # forbidden: vertices adjacent to any non-final sequence vertex
        if len(seq) == p:
            yield tuple(seq)
            return
        last = seq[-1]
        cands = g.adj[last] & ~seq_mask & ~forbidden
        for w in iter_bits(cands):
            yield from extend(
                seq + [w], seq_mask | (1 << w), forbidden | (g.adj[last] & ~(1 << w))
            )

    for v in range(g.n):
        yield from extend([v], 1 << v, 0)


def enumerate_balloons(
    g: Graph,
    p: int,
    t: int,
    cap: int | None = None,
    max_n: int = BALLOON_MAX_N,
) -> list[Balloon]:
    """Exhaustively enumerate the (p,t)-balloons of ``g``.

    Paths come in lexicographic sequence order; candidate bodies per
    path by increasing size then lexicographic.  Bodies are pruned by
    "connected and contains the path endpoint" before the t-connectivity
    test.  With ``cap`` the list is truncated at exactly ``cap`` entries
    (callers treat a full-length result as possibly truncated).  Raises
    :class:`CapExceeded` when the graph is larger than ``max_n``.
    """
    if p < 1 or t < 1:
        raise ValueError("p and t must be >= 1")
    if g.n > max_n:
        raise CapExceeded(
            f"balloon enumeration cap is {max_n} vertices, got {g.n}"
        )
    out: list[Balloon] = []
    for path in _induced_paths(g, p):
        tip = path[-1]
        tip_bit = 1 << tip
        base = g.full_mask()
        for v in path[:-1]:
            base &= ~(1 << v)
        for v in path[:-2]:
            base &= ~g.adj[v]
        if p >= 2:
            base &= ~(g.adj[path[-2]] & ~tip_bit)
        if not base & tip_bit:
            continue
        others = bits_list(base & ~tip_bit)
        # |Y| >= t+1 is necessary for t-connectivity
        for size in range(t, len(others) + 1):
            for combo in combinations(others, size):
                y_mask = tip_bit | mask_of(combo)
                if not is_connected_mask(g, y_mask):
                    continue
                if not _t_connected_mask(g, y_mask, t):
                    continue
                z_mask = y_mask & ~g.adj[tip]
                value = chi_of_subset(g, iter_bits(z_mask))
                out.append(
                    Balloon(
                        path=path,
                        body=frozenset(iter_bits(y_mask)),
                        z_set=frozenset(iter_bits(z_mask)),
                        value=value,
                        t=t,
                    )
                )
                if cap is not None and len(out) >= cap:
                    return out
    return out


def validate_balloon(g: Graph, b: Balloon) -> bool:
    """Re-check every defining condition of a balloon, independent of the enumerator."""
    p = len(b.path)
    if p < 1 or len(set(b.path)) != p:
        return False
    # induced path
    for i in range(p):
        for j in range(i + 1, p):
            if g.has_edge(b.path[i], b.path[j]) != (j == i + 1):
                return False
    body = b.body
    tip = b.path[-1]
    if tip not in body:
        return False
    if any(v in body for v in b.path[:-1]):
        return False
    for v in b.path[:-2]:
        if any(w in body for w in g.neighbors(v)):
            return False
    if p >= 2:
        prev = b.path[-2]
        if {w for w in g.neighbors(prev) if w in body} != {tip}:
            return False
    sub, _ = induced(g, body)
    if not is_t_connected(sub, b.t):
        return False
    z = {v for v in body if not g.has_edge(v, tip)} | {tip}
    if z != set(b.z_set):
        return False
    return chi_of_subset(g, z) == b.value


def balloon_layer_max_degree(g: Graph, b: Balloon) -> int:
    """Max degree of the body subgraph on vertices at body-distance >= 2 from the tip.

    Layers are computed inside the body, not in the host graph.  Returns
    -1 when no body vertex lies at distance >= 2.
    """
    body_mask = mask_of(b.body)
    tip_bit = 1 << b.tip
    # BFS inside the body
    seen = tip_bit
    frontier = tip_bit
    near = tip_bit  # distance <= 1
    first = True
    while frontier:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= g.adj[v]
        nxt &= body_mask & ~seen
        if first:
            near |= nxt
            first = False
        seen |= nxt
        frontier = nxt
    far = seen & ~near
    if not far:
        return -1
    return max((g.adj[v] & far).bit_count() for v in iter_bits(far))


def balloon_tip_degree(g: Graph, b: Balloon) -> int:
    """Number of body neighbors of the tip (at least t in a valid balloon)."""
    return (g.adj[b.tip] & mask_of(b.body)).bit_count()


# ---------------------------------------------------------------------------
# Bicliques


def enumerate_bicliques(g: Graph, t: int, cap: int | None = None) -> list[Biclique]:
    """All t-bicliques with maximal joined set, one per t-subset X.

    The maximal choice of Y for a given X is the common neighborhood of
    X; chi is monotone under induced subgraphs, so maximal Y suffices
    for any value-threshold question.  X sets come in lexicographic
    order; with ``cap`` the list is truncated at ``cap`` entries.
    """
    if t < 1:
        raise ValueError("t must be >= 1")
    out: list[Biclique] = []
    if g.n < t:
        return out
    for combo in combinations(range(g.n), t):
        common = g.full_mask()
        for v in combo:
            common &= g.adj[v]
        value = chi_of_subset(g, iter_bits(common))
        out.append(
            Biclique(
                x_set=frozenset(combo),
                y_set=frozenset(iter_bits(common)),
                value=value,
            )
        )
        if cap is not None and len(out) >= cap:
            return out
    return out


def validate_biclique(g: Graph, b: Biclique) -> bool:
    if b.x_set & b.y_set:
        return False
    for x in b.x_set:
        for y in b.y_set:
            if not g.has_edge(x, y):
                return False
    return chi_of_subset(g, b.y_set) == b.value


# ---------------------------------------------------------------------------
# Minimal cutsets


def minimal_cutsets(
    g: Graph, cap: int | None = None, max_n: int = CUTSET_MAX_N
) -> list[frozenset[int]]:
    """All vertex sets X whose removal disconnects ``g`` such that every
    member of X has a neighbor in every remaining component.

    Raises on disconnected input, on graphs above ``max_n`` and when the
    result would exceed ``cap``.
    """
    if g.n > max_n:
        raise CapExceeded(f"cutset enumeration cap is {max_n} vertices, got {g.n}")
    full = g.full_mask()
    if not is_connected_mask(g, full) or g.n < 2:
        raise ValueError("minimal_cutsets requires a connected graph")
    out: list[frozenset[int]] = []
    for size in range(1, g.n - 1):
        for combo in combinations(range(g.n), size):
            x_mask = mask_of(combo)
            rest = full & ~x_mask
            comp_masks = []
            seen = 0
            for v in iter_bits(rest):
                if seen >> v & 1:
                    continue
                comp = _component_mask(g, 1 << v, rest)
                seen |= comp
                comp_masks.append(comp)
            if len(comp_masks) < 2:
                continue
            if all(
                all(g.adj[x] & comp for comp in comp_masks) for x in combo
            ):
                if cap is not None and len(out) >= cap:
                    raise CapExceeded(f"more than {cap} minimal cutsets")
                out.append(frozenset(combo))
    return out


# ---------------------------------------------------------------------------
# Class membership


def in_class_H(g: Graph, p: int) -> tuple[bool, Occurrence | None]:
    """Membership in the C4-free and p-flag-free class, with witness on failure."""
    if p < 1:
        raise ValueError("p must be >= 1")
    return is_family_free(g, [PatternSpec.cycle(4), PatternSpec.flag(p)], induced=True)


_L_PRECONDITION_FAMILY = [PatternSpec.path(6), PatternSpec.broom(2, 2)]


def in_class_L(
    g: Graph, i: int, binding: Mapping[int, int]
) -> tuple[bool, ClassCertificate | None]:
    """Cutset-based class membership for {P6, (2,2)-broom}-free graphs.

    Quantifies existentially over minimal cutsets X and vertices v in X.
    With X complete (case 1) a second component must hold a vertex
    nonadjacent to v; with X not complete (case 2) some w in X
    nonadjacent to v must miss the chosen neighbor y.  Either way some
    component F of B1 minus the v-neighborhood must touch N(y) and have
    chi above ``binding`` at omega(G) // i.
    """
    if i < 2:
        raise ValueError("i must be >= 2")
    free, occ = is_family_free(g, _L_PRECONDITION_FAMILY, induced=True)
    if not free:
        raise ValueError("graph is not {P6, (2,2)-broom}-free")
    omega = clique_number(g)[0]
    point = omega // i
    if point not in binding:
        raise ValueError(f"binding table undefined at {point}")
    threshold = binding[point]

    for x_set in minimal_cutsets(g):
        x_mask = mask_of(x_set)
        rest_comps = components_masks(g, g.full_mask() & ~x_mask)
        x_list = sorted(x_set)
        x_complete = all(
            g.has_edge(u, v) for u, v in combinations(x_list, 2)
        )
        for v in x_list:
            cert = _class_l_find(
                g, x_list, x_mask, v, x_complete, rest_comps, threshold, i, omega
            )
            if cert is not None:
                return True, cert
    return False, None


def components_masks(g: Graph, within: int) -> list[int]:
    """Component masks of the induced subgraph on ``within``, by smallest member."""
    seen = 0
    out = []
    for v in iter_bits(within):
        if seen >> v & 1:
            continue
        comp = _component_mask(g, 1 << v, within)
        seen |= comp
        out.append(comp)
    return out


def _class_l_find(
    g: Graph,
    x_list: list[int],
    x_mask: int,
    v: int,
    x_complete: bool,
    comps: list[int],
    threshold: int,
    i: int,
    omega: int,
) -> ClassCertificate | None:
    for b1 in comps:
        n_mask = g.adj[v] & b1
        if not n_mask:
            continue
        f_comps = components_masks(g, b1 & ~n_mask)
        for y in iter_bits(n_mask):
            for f_mask in f_comps:
                if not g.adj[y] & f_mask:
                    continue
                chi_f = chi_of_subset(g, iter_bits(f_mask))
                if chi_f <= threshold:
                    continue
                if x_complete:
                    pair = _case1_second_component(g, v, comps, b1)
                    if pair is None:
                        continue
                    b2, u = pair
                    case = 1
                    extra = {"u": u, "B2": frozenset(iter_bits(b2))}
                else:
                    w = next(
                        (
                            w
                            for w in x_list
                            if w != v
                            and not g.has_edge(w, v)
                            and not g.has_edge(w, y)
                        ),
                        None,
                    )
                    if w is None:
                        continue
                    b2 = next((c for c in comps if c != b1), None)
                    case = 2
                    extra = {"w": w}
                    if b2 is not None:
                        extra["B2"] = frozenset(iter_bits(b2))
                f_nbr = None
                if "B2" in extra:
                    b2_mask = mask_of(extra["B2"])
                    nbrs = g.adj[v] & b2_mask
                    if nbrs:
                        f_nbr = (nbrs & -nbrs).bit_length() - 1
                y1_mask = 0
                for z in iter_bits(n_mask):
                    if g.adj[z] & f_mask:
                        y1_mask |= 1 << z
                witnesses: dict[str, object] = {
                    "X": frozenset(x_list),
                    "v": v,
                    "B1": frozenset(iter_bits(b1)),
                    "y": y,
                    "N": frozenset(iter_bits(n_mask)),
                    "F": frozenset(iter_bits(f_mask)),
                    "Y1": frozenset(iter_bits(y1_mask)),
                    "chi_F": chi_f,
                    "omega": omega,
                    "threshold": threshold,
                }
                if f_nbr is not None:
                    witnesses["f_vertex"] = f_nbr
                witnesses.update(extra)
                return ClassCertificate(class_id=f"L({i})", case=case, witnesses=witnesses)
    return None


def _case1_second_component(
    g: Graph, v: int, comps: list[int], b1: int
) -> tuple[int, int] | None:
    for b2 in comps:
        if b2 == b1:
            continue
        nonadj = b2 & ~g.adj[v]
        if nonadj:
            u = (nonadj & -nonadj).bit_length() - 1
            return b2, u
    return None


def in_class_F(
    g: Graph,
    k: int,
    p: int,
    t: int,
    from_neighborhood: bool = True,
    cap: int | None = None,
) -> bool:
    """Deep-layer condition: in every (p,t)-balloon some maximum-degree vertex
    of the distance->=2 body region stays close to the tip.

    "Close" means body-layer index at most k+1, reading "within distance
    k from the tip neighborhood"; pass ``from_neighborhood=False`` for
    the stricter distance-from-tip reading (layer index at most k).
    Membership presumes the C4-free p-flag-free class; non-members are
    rejected.
    """
    if k < 2:
        raise ValueError("k must be >= 2")
    member, _ = in_class_H(g, p)
    if not member:
        raise ValueError("graph is outside the C4-free p-flag-free class")
    balloons = enumerate_balloons(g, p, t, cap=cap)
    if cap is not None and len(balloons) >= cap:
        raise CapExceeded("balloon enumeration truncated")
    limit = k + 1 if from_neighborhood else k
    for b in balloons:
        body_mask = mask_of(b.body)
        depth = _body_layer_indices(g, body_mask, b.tip)
        far = [v for v, d in depth.items() if d >= 2]
        if not far:
            continue
        far_mask = mask_of(far)
        degs = {v: (g.adj[v] & far_mask).bit_count() for v in far}
        dmax = max(degs.values())
        if not any(depth[v] <= limit for v, d in degs.items() if d == dmax):
            return False
    return True


def _body_layer_indices(g: Graph, body_mask: int, tip: int) -> dict[int, int]:
    depth = {tip: 0}
    frontier = 1 << tip
    seen = frontier
    d = 0
    while frontier:
        d += 1
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= g.adj[v]
        nxt &= body_mask & ~seen
        for v in iter_bits(nxt):
            depth[v] = d
        seen |= nxt
        frontier = nxt
    return depth


# ---------------------------------------------------------------------------
# Constructed instances of the cutset class (used by verification suites)


def build_class_l_case1(
    clique_size: int, x_size: int = 1, attach_count: int = 1, link_attachments: bool = False
) -> Graph:
    """A case-1 instance: complete cutset X, a body component carrying a
    clique F behind the v-neighborhood, and a second component with a
    vertex nonadjacent to v.

    Layout: X = {v, x_1..} complete; y_1..y_a adjacent to all of X and
    complete to the clique F; B2 is a path f-u with f adjacent to all of
    X.  Built to stay {P6, (2,2)-broom}-free for every parameter choice.
    """
    if clique_size < 2 or x_size < 1 or attach_count < 1:
        raise ValueError("need clique_size >= 2, x_size >= 1, attach_count >= 1")
    edges = []
    x_vertices = list(range(x_size))  # vertex 0 is v
    ys = list(range(x_size, x_size + attach_count))
    f_start = x_size + attach_count
    f_vertices = list(range(f_start, f_start + clique_size))
    f_b2 = f_start + clique_size
    u_b2 = f_b2 + 1
    edges += [(a, b) for a, b in combinations(x_vertices, 2)]
    for y in ys:
        edges += [(x, y) for x in x_vertices]
        edges += [(y, w) for w in f_vertices]
    if link_attachments:
        edges += [(a, b) for a, b in combinations(ys, 2)]
    edges += [(a, b) for a, b in combinations(f_vertices, 2)]
    edges += [(x, f_b2) for x in x_vertices]
    edges.append((f_b2, u_b2))
    return build_graph(u_b2 + 1, edges)


def build_class_l_case2(
    clique_size: int, attach_count: int = 1, tether_count: int = 1
) -> Graph:
    """A case-2 instance: X = {v, w} nonadjacent, y's adjacent to v but
    not w, F a clique complete to the y's, w tethered to F directly,
    and a second component {f} joined to both cutset vertices.
    """
    if clique_size < 2 or attach_count < 1 or not 1 <= tether_count <= clique_size:
        raise ValueError(
            "need clique_size >= 2, attach_count >= 1, 1 <= tether_count <= clique_size"
        )
    v, w = 0, 1
    ys = list(range(2, 2 + attach_count))
    f_start = 2 + attach_count
    f_vertices = list(range(f_start, f_start + clique_size))
    b2_f = f_start + clique_size
    edges = []
    for y in ys:
        edges.append((v, y))
        edges += [(y, z) for z in f_vertices]
    edges += [(a, b) for a, b in combinations(f_vertices, 2)]
    edges += [(w, f_vertices[j]) for j in range(tether_count)]
    edges += [(v, b2_f), (w, b2_f)]
    return build_graph(b2_f + 1, edges)


def class_l_instances(minimum: int = 20) -> list[tuple[Graph, int]]:
    """A varied list of at least ``minimum`` constructed instances with
    their intended case number."""
    out: list[tuple[Graph, int]] = []
    for c in range(2, 7):
        out.append((build_class_l_case1(c), 1))
        out.append((build_class_l_case1(c, x_size=2), 1))
        if c >= 3:
            # linked attachments enlarge omega by the attachment count,
            # so the clique F must outgrow the shifted threshold
            out.append((build_class_l_case1(c, attach_count=2, link_attachments=True), 1))
        out.append((build_class_l_case2(c), 2))
        out.append((build_class_l_case2(c, attach_count=2), 2))
        if c >= 3:
            out.append((build_class_l_case2(c, tether_count=2), 2))
    if len(out) < minimum:
        raise AssertionError("instance family too small")
    return out
