"""Corpus generation and bit-exact file I/O.

Generation modes: exhaustive enumeration (one canonical representative
per isomorphism class, or raw labeled bitmask iteration), and seeded
random sampling.  Hereditary pattern filters prune exhaustive
generation level by level, which is what makes filtered enumeration at
nine vertices feasible.  graph6 is the interchange format; an edge-list
text format rides along for hand-written inputs.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .graph import CapExceeded, Graph, bits_list, build_graph, iter_bits
from .patterns import PatternSpec, is_family_free, make_pattern, occurs_with_vertex

EXHAUSTIVE_MAX_N = 10
RAW_EXHAUSTIVE_MAX_N = 7
DEDUP_MAX_N = 10


# ---------------------------------------------------------------------------
# graph6 codec


def write_graph6(g: Graph) -> str:
    """Encode to graph6: the vertex count then the upper triangle of the
    adjacency matrix column by column, six bits per printable character."""
    n = g.n
    if n <= 62:
        header = chr(n + 63)
    elif n <= 258047:
        header = "~" + "".join(
            chr(((n >> shift) & 0x3F) + 63) for shift in (12, 6, 0)
        )
    else:
        raise ValueError("graph6 encoding supported up to n = 258047")
    bits = []
    for j in range(1, n):
        for i in range(j):
            bits.append(1 if g.has_edge(i, j) else 0)
    while len(bits) % 6:
        bits.append(0)
    chars = []
    for k in range(0, len(bits), 6):
        value = 0
        for b in bits[k : k + 6]:
            value = value << 1 | b
        chars.append(chr(value + 63))
    return header + "".join(chars)


def read_graph6(text: str) -> Graph:
    """Decode a graph6 line; strict about length, character range and padding."""
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<") :]
    if not s:
        raise ValueError("empty graph6 string")
    for ch in s:
        if not 63 <= ord(ch) <= 126:
            raise ValueError(f"non-printable graph6 character {ch!r}")
    if s[0] == "~":
        if len(s) < 4:
            raise ValueError("truncated graph6 header")
        n = 0
        for ch in s[1:4]:
            n = n << 6 | (ord(ch) - 63)
        body = s[4:]
    else:
        n = ord(s[0]) - 63
        body = s[1:]
    nbits = n * (n - 1) // 2
    nchars = (nbits + 5) // 6
    if len(body) != nchars:
        raise ValueError(
            f"graph6 body length {len(body)} does not match n={n} (want {nchars})"
        )
    bits = []
    for ch in body:
        value = ord(ch) - 63
        bits.extend((value >> shift) & 1 for shift in (5, 4, 3, 2, 1, 0))
    if any(bits[nbits:]):
        raise ValueError("nonzero padding bits in graph6 body")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return build_graph(n, edges)


def read_graph6_file(path: str) -> list[Graph]:
    out = []
    with open(path) as fh:
        for line in fh:
            line = line.strip()
            if line:
                out.append(read_graph6(line))
    return out


def write_edge_list(g: Graph) -> str:
    """Plain text: an "n m" header line then one "u v" line per edge."""
    lines = [f"{g.n} {g.edge_count()}"]
    lines += [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def read_edge_list(text: str) -> Graph:
    lines = [ln for ln in (raw.strip() for raw in text.splitlines()) if ln]
    if not lines:
        raise ValueError("empty edge-list input")
    head = lines[0].split()
    if len(head) != 2:
        raise ValueError("edge-list header must be 'n m'")
    n, m = int(head[0]), int(head[1])
    if len(lines) - 1 != m:
        raise ValueError(f"expected {m} edge lines, found {len(lines) - 1}")
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise ValueError(f"bad edge line {ln!r}")
        edges.append((int(parts[0]), int(parts[1])))
    return build_graph(n, edges)


# ---------------------------------------------------------------------------
# Canonical form


def _twin_classes(g: Graph) -> list[int]:
    """twin_class[v] groups vertices whose swap is an automorphism."""
    cls = list(range(g.n))
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if cls[v] != v:
                continue
            nu = g.adj[u] & ~(1 << v)
            nv = g.adj[v] & ~(1 << u)
            if nu == nv:
                cls[v] = cls[u]
    return cls


def canonical_key(g: Graph) -> tuple[int, tuple[int, ...]]:
    """Isomorphism-invariant key: the minimum upper-triangle bit string
    over all vertex orderings, in graph6 column order.

    Lexicographic column-by-column minimization: at each position only
    the vertices producing the minimal next column can extend a minimal
    ordering, so the search branches only on ties; exact twins are
    collapsed since swapping them is an automorphism.
    """
    n = g.n
    if n == 0:
        return (0, ())
    twins = _twin_classes(g)
    best: list[tuple[int, ...] | None] = [None]

    def descend(
        placed: list[int], cols: list[int], remaining: list[int], tied: bool
    ) -> None:
        # tied: the column prefix equals the current best's prefix, so
        # positional comparison against best is meaningful
        if not remaining:
            key = tuple(cols)
            if best[0] is None or key < best[0]:
                best[0] = key
            return
        # column bits of each candidate against the placed prefix
        scored: dict[int, list[int]] = {}
        for u in remaining:
            col = 0
            for w in placed:
                col = col << 1 | (g.adj[u] >> w & 1)
            scored.setdefault(col, []).append(u)
        min_col = min(scored)
        child_tied = tied
        if tied and best[0] is not None:
            best_col = best[0][len(cols)]
            if min_col > best_col:
                return
            child_tied = min_col == best_col
        seen_twins = set()
        for u in scored[min_col]:
            if twins[u] in seen_twins:
                continue
            seen_twins.add(twins[u])
            descend(
                placed + [u],
                cols + [min_col],
                [x for x in remaining if x != u],
                child_tied,
            )

    # the first position contributes an empty column; seed all twin reps
    seen = set()
    for v in range(n):
        if twins[v] in seen:
            continue
        seen.add(twins[v])
        descend([v], [], [u for u in range(n) if u != v], True)
    return (n, best[0])


def canonical_graph(g: Graph) -> Graph:
    """The canonical representative of g's isomorphism class."""
    n, cols = canonical_key(g)
    edges = []
    for j in range(1, n):
        col = cols[j - 1]
        for i in range(j):
            if col >> (j - 1 - i) & 1:
                edges.append((i, j))
    return build_graph(n, edges)


# ---------------------------------------------------------------------------
# Corpus specification


@dataclass(frozen=True)
class PatternFilter:
    """Require the corpus graphs to be family-free in the given mode."""

    family: tuple[PatternSpec, ...]
    induced: bool

    def admits(self, g: Graph) -> bool:
        ok, _ = is_family_free(g, list(self.family), induced=self.induced)
        return ok

    def admits_extension(self, g: Graph, new_vertex: int) -> bool:
        """Membership check for a one-vertex extension of a known member:
        any new occurrence must use the new vertex."""
        for spec in self.family:
            h = make_pattern(spec)
            if h.n > g.n:
                continue
            if occurs_with_vertex(g, h, new_vertex, induced=self.induced):
                return False
        return True

    def __str__(self) -> str:
        mode = "free" if self.induced else "nosub"
        return "+".join(f"{mode}:{spec}" for spec in self.family)


@dataclass(frozen=True)
class CorpusSpec:
    """Deterministic description of a graph corpus.

    Exhaustive mode covers n_min..n_max; with ``dedup`` one canonical
    representative per isomorphism class is produced.  Random mode
    samples G(n, p) ``count`` times from ``seed``.  Filters apply in
    both modes.
    """

    mode: str  # "exhaustive" | "random"
    n_min: int = 1
    n_max: int = 1
    edge_prob: float = 0.5
    count: int = 0
    seed: int = 0
    filters: tuple[PatternFilter, ...] = ()
    dedup: bool = True

    def __str__(self) -> str:
        if self.mode == "exhaustive":
            span = (
                f"n={self.n_max}"
                if self.n_min == self.n_max
                else f"n={self.n_min}..{self.n_max}"
            )
            parts = [f"exhaustive:{span}"]
            if not self.dedup:
                parts.append("dedup=0")
        else:
            parts = [
                f"random:n={self.n_max},p={self.edge_prob},count={self.count},seed={self.seed}"
            ]
            if self.dedup:
                parts.append("dedup=1")
        if self.filters:
            parts.append("filters=" + "+".join(str(f) for f in self.filters))
        return ",".join(parts)


def _admits_all(g: Graph, filters: tuple[PatternFilter, ...]) -> bool:
    return all(f.admits(g) for f in filters)


def enumerate_graphs(spec: CorpusSpec) -> Iterator[Graph]:
    """Yield the corpus for ``spec`` as a deterministic stream."""
    if spec.mode == "exhaustive":
        yield from _enumerate_exhaustive(spec)
    elif spec.mode == "random":
        yield from _enumerate_random(spec)
    else:
        raise ValueError(f"unknown corpus mode {spec.mode!r}")


def _enumerate_random(spec: CorpusSpec) -> Iterator[Graph]:
    if spec.dedup and spec.n_max > DEDUP_MAX_N:
        raise CapExceeded(f"isomorphism dedup supported up to n = {DEDUP_MAX_N}")
    rng = random.Random(spec.seed)
    seen: set[tuple] = set()
    n = spec.n_max
    for _ in range(spec.count):
        edges = [
            (u, v)
            for u in range(n)
            for v in range(u + 1, n)
            if rng.random() < spec.edge_prob
        ]
        g = build_graph(n, edges)
        if not _admits_all(g, spec.filters):
            continue
        if spec.dedup:
            key = canonical_key(g)
            if key in seen:
                continue
            seen.add(key)
        yield g


def _enumerate_exhaustive(spec: CorpusSpec) -> Iterator[Graph]:
    if not 1 <= spec.n_min <= spec.n_max:
        raise ValueError("need 1 <= n_min <= n_max")
    if spec.n_max > EXHAUSTIVE_MAX_N:
        raise CapExceeded(f"exhaustive mode supported up to n = {EXHAUSTIVE_MAX_N}")
    if spec.dedup:
        yield from _enumerate_canonical(spec)
    else:
        yield from _enumerate_bitmask(spec)


def _enumerate_bitmask(spec: CorpusSpec) -> Iterator[Graph]:
    """Raw labeled enumeration: every upper-triangle bitmask, filtered."""
    if spec.n_max > RAW_EXHAUSTIVE_MAX_N:
        raise CapExceeded(
            f"labeled exhaustive mode supported up to n = {RAW_EXHAUSTIVE_MAX_N}"
        )
    for n in range(spec.n_min, spec.n_max + 1):
        pairs = [(i, j) for j in range(1, n) for i in range(j)]
        for mask in range(1 << len(pairs)):
            edges = [pairs[k] for k in range(len(pairs)) if mask >> k & 1]
            g = build_graph(n, edges)
            if _admits_all(g, spec.filters):
                yield g


def _enumerate_canonical(spec: CorpusSpec) -> Iterator[Graph]:
    """One canonical representative per isomorphism class, by levelwise
    one-vertex extension with canonical dedup.

    Every induced-subgraph-closed filter admits pruning during growth:
    a member on n vertices restricts to a member on n-1, so extending
    the level-(n-1) representatives reaches every class, and extension
    checks only need to look at occurrences through the new vertex.
    """
    level: dict[tuple, Graph] = {}
    single = build_graph(1, [])
    if _admits_all(single, spec.filters):
        level[canonical_key(single)] = single
    if spec.n_min <= 1 <= spec.n_max and level:
        yield single
    for n in range(2, spec.n_max + 1):
        nxt: dict[tuple, Graph] = {}
        for parent in level.values():
            for mask in range(1 << (n - 1)):
                adj = list(parent.adj) + [mask]
                for v in iter_bits(mask):
                    adj[v] |= 1 << (n - 1)
                child = Graph(n, tuple(adj))
                if not all(
                    f.admits_extension(child, n - 1) for f in spec.filters
                ):
                    continue
                key = canonical_key(child)
                if key not in nxt:
                    nxt[key] = canonical_graph(child)
        level = nxt
        if n >= spec.n_min:
            for key in sorted(nxt):
                yield nxt[key]


def exhaustive_class_counts(n_max: int) -> list[int]:
    """Isomorphism-class counts for n = 1..n_max (unfiltered)."""
    counts = []
    for n in range(1, n_max + 1):
        spec = CorpusSpec(mode="exhaustive", n_min=n, n_max=n)
        counts.append(sum(1 for _ in enumerate_graphs(spec)))
    return counts


# ---------------------------------------------------------------------------
# String grammars (the CLI surface owns these shapes)


def parse_pattern(text: str) -> PatternSpec:
    """Parse "kind:key=value,key=value" pattern strings, e.g. "broom:t=2,k=2"."""
    text = text.strip()
    if ":" in text:
        kind, _, rest = text.partition(":")
        params = {}
        for item in rest.split(","):
            if not item:
                continue
            key, _, value = item.partition("=")
            if not value:
                raise ValueError(f"bad pattern parameter {item!r} in {text!r}")
            params[key.strip()] = int(value)
    else:
        kind, params = text, {}
    kind = kind.strip().lower()
    try:
        if kind == "path":
            return PatternSpec.path(params["k"])
        if kind == "cycle":
            return PatternSpec.cycle(params["k"])
        if kind == "complete":
            return PatternSpec.complete(params["n"])
        if kind == "star":
            return PatternSpec.star(params["k"])
        if kind == "broom":
            return PatternSpec.broom(params["t"], params["k"])
        if kind == "flag":
            return PatternSpec.flag(params["p"])
        if kind == "twoarmstar":
            return PatternSpec.two_arm_star(params["t"], params["p"])
        if kind == "bplus":
            return PatternSpec.bplus(params["p"], params["k"], params["t"])
        if kind == "kdt":
            return PatternSpec.kdt(params["d"], params["t"])
        if kind == "biclique":
            return PatternSpec.biclique(params["s"], params["t"])
        if kind == "uniformtree":
            return PatternSpec.uniform_tree(params["zeta"], params["eta"])
    except KeyError as exc:
        raise ValueError(f"pattern {text!r} is missing parameter {exc}") from exc
    raise ValueError(f"unknown pattern kind {kind!r}")


def parse_corpus_spec(text: str) -> CorpusSpec:
    """Parse corpus strings.

    Examples::

        exhaustive:n=4
        exhaustive:n=1..7,filters=free:path:k=4
        exhaustive:n=1..9,filters=H:p=2+free:bplus:p=2,k=2,t=3
        random:n=8,p=0.5,count=200,seed=7
    """
    text = text.strip()
    mode, _, rest = text.partition(":")
    mode = mode.lower()
    filters: tuple[PatternFilter, ...] = ()
    fields: dict[str, str] = {}
    if "filters=" in rest:
        head, _, filter_text = rest.partition("filters=")
        filters = _parse_filters(filter_text)
        rest = head.rstrip(",")
    for item in rest.split(","):
        if not item:
            continue
        key, _, value = item.partition("=")
        if not value:
            raise ValueError(f"bad corpus field {item!r}")
        fields[key.strip()] = value.strip()
    if mode == "exhaustive":
        span = fields.get("n")
        if span is None:
            raise ValueError("exhaustive corpus needs n=K or n=A..B")
        if ".." in span:
            lo, _, hi = span.partition("..")
            n_min, n_max = int(lo), int(hi)
        else:
            n_min = n_max = int(span)
        dedup = fields.get("dedup", "1") not in ("0", "false")
        return CorpusSpec(
            mode="exhaustive", n_min=n_min, n_max=n_max, filters=filters, dedup=dedup
        )
    if mode == "random":
        return CorpusSpec(
            mode="random",
            n_min=int(fields["n"]),
            n_max=int(fields["n"]),
            edge_prob=float(fields.get("p", "0.5")),
            count=int(fields.get("count", "100")),
            seed=int(fields.get("seed", "0")),
            filters=filters,
            dedup=fields.get("dedup", "0") in ("1", "true"),
        )
    raise ValueError(f"unknown corpus mode {mode!r}")


def _parse_filters(text: str) -> tuple[PatternFilter, ...]:
    """Filters are joined by "+": "H:p=2", "free:<pattern>", "nosub:<pattern>"."""
    out: list[PatternFilter] = []
    for chunk in text.split("+"):
        chunk = chunk.strip()
        if not chunk:
            continue
        head, _, rest = chunk.partition(":")
        head = head.lower()
        if head == "h":
            params = dict(item.partition("=")[::2] for item in rest.split(","))
            p = int(params["p"])
            out.append(
                PatternFilter(
                    family=(PatternSpec.cycle(4), PatternSpec.flag(p)), induced=True
                )
            )
        elif head == "free":
            out.append(PatternFilter(family=(parse_pattern(rest),), induced=True))
        elif head == "nosub":
            out.append(PatternFilter(family=(parse_pattern(rest),), induced=False))
        else:
            raise ValueError(f"unknown filter {chunk!r}")
    return tuple(out)
