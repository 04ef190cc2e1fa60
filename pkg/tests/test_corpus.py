import random
from itertools import permutations

import pytest

from chibound.graph import CapExceeded, build_graph
from chibound.corpus import (
    CorpusSpec,
    PatternFilter,
    canonical_graph,
    canonical_key,
    enumerate_graphs,
    exhaustive_class_counts,
    parse_corpus_spec,
    parse_pattern,
    read_edge_list,
    read_graph6,
    write_edge_list,
    write_graph6,
)
from chibound.patterns import PatternSpec

from helpers import complete_graph, cycle_graph, path_graph, petersen_graph, random_graph


class TestGraph6:
    def test_k3_round_trip(self):
        g = complete_graph(3)
        s = write_graph6(g)
        assert s == "Bw"
        assert read_graph6(s) == g

    def test_single_vertex(self):
        assert write_graph6(build_graph(1, [])) == "@"
        assert read_graph6("@").n == 1

    def test_empty_string_rejected(self):
        with pytest.raises(ValueError):
            read_graph6("")

    def test_truncated_body_rejected(self):
        s = write_graph6(petersen_graph())
        with pytest.raises(ValueError):
            read_graph6(s[:-1])

    def test_trailing_garbage_rejected(self):
        s = write_graph6(cycle_graph(5))
        with pytest.raises(ValueError):
            read_graph6(s + "w")

    def test_non_printable_rejected(self):
        with pytest.raises(ValueError):
            read_graph6("B\x07")

    def test_nonzero_padding_rejected(self):
        # C5 needs 10 bits, the last two body bits are padding
        s = write_graph6(cycle_graph(5))
        corrupted = s[:-1] + chr(ord(s[-1]) | 1)
        with pytest.raises(ValueError):
            read_graph6(corrupted)

    def test_header_prefix_accepted(self):
        g = cycle_graph(4)
        assert read_graph6(">>graph6<<" + write_graph6(g)) == g

    def test_round_trip_fuzz(self):
        rng = random.Random(2024)
        for _ in range(2000):
            n = rng.randint(1, 30)
            g = random_graph(n, rng.choice([0.1, 0.3, 0.5, 0.8]), rng)
            s = write_graph6(g)
            assert read_graph6(s) == g
            assert write_graph6(read_graph6(s)) == s

    def test_large_n_header(self):
        g = build_graph(100, [(0, 99)])
        s = write_graph6(g)
        assert s.startswith("~")
        assert read_graph6(s) == g


class TestEdgeList:
    def test_round_trip(self):
        g = petersen_graph()
        assert read_edge_list(write_edge_list(g)) == g

    def test_bad_header(self):
        with pytest.raises(ValueError):
            read_edge_list("3\n0 1\n")

    def test_wrong_edge_count(self):
        with pytest.raises(ValueError):
            read_edge_list("3 2\n0 1\n")


def brute_canonical_key(g):
    """Minimum column-order bit tuple over all vertex permutations."""
    best = None
    for perm in permutations(range(g.n)):
        cols = []
        for j in range(1, g.n):
            col = 0
            for i in range(j):
                col = col << 1 | (1 if g.has_edge(perm[i], perm[j]) else 0)
            cols.append(col)
        key = tuple(cols)
        if best is None or key < best:
            best = key
    return (g.n, best if best is not None else ())


class TestCanonicalForm:
    def test_matches_brute_force(self):
        rng = random.Random(313)
        cases = [
            build_graph(1, []),
            build_graph(4, []),
            complete_graph(5),
            cycle_graph(6),
            path_graph(5),
        ]
        for _ in range(120):
            cases.append(random_graph(rng.randint(2, 6), rng.choice([0.2, 0.5, 0.8]), rng))
        for _ in range(10):
            cases.append(random_graph(7, 0.5, rng))
        for g in cases:
            assert canonical_key(g) == brute_canonical_key(g), g.edges()

    def test_invariant_under_relabeling(self):
        rng = random.Random(317)
        for _ in range(60):
            n = rng.randint(2, 8)
            g = random_graph(n, 0.5, rng)
            perm = list(range(n))
            rng.shuffle(perm)
            relabeled = build_graph(
                n, [(perm[u], perm[v]) for u, v in g.edges()]
            )
            assert canonical_key(g) == canonical_key(relabeled)

    def test_canonical_graph_is_fixed_point(self):
        rng = random.Random(331)
        for _ in range(30):
            g = random_graph(rng.randint(2, 7), 0.5, rng)
            c = canonical_graph(g)
            assert canonical_key(c) == canonical_key(g)
            assert canonical_graph(c) == c

    def test_distinguishes_non_isomorphic(self):
        a = path_graph(4)
        b = build_graph(4, [(0, 1), (0, 2), (0, 3)])
        assert canonical_key(a) != canonical_key(b)


class TestExhaustiveEnumeration:
    def test_exact_n_counts(self):
        assert sum(1 for _ in enumerate_graphs(CorpusSpec("exhaustive", 3, 3))) == 4
        assert sum(1 for _ in enumerate_graphs(CorpusSpec("exhaustive", 4, 4))) == 11

    def test_classical_counts_through_7(self):
        assert exhaustive_class_counts(7) == [1, 2, 4, 11, 34, 156, 1044]

    def test_matches_bitmask_oracle_small(self):
        # raw labeled enumeration + canonical dedup must agree with the
        # extension-based canonical enumerator
        for n in range(1, 6):
            spec_raw = CorpusSpec("exhaustive", n, n, dedup=False)
            raw_classes = {canonical_key(g) for g in enumerate_graphs(spec_raw)}
            spec_canon = CorpusSpec("exhaustive", n, n)
            canon = list(enumerate_graphs(spec_canon))
            assert {canonical_key(g) for g in canon} == raw_classes
            assert len(canon) == len(raw_classes)

    def test_range_mode(self):
        total = sum(1 for _ in enumerate_graphs(CorpusSpec("exhaustive", 1, 4)))
        assert total == 1 + 2 + 4 + 11

    def test_filtered_matches_post_filter(self):
        flt = PatternFilter(family=(PatternSpec.path(4),), induced=True)
        spec = CorpusSpec("exhaustive", 1, 5, filters=(flt,))
        filtered = list(enumerate_graphs(spec))
        spec_all = CorpusSpec("exhaustive", 1, 5)
        expected = [g for g in enumerate_graphs(spec_all) if flt.admits(g)]
        assert {canonical_key(g) for g in filtered} == {
            canonical_key(g) for g in expected
        }

    def test_subgraph_filter(self):
        flt = PatternFilter(family=(PatternSpec.kdt(1, 4),), induced=False)
        spec = CorpusSpec("exhaustive", 1, 6, filters=(flt,))
        graphs = list(enumerate_graphs(spec))
        # K_1(4) as a subgraph is any 4 vertices, so members have n <= 3
        assert all(g.n <= 3 for g in graphs)
        assert len(graphs) == 1 + 2 + 4

    def test_filter_order_independent(self):
        f1 = PatternFilter(family=(PatternSpec.path(5),), induced=True)
        f2 = PatternFilter(family=(PatternSpec.cycle(4),), induced=True)
        a = [
            write_graph6(g)
            for g in enumerate_graphs(CorpusSpec("exhaustive", 1, 6, filters=(f1, f2)))
        ]
        b = [
            write_graph6(g)
            for g in enumerate_graphs(CorpusSpec("exhaustive", 1, 6, filters=(f2, f1)))
        ]
        assert a == b

    def test_deterministic_stream(self):
        spec = CorpusSpec("exhaustive", 1, 5)
        a = [write_graph6(g) for g in enumerate_graphs(spec)]
        b = [write_graph6(g) for g in enumerate_graphs(spec)]
        assert a == b

    def test_caps(self):
        with pytest.raises(CapExceeded):
            list(enumerate_graphs(CorpusSpec("exhaustive", 1, 11)))
        with pytest.raises(CapExceeded):
            list(enumerate_graphs(CorpusSpec("exhaustive", 1, 8, dedup=False)))


class TestRandomMode:
    def test_seed_determinism(self):
        spec = CorpusSpec("random", 5, 5, edge_prob=0.5, count=10, seed=7, dedup=False)
        a = [write_graph6(g) for g in enumerate_graphs(spec)]
        b = [write_graph6(g) for g in enumerate_graphs(spec)]
        assert a == b and len(a) == 10

    def test_different_seeds_differ(self):
        base = dict(mode="random", n_min=8, n_max=8, edge_prob=0.5, count=5, dedup=False)
        a = [write_graph6(g) for g in enumerate_graphs(CorpusSpec(seed=1, **base))]
        b = [write_graph6(g) for g in enumerate_graphs(CorpusSpec(seed=2, **base))]
        assert a != b

    def test_filters_drop_nonmembers(self):
        flt = PatternFilter(family=(PatternSpec.cycle(4),), induced=True)
        spec = CorpusSpec(
            "random", 6, 6, edge_prob=0.5, count=50, seed=3, filters=(flt,), dedup=False
        )
        for g in enumerate_graphs(spec):
            assert flt.admits(g)


class TestGrammar:
    def test_pattern_round_trip(self):
        for text in [
            "broom:t=2,k=2",
            "flag:p=3",
            "bplus:p=2,k=2,t=3",
            "kdt:d=3,t=2",
            "path:k=6",
            "uniformtree:zeta=2,eta=2",
        ]:
            spec = parse_pattern(text)
            assert str(spec) == text

    def test_pattern_errors(self):
        with pytest.raises(ValueError):
            parse_pattern("broom:t=2")
        with pytest.raises(ValueError):
            parse_pattern("frobnicate:x=1")

    def test_corpus_exact(self):
        spec = parse_corpus_spec("exhaustive:n=4")
        assert spec.n_min == spec.n_max == 4 and spec.dedup

    def test_corpus_range_with_filters(self):
        spec = parse_corpus_spec(
            "exhaustive:n=1..9,filters=H:p=2+free:bplus:p=2,k=2,t=3"
        )
        assert spec.n_min == 1 and spec.n_max == 9
        assert len(spec.filters) == 2
        assert spec.filters[0].family == (PatternSpec.cycle(4), PatternSpec.flag(2))
        assert spec.filters[1].family == (PatternSpec.bplus(2, 2, 3),)

    def test_corpus_random(self):
        spec = parse_corpus_spec("random:n=8,p=0.25,count=50,seed=9")
        assert spec.mode == "random" and spec.edge_prob == 0.25 and spec.seed == 9

    def test_nosub_filter(self):
        spec = parse_corpus_spec("exhaustive:n=1..5,filters=nosub:kdt:d=1,t=5")
        assert spec.filters[0].induced is False

    def test_corpus_errors(self):
        with pytest.raises(ValueError):
            parse_corpus_spec("exhaustive:m=4")
        with pytest.raises(ValueError):
            parse_corpus_spec("sideways:n=4")
