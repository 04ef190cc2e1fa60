import random

import pytest

from chibound.graph import (
    build_graph,
    components,
    degeneracy,
    induced,
    is_t_connected,
    layers,
)

from helpers import (
    bfs_distances,
    brute_force_is_t_connected,
    complete_graph,
    cycle_graph,
    path_graph,
    random_graph,
)


class TestBuildGraph:
    def test_p3_degrees(self):
        g = build_graph(3, [(0, 1), (1, 2)])
        assert [g.degree(v) for v in range(3)] == [1, 2, 1]

    def test_single_vertex(self):
        g = build_graph(1, [])
        assert g.n == 1 and g.max_degree() == 0

    def test_c4_all_degree_two(self):
        g = build_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
        assert all(g.degree(v) == 2 for v in range(4))

    def test_duplicate_edges_merged(self):
        g = build_graph(3, [(0, 1), (1, 0), (0, 1)])
        assert g.edge_count() == 1

    def test_out_of_range_rejected(self):
        with pytest.raises(ValueError):
            build_graph(3, [(0, 3)])

    def test_self_loop_rejected(self):
        with pytest.raises(ValueError):
            build_graph(3, [(1, 1)])

    def test_adjacency_symmetric(self):
        rng = random.Random(11)
        for _ in range(20):
            g = random_graph(8, 0.4, rng)
            for u in range(8):
                for v in range(8):
                    assert g.has_edge(u, v) == g.has_edge(v, u)


class TestLayers:
    def test_p4_from_endpoint(self):
        g = path_graph(4)
        dec = layers(g, {0})
        assert dec.layer(1) == {1}
        assert dec.layer(2) == {2}
        assert dec.layer(3) == {3}
        assert dec.unreachable == frozenset()

    def test_k4_single_layer(self):
        dec = layers(complete_graph(4), {0})
        assert dec.layer(1) == {1, 2, 3}
        assert dec.layer(2) == frozenset()

    def test_disjoint_edges_unreachable(self):
        g = build_graph(4, [(0, 1), (2, 3)])
        dec = layers(g, {0})
        assert dec.layer(1) == {1}
        assert dec.unreachable == {2, 3}

    def test_empty_source_rejected(self):
        with pytest.raises(ValueError):
            layers(path_graph(3), set())

    def test_at_least_union(self):
        g = path_graph(6)
        dec = layers(g, {0})
        assert dec.at_least(3) == {3, 4, 5}

    def test_against_bfs_distances(self):
        # layer i must be exactly the set at shortest-path distance i
        rng = random.Random(7)
        for _ in range(40):
            n = rng.randint(2, 50)
            g = random_graph(n, rng.choice([0.05, 0.1, 0.3]), rng)
            src = rng.randrange(n)
            dec = layers(g, {src})
            dist = bfs_distances(g, src)
            for i in range(1, n):
                expected = {v for v in range(n) if dist[v] == i}
                assert dec.layer(i) == expected
            assert dec.unreachable == {v for v in range(n) if dist[v] < 0}


class TestInduced:
    def test_c5_minus_vertex_is_p4(self):
        g = cycle_graph(5)
        sub, vmap = induced(g, [0, 1, 2, 3])
        assert vmap == (0, 1, 2, 3)
        assert sub.edge_count() == 3
        assert sorted(sub.degree(v) for v in range(4)) == [1, 1, 2, 2]

    def test_k5_triple_is_triangle(self):
        sub, _ = induced(complete_graph(5), [1, 3, 4])
        assert sub.n == 3 and sub.edge_count() == 3

    def test_full_set_is_identity(self):
        g = cycle_graph(6)
        sub, vmap = induced(g, range(6))
        assert sub == g
        assert vmap == tuple(range(6))

    def test_out_of_range_rejected(self):
        with pytest.raises(ValueError):
            induced(path_graph(3), [0, 5])

    def test_map_points_back_to_host_edges(self):
        rng = random.Random(3)
        for _ in range(25):
            g = random_graph(9, 0.4, rng)
            subset = [v for v in range(9) if rng.random() < 0.6]
            sub, vmap = induced(g, subset)
            for i in range(sub.n):
                for j in range(i + 1, sub.n):
                    assert sub.has_edge(i, j) == g.has_edge(vmap[i], vmap[j])


class TestComponents:
    def test_two_triangles(self):
        g = build_graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
        assert components(g) == [frozenset({0, 1, 2}), frozenset({3, 4, 5})]

    def test_k1(self):
        assert components(build_graph(1, [])) == [frozenset({0})]

    def test_p5_single_component(self):
        assert components(path_graph(5)) == [frozenset(range(5))]

    def test_ordered_by_smallest_member(self):
        g = build_graph(5, [(1, 3), (0, 4)])
        comps = components(g)
        assert [min(c) for c in comps] == sorted(min(c) for c in comps)


class TestTConnectivity:
    def test_c5_is_2_connected(self):
        assert is_t_connected(cycle_graph(5), 2)

    def test_p4_not_2_connected(self):
        assert not is_t_connected(path_graph(4), 2)

    def test_k4(self):
        g = complete_graph(4)
        assert is_t_connected(g, 3)
        assert not is_t_connected(g, 4)  # |V| >= t+1 fails

    def test_invalid_t(self):
        with pytest.raises(ValueError):
            is_t_connected(path_graph(2), 0)

    def test_matches_brute_force_cuts(self):
        rng = random.Random(23)
        for _ in range(60):
            n = rng.randint(2, 8)
            g = random_graph(n, rng.choice([0.3, 0.5, 0.8]), rng)
            for t in range(1, 5):
                assert is_t_connected(g, t) == brute_force_is_t_connected(g, t), (
                    g.edges(),
                    t,
                )

    def test_complete_graphs_brute(self):
        for n in range(2, 8):
            g = complete_graph(n)
            for t in range(1, n + 1):
                assert is_t_connected(g, t) == brute_force_is_t_connected(g, t)


class TestDegeneracy:
    def test_tree_is_1_degenerate(self):
        g = build_graph(6, [(0, 1), (0, 2), (1, 3), (1, 4), (2, 5)])
        assert degeneracy(g)[0] == 1

    def test_cycles_are_2_degenerate(self):
        for n in (3, 5, 8):
            assert degeneracy(cycle_graph(n))[0] == 2

    def test_complete(self):
        for n in (1, 4, 7):
            assert degeneracy(complete_graph(n))[0] == n - 1

    def test_elimination_order_replay(self):
        # replaying the order must never expose more than d later neighbors
        rng = random.Random(5)
        for _ in range(40):
            g = random_graph(rng.randint(1, 12), rng.choice([0.2, 0.5, 0.8]), rng)
            d, order = degeneracy(g)
            assert sorted(order) == list(range(g.n))
            position = {v: i for i, v in enumerate(order)}
            for v in order:
                later = sum(1 for w in g.neighbors(v) if position[w] > position[v])
                assert later <= d
