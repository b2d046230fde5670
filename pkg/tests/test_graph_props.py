import random

import pytest

from shared.epgraph import SimpleGraph, complete_bipartite, complete_graph, enhanced_power_graph, null_graph
from shared.errors import SizeLimitExceeded
from shared.graph_props import (
    chromatic_number,
    classify,
    clique_number,
    find_kuratowski_subdivision,
    independence_number,
    independence_number_brute_force,
    is_planar,
    max_clique,
    minimum_degree,
    optimal_coloring,
    path_addition_is_planar,
)
from shared.semigroup_core import cyclic_group, direct_product, elementary_abelian_2, left_zero, monogenic


def _cycle(n):
    return SimpleGraph.from_pairs(n, [(i, (i + 1) % n) for i in range(n)])


def _random_graph(rng, n, p):
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return SimpleGraph.from_pairs(n, pairs)


class TestClassify:
    def test_null_graph(self):
        c = classify(null_graph(3))
        assert c.null and c.acyclic and c.bipartite
        assert c.component_count == 3
        assert not c.connected
        assert c.regular_degree == 0
        assert c.shape() == 'null graph on 3 vertices'
        assert c.diameter_per_component == (0, 0, 0)

    def test_complete_graph(self):
        c = classify(complete_graph(4))
        assert c.complete and c.connected and c.components_complete
        assert c.regular_degree == 3
        assert not c.bipartite
        assert c.diameter_per_component == (1,)
        assert c.shape() == 'complete K_4'

    def test_star(self):
        c = classify(complete_bipartite(1, 3))
        assert c.star and c.tree and c.bipartite
        assert c.regular_degree is None
        assert (c.min_degree, c.max_degree) == (1, 3)
        assert c.shape() == 'star K_{1,3}'

    def test_diameter_per_component(self):
        path = SimpleGraph.from_pairs(6, [(0, 1), (1, 2), (2, 3), (4, 5)])
        assert classify(path).diameter_per_component == (3, 1)
        assert classify(_cycle(6)).diameter_per_component == (3,)

    def test_odd_cycle_witness_is_a_closed_odd_walk(self):
        g = _cycle(5)
        c = classify(g)
        cycle = c.odd_cycle_witness
        assert cycle is not None
        assert len(cycle) % 2 == 1
        assert len(set(cycle)) == len(cycle)
        for u, v in zip(cycle, cycle[1:] + cycle[:1]):
            assert g.has_edge(u, v)

    def test_even_cycle(self):
        c = classify(_cycle(6))
        assert c.bipartite and not c.acyclic
        assert c.odd_cycle_witness is None
        assert c.regular_degree == 2

    def test_tree_implies_connected_and_acyclic(self, corpus4):
        for s in corpus4:
            c = classify(enhanced_power_graph(s))
            if c.tree:
                assert c.connected and c.acyclic
            if c.complete:
                assert c.regular_degree == s.n - 1
            assert c.bipartite == (c.odd_cycle_witness is None)
            # on enhanced power graphs the two notions coincide
            assert c.bipartite == c.acyclic

    def test_minimum_degree(self):
        assert minimum_degree(complete_bipartite(2, 3)) == 2
        assert minimum_degree(SimpleGraph(0, frozenset())) == 0


class TestPlanarity:
    def test_k4_is_planar(self):
        result = is_planar(complete_graph(4))
        assert result.planar
        assert result.witness is None

    def test_k5_witness(self):
        g = complete_graph(5)
        result = is_planar(g)
        assert not result.planar
        assert result.edge_bound_exceeded
        assert result.witness.kind == 'K5'
        assert result.witness.verify(g)

    def test_k33_witness(self):
        g = complete_bipartite(3, 3)
        result = is_planar(g)
        assert not result.planar
        assert not result.edge_bound_exceeded
        assert result.witness.kind == 'K3,3'
        assert sorted(map(sorted, result.witness.parts)) == [[0, 1, 2], [3, 4, 5]]
        assert result.witness.verify(g)

    def test_subdivided_k33_witness_has_long_paths(self):
        # K3,3 with the edge 0-3 replaced by the path 0-6-3
        pairs = [(u, v) for u in range(3) for v in range(3, 6) if (u, v) != (0, 3)] + [(0, 6), (6, 3)]
        g = SimpleGraph.from_pairs(7, pairs)
        result = is_planar(g)
        assert not result.planar
        assert result.witness.verify(g)
        assert any(len(path) == 3 for path in result.witness.paths)

    def test_witness_rejected_on_a_graph_missing_its_edges(self):
        witness = is_planar(complete_graph(5)).witness
        g = SimpleGraph(5, complete_graph(5).edges - {(0, 1)})
        assert not witness.verify(g)

    def test_edge_bound_is_necessary(self, corpus4):
        for s in corpus4:
            g = enhanced_power_graph(s)
            n, m = g.vertex_count, len(g.edges)
            if is_planar(g).planar and n >= 3:
                assert m <= 3 * n - 6

    def test_path_addition_agrees_on_small_cases(self):
        assert path_addition_is_planar(complete_graph(4))
        assert not path_addition_is_planar(complete_graph(5))
        assert not path_addition_is_planar(complete_bipartite(3, 3))
        assert path_addition_is_planar(_cycle(7))

    def test_random_graphs_against_subdivision_search(self):
        rng = random.Random(20240611)
        for trial in range(200):
            g = _random_graph(rng, 10, rng.uniform(0.2, 0.6))
            result = is_planar(g)
            oracle = find_kuratowski_subdivision(g)
            assert result.planar == (oracle is None), f"trial {trial}: {g.sorted_edges()}"
            if oracle is not None:
                assert oracle.verify(g)
                assert result.witness.verify(g)


class TestIndependenceAndCliques:
    def test_small_graphs(self):
        assert independence_number(complete_graph(4))[0] == 1
        assert independence_number(null_graph(4))[0] == 4
        size, members = independence_number(complete_bipartite(2, 3))
        assert size == 3
        assert members == {2, 3, 4}

    def test_returned_set_is_independent(self):
        rng = random.Random(7)
        for _ in range(30):
            g = _random_graph(rng, 12, 0.3)
            size, members = independence_number(g)
            assert len(members) == size
            assert not any(g.has_edge(u, v) for u in members for v in members if u < v)
            assert size == independence_number_brute_force(g)

    def test_matches_brute_force_on_corpus(self, corpus4):
        for s in corpus4:
            g = enhanced_power_graph(s)
            assert independence_number(g)[0] == independence_number_brute_force(g)

    @pytest.mark.parametrize('s', [
        elementary_abelian_2(4),
        direct_product(left_zero(2), cyclic_group(6)),
        direct_product(monogenic(2, 3), left_zero(3)),
    ])
    def test_matches_brute_force_on_larger_semigroups(self, s):
        g = enhanced_power_graph(s)
        assert g.vertex_count <= 16
        assert independence_number(g)[0] == independence_number_brute_force(g)

    def test_brute_force_refuses_large_graphs(self):
        with pytest.raises(SizeLimitExceeded):
            independence_number_brute_force(null_graph(17))

    def test_clique(self):
        assert clique_number(complete_graph(4)) == 4
        size, members = max_clique(complete_bipartite(2, 3))
        assert size == 2
        assert len(members) == 2


class TestColoring:
    def test_complete_graph(self):
        assert chromatic_number(complete_graph(4)) == 4

    def test_bipartite(self):
        assert chromatic_number(complete_bipartite(2, 3)) == 2

    def test_odd_cycle(self):
        assert chromatic_number(_cycle(5)) == 3

    def test_cyclic_group_of_order_five(self):
        assert chromatic_number(enhanced_power_graph(cyclic_group(5))) == 5

    def test_coloring_is_proper(self):
        g = _cycle(7)
        k, colors = optimal_coloring(g)
        assert k == 3
        assert all(colors[u] != colors[v] for u, v in g.edges)

    def test_omega_bounds_chi(self, corpus4):
        for s in corpus4:
            g = enhanced_power_graph(s)
            assert clique_number(g) <= chromatic_number(g)

    def test_size_limit(self):
        with pytest.raises(SizeLimitExceeded):
            chromatic_number(null_graph(26))
