import random

import pytest

from nonforesty.base import (
    Graph, GraphException, complete_graph, cycle_graph, disjoint_union, empty_graph, induced_subgraph,
    iter_bits, join, make_graph, mask_of, matching_graph, path_graph, petersen_graph, wheel_graph,
)

from conftest import atlas

class TestGraph:
    @classmethod
    def setup_class(cls):
        cls.g = make_graph(5, [(0, 1), (1, 2), (2, 0), (3, 4)])

    def test_accessors(self):
        g = self.g
        assert g.order == len(g) == 5
        assert g.size() == 4
        assert g.degrees() == [2, 2, 2, 1, 1]
        assert g.min_degree() == 1 and g.max_degree() == 2
        assert g.neighbors(0) == (1, 2)
        assert g.closed_neighborhood(0) == (0, 1, 2)
        assert g.has_edge(2, 0) and not g.has_edge(0, 3)
        assert g.edges() == [(0, 1), (0, 2), (1, 2), (3, 4)]

    def test_sets(self):
        g = self.g
        assert g.neighborhood_of_set([0, 1]) == (2,)
        assert g.degree_in(2, [0, 1, 3]) == 2
        assert g.edges_between([0], [1, 2, 3]) == [(0, 1), (0, 2)]
        with pytest.raises(GraphException):
            g.edges_between([0, 1], [1])

    def test_components(self):
        assert self.g.components() == [(0, 1, 2), (3, 4)]
        assert not self.g.is_connected()
        assert not empty_graph(0).is_connected()
        assert empty_graph(1).is_connected()

    def test_vertex_range(self):
        with pytest.raises(GraphException) as e:
            self.g.degree(5)
        assert e.value.vertex == 5

    def test_equality_is_labeled(self):
        a = make_graph(3, [(0, 1)])
        b = make_graph(3, [(1, 0)])
        c = make_graph(3, [(1, 2)])
        assert a == b and hash(a) == hash(b)
        assert a != c
        assert len({a, b, c}) == 2

    def test_relabel(self):
        g = path_graph(3).relabel([2, 0, 1])
        assert g.edges() == [(0, 1), (0, 2)]
        with pytest.raises(GraphException):
            path_graph(3).relabel([0, 0, 1])

    def test_add_remove(self):
        g = path_graph(4).add_edges([(0, 3)])
        assert g == cycle_graph(4)
        assert path_graph(4).size() == 3
        assert g.remove_vertices([0]) == path_graph(3)

@pytest.mark.parametrize("order, edges", [
    (3, [(0, 3)]),
    (3, [(-1, 0)]),
    (3, [(1, 1)]),
])
def test_make_graph_rejects(order, edges):
    with pytest.raises(GraphException):
        make_graph(order, edges)

def test_make_graph_cap():
    with pytest.raises(GraphException):
        make_graph(11, cap=10)
    assert make_graph(3, [(0, 1), (1, 0)]).size() == 1

def test_induced_subgraph_preserves_order():
    g = induced_subgraph(wheel_graph(5), [3, 0, 2])
    ## 0 -> 0, 2 -> 1, 3 -> 2
    assert g.edges() == [(0, 1), (0, 2), (1, 2)]

def test_union_and_join():
    u = disjoint_union(complete_graph(3), path_graph(2))
    assert u.order == 5 and u.size() == 4 and u.has_edge(3, 4)
    j = join(complete_graph(2), matching_graph(2))
    assert j.order == 6
    assert j.size() == 1 + 2 + 2*4

@pytest.mark.parametrize("g, order, size", [
    (complete_graph(5), 5, 10),
    (empty_graph(4), 4, 0),
    (cycle_graph(6), 6, 6),
    (path_graph(1), 1, 0),
    (wheel_graph(6), 7, 12),
    (matching_graph(3), 6, 3),
    (petersen_graph(), 10, 15),
])
def test_named_graphs(g, order, size):
    assert (g.order, g.size()) == (order, size)

def test_named_graph_details():
    assert petersen_graph().degrees() == [3]*10
    assert wheel_graph(5).degree(0) == 5
    with pytest.raises(ValueError):
        cycle_graph(2)

def test_bits():
    assert list(iter_bits(0b101001)) == [0, 3, 5]
    assert mask_of([0, 3, 5]) == 0b101001
    assert Graph(3).size() == 0

def test_invariants_on_atlas():
    rng = random.Random(3)
    for order, graphs in atlas().items():
        for g in graphs:
            assert induced_subgraph(g, range(order)) == g
            subset = [v for v in range(order) if rng.random() < 0.5]
            assert induced_subgraph(g, subset).size() <= g.size()
            if order:
                assert order*g.min_degree() <= 2*g.size() <= order*g.max_degree()
