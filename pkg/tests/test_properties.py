import networkx as nx
import pytest

from nonforesty.base import complete_graph, cycle_graph, join, make_graph, matching_graph, path_graph, petersen_graph, wheel_graph
from nonforesty.constants import LocalPredicate
from nonforesty.oracle import EnumerationSpec, iter_graphs
from nonforesty.properties import (
    has_cycle, is_forest, is_locally_c3_plus_k1, is_locally_foresty, is_locally_nonforesty, local_subgraph,
    local_subgraph_census, wheel_hubs,
)

from conftest import atlas, to_nx

def test_local_subgraph():
    l = local_subgraph(wheel_graph(5), 0)
    assert l == cycle_graph(5)
    assert local_subgraph(petersen_graph(), 0).size() == 0

@pytest.mark.parametrize("g, nonforesty, foresty", [
    (complete_graph(4), True, False),
    (complete_graph(3), False, True),
    (petersen_graph(), False, True),
    (wheel_graph(6), False, False),
    (join(complete_graph(2), matching_graph(3)), True, False),
    (make_graph(0), True, True),
])
def test_local_predicates(g, nonforesty, foresty):
    assert is_locally_nonforesty(g) == nonforesty
    assert is_locally_foresty(g) == foresty

def test_isolated_vertex_is_foresty():
    g = make_graph(5, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
    assert not is_locally_nonforesty(g)

def test_has_cycle():
    assert has_cycle(path_graph(6)) is None
    assert has_cycle(make_graph(0)) is None
    g = make_graph(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 1), (4, 5)])
    cycle = has_cycle(g)
    assert sorted(cycle) == [1, 2, 3, 4]
    for a, b in zip(cycle, cycle[1:] + cycle[:1]):
        assert g.has_edge(a, b)

def test_is_forest():
    assert is_forest(path_graph(5))
    assert is_forest(matching_graph(3))
    assert not is_forest(cycle_graph(3))

def test_wheel_hubs():
    assert wheel_hubs(wheel_graph(5)) == frozenset((0,))
    assert wheel_hubs(complete_graph(4)) == frozenset(range(4))

def test_c3_plus_k1():
    ## Two K4s joined by a perfect matching: each L(v) is a triangle plus the matched vertex
    edges = [(i, j) for i in range(4) for j in range(i+1, 4)]
    edges += [(i+4, j+4) for i, j in edges] + [(i, i+4) for i in range(4)]
    g = make_graph(8, edges)
    assert is_locally_c3_plus_k1(g)
    assert not is_locally_c3_plus_k1(complete_graph(5))
    census = local_subgraph_census(g)
    assert list(census.values()) == [8]
    assert not is_locally_c3_plus_k1(complete_graph(4))

def test_census_counts():
    census = local_subgraph_census(wheel_graph(4))
    assert sorted(census.values()) == [1, 4]

def test_cross_oracle_on_atlas():
    count = 0
    for order, graphs in atlas().items():
        for g in graphs:
            nonforesty = is_locally_nonforesty(g)
            assert nonforesty == (wheel_hubs(g) == frozenset(range(g.order)))
            if nonforesty and g.order:
                assert g.min_degree() >= 3
                count += 1
            ## Every local subgraph is a forest iff networkx finds no cycle in any of them
            assert is_locally_foresty(g) == all(
                nx.is_forest(to_nx(local_subgraph(g, v))) if g.degree(v) else True for v in range(g.order)
            )
    assert count > 0

@pytest.mark.slow
def test_min_degree_on_order_8():
    ## Every isomorphism class of order 8 that is locally nonforesty
    spec = EnumerationSpec(8, local_predicate=LocalPredicate.LocallyNonforesty)
    count = 0
    for g in iter_graphs(spec):
        assert g.min_degree() >= 3
        assert wheel_hubs(g) == frozenset(range(8))
        count += 1
    assert count > 0
