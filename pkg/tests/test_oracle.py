import random
from itertools import combinations, permutations

import networkx as nx
import pytest

from nonforesty.base import complete_graph, cycle_graph, make_graph, path_graph, petersen_graph
from nonforesty.codec import parse_graph6, serialize_graph6
from nonforesty.connectivity import is_k_connected
from nonforesty.constants import LocalPredicate, SearchStage
from nonforesty.constructions import build_extremal
from nonforesty.formulas import f
from nonforesty.oracle import (
    EnumerationSpec, MinimalityReport, are_isomorphic, canonical_form, canonical_graph6, count_graphs,
    enumerate_graphs, iter_graphs, lemma1_scan, run_enumeration, same_orbit, verify_minimality,
)
from nonforesty.properties import is_locally_nonforesty

from conftest import atlas, from_nx, to_nx

ATLAS_COUNTS = [1, 1, 2, 4, 11, 34, 156, 1044]

class TestCanonicalForm:
    def test_relabelings_agree(self):
        rng = random.Random(7)
        for order in range(1, 8):
            for g in atlas()[order][::7]:
                form = canonical_form(g)
                for _ in range(3):
                    perm = list(range(order))
                    rng.shuffle(perm)
                    assert canonical_form(g.relabel(perm)).code == form.code

    def test_classes_distinct(self):
        for order in range(8):
            codes = {canonical_form(g).code for g in atlas()[order]}
            assert len(codes) == ATLAS_COUNTS[order]

    def test_graph6_is_canonical_relabeling(self):
        g = petersen_graph()
        form = canonical_form(g)
        h = form.graph(g)
        assert serialize_graph6(h) == form.graph6 == canonical_graph6(g)
        assert are_isomorphic(g, parse_graph6(form.graph6))

    def test_minimal_encoding(self):
        ## The canonical form is the least graph6 string over all labelings
        g = path_graph(4)
        best = min(serialize_graph6(g.relabel(p)) for p in permutations(range(4)))
        assert canonical_graph6(g) == best

    def test_symmetric_graphs(self):
        for g in (complete_graph(9), make_graph(9), cycle_graph(12), petersen_graph()):
            form = canonical_form(g)
            assert canonical_form(g.relabel(list(range(g.order))[::-1])).code == form.code

    def test_are_isomorphic(self):
        rng = random.Random(3)
        graphs = atlas()[6]
        for _ in range(200):
            a, b = rng.choice(graphs), rng.choice(graphs)
            assert are_isomorphic(a, b) == nx.is_isomorphic(to_nx(a), to_nx(b))

    def test_same_orbit(self):
        p = path_graph(5)
        assert same_orbit(p, 0, 4)
        assert same_orbit(p, 1, 3)
        assert not same_orbit(p, 0, 2)
        g = petersen_graph()
        form = canonical_form(g)
        assert all(same_orbit(g, 0, v, form) for v in range(10))

    def test_colored(self):
        p = path_graph(3)
        ends = canonical_form(p, [(0,), (1, 2)]).code
        assert canonical_form(p, [(2,), (0, 1)]).code == ends
        assert canonical_form(p, [(1,), (0, 2)]).code != ends

class TestEnumeration:
    @pytest.mark.parametrize("order", range(0, 8))
    def test_counts(self, order):
        assert count_graphs(EnumerationSpec(order)) == ATLAS_COUNTS[order]

    @pytest.mark.parametrize("order", range(1, 6))
    def test_naive_oracle(self, order):
        ## Every labeled graph, filtered by pairwise isomorphism
        pairs = list(combinations(range(order), 2))
        naive = []
        for mask in range(1 << len(pairs)):
            G = nx.Graph()
            G.add_nodes_from(range(order))
            G.add_edges_from(e for i, e in enumerate(pairs) if mask >> i & 1)
            if not any(nx.is_isomorphic(G, H) for H in naive):
                naive.append(G)
        found = [canonical_graph6(g) for g in iter_graphs(EnumerationSpec(order))]
        assert len(found) == len(set(found)) == len(naive)
        assert set(found) == {canonical_graph6(from_nx(G)) for G in naive}

    def test_order_6_matches_atlas(self):
        found = {canonical_graph6(g) for g in iter_graphs(EnumerationSpec(6))}
        assert found == {canonical_graph6(g) for g in atlas()[6]}

    def test_four_regular_order_9(self):
        spec = EnumerationSpec(9, max_edges=18, min_degree_final=4, max_degree=4)
        graphs = list(iter_graphs(spec))
        assert len(graphs) == 16
        assert all(g.degrees() == [4]*9 for g in graphs)

    def test_constraints(self):
        spec = EnumerationSpec(6, max_edges=7, min_degree_final=2, connectivity_requirement=2)
        for g in iter_graphs(spec):
            assert g.size() <= 7 and g.min_degree() >= 2 and is_k_connected(g, 2)
        ## C6 and the three theta graphs with path lengths (1, 2, 4), (1, 3, 3) and (2, 2, 3)
        assert count_graphs(spec) == 4

    def test_lookahead_is_sound(self):
        spec = EnumerationSpec(7, max_edges=12, min_degree_final=3)
        with_pruning = {canonical_graph6(g) for g in iter_graphs(spec)}
        without = {canonical_graph6(g) for g in iter_graphs(spec, lookahead=False)}
        assert with_pruning == without
        assert with_pruning == {canonical_graph6(g) for g in atlas()[7] if g.min_degree() >= 3 and g.size() <= 12}

    def test_visitor_order_and_progress(self):
        spec = EnumerationSpec(6)
        seen = []
        stages = []
        count = enumerate_graphs(spec, seen.append, progress=lambda s, fr, d: stages.append(s))
        assert count == 156
        assert [serialize_graph6(g) for g in seen] == [serialize_graph6(g) for g in iter_graphs(spec)]
        assert stages[0] == SearchStage.Initial and stages[-1] == SearchStage.Done

    def test_jobs_do_not_change_results(self):
        spec = EnumerationSpec(7, local_predicate=LocalPredicate.LocallyNonforesty)
        one, two = [], []
        r1 = run_enumeration(spec, one.append, jobs=1, split_depth=3)
        r2 = run_enumeration(spec, two.append, jobs=2, split_depth=3)
        assert one == two
        assert r1.examined == r2.examined and r1.count == r2.count
        expected = sum(1 for g in atlas()[7] if is_locally_nonforesty(g))
        assert r1.count == expected

    @pytest.mark.parametrize("kwargs", [
        dict(order=17),
        dict(order=-1),
        dict(order=5, max_edges=11),
        dict(order=5, max_degree=-1),
    ])
    def test_invalid_spec(self, kwargs):
        with pytest.raises(ValueError):
            EnumerationSpec(**kwargs)

class TestCertificates:
    @pytest.mark.parametrize("k, n, budget", [(4, 8, 15), (2, 8, 13), (1, 8, 12)])
    def test_no_witness(self, k, n, budget):
        report = verify_minimality(k, n, budget)
        assert report.certified
        assert report.qualifying_witness is None
        assert not report.contradicts_formula

    @pytest.mark.slow
    @pytest.mark.parametrize("k, n, budget", [(1, 9, 15), (2, 9, 16), (4, 9, 18)])
    def test_no_witness_order_9(self, k, n, budget):
        report = verify_minimality(k, n, budget)
        assert report.certified and report.qualifying_witness is None

    def test_witness_at_formula_value(self):
        report = verify_minimality(1, 8, 13)
        w = report.qualifying_witness
        assert w is not None
        assert w.size() == 13 and is_locally_nonforesty(w) and is_k_connected(w, 1)
        assert not report.contradicts_formula
        lines = report.as_lines()
        assert lines[0] == "k: 1" and "witness_size: 13" in lines and "certified: true" in lines

    @pytest.mark.slow
    def test_pruning_soundness(self):
        spec = EnumerationSpec(8, max_edges=13, min_degree_final=3, connectivity_requirement=1,
                               local_predicate=LocalPredicate.LocallyNonforesty)
        loose = EnumerationSpec(8, max_edges=13, connectivity_requirement=1,
                                local_predicate=LocalPredicate.LocallyNonforesty)
        pruned = {canonical_graph6(g) for g in iter_graphs(spec)}
        unpruned = {canonical_graph6(g) for g in iter_graphs(loose, lookahead=False)}
        assert pruned == unpruned and pruned

    @pytest.mark.slow
    def test_deterministic_across_jobs(self):
        a = verify_minimality(1, 8, 13, jobs=1)
        b = verify_minimality(1, 8, 13, jobs=2)
        assert a.graphs_examined == b.graphs_examined
        assert a.qualifying_witness == b.qualifying_witness

    def test_errors(self):
        with pytest.raises(ValueError):
            verify_minimality(3, 8)
        with pytest.raises(ValueError):
            verify_minimality(2, 11)
        with pytest.raises(ValueError):
            verify_minimality(2, 7)
        with pytest.raises(ValueError):
            lemma1_scan(4)
        with pytest.raises(ValueError):
            lemma1_scan(13)

    @pytest.mark.parametrize("n", [5, 6, 7, 9, 10])
    def test_lemma1_zero(self, n):
        assert lemma1_scan(n) == 0

    def test_lemma1_order_8(self):
        self.check_family_found(8)

    @pytest.mark.slow
    def test_lemma1_order_11(self):
        assert lemma1_scan(11) == 0

    @pytest.mark.slow
    def test_lemma1_order_12(self):
        self.check_family_found(12)

    @staticmethod
    def check_family_found(n):
        found = []
        count = lemma1_scan(n, visitor=found.append)
        assert count == len(found) >= 1
        family = canonical_graph6(build_extremal(4, n, catalog=None))
        assert family in {canonical_graph6(g) for g in found}

def test_report_contradiction_flag():
    r = MinimalityReport(2, 8, 14, f(2, 8), 0, None, 0.0, True)
    assert r.contradicts_formula
    r = MinimalityReport(2, 8, 14, f(2, 8), 0, None, 0.0, False)
    assert not r.contradicts_formula
