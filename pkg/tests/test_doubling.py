import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rainbowlab import (
    Coloring,
    Graph,
    RainbowWitness,
    are_switching_equivalent,
    canonical_form,
    extract_base,
    is_rainbow_coloring,
    rainbow_double,
    seidel_double,
    seidel_of_graph,
    switch_vertex,
)

from conftest import all_labeled_graphs, graphs


class TestRainbowDouble:
    def test_single_vertex(self):
        w = rainbow_double(Graph.empty(1))
        assert w.graph == Graph.complete(2)
        assert w.coloring == Coloring(1, (0, 0))

    def test_edge_becomes_cycle(self):
        w = rainbow_double(Graph.complete(2))
        assert sorted(w.graph.edges()) == [(0, 1), (0, 2), (1, 3), (2, 3)]
        assert canonical_form(w.graph) == canonical_form(Graph.cycle(4))

    def test_empty_becomes_complete_bipartite(self):
        w = rainbow_double(Graph.empty(3))
        assert canonical_form(w.graph) == canonical_form(Graph.complete_bipartite(3, 3))

    def test_rejects_empty_graph(self):
        with pytest.raises(ValueError):
            rainbow_double(Graph.empty(0))

    @given(graphs(min_n=1, max_n=6))
    def test_coloring_is_always_rainbow(self, g):
        w = rainbow_double(g)
        assert w.graph.n == 2 * g.n
        assert is_rainbow_coloring(w.graph, w.coloring)
        assert w.graph.is_regular(g.n)

    def test_well_defined_exhaustive_small(self):
        # switching the base at any vertex must not change the double's class
        for n in range(1, 5):
            for g in all_labeled_graphs(n):
                target = canonical_form(rainbow_double(g).graph)
                for v in range(n):
                    moved = rainbow_double(switch_vertex(g, v)).graph
                    assert canonical_form(moved) == target


class TestSeidelDouble:
    def test_one_by_one(self):
        got = seidel_double(seidel_of_graph(Graph.empty(1)))
        assert got.entries.tolist() == [[0, 1], [1, 0]]

    @given(graphs(min_n=1, max_n=6))
    def test_matches_graph_doubling(self, g):
        doubled = seidel_double(seidel_of_graph(g))
        assert doubled == seidel_of_graph(rainbow_double(g).graph)

    def test_output_satisfies_invariants(self):
        # the constructor validates; surviving construction is the assertion
        for g in all_labeled_graphs(4):
            seidel_double(seidel_of_graph(g))

    def test_matches_graph_doubling_exhaustive(self):
        for n in range(1, 6):
            for g in all_labeled_graphs(n):
                assert seidel_double(seidel_of_graph(g)) == seidel_of_graph(
                    rainbow_double(g).graph
                )


class TestExtractBase:
    def test_round_trip_on_plain_transversal(self):
        w = rainbow_double(Graph.complete(2))
        assert extract_base(w, transversal=[0, 1]) == Graph.complete(2)

    def test_cycle_transversals(self):
        c4 = Graph.cycle(4)
        coloring = Coloring(2, (0, 0, 1, 1))
        assert extract_base(c4, coloring, transversal=[0, 2]) == Graph.empty(2)
        assert extract_base(c4, coloring, transversal=[0, 3]) == Graph.complete(2)
        assert are_switching_equivalent(
            extract_base(c4, coloring, transversal=[0, 2]),
            extract_base(c4, coloring, transversal=[0, 3]),
        )

    def test_default_transversal_is_lower_vertices(self):
        w = rainbow_double(Graph.path(3))
        assert extract_base(w) == Graph.path(3)

    def test_invalid_inputs(self):
        c4 = Graph.cycle(4)
        with pytest.raises(ValueError):
            extract_base(c4, Coloring(2, (0, 1, 0, 1)))  # not rainbow
        with pytest.raises(ValueError):
            extract_base(c4, Coloring(2, (0, 0, 1, 1)), transversal=[0, 1])  # color twice
        with pytest.raises(ValueError):
            extract_base(c4, Coloring(2, (0, 0, 1, 1)), transversal=[0])
        with pytest.raises(ValueError):
            extract_base(Graph.cycle(6), Coloring(2, (0, 0, 0, 1, 1, 1)))  # classes of 3
        with pytest.raises(ValueError):
            extract_base(rainbow_double(Graph.path(3)), Coloring(3, (0, 1, 2) * 2))

    def test_witness_json_round_trip(self):
        w = rainbow_double(Graph.path(3))
        again = RainbowWitness.from_json(w.to_json())
        assert again == w

    @given(graphs(min_n=1, max_n=5), st.data())
    @settings(max_examples=100, deadline=None)
    def test_round_trip_up_to_switching(self, g, data):
        w = rainbow_double(g)
        picks = data.draw(st.tuples(*[st.booleans() for _ in range(g.n)]))
        transversal = [g.n + i if primed else i for i, primed in enumerate(picks)]
        base = extract_base(w, transversal=transversal)
        assert are_switching_equivalent(base, g)

    def test_double_of_extract_is_isomorphic_to_input(self):
        c4 = Graph.cycle(4)
        coloring = Coloring(2, (0, 0, 1, 1))
        for transversal in ([0, 2], [0, 3], [1, 2], [1, 3]):
            base = extract_base(c4, coloring, transversal=transversal)
            again = rainbow_double(base).graph
            assert canonical_form(again) == canonical_form(c4)
