import itertools

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rainbowlab import (
    Graph,
    SeidelMatrix,
    canonical_form,
    find_isomorphism,
    graph6_decode,
    graph6_encode,
    graph_of_seidel,
    seidel_of_graph,
)

from conftest import all_labeled_graphs, graphs


class TestGraphType:
    def test_rejects_loops(self):
        with pytest.raises(ValueError):
            Graph(2, (1, 2))

    def test_rejects_asymmetry(self):
        with pytest.raises(ValueError):
            Graph(2, (2, 0))

    def test_rejects_out_of_range(self):
        with pytest.raises(ValueError):
            Graph(2, (4, 0))
        with pytest.raises(ValueError):
            Graph.from_edges(2, [(0, 2)])

    def test_edges_round_trip(self):
        g = Graph.from_edges(5, [(0, 3), (1, 2), (3, 4)])
        assert g.edges() == [(0, 3), (1, 2), (3, 4)]
        assert g.degrees() == (1, 1, 1, 2, 1)

    def test_relabel_and_induced(self):
        g = Graph.path(4)
        h = g.relabel([3, 2, 1, 0])
        assert h == Graph.from_edges(4, [(3, 2), (2, 1), (1, 0)])
        assert g.induced([0, 1]) == Graph.complete(2)
        assert g.induced([0, 2]) == Graph.empty(2)

    def test_json_round_trip(self):
        g = Graph.from_edges(4, [(0, 1), (2, 3)])
        assert Graph.from_json(g.to_json()) == g


class TestGraph6:
    # reference values produced by the networkx codec
    @pytest.mark.parametrize(
        "text,graph",
        [
            ("A_", Graph.complete(2)),
            ("B?", Graph.empty(3)),
            ("Bw", Graph.complete(3)),
            ("Bg", Graph.path(3)),
            ("Cl", Graph.cycle(4)),
        ],
    )
    def test_known_strings(self, text, graph):
        assert graph6_encode(graph) == text or graph6_decode(text) == graph
        assert graph6_decode(graph6_encode(graph)) == graph

    def test_encode_examples(self):
        assert graph6_encode(Graph.complete(2)) == "A_"
        assert graph6_encode(Graph.path(3)) == "Bg"
        assert graph6_encode(Graph.cycle(4)) == "Cl"

    @given(graphs(max_n=10))
    def test_round_trip(self, g):
        assert graph6_decode(graph6_encode(g)) == g

    @given(graphs(max_n=9))
    def test_agrees_with_networkx(self, g):
        ours = graph6_encode(g)
        ng = nx.Graph()
        ng.add_nodes_from(range(g.n))
        ng.add_edges_from(g.edges())
        theirs = nx.to_graph6_bytes(ng, nodes=range(g.n), header=False).decode().strip()
        assert ours == theirs
        back = nx.from_graph6_bytes(ours.encode())
        assert {tuple(sorted(e)) for e in back.edges()} == set(g.edges())

    def test_decode_errors(self):
        with pytest.raises(ValueError):
            graph6_decode("")
        with pytest.raises(ValueError):
            graph6_decode("~??")  # long form unsupported
        with pytest.raises(ValueError):
            graph6_decode("C")  # truncated body
        with pytest.raises(ValueError):
            graph6_decode("A" + chr(62))  # byte below the graph6 range
        # nonzero padding: n=2 has one data bit, the rest must be zero
        with pytest.raises(ValueError):
            graph6_decode("A" + chr(63 + 0b010000))

    def test_encode_cap(self):
        with pytest.raises(ValueError):
            graph6_encode(Graph.empty(63))


class TestSeidel:
    def test_complete_and_empty(self):
        assert seidel_of_graph(Graph.complete(3)).entries.tolist() == [
            [0, 1, 1],
            [1, 0, 1],
            [1, 1, 0],
        ]
        s = seidel_of_graph(Graph.empty(3))
        assert s.entries.tolist() == [[0, -1, -1], [-1, 0, -1], [-1, -1, 0]]
        assert seidel_of_graph(Graph.empty(1)).entries.tolist() == [[0]]

    def test_graph_of_seidel_examples(self):
        assert graph_of_seidel(SeidelMatrix([[0, 1], [1, 0]])) == Graph.complete(2)
        assert graph_of_seidel(SeidelMatrix([[0, -1], [-1, 0]])) == Graph.empty(2)
        got = graph_of_seidel(
            SeidelMatrix([[0, 1, -1], [1, 0, -1], [-1, -1, 0]])
        )
        assert got == Graph.from_edges(3, [(0, 1)])

    def test_invalid_matrices(self):
        with pytest.raises(ValueError):
            SeidelMatrix([[1, 1], [1, 0]])  # nonzero diagonal
        with pytest.raises(ValueError):
            SeidelMatrix([[0, 2], [2, 0]])  # entry outside +-1
        with pytest.raises(ValueError):
            SeidelMatrix([[0, 1, 1], [1, 0, -1]])  # not square

    @given(graphs(max_n=8))
    def test_round_trip(self, g):
        assert graph_of_seidel(seidel_of_graph(g)) == g


def brute_canonical(g: Graph) -> Graph:
    best = None
    for perm in itertools.permutations(range(g.n)):
        s = graph6_encode(g.relabel(perm))
        if best is None or s < best:
            best = s
    return graph6_decode(best)


class TestCanonicalForm:
    @given(graphs(max_n=6))
    @settings(max_examples=150, deadline=None)
    def test_matches_brute_force(self, g):
        assert canonical_form(g) == brute_canonical(g)

    @given(graphs(max_n=10), st.randoms(use_true_random=False))
    @settings(max_examples=150, deadline=None)
    def test_idempotent_and_orbit_constant(self, g, rnd):
        c = canonical_form(g)
        assert canonical_form(c) == c
        perm = list(range(g.n))
        rnd.shuffle(perm)
        assert canonical_form(g.relabel(perm)) == c

    def test_distinguishes_cubic_graphs_on_six(self):
        k33 = Graph.complete_bipartite(3, 3)
        prism = Graph.from_edges(
            6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)]
        )
        assert canonical_form(k33) != canonical_form(prism)

    def test_exhaustive_class_counts(self):
        # the distinct canonical forms over all labeled graphs must match the
        # known number of unlabeled graphs
        for n, expected in [(1, 1), (2, 2), (3, 4), (4, 11), (5, 34)]:
            forms = {canonical_form(g) for g in all_labeled_graphs(n)}
            assert len(forms) == expected

    def test_exhaustive_agreement_with_pairwise_isomorphism(self):
        # independent route: group the labeled graphs by pairwise isomorphism
        # search instead of canonical forms
        for n in (3, 4):
            gs = list(all_labeled_graphs(n))
            classes: list[Graph] = []
            for g in gs:
                if not any(find_isomorphism(g, rep) is not None for rep in classes):
                    classes.append(g)
            assert len(classes) == len({canonical_form(g) for g in gs})

    def test_cap(self):
        with pytest.raises(ValueError):
            canonical_form(Graph.empty(13))
        canonical_form(Graph.empty(13), cap=13)


class TestFindIsomorphism:
    @given(graphs(max_n=9), st.randoms(use_true_random=False))
    @settings(max_examples=100, deadline=None)
    def test_finds_known_isomorphism(self, g, rnd):
        perm = list(range(g.n))
        rnd.shuffle(perm)
        h = g.relabel(perm)
        found = find_isomorphism(g, h)
        assert found is not None
        assert g.relabel(found) == h

    def test_rejects_non_isomorphic(self, rng):
        assert find_isomorphism(Graph.cycle(6), Graph.path(6)) is None
        prism = Graph.from_edges(
            6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)]
        )
        assert find_isomorphism(Graph.complete_bipartite(3, 3), prism) is None

    @given(graphs(max_n=7))
    @settings(max_examples=60, deadline=None)
    def test_agrees_with_networkx(self, g):
        h = canonical_form(g)
        ng = nx.Graph()
        ng.add_nodes_from(range(g.n))
        ng.add_edges_from(g.edges())
        nh = nx.Graph()
        nh.add_nodes_from(range(h.n))
        nh.add_edges_from(h.edges())
        assert (find_isomorphism(g, h) is not None) == nx.is_isomorphic(ng, nh)
