#!/usr/bin/env python3
"""The bridge between the previous two demos: doubling a graph on n vertices
gives a rainbow graph on 2n vertices, and the correspondence is a bijection
between switching classes and rainbow graphs up to isomorphism.
"""

from rainbowlab import (
    Graph,
    are_switching_equivalent,
    canonical_form,
    extract_base,
    graph6_encode,
    rainbow_double,
    seidel_double,
    seidel_of_graph,
    switch_vertex,
)

# Doubling K2: each vertex i splits into i and i+n, partners are joined,
# edges are copied straight, non-edges are copied crosswise.  K2 doubles to
# a 4-cycle.
witness = rainbow_double(Graph.complete(2))
print("double of K2:", witness.graph.edges())
print("its built-in coloring:", witness.coloring.colors)

# The empty graph on 3 vertices doubles to K_{3,3}: with no straight edges
# to copy, every cross pair appears.
k33 = rainbow_double(Graph.empty(3)).graph
print("double of empty_3 is K33?",
      canonical_form(k33) == canonical_form(Graph.complete_bipartite(3, 3)))

# Switching the base at a vertex only swaps that vertex's two copies, so the
# double is a class invariant:
g = Graph.path(4)
print("double invariant under switching?", all(
    canonical_form(rainbow_double(switch_vertex(g, v)).graph)
    == canonical_form(rainbow_double(g).graph)
    for v in range(4)
))

# On matrices the same construction is a block assembly.
print("\nedge-sign matrix of K2, doubled:")
print(seidel_double(seidel_of_graph(Graph.complete(2))).entries)

# Going back: choose one vertex per color (a transversal) and induce.  The
# unprimed choice returns the base graph on the nose; any other choice
# returns a switch of it.
print("\nextract with plain transversal:",
      extract_base(witness, transversal=[0, 1]) == Graph.complete(2))
other = extract_base(witness, transversal=[0, 3])
print("extract with mixed transversal:", graph6_encode(other),
      "| switching equivalent to K2?",
      are_switching_equivalent(other, Graph.complete(2)))
