#!/usr/bin/env python3
"""Switching a vertex flips its adjacency to everyone else.  Orbits under
switching plus relabeling are called switching classes; this script pokes at
the smallest ones.
"""

from rainbowlab import (
    Graph,
    are_switching_equivalent,
    graph6_encode,
    switch_subset,
    switch_vertex,
    switching_canonical_form,
)

# Switching the middle of a path erases both its edges:
path = Graph.path(3)
print("path 0-1-2 switched at 1:", switch_vertex(path, 1).edges(), "(no edges left)")

# Switching is an involution; switching a whole subset complements exactly
# the pairs across the cut, so a set and its complement act identically.
c4 = Graph.cycle(4)
assert switch_vertex(switch_vertex(c4, 0), 0) == c4
assert switch_subset(c4, [0, 1]) == switch_subset(c4, [2, 3])

# The two-vertex world collapses to a single class: switching either
# endpoint of an edge removes it.
print("K2 ~ empty?", are_switching_equivalent(Graph.complete(2), Graph.empty(2)))

# Same story for the triangle and the single edge on three vertices:
print("K3 ~ one edge?", are_switching_equivalent(
    Graph.complete(3), Graph.from_edges(3, [(0, 1)])))

# Each class has one canonical representative, the smallest graph6 string
# reachable by switching + relabeling.  Sweeping all 64 labeled graphs on 4
# vertices finds just three classes:
pairs = [(u, v) for u in range(4) for v in range(u + 1, 4)]
reps = set()
for bits in range(64):
    edges = [pairs[i] for i in range(6) if (bits >> i) & 1]
    reps.add(switching_canonical_form(Graph.from_edges(4, edges)))
print("class representatives on 4 vertices:", sorted(graph6_encode(g) for g in reps))
