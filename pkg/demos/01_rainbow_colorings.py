#!/usr/bin/env python3
"""A rainbow coloring puts every color exactly once in each vertex's
neighborhood.  That innocent condition buys a lot of structure, which this
script shows on three small graphs.
"""

from rainbowlab import (
    Coloring,
    Graph,
    find_rainbow_coloring,
    is_rainbow_coloring,
    monochromatic_matching,
)

# The 4-cycle a-b-c-d.  Color opposite corners differently and neighbors the
# same: every vertex then sees {0, 1} around itself.
c4 = Graph.cycle(4)
paired = Coloring(2, (0, 0, 1, 1))
alternating = Coloring(2, (0, 1, 0, 1))
print("C4 with colors 0,0,1,1 rainbow?", is_rainbow_coloring(c4, paired))
print("C4 with colors 0,1,0,1 rainbow?", is_rainbow_coloring(c4, alternating))
# The alternating coloring fails because each neighborhood is monochromatic.

# The search is exhaustive, so None is a proof.  K4 is 3-regular but has only
# 4 vertices; a 3-rainbow graph needs a multiple of 6.
print("\nK4 admits a 3-rainbow coloring?", find_rainbow_coloring(Graph.complete(4), 3))

# The triangular prism: two triangles joined by a matching.  It is 3-regular
# on 6 vertices and the search finds the (unique up to symmetry) coloring in
# which matched vertices agree.
prism = Graph.from_edges(
    6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)]
)
coloring = find_rainbow_coloring(prism, 3)
print("\nprism coloring:", coloring.colors)

# Every rainbow coloring hides a perfect matching: take the edges whose two
# endpoints share a color.  Each vertex sees its own color exactly once in
# its neighborhood, so it has exactly one same-colored partner.
print("monochromatic matching:", monochromatic_matching(prism, coloring))

# And the color classes always have equal size |V|/k:
print("color classes:", coloring.color_classes())
