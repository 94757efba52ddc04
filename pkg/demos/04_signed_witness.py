#!/usr/bin/env python3
"""Why the doubling map is injective, made computational.

If the doubles of two graphs are isomorphic, folding the isomorphism's
permutation matrix gives a signed half-permutation; integrating that gives a
signed permutation Q conjugating one edge-sign matrix onto the other, which
is exactly switching equivalence.  Everything below is exact integer
arithmetic (entries are stored doubled).
"""

import numpy as np

from rainbowlab import (
    Graph,
    SignedMatrix,
    find_isomorphism,
    fold_permutation,
    integrate,
    is_integration,
    rainbow_double,
    seidel_of_graph,
    switch_subset,
    switching_witness,
)

# A signed half-permutation has one +-1 or two +-1/2 entries per line.
# Integration doubles one half and zeroes its partner, per row and column.
half = SignedMatrix.from_values(
    [[0, -0.5, 0, 0.5],
     [-0.5, -0.5, 0, 0],
     [0, 0, -1, 0],
     [0.5, 0, 0, 0.5]]
)
print("half-permutation:")
print(half.values())
whole = integrate(half)
print("one of its integrations:")
print(whole.values())
print("checker agrees?", is_integration(half, whole))

# Now the full pipeline.  Take the 5-cycle, switch {1, 3}, and relabel:
g = Graph.cycle(5)
h = switch_subset(g, [1, 3]).relabel([4, 2, 0, 3, 1])

# Their doubles are isomorphic; find_isomorphism hands us the permutation.
iso = find_isomorphism(rainbow_double(h).graph, rainbow_double(g).graph)
p = np.zeros((10, 10), dtype=np.int64)
for i, j in enumerate(iso):
    p[j, i] = 1

# Folding the 2n x 2n permutation onto n dimensions:
print("\nfolded permutation (a signed half-permutation):")
print(fold_permutation(p).values())

# switching_witness folds, integrates, and checks every identity on the way.
a, b = seidel_of_graph(g), seidel_of_graph(h)
q = switching_witness(a, b, p)
print("\nwitness Q:")
print(q.values())
print("A == Q B Q^T exactly?",
      np.array_equal(q.doubled @ b.entries @ q.doubled.T, 4 * a.entries))
