"""The doubling construction tying switching classes to rainbow graphs.

``rainbow_double`` sends a graph on n vertices to a graph on 2n vertices
(vertex i splits into i and n+i) that always carries a rainbow coloring with
n colors: partners are joined, edges are copied between like halves, and
non-edges are copied between opposite halves.  Switching the base graph at a
vertex only swaps that vertex's two copies, so the doubled graph is an
invariant of the whole switching class.  ``extract_base`` inverts the
construction from any one-vertex-per-color transversal; different
transversals give switching-equivalent bases.

``seidel_double`` is the same construction on edge-sign matrices:
[[A, I-A], [I-A, A]].
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graphs import Coloring, Graph, SeidelMatrix, _graph_unchecked
from .rainbow import is_rainbow_coloring

__all__ = ["RainbowWitness", "rainbow_double", "seidel_double", "extract_base"]


@dataclass(frozen=True)
class RainbowWitness:
    """A doubled graph together with its built-in rainbow coloring.

    Vertex i and vertex n+i share color i; the coloring is checked to be
    rainbow on construction.
    """

    graph: Graph
    coloring: Coloring

    def __post_init__(self) -> None:
        n = self.coloring.k
        if self.graph.n != 2 * n:
            raise ValueError(f"expected {2 * n} vertices for {n} colors")
        for i in range(n):
            if self.coloring.colors[i] != i or self.coloring.colors[n + i] != i:
                raise ValueError("color classes must be the pairs {i, n+i}")
        if not is_rainbow_coloring(self.graph, self.coloring):
            raise ValueError("coloring is not rainbow for the graph")

    def to_json(self) -> dict:
        return {"graph": self.graph.to_json(), "coloring": self.coloring.to_json()}

    @classmethod
    def from_json(cls, obj: dict) -> "RainbowWitness":
        return cls(Graph.from_json(obj["graph"]), Coloring.from_json(obj["coloring"]))


def rainbow_double(g: Graph) -> RainbowWitness:
    """Double ``g`` into a rainbow graph on 2n vertices with n colors.

    Edges of the result: (i, n+i) always; (i, j) and (n+i, n+j) when (i, j)
    is an edge of ``g``; (i, n+j) and (n+i, j) when it is not.
    """
    n = g.n
    if n < 1:
        raise ValueError("doubling needs at least one vertex")
    full = (1 << n) - 1
    rows = [0] * (2 * n)
    for i in range(n):
        e = g.rows[i]
        anti = full & ~e & ~(1 << i)
        rows[i] = e | (anti << n) | (1 << (n + i))
        rows[n + i] = (e << n) | anti | (1 << i)
    graph = _graph_unchecked(2 * n, tuple(rows))
    coloring = Coloring(n, tuple(list(range(n)) * 2))
    return RainbowWitness(graph, coloring)


def seidel_double(a: SeidelMatrix) -> SeidelMatrix:
    """Block matrix [[A, I-A], [I-A, A]]; the edge-sign matrix of the double."""
    m = a.entries
    eye = np.eye(a.n, dtype=np.int64)
    return SeidelMatrix(np.block([[m, eye - m], [eye - m, m]]))


def extract_base(
    witness: "RainbowWitness | Graph",
    coloring: Coloring | None = None,
    transversal=None,
) -> Graph:
    """Invert the doubling: induce on one vertex per color, renamed by color.

    Accepts a :class:`RainbowWitness` or a (graph, rainbow coloring) pair
    whose k color classes each have size 2 (so the graph has 2k vertices).
    ``transversal``, when given, must pick exactly one vertex per color; by
    default the lower-indexed vertex of each class is used.  Doubling the
    result gives back a graph isomorphic to the input, and all transversal
    choices produce switching-equivalent bases.
    """
    if isinstance(witness, RainbowWitness):
        if coloring is not None:
            raise ValueError("pass a coloring only with a bare graph")
        graph, coloring = witness.graph, witness.coloring
    else:
        graph = witness
        if coloring is None:
            raise ValueError("a bare graph needs its rainbow coloring")
    k = coloring.k
    if graph.n != 2 * k:
        raise ValueError(f"expected {2 * k} vertices for {k} colors, got {graph.n}")
    if not is_rainbow_coloring(graph, coloring):
        raise ValueError("coloring is not rainbow for the graph")
    classes = coloring.color_classes()
    if any(len(cls) != 2 for cls in classes):
        raise ValueError("every color class must have exactly two vertices")

    if transversal is None:
        chosen = [cls[0] for cls in classes]
    else:
        chosen = [-1] * k
        for v in transversal:
            if not (0 <= v < graph.n):
                raise ValueError(f"transversal vertex {v} out of range")
            c = coloring.colors[v]
            if chosen[c] != -1:
                raise ValueError(f"transversal picks color {c} twice")
            chosen[c] = v
        if -1 in chosen:
            raise ValueError("transversal must pick one vertex of every color")

    _check_pair_structure(graph, classes)

    rows = [0] * k
    for c1 in range(k):
        for c2 in range(c1 + 1, k):
            if graph.has_edge(chosen[c1], chosen[c2]):
                rows[c1] |= 1 << c2
                rows[c2] |= 1 << c1
    return _graph_unchecked(k, tuple(rows))


def _check_pair_structure(graph: Graph, classes: list[list[int]]) -> None:
    # Between two color classes the four cross pairs must form one of the two
    # perfect matchings, and each class must be joined inside.  Rainbowness
    # already forces this; a violation means is_rainbow_coloring and this
    # validator disagree, so fail loudly rather than emit garbage.
    for a, b in ((x, y) for x in classes for y in classes if x < y):
        cross = [
            graph.has_edge(a[0], b[0]),
            graph.has_edge(a[0], b[1]),
            graph.has_edge(a[1], b[0]),
            graph.has_edge(a[1], b[1]),
        ]
        if cross not in ([True, False, False, True], [False, True, True, False]):
            raise ValueError(
                f"classes {a} and {b} are not matched; not a doubled graph"
            )
    for cls in classes:
        if not graph.has_edge(cls[0], cls[1]):
            raise ValueError(f"color class {cls} is not joined; not a doubled graph")
