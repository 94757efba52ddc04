"""Rainbow vertex colorings: verification and exact search.

A coloring with k colors is *rainbow* when every color appears exactly once
in the open neighborhood of every vertex.  Such a coloring forces strong
structure: the graph is k-regular, the color classes all have size |V|/k,
the same-colored neighbor pairs form a perfect matching, and 2k divides |V|.
Those four facts are checked on every coloring the search produces.

The search itself is a backtracking proper-coloring of the conflict graph
whose edges join vertices that share a neighbor (distinct vertices in one
open neighborhood must get distinct colors, and for a k-regular graph that
is the whole constraint).  It is exhaustive, so ``None`` is a proof that no
rainbow coloring exists.
"""

from __future__ import annotations

from .graphs import Coloring, Graph, _bits

__all__ = [
    "is_rainbow_coloring",
    "find_rainbow_coloring",
    "monochromatic_matching",
    "verify_rainbow_facts",
]


def is_rainbow_coloring(g: Graph, coloring: Coloring) -> bool:
    """True iff every open neighborhood sees each of the k colors exactly once."""
    if len(coloring.colors) != g.n:
        raise ValueError(
            f"coloring covers {len(coloring.colors)} vertices, graph has {g.n}"
        )
    k = coloring.k
    full = (1 << k) - 1
    colors = coloring.colors
    for v in range(g.n):
        seen = 0
        for u in _bits(g.rows[v]):
            bit = 1 << colors[u]
            if seen & bit:
                return False
            seen |= bit
        if seen != full:
            return False
    return True


def find_rainbow_coloring(g: Graph, k: int) -> Coloring | None:
    """An exhaustive search for a rainbow coloring of ``g`` with ``k`` colors.

    Returns a coloring, or None if none exists.  Inputs that are not
    k-regular, or whose vertex count is not a multiple of 2k, are rejected
    immediately (both conditions are necessary).  The result is
    deterministic: color symmetry is broken by giving the neighbors of
    vertex 0 colors 0..k-1 in ascending vertex order.
    """
    if k < 0:
        raise ValueError("color count must be non-negative")
    n = g.n
    if n == 0:
        return Coloring(k, ())
    if k == 0:
        return None
    if not g.is_regular(k) or n % (2 * k):
        return None

    # conflict rows: u ~ w when u and w share a neighbor
    conflict = [0] * n
    for v in range(n):
        nbrs = _bits(g.rows[v])
        for i, u in enumerate(nbrs):
            for w in nbrs[i + 1 :]:
                conflict[u] |= 1 << w
                conflict[w] |= 1 << u

    full = (1 << k) - 1
    avail = [full] * n
    assigned: list[int] = [-1] * n

    def assign(v: int, c: int) -> list[int] | None:
        """Color v and prune its conflict neighbors.

        Returns the list of pruned vertices, or None after undoing itself
        when some neighbor is left with no color at all.
        """
        assigned[v] = c
        touched = [v]
        bit = 1 << c
        for w in _bits(conflict[v]):
            if assigned[w] == -1 and avail[w] & bit:
                avail[w] ^= bit
                touched.append(w)
                if not avail[w]:
                    assigned[v] = -1
                    for x in touched[1:]:
                        avail[x] |= bit
                    return None
        return touched

    def unassign(v: int, c: int, touched: list[int]) -> None:
        assigned[v] = -1
        bit = 1 << c
        for w in touched[1:]:
            avail[w] |= bit

    # symmetry breaking: the k neighbors of vertex 0 take colors 0..k-1
    for c, v in enumerate(sorted(_bits(g.rows[0]))):
        if not (avail[v] >> c) & 1 or assign(v, c) is None:
            return None

    def backtrack() -> bool:
        best_v, best_count = -1, k + 1
        for v in range(n):
            if assigned[v] == -1:
                count = avail[v].bit_count()
                if count < best_count:
                    best_v, best_count = v, count
                    if count <= 1:
                        break
        if best_v == -1:
            return True
        options = avail[best_v]
        while options:
            low = options & -options
            options ^= low
            c = low.bit_length() - 1
            touched = assign(best_v, c)
            if touched is not None:
                if backtrack():
                    return True
                unassign(best_v, c, touched)
        return False

    if not backtrack():
        return None
    coloring = Coloring(k, tuple(assigned))
    verify_rainbow_facts(g, coloring)
    return coloring


def monochromatic_matching(g: Graph, coloring: Coloring) -> list[tuple[int, int]]:
    """The edges whose endpoints share a color; a perfect matching.

    Raises if the coloring is not rainbow for ``g``.
    """
    if not is_rainbow_coloring(g, coloring):
        raise ValueError("coloring is not rainbow for this graph")
    edges = [(u, v) for u, v in g.edges() if coloring.colors[u] == coloring.colors[v]]
    covered = [0] * g.n
    for u, v in edges:
        covered[u] += 1
        covered[v] += 1
    assert all(c == 1 for c in covered), "same-color edges failed to match perfectly"
    return edges


def verify_rainbow_facts(g: Graph, coloring: Coloring) -> None:
    """Check the four structural facts a rainbow coloring guarantees.

    Raises ValueError naming the violated fact; used as a belt-and-braces
    assertion on every coloring the search returns.
    """
    if not is_rainbow_coloring(g, coloring):
        raise ValueError("not a rainbow coloring")
    k = coloring.k
    if g.n == 0:
        return
    if not g.is_regular(k):
        raise ValueError(f"fact violated: graph is not {k}-regular")
    sizes = {len(cls) for cls in coloring.color_classes()}
    if sizes != {g.n // k}:
        raise ValueError("fact violated: color classes are not equally sized")
    monochromatic_matching(g, coloring)  # raises if not a perfect matching
    if g.n % (2 * k):
        raise ValueError(f"fact violated: {g.n} vertices is not a multiple of {2 * k}")
