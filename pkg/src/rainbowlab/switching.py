"""Seidel's switching operation and switching equivalence.

Switching at a vertex complements its adjacency to every other vertex;
switching a subset complements exactly the pairs across the cut.  Two graphs
are switching equivalent when a sequence of switchings plus a relabeling
maps one onto the other; the canonical representative below decides that by
exhausting the 2^(n-1) essentially distinct switches.
"""

from __future__ import annotations

from functools import lru_cache

from .graphs import CANONICAL_CAP, Graph, _graph_unchecked, canonical_form, graph6_encode

__all__ = [
    "switch_vertex",
    "switch_subset",
    "switching_canonical_form",
    "are_switching_equivalent",
]


def switch_vertex(g: Graph, v: int) -> Graph:
    """Complement the adjacency between ``v`` and every other vertex."""
    if not (0 <= v < g.n):
        raise ValueError(f"vertex {v} outside 0..{g.n - 1}")
    return switch_subset(g, [v])


def switch_subset(g: Graph, subset) -> Graph:
    """Complement all pairs with exactly one endpoint in ``subset``.

    Equals the composition of single-vertex switches over the subset, in any
    order; the subset and its complement produce the same graph.
    """
    smask = 0
    for v in subset:
        if not (0 <= v < g.n):
            raise ValueError(f"vertex {v} outside 0..{g.n - 1}")
        smask |= 1 << v
    full = (1 << g.n) - 1
    rows = []
    for v, r in enumerate(g.rows):
        flip = (full ^ smask) if (smask >> v) & 1 else smask
        rows.append(r ^ (flip & ~(1 << v) & full))
    return _graph_unchecked(g.n, tuple(rows))


def switching_canonical_form(g: Graph, cap: int = CANONICAL_CAP) -> Graph:
    """Canonical representative of the switching class of ``g``.

    Minimum, by graph6 string, of the canonical forms of all subset switches.
    Constant on the switching class and under relabeling, so two graphs are
    switching equivalent iff their representatives are equal.  Subsets
    containing vertex 0 are skipped: a set and its complement switch alike.
    """
    if g.n > cap:
        raise ValueError(f"switching canonical form capped at {cap} vertices")
    return _graph_unchecked(g.n, _switching_canonical_rows(g.n, g.rows))


@lru_cache(maxsize=16384)
def _switching_canonical_rows(n: int, rows: tuple[int, ...]) -> tuple[int, ...]:
    g = _graph_unchecked(n, rows)
    best_key = None
    best: Graph | None = None
    for smask in range(1 << max(0, n - 1)):
        switched = switch_subset(g, [v + 1 for v in range(n - 1) if (smask >> v) & 1])
        cand = canonical_form(switched)
        key = graph6_encode(cand)
        if best_key is None or key < best_key:
            best_key, best = key, cand
    assert best is not None
    return best.rows


def are_switching_equivalent(g: Graph, h: Graph) -> bool:
    """Whether some switching sequence plus relabeling maps ``g`` onto ``h``."""
    if g.n != h.n:
        raise ValueError(f"vertex count mismatch ({g.n} vs {h.n})")
    return switching_canonical_form(g) == switching_canonical_form(h)
