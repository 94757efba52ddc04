"""Core machinery for exact small-graph computation.

A :class:`Graph` is an immutable value: ``n`` vertices labelled ``0..n-1``
and one adjacency bitmask per vertex.  Everything downstream (switching
sweeps, rainbow search, the census engine) leans on the value semantics, so
graphs are hashable and safe to use as set elements and cache keys.

The module also carries the graph6 text codec, the +-1 edge-sign matrix of a
graph, and an exact canonical form used for isomorphism testing at desk
scale (n <= 12 by default).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

__all__ = [
    "Graph",
    "Coloring",
    "SeidelMatrix",
    "graph6_encode",
    "graph6_decode",
    "seidel_of_graph",
    "graph_of_seidel",
    "canonical_form",
    "find_isomorphism",
    "GRAPH6_MAX_N",
    "CANONICAL_CAP",
]

GRAPH6_MAX_N = 62   # short graph6 form only; one header byte
CANONICAL_CAP = 12  # exact canonicalization is exponential past desk scale


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph; ``rows[v]`` is the neighbour bitmask of ``v``.

    No loops, no multiple edges; ``rows`` must be symmetric.  Construction
    validates both, so every reachable ``Graph`` is a legal one.
    """

    n: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        if len(self.rows) != self.n:
            raise ValueError(f"expected {self.n} adjacency rows, got {len(self.rows)}")
        full = (1 << self.n) - 1
        rows = self.rows
        for v, row in enumerate(rows):
            if row & ~full:
                raise ValueError(f"row {v} mentions vertices outside 0..{self.n - 1}")
            if (row >> v) & 1:
                raise ValueError(f"loop at vertex {v}")
        for v in range(self.n):
            for u in range(v + 1, self.n):
                if ((rows[v] >> u) & 1) != ((rows[u] >> v) & 1):
                    raise ValueError(f"asymmetric adjacency at ({v}, {u})")

    # -- constructors ------------------------------------------------------

    @classmethod
    def from_edges(cls, n: int, edges) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) outside 0..{n - 1}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def from_adjacency(cls, matrix) -> "Graph":
        a = np.asarray(matrix)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise ValueError("adjacency matrix must be square")
        n = a.shape[0]
        if not np.isin(a, (0, 1)).all():
            raise ValueError("adjacency entries must be 0 or 1")
        rows = tuple(int(sum(1 << u for u in range(n) if a[v, u])) for v in range(n))
        return cls(n, rows)

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, (0,) * n)

    @classmethod
    def complete(cls, n: int) -> "Graph":
        full = (1 << n) - 1
        return cls(n, tuple(full ^ (1 << v) for v in range(n)))

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        if n < 3:
            raise ValueError("a cycle needs at least 3 vertices")
        return cls.from_edges(n, [(v, (v + 1) % n) for v in range(n)])

    @classmethod
    def path(cls, n: int) -> "Graph":
        return cls.from_edges(n, [(v, v + 1) for v in range(n - 1)])

    @classmethod
    def complete_bipartite(cls, a: int, b: int) -> "Graph":
        return cls.from_edges(a + b, [(u, a + v) for u in range(a) for v in range(b)])

    # -- queries -----------------------------------------------------------

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.rows[u] >> v) & 1)

    def neighbors(self, v: int) -> list[int]:
        return _bits(self.rows[v])

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degrees(self) -> tuple[int, ...]:
        return tuple(r.bit_count() for r in self.rows)

    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def edges(self) -> list[tuple[int, int]]:
        """All edges as sorted (u, v) pairs with u < v."""
        out = []
        for v in range(self.n):
            w = self.rows[v] >> (v + 1)
            u = v + 1
            while w:
                if w & 1:
                    out.append((v, u))
                w >>= 1
                u += 1
        return out

    def adjacency_matrix(self) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=np.int64)
        for v in range(self.n):
            for u in _bits(self.rows[v]):
                a[v, u] = 1
        return a

    def is_regular(self, degree: int) -> bool:
        return all(r.bit_count() == degree for r in self.rows)

    # -- transforms --------------------------------------------------------

    def relabel(self, perm) -> "Graph":
        """Relabel so that old vertex ``v`` becomes ``perm[v]``."""
        perm = tuple(perm)
        if sorted(perm) != list(range(self.n)):
            raise ValueError("not a permutation of the vertex set")
        rows = [0] * self.n
        for v in range(self.n):
            r = 0
            for u in _bits(self.rows[v]):
                r |= 1 << perm[u]
            rows[perm[v]] = r
        return _graph_unchecked(self.n, tuple(rows))

    def complement(self) -> "Graph":
        full = (1 << self.n) - 1
        return _graph_unchecked(
            self.n, tuple((full ^ r ^ (1 << v)) for v, r in enumerate(self.rows))
        )

    def add_vertex(self, neighbor_mask: int) -> "Graph":
        """New graph with vertex ``n`` attached to the masked existing vertices."""
        if neighbor_mask >> self.n:
            raise ValueError("neighbor mask mentions vertices outside the graph")
        rows = [
            r | (1 << self.n) if (neighbor_mask >> v) & 1 else r
            for v, r in enumerate(self.rows)
        ]
        rows.append(neighbor_mask)
        return _graph_unchecked(self.n + 1, tuple(rows))

    def induced(self, vertices) -> "Graph":
        """Induced subgraph on the given vertices, renumbered in list order."""
        vs = list(vertices)
        if len(set(vs)) != len(vs):
            raise ValueError("duplicate vertices")
        index = {v: i for i, v in enumerate(vs)}
        rows = [0] * len(vs)
        for v in vs:
            for u in _bits(self.rows[v]):
                if u in index:
                    rows[index[v]] |= 1 << index[u]
        return _graph_unchecked(len(vs), tuple(rows))

    # -- serialization -----------------------------------------------------

    def to_json(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.edges()]}

    @classmethod
    def from_json(cls, obj: dict) -> "Graph":
        return cls.from_edges(int(obj["n"]), [tuple(e) for e in obj["edges"]])

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def _graph_unchecked(n: int, rows: tuple[int, ...]) -> Graph:
    # internal fast path: rows already symmetric and loop-free by construction
    g = object.__new__(Graph)
    object.__setattr__(g, "n", n)
    object.__setattr__(g, "rows", rows)
    return g


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


@dataclass(frozen=True)
class Coloring:
    """Assignment of one color in ``0..k-1`` to every vertex."""

    k: int
    colors: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.k < 0:
            raise ValueError("color count must be non-negative")
        for v, c in enumerate(self.colors):
            if not (0 <= c < self.k):
                raise ValueError(f"vertex {v} has color {c} outside 0..{self.k - 1}")

    def color_classes(self) -> list[list[int]]:
        classes: list[list[int]] = [[] for _ in range(self.k)]
        for v, c in enumerate(self.colors):
            classes[c].append(v)
        return classes

    def to_json(self) -> dict:
        return {"k": self.k, "colors": list(self.colors)}

    @classmethod
    def from_json(cls, obj: dict) -> "Coloring":
        return cls(int(obj["k"]), tuple(int(c) for c in obj["colors"]))


class SeidelMatrix:
    """Symmetric integer matrix with zero diagonal and +-1 off-diagonal.

    Sign convention used throughout this package: +1 marks an edge, -1 a
    non-edge.  (Beware: the classical Seidel matrix uses the opposite signs;
    every identity in :mod:`rainbowlab.signedperm` assumes the +1-on-edges
    form, so convert before comparing with other software.)
    """

    __slots__ = ("n", "_entries")

    def __init__(self, entries) -> None:
        a = np.array(entries, dtype=np.int64)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise ValueError("entries must form a square matrix")
        n = a.shape[0]
        if np.any(np.diag(a) != 0):
            raise ValueError("diagonal must be zero")
        off = ~np.eye(n, dtype=bool)
        if not np.isin(a[off], (-1, 1)).all():
            raise ValueError("off-diagonal entries must be +1 or -1")
        if not np.array_equal(a, a.T):
            raise ValueError("matrix must be symmetric")
        a.setflags(write=False)
        self.n = n
        self._entries = a

    @property
    def entries(self) -> np.ndarray:
        return self._entries

    def __eq__(self, other) -> bool:
        return isinstance(other, SeidelMatrix) and np.array_equal(
            self._entries, other._entries
        )

    def __hash__(self) -> int:
        return hash((self.n, self._entries.tobytes()))

    def __repr__(self) -> str:
        return f"SeidelMatrix({self._entries.tolist()})"

    def to_json(self) -> dict:
        return {"n": self.n, "entries": self._entries.tolist()}

    @classmethod
    def from_json(cls, obj: dict) -> "SeidelMatrix":
        return cls(obj["entries"])


def seidel_of_graph(g: Graph) -> SeidelMatrix:
    """Edge-sign matrix of ``g``: +1 at edges, -1 at non-edges, 0 diagonal."""
    a = -np.ones((g.n, g.n), dtype=np.int64)
    np.fill_diagonal(a, 0)
    for u, v in g.edges():
        a[u, v] = a[v, u] = 1
    return SeidelMatrix(a)


def graph_of_seidel(a: SeidelMatrix) -> Graph:
    """Inverse of :func:`seidel_of_graph`."""
    m = a.entries
    edges = [(u, v) for u in range(a.n) for v in range(u + 1, a.n) if m[u, v] == 1]
    return Graph.from_edges(a.n, edges)


# -- graph6 codec ----------------------------------------------------------
#
# Header byte n+63, then the upper-triangle bits in column order
# (0,1), (0,2), (1,2), (0,3), ... packed six per byte (first bit highest),
# zero-padded, each byte offset by 63.


def graph6_encode(g: Graph) -> str:
    if g.n > GRAPH6_MAX_N:
        raise ValueError(f"graph6 short form supports at most {GRAPH6_MAX_N} vertices")
    out = [chr(g.n + 63)]
    bits = 0
    nbits = 0
    for v in range(1, g.n):
        for u in range(v):
            bits = (bits << 1) | ((g.rows[u] >> v) & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(bits + 63))
                bits = nbits = 0
    if nbits:
        out.append(chr((bits << (6 - nbits)) + 63))
    return "".join(out)


def graph6_decode(text: str) -> Graph:
    if not text:
        raise ValueError("empty graph6 string")
    header = ord(text[0]) - 63
    if not (0 <= header <= GRAPH6_MAX_N):
        raise ValueError(f"malformed graph6 header byte {text[0]!r}")
    n = header
    npairs = n * (n - 1) // 2
    nchars = (npairs + 5) // 6
    body = text[1:]
    if len(body) != nchars:
        raise ValueError(
            f"graph6 body for n={n} needs {nchars} bytes, got {len(body)}"
        )
    rows = [0] * n
    idx = 0
    pairs = [(u, v) for v in range(1, n) for u in range(v)]
    for ch in body:
        value = ord(ch) - 63
        if not (0 <= value < 64):
            raise ValueError(f"invalid graph6 byte {ch!r}")
        for shift in range(5, -1, -1):
            bit = (value >> shift) & 1
            if idx < npairs:
                if bit:
                    u, v = pairs[idx]
                    rows[u] |= 1 << v
                    rows[v] |= 1 << u
                idx += 1
            elif bit:
                raise ValueError("nonzero padding bits in graph6 string")
    return _graph_unchecked(n, tuple(rows))


# -- canonical form ----------------------------------------------------------
#
# Exact lexicographic minimum of the graph6 bit string over all relabelings,
# found by branch and bound over the labeling tree.  Two prunings keep it
# desk-fast: candidate columns are tried smallest-first against the best
# known prefix, and only one representative per twin class is branched on
# (swapping twins is an automorphism, so the skipped subtrees are replays).
# Degree and neighbour-degree invariants order the tie-broken candidates so
# that good labelings are found early.


def canonical_form(g: Graph, cap: int = CANONICAL_CAP) -> Graph:
    """The isomorph of ``g`` whose graph6 string is lexicographically least.

    Two graphs are isomorphic iff their canonical forms are equal.
    """
    if g.n > cap:
        raise ValueError(f"canonical form capped at {cap} vertices (got {g.n})")
    return _graph_unchecked(g.n, _canonical_rows(g.n, g.rows))


@lru_cache(maxsize=65536)
def _canonical_rows(n: int, rows: tuple[int, ...]) -> tuple[int, ...]:
    if n <= 1:
        return rows

    deg = [r.bit_count() for r in rows]
    inv_keys = sorted({(deg[v], tuple(sorted(deg[u] for u in _bits(rows[v]))))
                       for v in range(n)})
    inv_rank = [
        inv_keys.index((deg[v], tuple(sorted(deg[u] for u in _bits(rows[v])))))
        for v in range(n)
    ]

    # twin classes: (u v) is an automorphism iff the rows agree off {u, v}
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u in range(n):
        for v in range(u + 1, n):
            mask = ~((1 << u) | (1 << v))
            if rows[u] & mask == rows[v] & mask:
                parent[find(v)] = find(u)
    classes: dict[int, list[int]] = {}
    for v in range(n):
        classes.setdefault(find(v), []).append(v)
    class_lists = list(classes.values())

    best_cols = [1 << m for m in range(n)]  # sentinel beats any m-bit column
    best_perm: list[int] | None = None
    placed: list[int] = []
    unplaced = [True] * n
    colbits = [0] * n

    def dfs() -> None:
        nonlocal best_perm
        m = len(placed)
        if m == n:
            best_perm = placed.copy()
            return
        cands = []
        for members in class_lists:
            for u in members:
                if unplaced[u]:
                    cands.append((colbits[u], inv_rank[u], u))
                    break
        cands.sort()
        for c, _, u in cands:
            if c > best_cols[m]:
                break
            if c < best_cols[m]:
                best_cols[m] = c
                for j in range(m + 1, n):
                    best_cols[j] = 1 << j
            placed.append(u)
            unplaced[u] = False
            ru = rows[u]
            for w in range(n):
                if unplaced[w]:
                    colbits[w] = (colbits[w] << 1) | ((ru >> w) & 1)
            dfs()
            for w in range(n):
                if unplaced[w]:
                    colbits[w] >>= 1
            unplaced[u] = True
            placed.pop()

    dfs()
    assert best_perm is not None
    new_rows = [0] * n
    for i in range(n):
        ri = rows[best_perm[i]]
        r = 0
        for j in range(n):
            if j != i and (ri >> best_perm[j]) & 1:
                r |= 1 << j
        new_rows[i] = r
    return tuple(new_rows)


def find_isomorphism(g: Graph, h: Graph) -> tuple[int, ...] | None:
    """A vertex bijection ``perm`` with ``g.relabel(perm) == h``, or None.

    Plain backtracking with degree filtering; exact and fast enough for the
    desk-scale graphs this package deals in.
    """
    n = g.n
    if n != h.n or g.edge_count() != h.edge_count():
        return None
    gd, hd = g.degrees(), h.degrees()
    if sorted(gd) != sorted(hd):
        return None
    if n == 0:
        return ()

    # place poorly-populated degrees first, then stay connected to the placed set
    order: list[int] = []
    seen = [False] * n
    from collections import Counter

    rarity = Counter(gd)
    while len(order) < n:
        best, best_key = -1, None
        for v in range(n):
            if seen[v]:
                continue
            anchored = sum(1 for u in _bits(g.rows[v]) if seen[u])
            key = (-anchored, rarity[gd[v]], -gd[v], v)
            if best_key is None or key < best_key:
                best, best_key = v, key
        order.append(best)
        seen[best] = True

    mapping = [-1] * n
    used = 0

    def backtrack(i: int) -> bool:
        nonlocal used
        if i == n:
            return True
        v = order[i]
        for w in range(n):
            if (used >> w) & 1 or hd[w] != gd[v]:
                continue
            ok = True
            for u in order[:i]:
                if ((g.rows[v] >> u) & 1) != ((h.rows[w] >> mapping[u]) & 1):
                    ok = False
                    break
            if not ok:
                continue
            mapping[v] = w
            used |= 1 << w
            if backtrack(i + 1):
                return True
            used ^= 1 << w
            mapping[v] = -1
        return False

    if backtrack(0):
        return tuple(mapping)
    return None
