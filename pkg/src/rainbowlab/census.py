"""Exact desk-scale censuses, counted three independent ways.

For each n the engine produces, by routes that share no code path:

* the switching classes of graphs on n vertices (sweep all canonical
  switches of every unlabeled graph),
* the unlabeled graphs on n vertices with all degrees even,
* the n-regular graphs on 2n vertices that admit an n-rainbow coloring
  (generated by degree-constrained growth and filtered by the exhaustive
  rainbow search -- the doubling construction is never consulted).

The three counts must agree, and doubling the switching representatives
must reproduce the rainbow representatives exactly; ``census`` checks both
and raises :class:`CensusError` with a counterexample if either fails.

Unlabeled families are generated by vertex-by-vertex growth with canonical
deduplication at every level: every graph on m+1 vertices is some graph on
m vertices plus one attached vertex, so extending one representative per
class by every neighbor subset is exhaustive.  For regular targets,
degree-deficit feasibility prunes the levels hard enough that the n = 5
rainbow substrate (5-regular graphs on 10 vertices) stays in the minutes.

Finished rows are persisted as JSON keyed by n (see ``RAINBOWLAB_CACHE_DIR``)
so expensive rows are computed once per machine.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from itertools import combinations
from pathlib import Path

from .doubling import rainbow_double
from .graphs import Graph, canonical_form, graph6_decode, graph6_encode
from .rainbow import find_rainbow_coloring, verify_rainbow_facts
from .switching import switching_canonical_form

__all__ = [
    "CensusRow",
    "CensusError",
    "enumerate_unlabeled_graphs",
    "enumerate_regular_graphs",
    "count_switching_classes",
    "count_even_classes",
    "enumerate_rainbow_classes",
    "census",
    "GRAPH_CENSUS_CAP",
    "RAINBOW_CENSUS_CAP",
]

GRAPH_CENSUS_CAP = 7    # unlabeled / switching / even columns
RAINBOW_CENSUS_CAP = 5  # the rainbow column works on 2n vertices

CACHE_ENV = "RAINBOWLAB_CACHE_DIR"


class CensusError(Exception):
    """A cross-check between independent pipelines failed."""


@dataclass
class CensusRow:
    """One census line: counts plus graph6 representative lists per category."""

    n: int
    graph_classes: int
    switching_classes: int
    even_classes: int
    rainbow_classes: int | None
    representatives: dict[str, list[str]] = field(default_factory=dict)

    def counts(self) -> tuple[int, int, int, int | None]:
        return (self.n, self.switching_classes, self.even_classes, self.rainbow_classes)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "counts": {
                "graphs": self.graph_classes,
                "switching": self.switching_classes,
                "even": self.even_classes,
                "rainbow": self.rainbow_classes,
            },
            "representatives": self.representatives,
        }

    @classmethod
    def from_json(cls, obj: dict) -> "CensusRow":
        c = obj["counts"]
        return cls(
            n=int(obj["n"]),
            graph_classes=int(c["graphs"]),
            switching_classes=int(c["switching"]),
            even_classes=int(c["even"]),
            rainbow_classes=None if c["rainbow"] is None else int(c["rainbow"]),
            representatives={k: list(v) for k, v in obj["representatives"].items()},
        )


# -- unlabeled families by growth -------------------------------------------


def enumerate_unlabeled_graphs(n: int, cap: int = GRAPH_CENSUS_CAP) -> list[Graph]:
    """One canonical representative per isomorphism class, sorted by graph6."""
    if n > cap:
        raise ValueError(f"unlabeled census capped at {cap} vertices (got {n})")
    if n < 0:
        raise ValueError("vertex count must be non-negative")
    if n == 0:
        return [Graph.empty(0)]
    level = {canonical_form(Graph.empty(1))}
    for size in range(1, n):
        grown: set[Graph] = set()
        for g in level:
            for mask in range(1 << size):
                grown.add(canonical_form(g.add_vertex(mask)))
        level = grown
    return sorted(level, key=graph6_encode)


def enumerate_regular_graphs(degree: int, n: int, cap: int = 12) -> list[Graph]:
    """All ``degree``-regular graphs on ``n`` vertices, up to isomorphism.

    Growth with two prunings: a vertex may never exceed the target degree,
    and the remaining degree deficits must stay coverable by the vertices
    yet to come.
    """
    if n > cap:
        raise ValueError(f"regular census capped at {cap} vertices (got {n})")
    if degree < 0 or n < 0:
        raise ValueError("degree and vertex count must be non-negative")
    if n == 0:
        return [Graph.empty(0)]
    if degree >= n or (degree * n) % 2:
        return []
    if degree == 0:
        return [Graph.empty(n)]

    level = {canonical_form(Graph.empty(1))}
    for size in range(1, n):
        remaining_after = n - size - 1
        lo = max(0, degree - remaining_after)
        grown: set[Graph] = set()
        for g in level:
            eligible = [v for v in range(size) if g.degree(v) < degree]
            hi = min(degree, len(eligible))
            for take in range(lo, hi + 1):
                for chosen in combinations(eligible, take):
                    mask = 0
                    for v in chosen:
                        mask |= 1 << v
                    child = g.add_vertex(mask)
                    if _regular_feasible(child, degree, n):
                        grown.add(canonical_form(child))
        level = grown
    return sorted((g for g in level if g.is_regular(degree)), key=graph6_encode)


def _regular_feasible(g: Graph, degree: int, n: int) -> bool:
    remaining = n - g.n
    total_deficit = 0
    full = 0
    for row in g.rows:
        d = degree - row.bit_count()
        if d < 0 or d > remaining:
            return False
        total_deficit += d
        if remaining and d == remaining:
            full += 1
    if full > degree:
        return False  # every future vertex must adopt all saturated-deficit vertices
    if total_deficit > remaining * degree:
        return False
    if total_deficit < remaining * max(0, degree - remaining + 1):
        return False
    return (total_deficit - remaining * degree) % 2 == 0


# -- the three columns -------------------------------------------------------


def count_switching_classes(n: int, cap: int = GRAPH_CENSUS_CAP) -> tuple[int, list[Graph]]:
    """Number of switching classes on n vertices plus their representatives."""
    reps = sorted(
        {switching_canonical_form(g) for g in enumerate_unlabeled_graphs(n, cap)},
        key=graph6_encode,
    )
    return len(reps), reps


def count_even_classes(n: int, cap: int = GRAPH_CENSUS_CAP) -> tuple[int, list[Graph]]:
    """Unlabeled graphs on n vertices with every degree even."""
    reps = [
        g
        for g in enumerate_unlabeled_graphs(n, cap)
        if all(d % 2 == 0 for d in g.degrees())
    ]
    return len(reps), reps


def enumerate_rainbow_classes(n: int, cap: int = RAINBOW_CENSUS_CAP) -> list[Graph]:
    """Isomorphism classes of n-regular graphs on 2n vertices that admit an
    n-rainbow coloring.

    Filters the regular substrate with the exhaustive search; every found
    coloring is re-checked against the structural facts.
    """
    if n > cap:
        raise ValueError(f"rainbow census capped at {cap} (works on {2 * cap} vertices)")
    if n < 1:
        raise ValueError("rainbow census needs n >= 1")
    found = []
    for g in enumerate_regular_graphs(n, 2 * n):
        coloring = find_rainbow_coloring(g, n)
        if coloring is not None:
            verify_rainbow_facts(g, coloring)
            found.append(g)
    return found


# -- the census with cross-checks and persistence ----------------------------


def _cache_dir(cache_dir: "str | Path | None") -> Path:
    if cache_dir is not None:
        return Path(cache_dir)
    env = os.environ.get(CACHE_ENV)
    if env:
        return Path(env)
    return Path.home() / ".cache" / "rainbowlab"


def _census_row(n: int, with_rainbow: bool) -> CensusRow:
    graphs = enumerate_unlabeled_graphs(n)
    switching_count, switching_reps = count_switching_classes(n)
    even_count, even_reps = count_even_classes(n)
    row = CensusRow(
        n=n,
        graph_classes=len(graphs),
        switching_classes=switching_count,
        even_classes=even_count,
        rainbow_classes=None,
        representatives={
            "switching": [graph6_encode(g) for g in switching_reps],
            "even": [graph6_encode(g) for g in even_reps],
        },
    )
    if with_rainbow:
        rainbow_reps = enumerate_rainbow_classes(n)
        row.rainbow_classes = len(rainbow_reps)
        row.representatives["rainbow"] = [graph6_encode(g) for g in rainbow_reps]
    _verify_row(row)
    return row


def _verify_row(row: CensusRow) -> None:
    n = row.n
    if row.switching_classes != row.even_classes:
        raise CensusError(
            f"n={n}: {row.switching_classes} switching classes vs "
            f"{row.even_classes} even graphs"
        )
    if row.rainbow_classes is None:
        return
    if row.switching_classes != row.rainbow_classes:
        raise CensusError(
            f"n={n}: {row.switching_classes} switching classes vs "
            f"{row.rainbow_classes} rainbow classes"
        )
    image = {
        graph6_encode(canonical_form(rainbow_double(graph6_decode(g6)).graph))
        for g6 in row.representatives["switching"]
    }
    rainbow = set(row.representatives["rainbow"])
    if image != rainbow:
        missing = sorted(rainbow - image)
        extra = sorted(image - rainbow)
        raise CensusError(
            f"n={n}: doubling the switching representatives does not give the "
            f"rainbow classes (first missing: {missing[:1]}, first extra: {extra[:1]})"
        )
    if len(image) != len(row.representatives["switching"]):
        raise CensusError(f"n={n}: doubling merged two distinct switching classes")


def census(
    n_max: int,
    with_rainbow: bool = True,
    cache_dir: "str | Path | None" = None,
) -> list[CensusRow]:
    """Census rows for n = 1..n_max, cross-checked and cached.

    The rainbow column is limited to n <= 5 (its substrate lives on 2n
    vertices); pass ``with_rainbow=False`` to go up to n = 7 with the other
    columns.  Cached rows are re-verified on load.
    """
    if with_rainbow and n_max > RAINBOW_CENSUS_CAP:
        raise ValueError(
            f"rainbow column capped at n={RAINBOW_CENSUS_CAP}; "
            "pass with_rainbow=False for larger n"
        )
    if n_max > GRAPH_CENSUS_CAP:
        raise ValueError(f"census capped at n={GRAPH_CENSUS_CAP}")
    directory = _cache_dir(cache_dir)
    rows = []
    for n in range(1, n_max + 1):
        path = directory / f"census_n{n}.json"
        row = None
        if path.exists():
            try:
                row = CensusRow.from_json(json.loads(path.read_text()))
            except (json.JSONDecodeError, KeyError, TypeError, ValueError):
                row = None
            if row is not None and with_rainbow and row.rainbow_classes is None:
                row = None  # cached without the expensive column; recompute
        if row is None:
            row = _census_row(n, with_rainbow)
            directory.mkdir(parents=True, exist_ok=True)
            path.write_text(json.dumps(row.to_json(), indent=1))
        else:
            _verify_row(row)
        rows.append(row)
    return rows
