"""rainbowlab: rainbow vertex colorings, switching classes, and the doubling
bijection between them, with an exact census engine and a pebble-puzzle demo.
"""

from .census import (
    CensusError,
    CensusRow,
    census,
    count_even_classes,
    count_switching_classes,
    enumerate_rainbow_classes,
    enumerate_regular_graphs,
    enumerate_unlabeled_graphs,
)
from .doubling import RainbowWitness, extract_base, rainbow_double, seidel_double
from .graphs import (
    Coloring,
    Graph,
    SeidelMatrix,
    canonical_form,
    find_isomorphism,
    graph6_decode,
    graph6_encode,
    graph_of_seidel,
    seidel_of_graph,
)
from .puzzle import Board, board_color, flip_for_target, guess_target
from .rainbow import (
    find_rainbow_coloring,
    is_rainbow_coloring,
    monochromatic_matching,
    verify_rainbow_facts,
)
from .signedperm import (
    SignedMatrix,
    fold_permutation,
    integrate,
    is_integration,
    permutation_blocks,
    switching_witness,
)
from .switching import (
    are_switching_equivalent,
    switch_subset,
    switch_vertex,
    switching_canonical_form,
)

__version__ = "0.1.0"

__all__ = [
    "Board",
    "CensusError",
    "CensusRow",
    "Coloring",
    "Graph",
    "RainbowWitness",
    "SeidelMatrix",
    "SignedMatrix",
    "are_switching_equivalent",
    "board_color",
    "canonical_form",
    "census",
    "count_even_classes",
    "count_switching_classes",
    "enumerate_rainbow_classes",
    "enumerate_regular_graphs",
    "enumerate_unlabeled_graphs",
    "extract_base",
    "find_isomorphism",
    "find_rainbow_coloring",
    "flip_for_target",
    "fold_permutation",
    "graph6_decode",
    "graph6_encode",
    "graph_of_seidel",
    "guess_target",
    "integrate",
    "is_integration",
    "is_rainbow_coloring",
    "monochromatic_matching",
    "permutation_blocks",
    "rainbow_double",
    "seidel_double",
    "seidel_of_graph",
    "switch_subset",
    "switch_vertex",
    "switching_canonical_form",
    "switching_witness",
    "verify_rainbow_facts",
]
