"""Semi-transitive orientations of Mycielski graphs."""

from .graph_core import (
    Bipartition,
    Graph,
    OddCycleWitness,
    ResourceLimitError,
    bipartition,
    enumerate_labeled_graphs,
    induced_subgraph,
    is_bipartite,
    make_complete,
    make_complete_bipartite,
    make_cycle,
    make_empty,
    make_path,
)
from .mycielski import (
    Apex,
    LabeledGraph,
    Original,
    Shadow,
    extended_mycielski,
    index_of,
    label_of,
    mycielski,
)
from .orientation import (
    Cyclic,
    HasShortcut,
    Orientation,
    SemiTransitive,
    check_semi_transitive,
    check_semi_transitive_reference,
    is_acyclic,
    orient,
    replay_witness,
)
from .solver import SolveOptions, SolveResult, solve, solve_exhaustive, verify_source_theorem

__version__ = "0.1.0"

__all__ = [
    "Apex",
    "Bipartition",
    "Cyclic",
    "Graph",
    "HasShortcut",
    "LabeledGraph",
    "OddCycleWitness",
    "Orientation",
    "Original",
    "ResourceLimitError",
    "SemiTransitive",
    "Shadow",
    "SolveOptions",
    "SolveResult",
    "bipartition",
    "check_semi_transitive",
    "check_semi_transitive_reference",
    "enumerate_labeled_graphs",
    "extended_mycielski",
    "index_of",
    "induced_subgraph",
    "is_acyclic",
    "is_bipartite",
    "label_of",
    "make_complete",
    "make_complete_bipartite",
    "make_cycle",
    "make_empty",
    "make_path",
    "mycielski",
    "orient",
    "replay_witness",
    "solve",
    "solve_exhaustive",
    "verify_source_theorem",
]
