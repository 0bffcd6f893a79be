"""Dominating Set reduction toolkit.

Find/apply reduction rounds built on neighborhood classification, a
quadratic baseline sweep, exact and direct reference oracles for tests,
seeded greedy solving, instance generators and simple text formats.
"""

from .graph import Graph, VertexSet, load_check
from .graphio import FormatError, read_graph, write_gr
from .greedy import TieBreaker, greedy, greedy_best_of
from .oracle import AnnotatedInstance, exact_annotated_gamma
from .pipeline import RelationSet, WorkCounter, suitable_set
from .reducer import (
    ReductionReport,
    Variant,
    export_residual,
    naive_reduce,
    reduce_iterate,
    reduce_once,
)
from .state import ReductionState, compact

__version__ = "0.1.0"

__all__ = [
    "AnnotatedInstance",
    "FormatError",
    "Graph",
    "ReductionReport",
    "ReductionState",
    "RelationSet",
    "TieBreaker",
    "Variant",
    "VertexSet",
    "WorkCounter",
    "compact",
    "exact_annotated_gamma",
    "export_residual",
    "greedy",
    "greedy_best_of",
    "load_check",
    "naive_reduce",
    "read_graph",
    "reduce_iterate",
    "reduce_once",
    "suitable_set",
    "write_gr",
]
