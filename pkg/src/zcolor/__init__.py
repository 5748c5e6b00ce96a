"""Z-colorings of link diagrams and their reduction to four colors."""

from .coloring import Coloring, find_nontrivial_coloring, is_simple, verify_coloring
from .diagram import Diagram, parse_pd, pretzel
from .reduction import MoveTrace, ReductionReport, minimize, reduce_five, reduce_simple, verify_trace

__version__ = "0.1.0"

__all__ = [
    "Coloring",
    "Diagram",
    "MoveTrace",
    "ReductionReport",
    "find_nontrivial_coloring",
    "is_simple",
    "minimize",
    "parse_pd",
    "pretzel",
    "reduce_five",
    "reduce_simple",
    "verify_coloring",
    "verify_trace",
]
