"""Recognition and 0-bend drawing of cocomparability graphs.

A cocomparability graph is drawn with axis-parallel segments so that segments
meet exactly for adjacent vertices, and the relative position of two disjoint
segments tells which one is smaller in the underlying poset.
"""

from .characterization import Classification, classify_b0
from .core import (Graph, Ordering, Poset, cocomparability_graph, complement,
                   linear_extension, poset_from_covers)
from .layout import Drawing, Segment, draw_b0
from .verify import verify_drawing

__all__ = [
    "Classification", "Drawing", "Graph", "Ordering", "Poset", "Segment",
    "classify_b0", "cocomparability_graph", "complement", "draw_b0",
    "linear_extension", "poset_from_covers", "verify_drawing",
]
__version__ = "0.1.0"
