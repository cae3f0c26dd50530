"""Exact solvers and the multicoloured-clique reduction for the 2-interval
pattern problem."""

from .model import (
    ColouredGraph,
    Instance,
    Interval,
    ModelError,
    RelationSet,
    TwoInterval,
    edges_between_colours,
    intersects,
    vertices_of_colour,
)
from .reduction import LayoutParams, ReductionInstance, Variant, expected_size, reduce
from .relations import Kind, PairRelation, classify, comparability_graph, comparable
from .solvers import (
    Solution,
    is_feasible,
    max_pattern_bruteforce,
    max_pattern_chain,
    max_pattern_clique,
    solve,
)

__all__ = [
    "ColouredGraph", "Instance", "Interval", "ModelError", "RelationSet", "TwoInterval",
    "edges_between_colours", "intersects", "vertices_of_colour",
    "LayoutParams", "ReductionInstance", "Variant", "expected_size", "reduce",
    "Kind", "PairRelation", "classify", "comparability_graph", "comparable",
    "Solution", "is_feasible", "max_pattern_bruteforce", "max_pattern_chain",
    "max_pattern_clique", "solve",
]
