"""Discrete Frechet distance, gap and ratio measures for polygonal curves.

Measures come in three traversal variants: plain (strictly forward
motion), one-sided shortcuts (the first curve may skip points, which
shrugs off outliers), and weak (backtracking allowed).  The gap and ratio
searches for the shortcut and weak variants run in near-quadratic time via
a recursive search over candidate ranges with contracted decision
structures; the plain variant uses a quartic two-pointer sweep.
"""

from .curves import Curve, DistanceMatrix, build_distance_matrix, distance
from .decisions import Decision, shortcut_decide, strong_decide, weak_decide
from .errors import ContractViolationError, InputError, InternalError
from .generate import generate, outlier_showcase
from .ladder import DistanceLadder, build_ladder, compute_threshold
from .ranges import GAP, RATIO, SCORES, DistanceRange, RangeScore
from .salg import (
    FixedClass,
    MatrixView,
    RawDecider,
    classify,
    middle_row_search,
    row_scan_smallest_range,
    search_smallest_range,
)
from .shortcut_graph import ShortcutGraph, build_initial_graph
from .sweep import plain_range_search
from .weak_maze import WeakMaze, build_initial_maze

__version__ = "0.1.0"

__all__ = [
    "Curve",
    "DistanceMatrix",
    "build_distance_matrix",
    "distance",
    "Decision",
    "strong_decide",
    "shortcut_decide",
    "weak_decide",
    "InputError",
    "InternalError",
    "ContractViolationError",
    "DistanceRange",
    "RangeScore",
    "GAP",
    "RATIO",
    "SCORES",
    "DistanceLadder",
    "build_ladder",
    "compute_threshold",
    "MatrixView",
    "FixedClass",
    "classify",
    "RawDecider",
    "middle_row_search",
    "search_smallest_range",
    "row_scan_smallest_range",
    "ShortcutGraph",
    "build_initial_graph",
    "WeakMaze",
    "build_initial_maze",
    "plain_range_search",
    "generate",
    "outlier_showcase",
    "__version__",
]
