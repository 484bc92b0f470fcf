"""Sorted distinct pairwise distances with the min-side / max-side split.

The ladder anchors every range search.  Feasible ranges must start at or
below the smaller endpoint distance (the min side, indexed from that value
downward) and must reach at least the variant's threshold distance (the
max side, indexed from the threshold upward).  Values strictly between the
two anchors lie inside every candidate range and never need indexing.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from .curves import DistanceMatrix
from .decisions import VARIANTS, Decision
from .errors import InputError, InternalError
from .ranges import DistanceRange

__all__ = ["DistanceLadder", "compute_threshold", "build_ladder"]


@dataclass(frozen=True)
class DistanceLadder:
    """Deduplicated ascending distance values plus side index structure.

    ``d_min(i)`` for i in 1..m walks the min side from its largest value
    (the smaller of the two endpoint distances) down to the overall
    smallest distance.  ``d_max(j)`` for j in 1..k walks the max side from
    the threshold up to the overall largest distance.  One value can sit on
    both sides when the endpoint distance equals the threshold.
    """

    values: tuple
    threshold: float
    m: int
    k: int
    _pos: dict = field(repr=False)

    def d_min(self, i: int) -> float:
        if not 1 <= i <= self.m:
            raise InputError(f"min-side index {i} out of range 1..{self.m}")
        return self.values[self.m - i]

    def d_max(self, j: int) -> float:
        if not 1 <= j <= self.k:
            raise InputError(f"max-side index {j} out of range 1..{self.k}")
        return self.values[len(self.values) - self.k + j - 1]

    def min_index_of(self, value: float) -> Optional[int]:
        """1-based min-side index of a ladder value, or None if not on that side."""
        pos = self._pos.get(value)
        if pos is None:
            raise InputError(f"{value!r} is not a ladder value")
        return self.m - pos if pos < self.m else None

    def max_index_of(self, value: float) -> Optional[int]:
        pos = self._pos.get(value)
        if pos is None:
            raise InputError(f"{value!r} is not a ladder value")
        first_max = len(self.values) - self.k
        return pos - first_max + 1 if pos >= first_max else None

    def cell_range(self, i: int, j: int) -> DistanceRange:
        """The candidate range indexed by min-side row i and max-side column j."""
        return DistanceRange(self.d_min(i), self.d_max(j))


def compute_threshold(
    matrix: DistanceMatrix,
    variant: str,
    decide: Optional[Callable[[DistanceMatrix, DistanceRange], Decision]] = None,
) -> float:
    """Smallest distance value v for which [0, v] is feasible.

    Binary search over the sorted distinct values; feasibility of [0, v] is
    monotone in v, so this is exact.  This is the variant's Frechet
    distance (plain, with one-sided shortcuts, or weak).
    """
    if decide is None:
        decide = VARIANTS[variant]
    values = np.unique(matrix.values).tolist()
    lo, hi = 0, len(values) - 1
    if not decide(matrix, DistanceRange(0.0, values[hi])).feasible:
        raise InternalError("full-range decision infeasible; decision procedure is broken")
    while lo < hi:
        mid = (lo + hi) // 2
        if decide(matrix, DistanceRange(0.0, values[mid])).feasible:
            hi = mid
        else:
            lo = mid + 1
    return values[lo]


def build_ladder(
    matrix: DistanceMatrix,
    variant: str,
    decide: Optional[Callable[[DistanceMatrix, DistanceRange], Decision]] = None,
) -> DistanceLadder:
    """Construct the ladder for a matrix under the given variant."""
    values = np.unique(matrix.values).tolist()
    threshold = compute_threshold(matrix, variant, decide)
    end_cut = min(matrix.dist(1, 1), matrix.dist(matrix.nA, matrix.nB))
    pos = {v: idx for idx, v in enumerate(values)}
    m = pos[end_cut] + 1
    k = len(values) - pos[threshold]
    if m < 1 or k < 1:
        raise InternalError("empty ladder side")
    return DistanceLadder(tuple(values), threshold, m, k, pos)
