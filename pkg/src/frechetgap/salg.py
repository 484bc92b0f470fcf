"""Generic recursive search for the smallest feasible range.

The candidate ranges form a conceptual matrix: rows are min-side ladder
indices, columns max-side indices, and the cell (i, j) is the range
[d_min(i), d_max(j)].  Containment is monotone in both indices, so a
binary search along the middle row splits the matrix into two submatrices
that still need searching and two that never do.  Each recursive call gets
a decider contracted to its submatrix, keeping decision cost proportional
to the submatrix, not original, size.

Any decider with ``decide``, ``contract`` and ``size`` works; the search
itself never looks at the score except to fold results, so gap and ratio
explore identical cells.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Callable, Optional, Protocol

from .decisions import Decision, Walk
from .errors import InputError, InternalError
from .ladder import DistanceLadder
from .ranges import DistanceRange, RangeScore

__all__ = [
    "MatrixView",
    "FixedClass",
    "classify",
    "ContractibleDecider",
    "RawDecider",
    "SearchStats",
    "SearchResult",
    "middle_row_search",
    "search_smallest_range",
    "row_scan_smallest_range",
]


@dataclass(frozen=True)
class MatrixView:
    """Index rectangle [row_lo, row_hi] x [col_lo, col_hi] over the ladder sides.

    Rows are 1-based min-side indices, columns 1-based max-side indices.
    Views with row_lo > row_hi or col_lo > col_hi hold no cells.
    """

    row_lo: int
    row_hi: int
    col_lo: int
    col_hi: int

    @property
    def is_empty(self) -> bool:
        return self.row_lo > self.row_hi or self.col_lo > self.col_hi

    @property
    def size(self) -> int:
        return max(0, self.row_hi - self.row_lo + 1) + max(
            0, self.col_hi - self.col_lo + 1
        )

    @staticmethod
    def full(ladder: DistanceLadder) -> "MatrixView":
        return MatrixView(1, ladder.m, 1, ladder.k)


class FixedClass(enum.Enum):
    NON_FIXED = "non-fixed"
    FIXED_VALID = "fixed-valid"
    FIXED_INVALID = "fixed-invalid"


def classify(ladder: DistanceLadder, view: MatrixView, value: float) -> FixedClass:
    """Classify a ladder value against a view.

    Row and column values of the view vary across its ranges (non-fixed);
    anything strictly inside the view's smallest range lies in every range
    (fixed valid); everything else lies in none (fixed invalid).
    """
    mi = ladder.min_index_of(value)
    if mi is not None and view.row_lo <= mi <= view.row_hi:
        return FixedClass.NON_FIXED
    ma = ladder.max_index_of(value)
    if ma is not None and view.col_lo <= ma <= view.col_hi:
        return FixedClass.NON_FIXED
    if view.is_empty:
        raise InputError("cannot classify against an empty view")
    if ladder.d_min(view.row_lo) < value < ladder.d_max(view.col_lo):
        return FixedClass.FIXED_VALID
    return FixedClass.FIXED_INVALID


class ContractibleDecider(Protocol):
    """Decision structure that can shrink itself to a submatrix view."""

    def decide(self, rng: DistanceRange, want_witness: bool = False) -> Decision: ...

    def contract(self, view: MatrixView) -> "ContractibleDecider": ...

    def size(self) -> int: ...


@dataclass
class RawDecider:
    """Adapter running a plain decision procedure; contraction is a no-op.

    Useful as a baseline: the recursive search with this decider must
    return exactly what it returns with a contracting one.
    """

    matrix: object
    decide_fn: Callable

    def decide(self, rng: DistanceRange, want_witness: bool = False) -> Decision:
        return self.decide_fn(self.matrix, rng)

    def contract(self, view: MatrixView) -> "RawDecider":
        return self

    def size(self) -> int:
        return self.matrix.nA * self.matrix.nB


@dataclass
class SearchStats:
    """Instrumentation: per-level view sizes, decide calls, probed cells."""

    level_sizes: dict = field(default_factory=dict)
    decisions: int = 0
    probed_cells: list = field(default_factory=list)

    def record_view(self, depth: int, view: MatrixView) -> None:
        self.level_sizes[depth] = self.level_sizes.get(depth, 0) + view.size

    def check_level_bound(self, bound: int) -> None:
        for depth, total in sorted(self.level_sizes.items()):
            if total > bound:
                raise InternalError(
                    f"level {depth} views total {total}, above the bound {bound}"
                )


@dataclass(frozen=True)
class SearchResult:
    value: float
    best: DistanceRange
    witness: Optional[Walk]
    stats: SearchStats


def middle_row_search(
    view: MatrixView,
    decider: ContractibleDecider,
    ladder: DistanceLadder,
    stats: Optional[SearchStats] = None,
) -> Optional[tuple]:
    """Smallest feasible column in the view's middle row, or None.

    Feasibility along a row is monotone in the column index (wider upper
    limit), so binary search is exact.
    """
    if view.is_empty:
        raise InputError("middle row of an empty view")
    i = (view.row_lo + view.row_hi) // 2
    lo, hi = view.col_lo, view.col_hi

    def feasible(j: int) -> bool:
        rng = ladder.cell_range(i, j)
        if stats is not None:
            stats.decisions += 1
            stats.probed_cells.append((i, j))
        return decider.decide(rng).feasible

    if not feasible(hi):
        return None
    while lo < hi:
        mid = (lo + hi) // 2
        if feasible(mid):
            hi = mid
        else:
            lo = mid + 1
    return i, lo


def search_smallest_range(
    ladder: DistanceLadder,
    root_decider: ContractibleDecider,
    score: RangeScore,
    witness_decide: Optional[Callable[[DistanceRange], Decision]] = None,
) -> SearchResult:
    """Recursive middle-row search over the whole range matrix.

    ``root_decider`` must decide correctly for every cell of the full
    matrix.  After the minimum is known, one extra decision on the winning
    range produces the witness (by default from the root decider).
    """
    stats = SearchStats()
    full = MatrixView.full(ladder)

    def recurse(view: MatrixView, decider, depth: int):
        stats.record_view(depth, view)
        hit = middle_row_search(view, decider, ladder, stats)
        if hit is None:
            # The middle row failed even at the widest column, so every row
            # above it (larger lower limits) fails too; only rows below
            # remain.
            i = (view.row_lo + view.row_hi) // 2
            rest = MatrixView(i + 1, view.row_hi, view.col_lo, view.col_hi)
            if rest.is_empty:
                return math.inf, None
            return recurse(rest, decider.contract(rest), depth + 1)
        i, j = hit
        best_value = score.of(ladder.d_min(i), ladder.d_max(j))
        best_cell = (i, j)
        upper = MatrixView(view.row_lo, i - 1, j, view.col_hi)
        lower = MatrixView(i + 1, view.row_hi, view.col_lo, j - 1)
        for sub in (upper, lower):
            if sub.is_empty:
                continue
            value, cell = recurse(sub, decider.contract(sub), depth + 1)
            if cell is not None and value < best_value:
                best_value, best_cell = value, cell
        return best_value, best_cell

    value, cell = recurse(full, root_decider, 0)
    if cell is None:
        raise InternalError("search found no feasible cell")
    stats.check_level_bound(ladder.m + ladder.k)
    best = ladder.cell_range(*cell)
    if witness_decide is None:
        final = root_decider.decide(best, want_witness=True)
    else:
        final = witness_decide(best)
    if not final.feasible:
        raise InternalError("winning cell failed its witness decision")
    return SearchResult(value, best, final.witness, stats)


def row_scan_smallest_range(
    matrix,
    ladder: DistanceLadder,
    decide: Callable,
    score: RangeScore,
) -> SearchResult:
    """Baseline search: binary-search each row with the raw decision.

    O(m log k) decisions; used for cross-checking the recursive search at
    moderate sizes.
    """
    stats = SearchStats()
    best_value = None
    best_cell = None
    for i in range(1, ladder.m + 1):
        lo, hi = 1, ladder.k
        stats.decisions += 1
        if not decide(matrix, ladder.cell_range(i, hi)).feasible:
            continue
        while lo < hi:
            mid = (lo + hi) // 2
            stats.decisions += 1
            if decide(matrix, ladder.cell_range(i, mid)).feasible:
                hi = mid
            else:
                lo = mid + 1
        value = score.of(ladder.d_min(i), ladder.d_max(lo))
        if best_value is None or value < best_value:
            best_value, best_cell = value, (i, lo)
    if best_cell is None:
        raise InternalError("row scan found no feasible cell")
    best = ladder.cell_range(*best_cell)
    final = decide(matrix, best)
    return SearchResult(best_value, best, final.witness, stats)
