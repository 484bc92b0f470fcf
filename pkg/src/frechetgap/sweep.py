"""Two-pointer sweep computing the plain (strong-variant) gap or ratio.

Worst case O(nA^2 * nB^2) with the quadratic strong decision: the lower
limit climbs the min side of the ladder while the smallest feasible upper
limit only ever moves up.  There is no linear-time greedy decision for the
strong variant, so the recursive contracted search does not apply here; a
future improvement could slot in a decision structure updatable under
single-position validity flips.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .curves import DistanceMatrix
from .decisions import Decision, Walk, strong_decide
from .errors import InternalError
from .ladder import DistanceLadder, build_ladder
from .ranges import DistanceRange, RangeScore

__all__ = ["SweepResult", "plain_range_search"]


@dataclass(frozen=True)
class SweepResult:
    value: float
    best: DistanceRange
    witness: Walk
    ladder: DistanceLadder
    decisions: int


def plain_range_search(
    matrix: DistanceMatrix, score: RangeScore, decide=None
) -> SweepResult:
    """Minimize a monotone score over feasible strong-variant ranges.

    For each lower limit, the best upper limit is the smallest feasible
    one, and it can only grow as the lower limit grows, so one forward
    pointer suffices.  The sweep stops once no upper limit works at all.
    """
    if decide is None:
        decide = strong_decide
    ladder = build_ladder(matrix, "strong", decide)
    values = ladder.values
    n_decisions = 0

    best_value = None
    best_range = None
    t_idx = len(values) - ladder.k  # position of the threshold, the lowest viable upper limit
    for s_idx in range(ladder.m):  # min-side values, smallest first
        low = values[s_idx]
        found = None
        while t_idx < len(values):
            if values[t_idx] < low:
                t_idx += 1
                continue
            n_decisions += 1
            if decide(matrix, DistanceRange(low, values[t_idx])).feasible:
                found = values[t_idx]
                break
            t_idx += 1
        if found is None:
            break  # larger lower limits are only harder
        value = score.of(low, found)
        if best_value is None or value < best_value:
            best_value = value
            best_range = DistanceRange(low, found)

    if best_range is None:
        raise InternalError("sweep found no feasible range")
    final = decide(matrix, best_range)
    if not final.feasible:
        raise InternalError("winning range failed its witness decision")
    return SweepResult(best_value, best_range, final.witness, ladder, n_decisions)
