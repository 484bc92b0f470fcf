"""Slow, independent reference implementations for tests.

Nothing here shares code with the production decision procedures: strong
and weak feasibility are breadth-first searches over the position grid,
and shortcut feasibility is a column-coverage sweep taken straight from
the definition (every column needs an in-range position, at rows that
never decrease).  Intended for grids of a few hundred cells at most.
"""

from __future__ import annotations

from collections import deque

from .curves import DistanceMatrix
from .errors import InternalError
from .ranges import DistanceRange, RangeScore

__all__ = [
    "reach_bfs",
    "bfs_threshold",
    "brute_force_smallest_range",
    "all_pairs_smallest_range",
]


def _valid_grid(matrix: DistanceMatrix, rng: DistanceRange):
    return ((matrix.values >= rng.low) & (matrix.values <= rng.high)).tolist()


def _strong_reach(matrix, rng) -> bool:
    nA, nB = matrix.nA, matrix.nB
    valid = _valid_grid(matrix, rng)
    if not (valid[0][0] and valid[nA - 1][nB - 1]):
        return False
    reach = [[False] * nB for _ in range(nA)]
    reach[0][0] = True
    for i in range(nA):
        for j in range(nB):
            if reach[i][j] or not valid[i][j]:
                continue
            if (
                (j > 0 and reach[i][j - 1])
                or (i > 0 and reach[i - 1][j])
                or (i > 0 and j > 0 and reach[i - 1][j - 1])
            ):
                reach[i][j] = True
    return reach[nA - 1][nB - 1]


def _weak_reach(matrix, rng) -> bool:
    nA, nB = matrix.nA, matrix.nB
    valid = _valid_grid(matrix, rng)
    if not (valid[0][0] and valid[nA - 1][nB - 1]):
        return False
    seen = [[False] * nB for _ in range(nA)]
    seen[0][0] = True
    queue = deque([(0, 0)])
    while queue:
        i, j = queue.popleft()
        if (i, j) == (nA - 1, nB - 1):
            return True
        for ti, tj in ((i + 1, j), (i - 1, j), (i, j + 1), (i, j - 1)):
            if 0 <= ti < nA and 0 <= tj < nB and valid[ti][tj] and not seen[ti][tj]:
                seen[ti][tj] = True
                queue.append((ti, tj))
    return False


def _shortcut_reach(matrix, rng) -> bool:
    # (nA, nB) is reachable with one-sided shortcuts iff both endpoints are
    # in range and rows k_2 <= k_3 <= ... can be chosen so that column l
    # holds an in-range position at row k_l, for every interior column.
    # Greedily taking the lowest admissible row per column is exact.
    nA, nB = matrix.nA, matrix.nB
    valid = _valid_grid(matrix, rng)
    if not (valid[0][0] and valid[nA - 1][nB - 1]):
        return False
    row = 0
    for col in range(1, nB - 1):
        while row < nA and not valid[row][col]:
            row += 1
        if row == nA:
            return False
    return True


_REACH = {
    "strong": _strong_reach,
    "shortcut": _shortcut_reach,
    "weak": _weak_reach,
}


def reach_bfs(matrix: DistanceMatrix, rng: DistanceRange, variant: str) -> bool:
    """Is (nA, nB) reachable from (1, 1) for this range, per the variant?"""
    return _REACH[variant](matrix, rng)


def bfs_threshold(matrix: DistanceMatrix, variant: str) -> float:
    """Smallest distance value v such that [0, v] is feasible (linear scan)."""
    values = sorted(set(matrix.values.ravel().tolist()))
    for v in values:
        if reach_bfs(matrix, DistanceRange(0.0, v), variant):
            return v
    raise InternalError("no feasible threshold; even the full range failed")


def brute_force_smallest_range(
    matrix: DistanceMatrix, variant: str, score: RangeScore
):
    """Exhaustive minimum of the score over all candidate value ranges.

    Lower limits are the values up to min(d(1,1), d(nA,nB)); upper limits
    the values from the variant's threshold up.  Each candidate is tested
    with :func:`reach_bfs`.  Ties break toward the smaller upper limit,
    then the larger lower limit, making the winning range deterministic.
    """
    values = sorted(set(matrix.values.ravel().tolist()))
    end_cut = min(matrix.dist(1, 1), matrix.dist(matrix.nA, matrix.nB))
    lows = [v for v in values if v <= end_cut]
    thr = bfs_threshold(matrix, variant)
    highs = [v for v in values if v >= thr]
    best = None
    for high in highs:
        for low in reversed(lows):
            if low > high:
                continue
            rng = DistanceRange(low, high)
            if not reach_bfs(matrix, rng, variant):
                continue
            value = score.of(low, high)
            if best is None or value < best[0]:
                best = (value, rng)
            break  # larger lows only shrink the range further
    if best is None:
        raise InternalError("no feasible range found by brute force")
    return best


def all_pairs_smallest_range(matrix: DistanceMatrix, variant: str, score: RangeScore):
    """Even slower cross-check: every ordered pair of distance values."""
    values = sorted(set(matrix.values.ravel().tolist()))
    best = None
    for a_idx, low in enumerate(values):
        for high in values[a_idx:]:
            rng = DistanceRange(low, high)
            if not reach_bfs(matrix, rng, variant):
                continue
            value = score.of(low, high)
            key = (value, high, -low)
            if best is None or key < best[0]:
                best = (key, rng)
    if best is None:
        raise InternalError("no feasible range found by brute force")
    return best[0][0], best[1]
