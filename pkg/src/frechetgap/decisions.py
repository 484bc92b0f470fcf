"""Feasibility decisions for a distance range, one per traversal variant.

All three procedures answer "can the two frogs get from (1, 1) to
(nA, nB) using only positions whose distance lies in the range?" and, on
success, return a witness walk of 1-based grid positions.

* strong: both frogs only move forward, single or simultaneous steps.
* shortcut: the first curve's frog may skip forward over its points; the
  walk is found greedily in O(nA + nB) and records skipped (out-of-range)
  positions as well, so the per-column coverage condition can be checked
  directly on the witness.
* weak: forward and backward single steps, decided by a right-hand
  wall-follower over the grid viewed as a maze of rooms.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .curves import DistanceMatrix
from .errors import InternalError
from .ranges import DistanceRange

__all__ = [
    "Decision",
    "Walk",
    "strong_decide",
    "shortcut_decide",
    "weak_decide",
    "VARIANTS",
    "EAST",
    "SOUTH",
    "WEST",
    "NORTH",
]

Walk = list  # list[tuple[int, int]] of 1-based (i, j) positions


@dataclass(frozen=True)
class Decision:
    feasible: bool
    witness: Optional[Walk] = None


# Direction codes for the wall-follower.  A right turn is (d + 1) % 4,
# a left turn is (d - 1) % 4.  North increments i, east increments j.
EAST, SOUTH, WEST, NORTH = 0, 1, 2, 3


def strong_decide(matrix: DistanceMatrix, rng: DistanceRange) -> Decision:
    """Monotone grid reachability with moves (+1,0), (0,+1), (+1,+1).

    Dynamic programming over the grid in O(nA * nB); the witness is
    reconstructed from per-cell predecessor choices.
    """
    nA, nB = matrix.nA, matrix.nB
    d = matrix.values
    valid = (d >= rng.low) & (d <= rng.high)
    if not (valid[0, 0] and valid[nA - 1, nB - 1]):
        return Decision(False)

    # parent codes: 0 unreached, 1 start, 2 from left, 3 from below row, 4 diagonal
    parent = [[0] * nB for _ in range(nA)]
    prev_row = [False] * nB
    for i in range(nA):
        vrow = valid[i].tolist()
        row = [False] * nB
        for j in range(nB):
            if not vrow[j]:
                continue
            if i == 0 and j == 0:
                row[j] = True
                parent[i][j] = 1
            elif j > 0 and row[j - 1]:
                row[j] = True
                parent[i][j] = 2
            elif prev_row[j]:
                row[j] = True
                parent[i][j] = 3
            elif j > 0 and prev_row[j - 1]:
                row[j] = True
                parent[i][j] = 4
        prev_row = row

    if not prev_row[nB - 1]:
        return Decision(False)

    steps = []
    i, j = nA - 1, nB - 1
    while True:
        steps.append((i + 1, j + 1))
        code = parent[i][j]
        if code == 1:
            break
        if code == 2:
            j -= 1
        elif code == 3:
            i -= 1
        elif code == 4:
            i -= 1
            j -= 1
        else:
            raise InternalError("reachable cell without a predecessor")
    steps.reverse()
    return Decision(True, steps)


def shortcut_decide(matrix: DistanceMatrix, rng: DistanceRange) -> Decision:
    """Greedy one-sided-shortcuts decision in O(nA + nB).

    The second curve's frog advances while the current position is in
    range; otherwise the first curve's frog skips ahead one point.  "Yes"
    as soon as the last column is reached at an in-range position, at
    which point the first frog may jump straight to its last point.  The
    witness lists every visited position, in-range or not, padded with the
    final column run so it ends at (nA, nB).
    """
    nA, nB = matrix.nA, matrix.nB
    d = matrix.values
    if not (rng.contains(float(d[0, 0])) and rng.contains(float(d[nA - 1, nB - 1]))):
        return Decision(False)
    i, j = 1, 1
    walk = []
    while True:
        walk.append((i, j))
        if rng.contains(float(d[i - 1, j - 1])):
            if j < nB:
                j += 1
            else:
                walk.extend((k, nB) for k in range(i + 1, nA + 1))
                return Decision(True, walk)
        else:
            if i < nA:
                i += 1
            else:
                return Decision(False)


def weak_decide(matrix: DistanceMatrix, rng: DistanceRange) -> Decision:
    """Wall-follower decision for the weak variant (no simultaneous jumps).

    The grid is a maze of rooms; a door is passable when the rooms on both
    of its sides are in range.  Starting at (1, 1) against the southern
    wall and keeping the right hand on the wall either reaches (nA, nB) or
    returns to the initial state, which means "no".  Termination compares
    the full (room, direction) state, not the room alone, so paths that
    merely revisit the start room are not cut short.
    """
    nA, nB = matrix.nA, matrix.nB
    d = matrix.values
    if not (rng.contains(float(d[0, 0])) and rng.contains(float(d[nA - 1, nB - 1]))):
        return Decision(False)

    i, j = 1, 1
    direction = EAST
    walk = [(1, 1)]
    goal = (nA, nB)
    budget = 4 * nA * nB + 8
    while (i, j) != goal:
        budget -= 1
        if budget < 0:
            raise InternalError("wall-follower exceeded its step budget")
        if direction == EAST:
            ti, tj = i, j + 1
        elif direction == SOUTH:
            ti, tj = i - 1, j
        elif direction == WEST:
            ti, tj = i, j - 1
        else:
            ti, tj = i + 1, j
        if 1 <= ti <= nA and 1 <= tj <= nB and rng.contains(float(d[ti - 1, tj - 1])):
            i, j = ti, tj
            walk.append((i, j))
            direction = (direction + 1) % 4
        else:
            direction = (direction - 1) % 4
        if (i, j, direction) == (1, 1, EAST):
            return Decision(False)
    return Decision(True, walk)


VARIANTS = {
    "strong": strong_decide,
    "shortcut": shortcut_decide,
    "weak": weak_decide,
}
