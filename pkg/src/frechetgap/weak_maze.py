"""Contractible maze for the weak variant's wall-follower decision.

Rooms are grid positions with four directed doors (east, south, west,
north).  A walk may pass a door only when the target room is in range;
the right-hand wall-follower from the start room then reaches the goal
exactly when a weak path exists.

Contraction for a submatrix view removes rooms whose validity is the same
for every range of the view.  Doors into always-invalid rooms become
walls.  A connected blob of always-valid rooms acts like one big room:
a wall-follower that enters it circles its boundary and leaves through
the first passable door out.  Which door that is depends on the queried
range, so a door into a blob is rewired to a *portal*: the ordered list
of (exit room, arrival direction) pairs the boundary circuit would try.
Deciding scans the portal for the first in-range exit, which reproduces
the uncontracted walk move for move.  Holes inside a blob need no special
handling; the circuit simulation simply never reaches them.
"""

from __future__ import annotations

from typing import Optional

import numpy as np

from .curves import DistanceMatrix
from .decisions import Decision, EAST
from .errors import ContractViolationError, InputError, InternalError
from .ladder import DistanceLadder
from .ranges import DistanceRange
from .salg import MatrixView

__all__ = ["WeakMaze", "build_initial_maze"]

_NON_FIXED, _FIXED_VALID, _FIXED_INVALID = 0, 1, 2
_WALL = -1
# Door values >= 0 are room ids, -1 is a wall, anything below encodes a
# portal: portal index p is stored as -(p + 2).


class WeakMaze:
    """Parallel-array maze; ``doors[d][room]`` is a room id, -1, or a portal."""

    __slots__ = (
        "nA",
        "nB",
        "rows",
        "cols",
        "vals",
        "vmin",
        "vmax",
        "doors",
        "portals",
        "start",
        "goal",
        "view",
        "ladder",
    )

    def __init__(self, nA, nB, rows, cols, vals, vmin, vmax, doors, portals,
                 start, goal, view, ladder):
        self.nA = nA
        self.nB = nB
        self.rows = rows
        self.cols = cols
        self.vals = vals
        self.vmin = vmin
        self.vmax = vmax
        self.doors = doors
        self.portals = portals
        self.start = start
        self.goal = goal
        self.view = view
        self.ladder = ladder

    def size(self) -> int:
        return len(self.vals)

    def _classes(self, view: MatrixView):
        rl, rh, cl, ch = view.row_lo, view.row_hi, view.col_lo, view.col_hi
        lo_val = self.ladder.d_min(rl)
        hi_val = self.ladder.d_max(cl)
        out = []
        append = out.append
        for vmin, vmax, val in zip(self.vmin, self.vmax, self.vals):
            if rl <= vmin <= rh or cl <= vmax <= ch:
                append(_NON_FIXED)
            elif lo_val < val < hi_val:
                append(_FIXED_VALID)
            else:
                append(_FIXED_INVALID)
        return out

    def contract(self, view: MatrixView) -> "WeakMaze":
        """Rewire doors past always-valid blobs and drop all fixed rooms."""
        if self.view is not None and not (
            self.view.row_lo <= view.row_lo
            and view.row_hi <= self.view.row_hi
            and self.view.col_lo <= view.col_lo
            and view.col_hi <= self.view.col_hi
        ):
            raise InputError("contraction view must nest inside the parent view")
        cls = self._classes(view)
        start, goal = self.start, self.goal
        doors = self.doors
        portals = self.portals
        n = len(cls)
        # Start and goal survive every contraction, so they never join a blob.
        in_blob = [
            cls[v] == _FIXED_VALID and v != start and v != goal for v in range(n)
        ]

        def step(state):
            """One wall-follower step inside a blob.

            Returns (exit events emitted here, next state or None).  Exits
            are doors to surviving rooms; the circuit records them and
            carries on as if they were walls, because whether the real walk
            passes one depends on the queried range.
            """
            room, d = state
            door = doors[d][room]
            blocked = (room, (d - 1) % 4)
            if door == _WALL:
                return (), blocked
            if door >= 0:
                if in_blob[door]:
                    return (), (door, (d + 1) % 4)
                if cls[door] == _FIXED_INVALID:
                    return (), blocked
                return ((door, (d + 1) % 4),), blocked
            events = []
            for tgt, adir in portals[-door - 2]:
                if in_blob[tgt]:
                    # The walk would enter this blob room; the circuit
                    # continues from there and later entries are dead.
                    return tuple(events), (tgt, adir)
                if cls[tgt] != _FIXED_INVALID:
                    events.append((tgt, adir))
            return tuple(events), blocked

        step_memo: dict = {}

        def circuit_events(landing):
            """All exits the circuit from this landing state can offer.

            The walk is deterministic over finitely many states, so its
            event stream is eventually periodic; one pass up to the first
            repeated state already contains every distinct exit in order.
            """
            events = []
            seen = set()
            state = landing
            while state not in seen:
                seen.add(state)
                cached = step_memo.get(state)
                if cached is None:
                    cached = step(state)
                    step_memo[state] = cached
                emitted, state = cached
                events.extend(emitted)
            return events

        keep = [v for v in range(n) if cls[v] == _NON_FIXED or v == start or v == goal]
        new_id = [-1] * n
        for new, old in enumerate(keep):
            new_id[old] = new

        new_portals = []

        def encode(chain, plain_dir):
            mapped = [(new_id[tgt], adir) for tgt, adir in chain]
            if not mapped:
                return _WALL
            if len(mapped) == 1 and mapped[0][1] == plain_dir:
                return mapped[0][0]
            new_portals.append(tuple(mapped))
            return -(len(new_portals) - 1) - 2

        def reroute(room: int, d: int) -> int:
            door = doors[d][room]
            if door == _WALL:
                return _WALL
            if door >= 0:
                if in_blob[door]:
                    return encode(circuit_events((door, (d + 1) % 4)), (d + 1) % 4)
                if cls[door] == _FIXED_INVALID:
                    return _WALL
                return new_id[door]
            chain = []
            for tgt, adir in portals[-door - 2]:
                if in_blob[tgt]:
                    chain.extend(circuit_events((tgt, adir)))
                    break
                if cls[tgt] != _FIXED_INVALID:
                    chain.append((tgt, adir))
            return encode(chain, (d + 1) % 4)

        new_doors = [[reroute(v, d) for v in keep] for d in range(4)]
        return WeakMaze(
            self.nA,
            self.nB,
            [self.rows[v] for v in keep],
            [self.cols[v] for v in keep],
            [self.vals[v] for v in keep],
            [self.vmin[v] for v in keep],
            [self.vmax[v] for v in keep],
            new_doors,
            new_portals,
            new_id[start],
            new_id[goal],
            view,
            self.ladder,
        )

    def _check_cell(self, rng: DistanceRange) -> None:
        view = self.view
        try:
            mi = self.ladder.min_index_of(rng.low)
            ma = self.ladder.max_index_of(rng.high)
        except InputError as exc:
            raise ContractViolationError(str(exc)) from exc
        if (
            mi is None
            or ma is None
            or not (view.row_lo <= mi <= view.row_hi)
            or not (view.col_lo <= ma <= view.col_hi)
        ):
            raise ContractViolationError(
                f"range [{rng.low}, {rng.high}] is not a cell of view {view}"
            )

    def decide(self, rng: DistanceRange, want_witness: bool = False) -> Decision:
        """Right-hand wall-follower from (start, east); state-based termination."""
        if __debug__ and self.view is not None:
            self._check_cell(rng)
        vals = self.vals
        lo, hi = rng.low, rng.high
        if not (lo <= vals[self.start] <= hi and lo <= vals[self.goal] <= hi):
            return Decision(False)
        doors = self.doors
        portals = self.portals
        start, goal = self.start, self.goal
        cur = start
        d = EAST
        trail = [(self.rows[cur], self.cols[cur])] if want_witness else None
        budget = 4 * len(vals) + 8
        while cur != goal:
            budget -= 1
            if budget < 0:
                raise InternalError("wall-follower exceeded its state budget")
            door = doors[d][cur]
            moved = False
            if door >= 0:
                if lo <= vals[door] <= hi:
                    cur = door
                    d = (d + 1) % 4
                    moved = True
            elif door != _WALL:
                for tgt, adir in portals[-door - 2]:
                    if lo <= vals[tgt] <= hi:
                        cur = tgt
                        d = adir
                        moved = True
                        break
            if moved:
                if want_witness:
                    trail.append((self.rows[cur], self.cols[cur]))
            else:
                d = (d - 1) % 4
            if cur == start and d == EAST:
                return Decision(False)
        return Decision(True, trail)


def build_initial_maze(matrix: DistanceMatrix, ladder: DistanceLadder) -> WeakMaze:
    """Full-grid maze with geometric doors, walls along the grid edges."""
    nA, nB = matrix.nA, matrix.nB
    total = nA * nB
    flat_i = np.repeat(np.arange(1, nA + 1), nB)
    flat_j = np.tile(np.arange(1, nB + 1), nA)
    flat_v = matrix.values.ravel()
    p = np.arange(total)

    east = np.where(flat_j < nB, p + 1, -1)
    west = np.where(flat_j > 1, p - 1, -1)
    north = np.where(flat_i < nA, p + nB, -1)
    south = np.where(flat_i > 1, p - nB, -1)

    values_arr = np.asarray(ladder.values)
    pos = np.searchsorted(values_arr, flat_v)
    n_values = len(values_arr)
    first_max = n_values - ladder.k
    vmin = np.where(pos < ladder.m, ladder.m - pos, 0)
    vmax = np.where(pos >= first_max, pos - first_max + 1, 0)

    doors = [east.tolist(), south.tolist(), west.tolist(), north.tolist()]
    return WeakMaze(
        nA,
        nB,
        flat_i.tolist(),
        flat_j.tolist(),
        flat_v.tolist(),
        vmin.tolist(),
        vmax.tolist(),
        doors,
        [],
        0,
        total - 1,
        None,
        ladder,
    )
