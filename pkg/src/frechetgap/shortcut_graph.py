"""Contractible decision graph for the one-sided-shortcuts variant.

Vertices are grid positions; each has a "stay and advance the other
curve" edge (jump_b) and a "skip this point" edge (jump_a).  The greedy
decision walks jump_b while the current position is in range and jump_a
otherwise, which makes the walk through positions whose class is known in
advance (fixed for a whole submatrix of candidate ranges) completely
predictable.  Contraction precomputes where such runs end, rewires the
surviving vertices' edges past them, and drops the fixed vertices, so
deciding any range of the submatrix costs time linear in the contracted,
not original, size.

There are deliberately no simultaneous-move edges here: the greedy walk
never advances both curves at once.
"""

from __future__ import annotations

from typing import Optional

import numpy as np

from .curves import DistanceMatrix
from .decisions import Decision
from .errors import ContractViolationError, InputError, InternalError
from .ladder import DistanceLadder
from .ranges import DistanceRange
from .salg import MatrixView

__all__ = ["ShortcutGraph", "build_initial_graph"]

_NON_FIXED, _FIXED_VALID, _FIXED_INVALID = 0, 1, 2


class ShortcutGraph:
    """Parallel-array graph; vertices sorted by descending i + j.

    That order is a reverse topological sort (every edge strictly increases
    i + j, goal self-loop aside), which is exactly the order contraction
    needs, and filtering preserves it, so it is established once at build
    time.  Jump targets are vertex ids, -1 for the missing edge past the
    last row.
    """

    __slots__ = (
        "nA",
        "nB",
        "rows",
        "cols",
        "vals",
        "vmin",
        "vmax",
        "jump_b",
        "jump_a",
        "start",
        "goal",
        "view",
        "ladder",
    )

    def __init__(self, nA, nB, rows, cols, vals, vmin, vmax, jump_b, jump_a,
                 start, goal, view, ladder):
        self.nA = nA
        self.nB = nB
        self.rows = rows
        self.cols = cols
        self.vals = vals
        self.vmin = vmin
        self.vmax = vmax
        self.jump_b = jump_b
        self.jump_a = jump_a
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

    def contract(self, view: MatrixView) -> "ShortcutGraph":
        """Shrink to the vertices that matter for the view's ranges.

        One pass in reverse topological order computes, for every fixed
        vertex, the first non-fixed vertex the greedy walk would reach from
        it; surviving vertices' jumps are then rerouted through those
        pointers.  Start and goal always survive.  Linear in current size.
        """
        if self.view is not None and not (
            self.view.row_lo <= view.row_lo
            and view.row_hi <= self.view.row_hi
            and self.view.col_lo <= view.col_lo
            and view.col_hi <= self.view.col_hi
        ):
            raise InputError("contraction view must nest inside the parent view")
        cls = self._classes(view)
        goal = self.goal
        start = self.start
        jump_b = self.jump_b
        jump_a = self.jump_a
        n = len(cls)

        nxt = [-1] * n
        nxt[goal] = goal
        for v in range(n):
            if cls[v] != _NON_FIXED and v != goal:
                t = jump_b[v] if cls[v] == _FIXED_VALID else jump_a[v]
                if t == -1:
                    nxt[v] = -1
                elif cls[t] != _NON_FIXED:
                    nxt[v] = nxt[t]
                else:
                    nxt[v] = t

        keep = [v for v in range(n) if cls[v] == _NON_FIXED or v == start or v == goal]
        new_id = [-1] * n
        for new, old in enumerate(keep):
            new_id[old] = new

        def reroute(t: int) -> int:
            if t == -1:
                return -1
            if cls[t] != _NON_FIXED and t != goal:
                t = nxt[t]
                if t == -1:
                    return -1
            return new_id[t]

        nb = [reroute(jump_b[v]) for v in keep]
        na = [reroute(jump_a[v]) for v in keep]
        return ShortcutGraph(
            self.nA,
            self.nB,
            [self.rows[v] for v in keep],
            [self.cols[v] for v in keep],
            [self.vals[v] for v in keep],
            [self.vmin[v] for v in keep],
            [self.vmax[v] for v in keep],
            nb,
            na,
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
        """Greedy walk over the (possibly contracted) graph."""
        if __debug__ and self.view is not None:
            self._check_cell(rng)
        vals = self.vals
        lo, hi = rng.low, rng.high
        if not (lo <= vals[self.start] <= hi and lo <= vals[self.goal] <= hi):
            return Decision(False)
        jump_b = self.jump_b
        jump_a = self.jump_a
        goal = self.goal
        cur = self.start
        trail = [(self.rows[cur], self.cols[cur])] if want_witness else None
        budget = len(vals) + 2
        while cur != goal:
            budget -= 1
            if budget < 0:
                raise InternalError("decision walk exceeded the vertex budget")
            cur = jump_b[cur] if lo <= vals[cur] <= hi else jump_a[cur]
            if cur == -1:
                return Decision(False)
            if want_witness:
                trail.append((self.rows[cur], self.cols[cur]))
        return Decision(True, trail)


def build_initial_graph(matrix: DistanceMatrix, ladder: DistanceLadder) -> ShortcutGraph:
    """Full-grid graph: jump_b steps along the second curve (from its last
    column straight to the goal), jump_a skips a point of the first curve
    (absent on the last row)."""
    nA, nB = matrix.nA, matrix.nB
    total = nA * nB
    flat_i = np.repeat(np.arange(1, nA + 1), nB)
    flat_j = np.tile(np.arange(1, nB + 1), nA)
    flat_v = matrix.values.ravel()

    order = np.argsort(-(flat_i + flat_j), kind="stable")
    id_of = np.empty(total, dtype=np.int64)
    id_of[order] = np.arange(total)

    goal_flat = total - 1
    p = np.arange(total)
    jb_flat = np.where(flat_j < nB, p + 1, goal_flat)
    ja_flat = np.where(flat_i < nA, p + nB, -1)

    jb = id_of[jb_flat[order]]
    ja_src = ja_flat[order]
    ja = np.where(ja_src >= 0, id_of[np.clip(ja_src, 0, total - 1)], -1)

    values_arr = np.asarray(ladder.values)
    pos = np.searchsorted(values_arr, flat_v[order])
    n_values = len(values_arr)
    first_max = n_values - ladder.k
    vmin = np.where(pos < ladder.m, ladder.m - pos, 0)
    vmax = np.where(pos >= first_max, pos - first_max + 1, 0)

    return ShortcutGraph(
        nA,
        nB,
        flat_i[order].tolist(),
        flat_j[order].tolist(),
        flat_v[order].tolist(),
        vmin.tolist(),
        vmax.tolist(),
        jb.tolist(),
        ja.tolist(),
        int(id_of[0]),
        int(id_of[goal_flat]),
        None,
        ladder,
    )
