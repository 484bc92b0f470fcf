"""Point sequences and the all-pairs Euclidean distance matrix.

Every algorithm in this package consumes a :class:`DistanceMatrix`.  Users
with a non-Euclidean metric can construct one directly from precomputed
values instead of going through :func:`build_distance_matrix`.
"""

from __future__ import annotations

import numpy as np

from .errors import InputError

__all__ = ["Curve", "DistanceMatrix", "distance", "build_distance_matrix"]


class Curve:
    """An ordered, non-empty sequence of points in R^dim."""

    __slots__ = ("points",)

    def __init__(self, points) -> None:
        arr = np.asarray(points, dtype=np.float64)
        if arr.ndim != 2 or arr.shape[0] == 0 or arr.shape[1] == 0:
            raise InputError(
                "a curve needs at least one point and all points must share one dimension"
            )
        if not np.all(np.isfinite(arr)):
            raise InputError("curve coordinates must be finite reals")
        arr.setflags(write=False)
        self.points = arr

    def __len__(self) -> int:
        return self.points.shape[0]

    @property
    def dim(self) -> int:
        return self.points.shape[1]

    def __getitem__(self, idx):
        return self.points[idx]

    def __eq__(self, other) -> bool:
        return isinstance(other, Curve) and np.array_equal(self.points, other.points)

    def __repr__(self) -> str:
        return f"Curve({self.points.tolist()!r})"

    def translated(self, vector) -> "Curve":
        vec = np.asarray(vector, dtype=np.float64)
        if vec.shape != (self.dim,):
            raise InputError(f"translation vector must have dimension {self.dim}")
        return Curve(self.points + vec)

    def scaled(self, factor: float) -> "Curve":
        return Curve(self.points * float(factor))


def distance(p, q) -> float:
    """Euclidean distance between two points of equal dimension."""
    pa = np.asarray(p, dtype=np.float64)
    qa = np.asarray(q, dtype=np.float64)
    if pa.shape != qa.shape or pa.ndim != 1:
        raise InputError(f"dimension mismatch: {pa.shape} vs {qa.shape}")
    return float(np.sqrt(np.sum((pa - qa) ** 2)))


class DistanceMatrix:
    """nA x nB matrix of non-negative pairwise distances.

    Entry ``[i-1, j-1]`` is the distance between point i of the first curve
    and point j of the second (1-based grid positions, as used by every
    decision procedure).
    """

    __slots__ = ("values", "nA", "nB")

    def __init__(self, values) -> None:
        arr = np.asarray(values, dtype=np.float64)
        if arr.ndim != 2 or arr.shape[0] == 0 or arr.shape[1] == 0:
            raise InputError("distance matrix must be a non-empty 2-d array")
        if not np.all(np.isfinite(arr)) or np.any(arr < 0.0):
            raise InputError("distances must be finite and non-negative")
        arr.setflags(write=False)
        self.values = arr
        self.nA = arr.shape[0]
        self.nB = arr.shape[1]

    def dist(self, i: int, j: int) -> float:
        """Distance at 1-based grid position (i, j)."""
        return float(self.values[i - 1, j - 1])

    def transposed(self) -> "DistanceMatrix":
        return DistanceMatrix(self.values.T)

    def __repr__(self) -> str:
        return f"DistanceMatrix({self.nA}x{self.nB})"


def build_distance_matrix(a: Curve, b: Curve) -> DistanceMatrix:
    """All-pairs Euclidean distances between the points of two curves."""
    if a.dim != b.dim:
        raise InputError(f"curves have different dimensions: {a.dim} vs {b.dim}")
    diff = a.points[:, None, :] - b.points[None, :, :]
    return DistanceMatrix(np.sqrt(np.sum(diff * diff, axis=2)))
