"""Distance ranges and the monotone scores (gap, ratio) minimized over them.

A score must satisfy: widening a range never decreases it.  Formally, for
0 <= c <= a <= b <= d, ``score(a, b) <= score(c, d)``.  Both shipped scores
have this property; adding a third is a matter of defining one more
:class:`RangeScore` instance here.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from .errors import InputError

__all__ = ["DistanceRange", "RangeScore", "GAP", "RATIO", "SCORES"]


@dataclass(frozen=True)
class DistanceRange:
    """Closed interval [low, high] of distances, 0 <= low <= high."""

    low: float
    high: float

    def __post_init__(self) -> None:
        if not (0.0 <= self.low <= self.high):
            raise InputError(f"invalid distance range [{self.low}, {self.high}]")

    def contains(self, value: float) -> bool:
        """Closed-interval membership; both endpoints count."""
        return self.low <= value <= self.high

    def issubset(self, other: "DistanceRange") -> bool:
        return other.low <= self.low and self.high <= other.high


@dataclass(frozen=True)
class RangeScore:
    """A monotone figure of merit for a distance range."""

    name: str
    fn: Callable[[float, float], float]

    def of(self, low: float, high: float) -> float:
        return self.fn(low, high)


def _gap(low: float, high: float) -> float:
    return high - low


def _ratio(low: float, high: float) -> float:
    # Conventions at zero: identical curves score a perfect 1, and any
    # positive spread over a zero lower limit is infinitely bad.  Both keep
    # the score monotone.
    if low == 0.0:
        return 1.0 if high == 0.0 else math.inf
    return high / low


GAP = RangeScore("gap", _gap)
RATIO = RangeScore("ratio", _ratio)

SCORES = {"gap": GAP, "ratio": RATIO}
