"""Seeded synthetic curve pairs for tests, demos and benchmarks."""

from __future__ import annotations

import random
from typing import Optional

from .curves import Curve
from .errors import InputError

__all__ = ["generate", "outlier_showcase", "OUTLIER_SHOWCASE_SEED"]

# Seed under which generate("offset-outlier", n=4, offset=(0, 1), outliers=1,
# magnitude=8.0) reproduces outlier_showcase() exactly: the base walk runs
# flat along the x axis and the displaced point lands at index 3.
OUTLIER_SHOWCASE_SEED = 16


def outlier_showcase() -> tuple:
    """Canonical 4-point pair: near-identical curves except one spike.

    The second curve walks the x axis; the first is its unit-y translate
    with the third point pushed far out.  Small gap with shortcuts, large
    plain distance.
    """
    a = Curve([(0.0, 1.0), (1.0, 1.0), (2.0, 9.0), (3.0, 1.0)])
    b = Curve([(0.0, 0.0), (1.0, 0.0), (2.0, 0.0), (3.0, 0.0)])
    return a, b


def _walk(rng: random.Random, n: int, start) -> list:
    x, y = float(start[0]), float(start[1])
    pts = [(x, y)]
    for _ in range(n - 1):
        x += 1.0
        y += float(rng.choice((-1, 0, 1)))
        pts.append((x, y))
    return pts


def generate(
    kind: str,
    n: int,
    offset=(0.0, 1.0),
    outliers: int = 0,
    magnitude: float = 0.0,
    seed: int = 0,
) -> tuple:
    """Deterministic pair of 2-d curves.

    * ``offset-outlier``: the second curve is a seeded lattice walk; the
      first is its translate by ``offset`` with ``outliers`` interior
      points pushed ``magnitude`` further along y.
    * ``random-walk``: two independent seeded walks, the second starting
      at ``offset``.
    """
    if n < 2:
        raise InputError("need at least two points per curve")
    rng = random.Random(seed)
    if kind == "offset-outlier":
        if not 0 <= outliers < n:
            raise InputError("outlier count must be in [0, n)")
        base = _walk(rng, n, (0.0, 0.0))
        ox, oy = float(offset[0]), float(offset[1])
        shifted = [(x + ox, y + oy) for x, y in base]
        interior = list(range(1, n - 1))
        if outliers > len(interior):
            raise InputError("too many outliers for the interior of the curve")
        for idx in sorted(rng.sample(interior, outliers)):
            x, y = shifted[idx]
            shifted[idx] = (x, y + float(magnitude))
        return Curve(shifted), Curve(base)
    if kind == "random-walk":
        a = _walk(rng, n, (0.0, 0.0))
        b = _walk(rng, n, offset)
        return Curve(a), Curve(b)
    raise InputError(f"unknown generator kind {kind!r}")
