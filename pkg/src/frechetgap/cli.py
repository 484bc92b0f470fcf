"""Command-line interface: compute measures, generate curves, benchmark.

Entry points print a single JSON document to stdout; human-readable
summaries go to stderr.  Exit codes: 0 success, 1 bad input, 2 internal
invariant failure.  Output is byte-identical across runs for identical
inputs and seeds; pass ``--timing`` to include wall-clock numbers, which
breaks that guarantee by nature.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import statistics
import sys
import time
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .curves import Curve, DistanceMatrix, build_distance_matrix
from .decisions import VARIANTS
from .errors import InputError, InternalError
from .generate import generate
from .ladder import build_ladder, compute_threshold
from .ranges import SCORES, DistanceRange
from .salg import MatrixView, row_scan_smallest_range, search_smallest_range
from .shortcut_graph import build_initial_graph
from .sweep import plain_range_search
from .weak_maze import build_initial_maze

__all__ = ["ComputeRequest", "ComputeResult", "ingest_curve", "compute", "bench", "main"]

MEASURES = ("frechet", "gap", "ratio")
CLI_VARIANTS = ("plain", "shortcut", "weak")
ALGORITHMS = ("auto", "naive", "fast")

_DECIDE_VARIANT = {"plain": "strong", "shortcut": "shortcut", "weak": "weak"}


@dataclass(frozen=True)
class ComputeRequest:
    measure: str
    variant: str
    algorithm: str = "auto"
    emit_walk: bool = False
    timing: bool = False


@dataclass(frozen=True)
class ComputeResult:
    value: float
    range: Optional[DistanceRange]
    walk: Optional[list]
    stats: dict


def ingest_curve(source, fmt: str = "csv", name: str = "curve") -> Curve:
    """Parse a curve from a file path or inline text.

    CSV: one point per line, comma-separated coordinates, lines starting
    with '#' skipped.  JSON: array of arrays of numbers.  The dimension is
    inferred from the first point and must be uniform.
    """
    if isinstance(source, (str, os.PathLike)) and os.path.exists(source):
        with open(source, "r", encoding="utf-8") as fh:
            text = fh.read()
    else:
        text = str(source)
    if fmt == "json":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InputError(f"{name}: invalid JSON: {exc}") from exc
        if not isinstance(data, list) or not data:
            raise InputError(f"{name}: expected a non-empty JSON array of points")
        try:
            return Curve(data)
        except (InputError, ValueError) as exc:
            raise InputError(f"{name}: {exc}") from exc
    if fmt != "csv":
        raise InputError(f"{name}: unknown format {fmt!r}")
    points = []
    dim = None
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        tokens = [t.strip() for t in stripped.split(",")]
        try:
            coords = [float(t) for t in tokens]
        except ValueError as exc:
            raise InputError(f"{name}: line {lineno}: non-numeric token") from exc
        if not all(math.isfinite(c) for c in coords):
            raise InputError(f"{name}: line {lineno}: coordinates must be finite")
        if dim is None:
            dim = len(coords)
        elif len(coords) != dim:
            raise InputError(
                f"{name}: line {lineno}: expected {dim} coordinates, got {len(coords)}"
            )
        points.append(coords)
    if not points:
        raise InputError(f"{name}: empty input")
    return Curve(points)


def _counting(decide_fn):
    counter = [0]

    def wrapped(matrix, rng):
        counter[0] += 1
        return decide_fn(matrix, rng)

    return wrapped, counter


def compute(matrix: DistanceMatrix, req: ComputeRequest) -> ComputeResult:
    """Dispatch one measure computation over a prebuilt distance matrix."""
    if req.measure not in MEASURES:
        raise InputError(f"unknown measure {req.measure!r}")
    if req.variant not in CLI_VARIANTS:
        raise InputError(f"unknown variant {req.variant!r}")
    if req.algorithm not in ALGORITHMS:
        raise InputError(f"unknown algorithm {req.algorithm!r}")
    started = time.perf_counter()
    variant = _DECIDE_VARIANT[req.variant]
    decide, counter = _counting(VARIANTS[variant])

    if req.measure == "frechet":
        if req.algorithm == "naive":
            # Linear scan from below instead of binary search.
            values = np.unique(matrix.values).tolist()
            value = None
            for v in values:
                counter[0] += 1
                if VARIANTS[variant](matrix, DistanceRange(0.0, v)).feasible:
                    value = v
                    break
            if value is None:
                raise InternalError("no feasible threshold")
        else:
            value = compute_threshold(matrix, variant, decide)
        ladder = build_ladder(matrix, variant, decide)
        walk = None
        if req.emit_walk:
            walk = VARIANTS[variant](matrix, DistanceRange(0.0, value)).witness
        return ComputeResult(
            value, None, walk, _stats(matrix, ladder, counter[0], started, req)
        )

    score = SCORES[req.measure]
    if req.variant == "plain":
        if req.algorithm == "fast":
            raise InputError(
                "no fast algorithm exists for the plain gap/ratio; use auto or naive"
            )
        result = plain_range_search(matrix, score, decide)
        ladder = result.ladder
        total = counter[0]
        best, value, witness = result.best, result.value, result.witness
    else:
        ladder = build_ladder(matrix, variant, decide)
        raw = VARIANTS[variant]
        if req.algorithm == "naive":
            scan = row_scan_smallest_range(matrix, ladder, decide, score)
            value, best, witness = scan.value, scan.best, scan.witness
            total = counter[0] + scan.stats.decisions
        else:
            if req.variant == "shortcut":
                initial = build_initial_graph(matrix, ladder)
            else:
                initial = build_initial_maze(matrix, ladder)
            root = initial.contract(MatrixView.full(ladder))
            found = search_smallest_range(
                ladder, root, score, witness_decide=lambda rng: raw(matrix, rng)
            )
            value, best, witness = found.value, found.best, found.witness
            total = counter[0] + found.stats.decisions
    if not req.emit_walk:
        witness = None
    return ComputeResult(
        value, best, witness, _stats(matrix, ladder, total, started, req)
    )


def _stats(matrix, ladder, decisions, started, req) -> dict:
    stats = {
        "nA": matrix.nA,
        "nB": matrix.nB,
        "ladderM": ladder.m,
        "ladderK": ladder.k,
        "decisions": decisions,
    }
    if req.timing:
        stats["elapsedMicros"] = int((time.perf_counter() - started) * 1e6)
    return stats


def _result_json(req: ComputeRequest, result: ComputeResult) -> dict:
    doc = {
        "measure": req.measure,
        "variant": req.variant,
        "algorithm": req.algorithm,
        "value": result.value,
    }
    if result.range is not None:
        doc["range"] = {"s": result.range.low, "t": result.range.high}
    if result.walk is not None:
        doc["walk"] = [[i, j] for i, j in result.walk]
    doc["stats"] = result.stats
    return doc


def _fast_search_value(matrix, ladder, variant, score):
    if variant == "shortcut":
        initial = build_initial_graph(matrix, ladder)
    else:
        initial = build_initial_maze(matrix, ladder)
    root = initial.contract(MatrixView.full(ladder))
    return search_smallest_range(
        ladder, root, score, witness_decide=lambda rng: VARIANTS[variant](matrix, rng)
    ).value


def bench(
    sizes,
    trials: int,
    variant: str,
    measure: str,
    seed: int,
    naive_cutoff: int = 64,
) -> dict:
    """Median fast vs naive runtimes per size, with doubling ratios.

    Instances are seeded random walks.  Whenever both algorithms run, their
    values must agree exactly; a mismatch is an internal error.
    """
    if trials < 1:
        raise InputError("trials must be at least 1")
    if list(sizes) != sorted(set(int(s) for s in sizes)) or not sizes:
        raise InputError("sizes must be ascending and non-empty")
    if variant not in CLI_VARIANTS:
        raise InputError(f"unknown variant {variant!r}")
    if measure not in ("gap", "ratio"):
        raise InputError("bench supports the gap and ratio measures")
    score = SCORES[measure]
    dec_variant = _DECIDE_VARIANT[variant]
    rows = []
    prev_fast = None
    for size in sizes:
        fast_times = []
        naive_times = []
        agree = True
        for trial in range(trials):
            a, b = generate(
                "random-walk", int(size), offset=(1.0, 1.0), seed=seed + 1000 * trial + size
            )
            matrix = build_distance_matrix(a, b)
            begin = time.perf_counter()
            if variant == "plain":
                fast_value = plain_range_search(matrix, score).value
            else:
                ladder = build_ladder(matrix, dec_variant)
                fast_value = _fast_search_value(matrix, ladder, dec_variant, score)
            fast_times.append(time.perf_counter() - begin)
            if size <= naive_cutoff:
                begin = time.perf_counter()
                if variant == "plain":
                    naive_value = plain_range_search(matrix, score).value
                else:
                    ladder = build_ladder(matrix, dec_variant)
                    naive_value = row_scan_smallest_range(
                        matrix, ladder, VARIANTS[dec_variant], score
                    ).value
                naive_times.append(time.perf_counter() - begin)
                if naive_value != fast_value:
                    agree = False
        if not agree:
            raise InternalError(f"fast and naive values disagree at n={size}")
        fast_med = statistics.median(fast_times)
        row = {
            "n": int(size),
            "fastMedianMicros": int(fast_med * 1e6),
            "naiveMedianMicros": int(statistics.median(naive_times) * 1e6)
            if naive_times
            else None,
            "valuesAgree": agree,
            "ratioToPrev": (fast_med / prev_fast) if prev_fast else None,
        }
        prev_fast = fast_med
        rows.append(row)
    return {
        "variant": variant,
        "measure": measure,
        "trials": trials,
        "seed": seed,
        "rows": rows,
    }


def _summary(text: str) -> None:
    if os.environ.get("NO_COLOR") or not sys.stderr.isatty():
        sys.stderr.write(text + "\n")
    else:
        sys.stderr.write(f"\x1b[32m{text}\x1b[0m\n")


def _cmd_compute(args) -> int:
    a = ingest_curve(args.curve_a, args.format, name=str(args.curve_a))
    b = ingest_curve(args.curve_b, args.format, name=str(args.curve_b))
    matrix = build_distance_matrix(a, b)
    req = ComputeRequest(
        measure=args.measure,
        variant=args.variant,
        algorithm=args.algorithm,
        emit_walk=args.emit_walk,
        timing=args.timing,
    )
    result = compute(matrix, req)
    print(json.dumps(_result_json(req, result)))
    rng_txt = (
        f" range=[{result.range.low:.9g}, {result.range.high:.9g}]"
        if result.range
        else ""
    )
    _summary(
        f"{args.measure}[{args.variant},{args.algorithm}] value={result.value:.9g}{rng_txt}"
    )
    return 0


def _cmd_gen(args) -> int:
    offset = tuple(float(x) for x in args.offset.split(","))
    if len(offset) != 2:
        raise InputError("offset must be X,Y")
    a, b = generate(
        args.kind, args.n, offset=offset, outliers=args.outliers,
        magnitude=args.magnitude, seed=args.seed,
    )
    for path, curve in ((args.out_a, a), (args.out_b, b)):
        with open(path, "w", encoding="utf-8") as fh:
            for point in curve.points.tolist():
                fh.write(",".join(repr(c) for c in point) + "\n")
    print(
        json.dumps(
            {
                "kind": args.kind,
                "n": args.n,
                "seed": args.seed,
                "outA": str(args.out_a),
                "outB": str(args.out_b),
            }
        )
    )
    return 0


def _cmd_bench(args) -> int:
    sizes = [int(s) for s in args.sizes.split(",") if s.strip()]
    report = bench(
        sizes, args.trials, args.variant, args.measure, args.seed, args.naive_cutoff
    )
    print(json.dumps(report))
    header = f"{'n':>6} {'fast (us)':>12} {'naive (us)':>12} {'x prev':>8}"
    _summary(header)
    for row in report["rows"]:
        naive = row["naiveMedianMicros"]
        ratio = row["ratioToPrev"]
        _summary(
            f"{row['n']:>6} {row['fastMedianMicros']:>12} "
            f"{naive if naive is not None else '-':>12} "
            f"{f'{ratio:.2f}' if ratio else '-':>8}"
        )
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="frechetgap",
        description="Discrete Frechet distance, gap and ratio measures for polygonal curves",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    pc = sub.add_parser("compute", help="compute a measure for two curve files")
    pc.add_argument("--measure", choices=MEASURES, required=True)
    pc.add_argument("--variant", choices=CLI_VARIANTS, default="plain")
    pc.add_argument("--algorithm", choices=ALGORITHMS, default="auto")
    pc.add_argument("--curve-a", required=True)
    pc.add_argument("--curve-b", required=True)
    pc.add_argument("--format", choices=("csv", "json"), default="csv")
    pc.add_argument("--emit-walk", action="store_true")
    pc.add_argument("--timing", action="store_true")
    pc.set_defaults(func=_cmd_compute)

    pg = sub.add_parser("gen", help="write a seeded synthetic curve pair")
    pg.add_argument("--kind", choices=("offset-outlier", "random-walk"), required=True)
    pg.add_argument("--n", type=int, required=True)
    pg.add_argument("--offset", default="0,1")
    pg.add_argument("--outliers", type=int, default=0)
    pg.add_argument("--magnitude", type=float, default=0.0)
    pg.add_argument("--seed", type=int, default=0)
    pg.add_argument("--out-a", required=True)
    pg.add_argument("--out-b", required=True)
    pg.set_defaults(func=_cmd_gen)

    pb = sub.add_parser("bench", help="time fast vs naive algorithms across sizes")
    pb.add_argument("--sizes", required=True, help="comma-separated ascending sizes")
    pb.add_argument("--trials", type=int, default=3)
    pb.add_argument("--variant", choices=CLI_VARIANTS, default="shortcut")
    pb.add_argument("--measure", choices=("gap", "ratio"), default="gap")
    pb.add_argument("--seed", type=int, default=0)
    pb.add_argument("--naive-cutoff", type=int, default=64)
    pb.set_defaults(func=_cmd_bench)
    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1
    except (InternalError, AssertionError) as exc:
        sys.stderr.write(f"internal error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
