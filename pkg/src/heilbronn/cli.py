"""Command-line front end.

Every command emits one JSON record {command, version, seed, params,
results, timing_ms} on stdout (validated by the schema shipped in
heilbronn/schemas/); ``scan --format csv`` emits plot-ready CSV rows
instead.  Randomized commands require --seed and echo it.  Exit codes:
0 success, 1 usage error, 2 data error.  Big integers (arrangement
ranks) are serialized as decimal strings.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from pathlib import Path

from .coding import DecodeError, baseline_length, rank_arrangement, unrank_arrangement
from .constructions import erdos_area_lower_bound, erdos_prime, optimize_heilbronn
from .formats import (
    FormatError,
    load_grid,
    load_pointset,
    load_witness,
    save_grid,
    save_pointset,
    save_witness,
)
from .geometry import min_area_triangle
from .montecarlo import (
    analyze_pointset,
    default_trial_schedule,
    degenerate_structure_stats,
    sample_grid_arrangement,
    sample_unit_square,
    scan_mu,
    tail_probability,
)
from .witnesses import (
    encode_collinear_witness,
    encode_rowline_witness,
    encode_small_triangle_witness,
    encode_theorem2,
)

OUTPUT_VERSION = 1


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # exit 1 on usage problems instead of argparse's 2
        raise UsageError(message)


def _default_jobs() -> int:
    try:
        return max(1, int(os.environ.get("HEILBRONN_JOBS", "1")))
    except ValueError:
        return 1


def build_parser() -> _Parser:
    p = _Parser(prog="heilbronn", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("min-triangle", help="smallest triangle of a point/grid file")
    sp.add_argument("--file", required=True)
    sp.add_argument("--mode", choices=("fast", "exhaustive"), default="fast")
    sp.set_defaults(func=_cmd_min_triangle)

    sp = sub.add_parser("sample", help="draw a seeded point set or grid arrangement")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--seed", type=int, required=True)
    sp.add_argument("--k", type=int, help="grid side; omit for a continuous point set")
    sp.add_argument("--stream", type=int, default=0)
    sp.add_argument("--out", required=True)
    sp.set_defaults(func=_cmd_sample)

    sp = sub.add_parser("scan", help="sweep n, estimate mu_n, fit the exponent")
    sp.add_argument("--ns", required=True, help="comma-separated point counts")
    sp.add_argument("--seed", type=int, required=True)
    sp.add_argument("--trials", type=int, help="fixed trial count (default: schedule)")
    sp.add_argument("--jobs", type=int, default=_default_jobs())
    sp.add_argument("--format", choices=("json", "csv"), default="json")
    sp.set_defaults(func=_cmd_scan)

    sp = sub.add_parser("tail", help="empirical P(A < t)")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--threshold", type=float, required=True)
    sp.add_argument("--trials", type=int, required=True)
    sp.add_argument("--seed", type=int, required=True)
    sp.add_argument("--jobs", type=int, default=_default_jobs())
    sp.set_defaults(func=_cmd_tail)

    sp = sub.add_parser("construct-erdos", help="quadratic-residue arrangement on a prime grid")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--out")
    sp.set_defaults(func=_cmd_construct_erdos)

    sp = sub.add_parser("optimize", help="maximize the minimum triangle area")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--seed", type=int, required=True)
    sp.add_argument("--restarts", type=int, default=16)
    sp.add_argument("--steps", type=int, default=4000)
    sp.add_argument("--jobs", type=int, default=_default_jobs())
    sp.add_argument("--out")
    sp.set_defaults(func=_cmd_optimize)

    sp = sub.add_parser("rank", help="lexicographic index of a grid arrangement")
    sp.add_argument("--file", required=True)
    sp.set_defaults(func=_cmd_rank)

    sp = sub.add_parser("unrank", help="grid arrangement from a lexicographic index")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--index", required=True, help="decimal index (may be huge)")
    sp.add_argument("--out")
    sp.set_defaults(func=_cmd_unrank)

    sp = sub.add_parser("witness", help="encode/decode compression witnesses")
    sp.add_argument("kind", choices=("collinear", "rowline", "small_triangle", "theorem2"))
    sp.add_argument("action", choices=("encode", "decode"))
    sp.add_argument("--file", "--grid", dest="file", required=True,
                    help="grid file (encode) or witness file (decode)")
    sp.add_argument("--out", help="witness file (encode) or grid file (decode)")
    sp.add_argument("--triple", help="i,j,k indices for small_triangle encode")
    sp.set_defaults(func=_cmd_witness)

    sp = sub.add_parser("stats-degenerate", help="frequency of collinear triples / shared rows")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--trials", type=int, required=True)
    sp.add_argument("--seed", type=int, required=True)
    sp.set_defaults(func=_cmd_stats_degenerate)

    sp = sub.add_parser("analyze", help="score a point set against a random baseline")
    sp.add_argument("--file", required=True)
    sp.add_argument("--seed", type=int, required=True, help="baseline seed")
    sp.add_argument("--baseline-trials", type=int, default=1000)
    sp.set_defaults(func=_cmd_analyze)

    return p


def _sniff_grid(path) -> bool:
    for raw in Path(path).read_text(encoding="utf-8").splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            return line.startswith("grid ")
    return False


def _cmd_min_triangle(args):
    obj = load_grid(args.file) if _sniff_grid(args.file) else load_pointset(args.file)
    rep = min_area_triangle(obj, mode=args.mode)
    params = {"file": args.file, "mode": args.mode}
    results = {
        "i": rep.i,
        "j": rep.j,
        "k": rep.k,
        "twice_area": rep.twice_area,
        "area": rep.area,
    }
    return None, params, results, None


def _cmd_sample(args):
    params = {"n": args.n, "k": args.k, "stream": args.stream, "out": args.out}
    if args.k is not None:
        a = sample_grid_arrangement(args.k, args.n, args.seed, args.stream)
        save_grid(a, args.out)
        results = {"path": args.out, "K": args.k, "n": args.n}
    else:
        ps = sample_unit_square(args.n, args.seed, args.stream)
        save_pointset(ps, args.out)
        results = {"path": args.out, "n": args.n}
    return args.seed, params, results, None


def _scan_rows(estimates, seed):
    return [
        {
            "n": e.n,
            "trials": e.trials,
            "mean": e.mean,
            "stderr": e.stderr,
            "lo95": e.ci95[0],
            "hi95": e.ci95[1],
            "seed": seed,
        }
        for e in estimates
    ]


def _cmd_scan(args):
    try:
        ns = [int(s) for s in args.ns.split(",") if s.strip()]
    except ValueError:
        raise UsageError(f"--ns must be comma-separated integers, got {args.ns!r}") from None
    if not ns:
        raise UsageError("--ns must name at least one point count")
    trials_for = (lambda n: args.trials) if args.trials else default_trial_schedule
    estimates, fit = scan_mu(ns, args.seed, trials_for=trials_for, jobs=args.jobs)
    rows = _scan_rows(estimates, args.seed)
    params = {"ns": ns, "trials": args.trials, "jobs": args.jobs}
    results = {"samples": rows}
    if fit is not None:
        results.update(slope=fit.slope, intercept=fit.intercept, r_squared=fit.r_squared)
    if args.format == "csv":
        header = "n,trials,mean,stderr,lo95,hi95,seed"
        lines = [header] + [
            f"{r['n']},{r['trials']},{r['mean']!r},{r['stderr']!r},{r['lo95']!r},{r['hi95']!r},{r['seed']}"
            for r in rows
        ]
        return args.seed, params, results, "\n".join(lines)
    return args.seed, params, results, None


def _cmd_tail(args):
    est = tail_probability(args.n, args.threshold, args.trials, args.seed, jobs=args.jobs)
    params = {"n": args.n, "threshold": args.threshold, "trials": args.trials, "jobs": args.jobs}
    results = {"fraction": est.fraction}
    return args.seed, params, results, None


def _cmd_construct_erdos(args):
    a = erdos_prime(args.p)
    results = {
        "p": args.p,
        "n": a.n,
        "area_lower_bound": erdos_area_lower_bound(args.p),
        "normalization": "cell size 1/p",
    }
    if a.n >= 3:
        results["min_twice_area"] = int(min_area_triangle(a, mode="exhaustive").twice_area)
    if args.out:
        save_grid(a, args.out)
        results["path"] = args.out
    return None, {"p": args.p, "out": args.out}, results, None


def _cmd_optimize(args):
    res = optimize_heilbronn(args.n, restarts=args.restarts, steps=args.steps,
                             seed=args.seed, jobs=args.jobs)
    if args.out:
        save_pointset(res.points, args.out)
    params = {"n": args.n, "restarts": args.restarts, "steps": args.steps, "jobs": args.jobs}
    results = {
        "value": res.value,
        "iterations": res.iterations,
        "points": [[p.x, p.y] for p in res.points.points],
    }
    if args.out:
        results["path"] = args.out
    return args.seed, params, results, None


def _cmd_rank(args):
    a = load_grid(args.file)
    idx = rank_arrangement(a)
    params = {"file": args.file}
    results = {
        "K": a.K,
        "n": a.n,
        "value": str(idx.value),
        "domain_size": str(idx.domain_size),
        "baseline_bits": baseline_length(a.K, a.n),
    }
    return None, params, results, None


def _cmd_unrank(args):
    try:
        index = int(args.index)
    except ValueError:
        raise UsageError(f"--index must be a decimal integer, got {args.index!r}") from None
    a = unrank_arrangement(index, args.k, args.n)
    results = {"K": a.K, "n": a.n, "points": [[p.x, p.y] for p in a.points]}
    if args.out:
        save_grid(a, args.out)
        results["path"] = args.out
    return None, {"k": args.k, "n": args.n, "index": args.index}, results, None


_ENCODERS = {
    "collinear": lambda a, triple: encode_collinear_witness(a),
    "rowline": lambda a, triple: encode_rowline_witness(a),
    "small_triangle": lambda a, triple: encode_small_triangle_witness(a, triple),
    "theorem2": lambda a, triple: encode_theorem2(a),
}


def _cmd_witness(args):
    from .witnesses import decode_witness  # local import keeps the map above simple

    params = {"kind": args.kind, "action": args.action, "file": args.file, "out": args.out}
    if args.action == "encode":
        a = load_grid(args.file)
        triple = None
        if args.triple:
            try:
                i, j, k = (int(s) for s in args.triple.split(","))
            except ValueError:
                raise UsageError("--triple must be 'i,j,k' integers") from None
            triple = (i, j, k)
        rep = _ENCODERS[args.kind](a, triple)
        results = {
            "kind": rep.kind,
            "K": a.K,
            "n": a.n,
            "witness_length": rep.witness_length,
            "baseline_length": rep.baseline_length,
            "savings": rep.savings,
            "payload": rep.payload.to_hex(),
        }
        if args.out:
            save_witness(rep, a.K, a.n, args.out)
            results["path"] = args.out
        return None, params, results, None

    kind, K, n, payload = load_witness(args.file)
    if kind != args.kind:
        raise FormatError(f"witness file is kind {kind!r}, not {args.kind!r}")
    a = decode_witness(kind, payload, K, n)
    if not args.out:
        raise UsageError("witness decode requires --out for the reconstructed grid")
    save_grid(a, args.out)
    results = {"kind": kind, "K": K, "n": n, "path": args.out}
    return None, params, results, None


def _cmd_stats_degenerate(args):
    st = degenerate_structure_stats(args.k, args.n, args.trials, args.seed)
    params = {"k": args.k, "n": args.n, "trials": args.trials}
    results = {
        "collinear_fraction": st.collinear_fraction,
        "shared_row_fraction": st.shared_row_fraction,
    }
    return args.seed, params, results, None


def _cmd_analyze(args):
    ps = load_pointset(args.file)
    rep = analyze_pointset(ps, args.seed, baseline_trials=args.baseline_trials)
    params = {"file": args.file, "baseline_trials": args.baseline_trials}
    results = {
        "n": rep.n,
        "area": rep.area,
        "scaled_area": rep.scaled_area,
        "percentile": rep.percentile,
    }
    return args.seed, params, results, None


def run(argv) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    t0 = time.perf_counter()
    try:
        seed, params, results, raw = args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except (FormatError, DecodeError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    timing_ms = (time.perf_counter() - t0) * 1000.0
    if raw is not None:
        print(raw)
        return 0
    record = {
        "command": args.command,
        "version": OUTPUT_VERSION,
        "seed": seed,
        "params": params,
        "results": results,
        "timing_ms": timing_ms,
    }
    print(json.dumps(record))
    return 0


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
