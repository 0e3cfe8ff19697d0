"""Seedable Monte Carlo harness for minimum-triangle-area statistics.

Every estimate is a pure function of its parameters and a 64-bit master
seed: trial t draws from the stream (seed, t), and aggregation sums
per-trial values in trial order with exact (Shewchuk) summation, so
results are bit-identical for any worker count or scheduling.

The headline experiment sweeps n and fits the exponent of the mean
smallest triangle area, which scales like 1/n^3 for uniform random
points in the unit square.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from math import fsum, log2
from typing import Callable, Optional, Sequence

from .geometry import GridArrangement, GridPoint, PointSet, UnitPoint, min_area_triangle
from .rng import derive_seed, stream_rng


def default_trial_schedule(n: int) -> int:
    """Trial count trading cost for precision under the O(n^3) scan."""
    return max(500, 160000 // n)


def sample_unit_square(n: int, seed: int, stream_id: int) -> PointSet:
    """n independent uniform points; x then y per point, 53-bit uniforms."""
    if n < 1:
        raise ValueError("need at least one point")
    rng = stream_rng(seed, stream_id)
    pts = []
    for _ in range(n):
        x = rng.uniform()
        y = rng.uniform()
        pts.append(UnitPoint(x, y))
    return PointSet(tuple(pts))


def sample_grid_arrangement(K: int, n: int, seed: int, stream_id: int) -> GridArrangement:
    """Uniform over all C(K^2, n) arrangements: rejection-sample distinct
    cells, which is exchangeable and therefore uniform on the cell set."""
    if n > K * K:
        raise ValueError("n exceeds the number of grid cells")
    rng = stream_rng(seed, stream_id)
    cells: set[int] = set()
    while len(cells) < n:
        cells.add(rng.below(K * K))
    pts = tuple(GridPoint(c % K, c // K) for c in sorted(cells))
    return GridArrangement(K, pts)


@dataclass(frozen=True)
class MuEstimate:
    """Monte Carlo estimate of the expected smallest triangle area."""

    n: int
    trials: int
    mean: float
    stderr: float
    ci95: tuple[float, float]
    seed: int
    zero_area_trials: int = 0  # degeneracy events, excluded from the mean


@dataclass(frozen=True)
class TailEstimate:
    """Empirical P(A < t) at one threshold."""

    n: int
    threshold: float
    trials: int
    fraction: float
    seed: int


@dataclass(frozen=True)
class ScalingFit:
    """Least-squares fit of log2(mu) against log2(n)."""

    samples: tuple[tuple[int, float], ...]
    slope: float
    intercept: float
    r_squared: float


@dataclass(frozen=True)
class DegeneracyStats:
    """Frequency of degenerate structure in random grid arrangements."""

    K: int
    n: int
    trials: int
    collinear_fraction: float
    shared_row_fraction: float
    seed: int


@dataclass(frozen=True)
class PointSetReport:
    """One point set measured against a random baseline for the same n."""

    n: int
    area: float
    scaled_area: float  # A * n^3, approximately n-invariant
    percentile: float
    baseline_trials: int
    baseline_seed: int


def _areas_chunk(n: int, seed: int, start: int, stop: int) -> list[float]:
    return [
        min_area_triangle(sample_unit_square(n, seed, t), mode="fast").area
        for t in range(start, stop)
    ]


def _trial_areas(
    n: int,
    trials: int,
    seed: int,
    jobs: int = 1,
    sampler: Optional[Callable[[int, int, int], PointSet]] = None,
) -> list[float]:
    """Per-trial smallest areas, in trial order regardless of jobs."""
    if sampler is not None:
        return [min_area_triangle(sampler(n, seed, t), mode="fast").area for t in range(trials)]
    if jobs <= 1 or trials < 4 * jobs:
        return _areas_chunk(n, seed, 0, trials)
    bounds = [trials * w // jobs for w in range(jobs + 1)]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        futures = [
            pool.submit(_areas_chunk, n, seed, bounds[w], bounds[w + 1]) for w in range(jobs)
        ]
        out: list[float] = []
        for fut in futures:  # chunk order == trial order
            out.extend(fut.result())
    return out


def estimate_mu(
    n: int,
    trials: int,
    seed: int,
    jobs: int = 1,
    sampler: Optional[Callable[[int, int, int], PointSet]] = None,
) -> MuEstimate:
    """Mean smallest area over independent uniform point sets.

    Exact-zero areas (collinear triples, probability zero under uniform
    sampling) are counted separately as degeneracy events rather than
    folded into the mean.  ``sampler`` replaces the point source for
    testing; it forces the serial path.
    """
    if n < 3:
        raise ValueError("n must be >= 3")
    if trials < 2:
        raise ValueError("need at least 2 trials")
    vals = _trial_areas(n, trials, seed, jobs=jobs, sampler=sampler)
    zeros = sum(1 for v in vals if v == 0.0)
    live = [v for v in vals if v != 0.0]
    if not live:
        return MuEstimate(n, trials, 0.0, 0.0, (0.0, 0.0), seed, zeros)
    if min(live) == max(live):
        mean, stderr = live[0], 0.0
    else:
        mean = fsum(live) / len(live)
        var = fsum((v - mean) ** 2 for v in live) / (len(live) - 1)
        stderr = (var / len(live)) ** 0.5
    ci = (mean - 1.96 * stderr, mean + 1.96 * stderr)
    return MuEstimate(n, trials, mean, stderr, ci, seed, zeros)


def tail_probability(n: int, t: float, trials: int, seed: int, jobs: int = 1) -> TailEstimate:
    """Empirical fraction of trials with smallest area strictly below t."""
    if t < 0:
        raise ValueError("threshold must be nonnegative")
    vals = _trial_areas(n, trials, seed, jobs=jobs)
    frac = sum(1 for v in vals if v < t) / trials
    return TailEstimate(n, t, trials, frac, seed)


def fit_exponent(samples: Sequence[tuple[int, float]]) -> ScalingFit:
    """Ordinary least squares on (log2 n, log2 mu) pairs."""
    if len(samples) < 3:
        raise ValueError("need at least 3 samples")
    if any(mu <= 0 for _, mu in samples):
        raise ValueError("all mu values must be positive")
    xs = [log2(n) for n, _ in samples]
    ys = [log2(mu) for _, mu in samples]
    m = len(xs)
    xbar = fsum(xs) / m
    ybar = fsum(ys) / m
    sxx = fsum((x - xbar) ** 2 for x in xs)
    if sxx == 0:
        raise ValueError("samples must span more than one n")
    sxy = fsum((x - xbar) * (y - ybar) for x, y in zip(xs, ys))
    slope = sxy / sxx
    intercept = ybar - slope * xbar
    ss_res = fsum((y - (slope * x + intercept)) ** 2 for x, y in zip(xs, ys))
    ss_tot = fsum((y - ybar) ** 2 for y in ys)
    r2 = 1.0 if ss_tot == 0 else 1.0 - ss_res / ss_tot
    return ScalingFit(tuple((int(n), float(mu)) for n, mu in samples), slope, intercept, r2)


def scan_mu(
    ns: Sequence[int],
    seed: int,
    trials_for: Optional[Callable[[int], int]] = None,
    jobs: int = 1,
) -> tuple[list[MuEstimate], Optional[ScalingFit]]:
    """Sweep n, estimate mu_n for each, and fit the scaling exponent.

    Each n gets an independent sub-seed derived from the master seed, so
    the sweep is reproducible as a whole and per point.  The fit is None
    when fewer than three n values are swept.
    """
    trials_for = trials_for or default_trial_schedule
    estimates = [estimate_mu(n, trials_for(n), derive_seed(seed, n), jobs=jobs) for n in ns]
    fit = fit_exponent([(e.n, e.mean) for e in estimates]) if len(estimates) >= 3 else None
    return estimates, fit


def degenerate_structure_stats(K: int, n: int, trials: int, seed: int) -> DegeneracyStats:
    """Monte Carlo frequency of collinear triples and shared rows in
    uniform random grid arrangements."""
    if trials < 1:
        raise ValueError("need at least one trial")
    coll = 0
    shared = 0
    for t in range(trials):
        a = sample_grid_arrangement(K, n, seed, t)
        if len(set(a.rows())) < n:
            shared += 1
        if n >= 3 and min_area_triangle(a, mode="fast").twice_area == 0:
            coll += 1
    return DegeneracyStats(K, n, trials, coll / trials, shared / trials, seed)


_BASELINE_CACHE: dict[tuple[int, int, int], list[float]] = {}


def baseline_areas(n: int, trials: int, seed: int) -> list[float]:
    """Sorted baseline distribution of A for uniform random n-point sets;
    cached per (n, trials, seed) for reproducible percentiles."""
    key = (n, trials, seed)
    got = _BASELINE_CACHE.get(key)
    if got is None:
        got = _BASELINE_CACHE[key] = sorted(_trial_areas(n, trials, seed))
    return got


def analyze_pointset(
    points: PointSet, baseline_seed: int, baseline_trials: int = 1000
) -> PointSetReport:
    """Measure one point set: A, the scale-free statistic A*n^3, and A's
    percentile within the random baseline for the same n.  Well-spread
    constructions land in the top percentiles; any collinear triple pins
    the percentile at zero."""
    n = points.n
    if n < 3:
        raise ValueError("n must be >= 3")
    area = min_area_triangle(points, mode="fast").area
    base = baseline_areas(n, baseline_trials, baseline_seed)
    below = sum(1 for v in base if v < area)
    ties = sum(1 for v in base if v == area)
    pct = (below + 0.5 * ties) / len(base)
    return PointSetReport(n, area, area * n**3, pct, baseline_trials, baseline_seed)
