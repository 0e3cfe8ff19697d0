"""Compression witnesses for structured pebble arrangements.

Each witness codec is a paired encoder/decoder: the encoder maps an
arrangement with a specific structure (a collinear triple, a shared grid
row, a small triangle, or a constrained lower half) to a bit string, and
the decoder reconstructs the arrangement exactly from that bit string plus
(kind, K, n).  The encoding is shorter than ``baseline_length(K, n)``
precisely when the structure is informative, and the achieved savings are
a computable lower bound on how atypical the arrangement is: over any
family of uniquely decodable encodings, at most a 2^-s fraction of all
C(K^2, n) arrangements can be compressed by s or more bits.

Index accounting is exact and big-integer throughout; all geometric
comparisons in codec paths are exact (integers or Fractions), never float.
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from fractions import Fraction
from math import comb, e as _E, gcd, log2
from typing import Optional, Sequence

import numpy as np

from .coding import (
    BitReader,
    BitString,
    DecodeError,
    baseline_length,
    ceil_log2,
    nat_to_string,
    rank_combination,
    sd_prime,
    sd_unprime,
    string_to_nat,
    unrank_combination,
)
from .geometry import GridArrangement, GridPoint, min_area_triangle, twice_signed_area

WITNESS_KINDS = ("collinear", "rowline", "small_triangle", "theorem2")


@dataclass(frozen=True)
class WitnessReport:
    """A witness encoding with its exact length accounting.

    ``savings = baseline_length - witness_length`` may be negative: codecs
    only compress arrangements that actually have cheap structure.
    """

    kind: str
    payload: BitString
    witness_length: int
    baseline_length: int

    @property
    def savings(self) -> int:
        return self.baseline_length - self.witness_length


@dataclass(frozen=True)
class SmallTriangleGeometry:
    """Exact invariants of a grid triangle, labeled so PQ is a longest side.

    g counts lattice points on [P, Q); T is the integer twice-area; the
    quotient f = T/g is integral because g divides every value of the
    cross-product form.  2*f*g bounds the witness index of R.
    """

    P: GridPoint
    Q: GridPoint
    R: GridPoint
    g: int
    T: int
    f: int


@dataclass(frozen=True)
class ForbiddingLineSet:
    """Certified forbidding lines built from the two Claim-style rectangles.

    ``lines`` holds index pairs into the owning arrangement (one pebble in
    the top rectangle, one in the bottom rectangle); ``segments`` carries
    their coordinates so intercepts can be computed without the
    arrangement.  Every stored line crosses the dividing row and the bottom
    side of the unit square inside [0, 1].
    """

    K: int
    split_row: int
    lines: tuple[tuple[int, int], ...]
    segments: tuple[tuple[tuple[int, int], tuple[int, int]], ...]
    rect_top_count: int
    rect_bottom_count: int


@dataclass(frozen=True)
class InterceptWindow:
    """Sorted intercepts of forbidding lines on one grid row, plus the
    tightest window of six consecutive intercepts (absent if fewer)."""

    row: int
    intercepts: tuple[Fraction, ...]
    spacings: tuple[Fraction, ...]
    window: Optional[tuple[Fraction, Fraction, Fraction, Fraction, Fraction]]
    D: Optional[Fraction]
    B: Optional[Fraction]


# ---------------------------------------------------------------------------
# structure detection


def find_collinear_triple(a: GridArrangement) -> Optional[tuple[int, int, int]]:
    """Lexicographically first collinear index triple, or None."""
    pts = a.points
    n = len(pts)
    for i in range(n - 2):
        for j in range(i + 1, n - 1):
            for k in range(j + 1, n):
                if twice_signed_area(pts[i], pts[j], pts[k]) == 0:
                    return (i, j, k)
    return None


def find_shared_row_pair(a: GridArrangement) -> Optional[tuple[int, int]]:
    """Lexicographically first index pair on one horizontal grid line."""
    rows = a.rows()
    # points are sorted row-major, so equal rows are adjacent
    for i in range(len(rows) - 1):
        if rows[i] == rows[i + 1]:
            return (i, i + 1)
    return None


# ---------------------------------------------------------------------------
# shared codec helpers


def _pair_rank(i: int, j: int, m: int) -> int:
    """Rank of pair (i, j), i < j, in lexicographic order over range(m)."""
    return comb(m, 2) - comb(m - i, 2) + (j - i - 1)


def _pair_unrank(rank: int, m: int) -> tuple[int, int]:
    i = 0
    while rank >= m - 1 - i:
        rank -= m - 1 - i
        i += 1
        if i >= m - 1:
            raise DecodeError("pair index out of range")
    return i, i + 1 + rank


def _width_sub_rank(K: int, n: int) -> int:
    d = comb(K * K, n - 1)
    return 0 if d == 1 else ceil_log2(d)


def _read_sub_arrangement(reader: BitReader, K: int, n: int) -> tuple[GridPoint, ...]:
    width = _width_sub_rank(K, n)
    rank = reader.read_uint(width)
    try:
        cells = unrank_combination(rank, n - 1, K * K)
    except ValueError as exc:
        raise DecodeError(f"sub-arrangement rank out of range at bit {reader.pos}: {exc}") from None
    return tuple(GridPoint(c % K, c // K) for c in cells)


def _sub_rank_bits(a: GridArrangement, drop: int) -> BitString:
    cells = tuple(c for idx, c in enumerate(a.cells()) if idx != drop)
    rank = rank_combination(cells, a.K * a.K)
    return BitString.from_int(rank, _width_sub_rank(a.K, a.n))


def _insert_point(K: int, pts: Sequence[GridPoint], extra: GridPoint) -> GridArrangement:
    try:
        return GridArrangement.from_points(K, [(p.x, p.y) for p in pts] + [(extra.x, extra.y)])
    except ValueError as exc:
        raise DecodeError(f"decoded points are not a valid arrangement: {exc}") from None


def _line_candidates(P: GridPoint, Q: GridPoint, K: int) -> list[GridPoint]:
    """Grid points on line(P, Q) inside [0, K-1]^2, excluding P and Q,
    ordered along the lexicographically positive primitive direction."""
    dx, dy = Q.x - P.x, Q.y - P.y
    g = gcd(abs(dx), abs(dy))
    dx //= g
    dy //= g
    if dx < 0 or (dx == 0 and dy < 0):
        dx, dy = -dx, -dy

    def axis_range(p0: int, d0: int) -> tuple:
        if d0 == 0:
            return (None, None)
        lo, hi = -p0, K - 1 - p0
        if d0 > 0:
            return (_ceil_div(lo, d0), hi // d0)
        return (_ceil_div(hi, d0), lo // d0)

    tlo, thi = None, None
    for p0, d0 in ((P.x, dx), (P.y, dy)):
        lo, hi = axis_range(p0, d0)
        if lo is None:
            continue
        tlo = lo if tlo is None else max(tlo, lo)
        thi = hi if thi is None else min(thi, hi)
    out = []
    for t in range(tlo, thi + 1):
        pt = GridPoint(P.x + t * dx, P.y + t * dy)
        if pt != P and pt != Q:
            out.append(pt)
    return out


def _ceil_div(a: int, b: int) -> int:
    return -((-a) // b)


# ---------------------------------------------------------------------------
# collinear witness (three pebbles on one line)


def encode_collinear_witness(a: GridArrangement) -> WitnessReport:
    """Encode via: the n-1 other pebbles, the pair (P, Q), and R's position
    among the grid points of line(P, Q).

    R is the largest-index member of the first collinear triple.  The index
    of R costs at most ceil(log2 K) bits while dropping R from the ranked
    set saves about log2(K^2/n) bits, so the witness compresses whenever K
    is large relative to n.
    """
    triple = find_collinear_triple(a)
    if triple is None:
        raise ValueError("arrangement has no collinear triple")
    i, j, k = triple
    pts = a.points
    P, Q, R = pts[i], pts[j], pts[k]

    sub_bits = _sub_rank_bits(a, k)
    m = a.n - 1
    pair_domain = comb(m, 2)
    pair_width = 0 if pair_domain == 1 else ceil_log2(pair_domain)
    pair_bits = BitString.from_int(_pair_rank(i, j, m), pair_width)

    cands = _line_candidates(P, Q, a.K)
    pos = cands.index(R)
    r_width = 0 if len(cands) == 1 else ceil_log2(len(cands))
    r_bits = BitString.from_int(pos, r_width)

    payload = sub_bits + pair_bits + r_bits
    return WitnessReport("collinear", payload, len(payload), baseline_length(a.K, a.n))


def _decode_collinear(payload: BitString, K: int, n: int) -> GridArrangement:
    reader = BitReader(payload)
    sub = _read_sub_arrangement(reader, K, n)
    m = n - 1
    pair_domain = comb(m, 2)
    pair_width = 0 if pair_domain == 1 else ceil_log2(pair_domain)
    pr = reader.read_uint(pair_width)
    if pr >= pair_domain:
        raise DecodeError(f"pair rank {pr} out of range at bit {reader.pos}")
    i, j = _pair_unrank(pr, m)
    P, Q = sub[i], sub[j]
    cands = _line_candidates(P, Q, K)
    r_width = 0 if len(cands) == 1 else ceil_log2(len(cands))
    pos = reader.read_uint(r_width)
    if pos >= len(cands):
        raise DecodeError(f"line position {pos} out of range at bit {reader.pos}")
    reader.expect_end()
    return _insert_point(K, sub, cands[pos])


# ---------------------------------------------------------------------------
# row-line witness (two pebbles on one horizontal grid line)


def encode_rowline_witness(a: GridArrangement) -> WitnessReport:
    """Encode via: the n-1 other pebbles, the pebble P, and R's cell among
    the K-1 other cells of P's row."""
    found = find_shared_row_pair(a)
    if found is None:
        raise ValueError("no two pebbles share a horizontal grid line")
    i, j = found
    pts = a.points
    P, R = pts[i], pts[j]

    sub_bits = _sub_rank_bits(a, j)
    m = a.n - 1
    p_width = 0 if m == 1 else ceil_log2(m)
    p_bits = BitString.from_int(i, p_width)

    pos = R.x if R.x < P.x else R.x - 1
    r_width = 0 if a.K - 1 == 1 else ceil_log2(a.K - 1)
    r_bits = BitString.from_int(pos, r_width)

    payload = sub_bits + p_bits + r_bits
    return WitnessReport("rowline", payload, len(payload), baseline_length(a.K, a.n))


def _decode_rowline(payload: BitString, K: int, n: int) -> GridArrangement:
    reader = BitReader(payload)
    sub = _read_sub_arrangement(reader, K, n)
    m = n - 1
    p_width = 0 if m == 1 else ceil_log2(m)
    pi = reader.read_uint(p_width)
    if pi >= m:
        raise DecodeError(f"pebble index {pi} out of range at bit {reader.pos}")
    P = sub[pi]
    r_width = 0 if K - 1 == 1 else ceil_log2(K - 1)
    pos = reader.read_uint(r_width)
    if pos >= K - 1:
        raise DecodeError(f"row cell index {pos} out of range at bit {reader.pos}")
    x = pos if pos < P.x else pos + 1
    reader.expect_end()
    return _insert_point(K, sub, GridPoint(x, P.y))


# ---------------------------------------------------------------------------
# small-triangle witness


def _egcd(a: int, b: int) -> tuple[int, int, int]:
    """Extended gcd: returns (g, x, y) with a*x + b*y = g >= 0."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def _relabel_longest(pts: Sequence[GridPoint], triple: tuple[int, int, int]) -> tuple[int, int, int]:
    """Return (r_idx, p_idx, q_idx): R faces the first side of maximal
    squared length, scanning R = i, j, k in index order."""

    def sq(u: GridPoint, v: GridPoint) -> int:
        return (u.x - v.x) ** 2 + (u.y - v.y) ** 2

    i, j, k = triple
    sides = [(sq(pts[j], pts[k]), i, j, k), (sq(pts[i], pts[k]), j, i, k), (sq(pts[i], pts[j]), k, i, j)]
    best = max(s[0] for s in sides)
    for s, r_idx, p_idx, q_idx in sides:
        if s == best:
            return r_idx, p_idx, q_idx
    raise AssertionError("unreachable")


def small_triangle_geometry(P: GridPoint, Q: GridPoint, R: GridPoint) -> SmallTriangleGeometry:
    """Exact (g, T, f) for a nondegenerate grid triangle after relabeling
    so that PQ is a longest side (deterministic tie order P, Q, R)."""
    idx = _relabel_longest((P, Q, R), (0, 1, 2))
    pts = (P, Q, R)
    r_i, p_i, q_i = idx
    P, Q, R = pts[p_i], pts[q_i], pts[r_i]
    q1, q2 = Q.x - P.x, Q.y - P.y
    g = gcd(abs(q1), abs(q2))
    T = abs(q2 * (R.x - P.x) - q1 * (R.y - P.y))
    if T == 0:
        raise ValueError("degenerate (collinear) triple")
    return SmallTriangleGeometry(P, Q, R, g, T, T // g)


def _triangle_candidate_index(P: GridPoint, Q: GridPoint, R: GridPoint) -> int:
    """Index of R in the canonical enumeration of lattice points X with
    cross(P, Q, X) = +-k*g (k = 1, 2, ...) whose projection on PQ lies in
    the half-open window [P, Q): ordered by k, then sign (+ first), then
    position along the line.  Each (k, sign) level holds exactly g points,
    so the index is below 2*f*g = 2*T."""
    q1, q2 = Q.x - P.x, Q.y - P.y
    g = gcd(abs(q1), abs(q2))
    r1, r2 = R.x - P.x, R.y - P.y
    cross = q2 * r1 - q1 * r2
    T = abs(cross)
    f = T // g
    sign_plus = cross > 0
    level_start = (f - 1) * 2 * g + (0 if sign_plus else g)
    t_R, t_lo = _coset_params(q1, q2, g, cross, (r1, r2))
    return level_start + (t_R - t_lo)


def _coset_params(q1: int, q2: int, g: int, v: int, rel: Optional[tuple[int, int]]) -> tuple[Optional[int], int]:
    """For the coset {X : q2*X.x - q1*X.y = v}: the window start t_lo of the
    g in-window parameters, and (if rel given) the parameter t of rel."""
    _, s, t = _egcd(q2, -q1)  # q2*s - q1*t = g
    scale = v // g
    bx, by = s * scale, t * scale  # base solution with form value v
    dx, dy = q1 // g, q2 // g
    step = (q1 * q1 + q2 * q2) // g
    s_base = bx * q1 + by * q2  # projection numerator of the base solution
    t_lo = _ceil_div(-s_base, step)
    t_R = None
    if rel is not None:
        r1, r2 = rel
        t_R = (r1 - bx) // dx if dx != 0 else (r2 - by) // dy
    return t_R, t_lo


def _triangle_candidate_point(P: GridPoint, Q: GridPoint, index: int) -> GridPoint:
    """Inverse of _triangle_candidate_index (lattice point, unclipped)."""
    q1, q2 = Q.x - P.x, Q.y - P.y
    g = gcd(abs(q1), abs(q2))
    k = index // (2 * g) + 1
    rem = index % (2 * g)
    sign = 1 if rem < g else -1
    pos = rem % g
    v = sign * k * g
    _, t_lo = _coset_params(q1, q2, g, v, None)
    _, s, t = _egcd(q2, -q1)
    scale = v // g
    bx, by = s * scale, t * scale
    dx, dy = q1 // g, q2 // g
    tt = t_lo + pos
    return GridPoint(P.x + bx + tt * dx, P.y + by + tt * dy)


def encode_small_triangle_witness(
    a: GridArrangement, triple: Optional[tuple[int, int, int]] = None
) -> WitnessReport:
    """Encode via: the n-1 pebbles without R, the pair (P, Q), and a
    self-delimiting candidate index for R.

    With PQ a longest side, R projects into [P, Q), so R sits at index
    < 2*T in the canonical enumeration; its code costs about
    log2(2T) + 2 log2 log2(2T) bits.  Small twice-areas T therefore yield
    short witnesses; large ones may cost more than the baseline.
    """
    if triple is None:
        rep = min_area_triangle(a, mode="fast")
        if rep.twice_area == 0:
            raise ValueError("minimum-area triple is degenerate; no triangle witness")
        triple = rep.indices
    i, j, k = triple
    if not (0 <= i < j < k < a.n):
        raise ValueError(f"invalid index triple {triple}")
    pts = a.points
    r_idx, p_idx, q_idx = _relabel_longest(pts, (i, j, k))
    P, Q, R = pts[p_idx], pts[q_idx], pts[r_idx]
    if twice_signed_area(P, Q, R) == 0:
        raise ValueError("degenerate (collinear) triple")

    sub_bits = _sub_rank_bits(a, r_idx)
    # indices of P and Q inside the sub-arrangement (R removed)
    pi = p_idx - (1 if p_idx > r_idx else 0)
    qi = q_idx - (1 if q_idx > r_idx else 0)
    m = a.n - 1
    pair_domain = comb(m, 2)
    pair_width = 0 if pair_domain == 1 else ceil_log2(pair_domain)
    pair_bits = BitString.from_int(_pair_rank(min(pi, qi), max(pi, qi), m), pair_width)

    index = _triangle_candidate_index(P, Q, R)
    idx_bits = sd_prime(nat_to_string(index))

    payload = sub_bits + pair_bits + idx_bits
    return WitnessReport("small_triangle", payload, len(payload), baseline_length(a.K, a.n))


def _decode_small_triangle(payload: BitString, K: int, n: int) -> GridArrangement:
    reader = BitReader(payload)
    sub = _read_sub_arrangement(reader, K, n)
    m = n - 1
    pair_domain = comb(m, 2)
    pair_width = 0 if pair_domain == 1 else ceil_log2(pair_domain)
    pr = reader.read_uint(pair_width)
    if pr >= pair_domain:
        raise DecodeError(f"pair rank {pr} out of range at bit {reader.pos}")
    pi, qi = _pair_unrank(pr, m)
    P, Q = sub[pi], sub[qi]
    index = string_to_nat(sd_unprime(reader))
    R = _triangle_candidate_point(P, Q, index)
    if not (0 <= R.x < K and 0 <= R.y < K):
        raise DecodeError(f"candidate {R} falls outside the grid")
    reader.expect_end()
    return _insert_point(K, sub, R)


# ---------------------------------------------------------------------------
# dividing row, Claim-style rectangles, forbidding lines


def split_row(a: GridArrangement) -> int:
    """Dividing grid row: the row of the (floor(n/2)+1)-th pebble from the
    top, so exactly floor(n/2) pebbles lie strictly above it.  Requires all
    pebbles on distinct rows."""
    rows = sorted(a.rows(), reverse=True)
    if len(set(rows)) != len(rows):
        raise ValueError("pebbles must occupy distinct rows")
    return rows[a.n // 2]


def _in_top_rect(x: int, y: int, S: int) -> bool:
    # middle vertical fifth (2/5, 3/5], top horizontal tenth [9/10, 1]
    return (5 * x > 2 * S) and (5 * x <= 3 * S) and (10 * y >= 9 * S)


def _in_bottom_rect(x: int, y: int, S: int) -> bool:
    # middle vertical fifth, fifth horizontal tenth [1/2, 3/5)
    return (5 * x > 2 * S) and (5 * x <= 3 * S) and (2 * y >= S) and (10 * y < 6 * S)


def _claim_rect_pairs(
    upper: Sequence[tuple[int, GridPoint]], K: int
) -> tuple[list[tuple[int, int]], list[tuple[tuple[int, int], tuple[int, int]]], int, int]:
    S = K - 1
    top = [(idx, p) for idx, p in upper if _in_top_rect(p.x, p.y, S)]
    bot = [(idx, p) for idx, p in upper if _in_bottom_rect(p.x, p.y, S)]
    lines = []
    segs = []
    for it, pt in top:
        for ib, pb in bot:
            lines.append((min(it, ib), max(it, ib)))
            segs.append(((pt.x, pt.y), (pb.x, pb.y)))
    return lines, segs, len(top), len(bot)


def _bottom_intercept_in_square(x1: int, y1: int, x2: int, y2: int, row: int, S: int) -> bool:
    """Exact test: does line((x1,y1),(x2,y2)) meet grid row `row` within
    x in [0, S]?  Requires y1 != y2."""
    dy = y1 - y2
    num = x2 * dy + (row - y2) * (x1 - x2)
    if dy < 0:
        num, dy = -num, -dy
    return 0 <= num <= S * dy


def forbidding_lines(a: GridArrangement) -> ForbiddingLineSet:
    """Certified forbidding lines: all pairs with one upper-half pebble in
    the top rectangle and one in the bottom rectangle of the middle
    vertical strip.  The rectangle geometry guarantees each such line
    crosses the dividing row and the bottom side inside the unit square;
    this is re-verified exactly."""
    split = split_row(a)
    upper = [(idx, p) for idx, p in enumerate(a.points) if p.y > split]
    lines, segs, ct, cb = _claim_rect_pairs(upper, a.K)
    S = a.K - 1
    for (x1, y1), (x2, y2) in segs:
        if not (
            _bottom_intercept_in_square(x1, y1, x2, y2, 0, S)
            and _bottom_intercept_in_square(x1, y1, x2, y2, split, S)
        ):
            raise AssertionError("rectangle pair line failed the crossing check")
    return ForbiddingLineSet(a.K, split, tuple(lines), tuple(segs), ct, cb)


def count_forbidding_lines(a: GridArrangement) -> int:
    """Number of forbidding lines per the definition: lines through two
    upper-half pebbles that meet every lower-half grid row (rows <= the
    dividing row) within the unit square.  This is the quantity the
    rectangle construction lower-bounds."""
    split = split_row(a)
    up = [(p.x, p.y) for p in a.points if p.y > split]
    m = len(up)
    if m < 2:
        return 0
    arr = np.array(up, dtype=np.int64)
    ii, jj = np.triu_indices(m, 1)
    x1, y1 = arr[ii, 0], arr[ii, 1]
    x2, y2 = arr[jj, 0], arr[jj, 1]
    dy = y1 - y2
    flip = dy < 0
    dy = np.where(flip, -dy, dy)
    S = a.K - 1

    def crosses(row: int) -> np.ndarray:
        num = x2 * (y1 - y2) + (row - y2) * (x1 - x2)
        num = np.where(flip, -num, num)
        return (num >= 0) & (num <= S * dy)

    return int(np.count_nonzero(crosses(0) & crosses(split)))


def _intercept(seg: tuple[tuple[int, int], tuple[int, int]], row: int) -> Fraction:
    """x-coordinate (column units, exact) of a segment's line at grid row."""
    (x1, y1), (x2, y2) = seg
    return Fraction(x2 * (y1 - y2) + (row - y2) * (x1 - x2), y1 - y2)


def intercept_spacings(
    f: ForbiddingLineSet, row: int, min_area: Optional[Fraction] = None
) -> InterceptWindow:
    """Exact intercepts of the stored lines on one lower-half row, their
    spacings, and the tightest six-consecutive-intercept window (w1..w5,
    D = w1+...+w5).  With ``min_area`` given, B = min(4*A, D).

    All positions are reported in unit-square length units.
    """
    if row > f.split_row:
        raise ValueError(f"row {row} is not in the lower half (split {f.split_row})")
    if not f.segments:
        raise ValueError("forbidding line set is empty")
    S = f.K - 1
    xs = sorted(_intercept(seg, row) / S for seg in f.segments)
    spacings = tuple(b - a for a, b in zip(xs, xs[1:]))
    window = None
    D = None
    B = None
    if len(xs) >= 6:
        best_i = min(range(len(xs) - 5), key=lambda i: xs[i + 5] - xs[i])
        window = tuple(xs[best_i + t + 1] - xs[best_i + t] for t in range(5))
        D = xs[best_i + 5] - xs[best_i]
        if min_area is not None:
            B = min(4 * Fraction(min_area), D)
    return InterceptWindow(row, tuple(xs), spacings, window, D, B)


def excluded_columns(row: int, f: ForbiddingLineSet, T_min: int, K: int) -> set[int]:
    """Grid columns of ``row`` strictly within distance 2A of any stored
    line's intercept, where A = T_min / (2(K-1)^2).  Exact rationals."""
    if T_min < 0:
        raise ValueError("T_min must be nonnegative")
    S = K - 1
    radius = Fraction(T_min, S)  # 2A in column units
    out: set[int] = set()
    if radius == 0:
        return out
    for seg in f.segments:
        x = _intercept(seg, row)
        lo, hi = x - radius, x + radius
        c_lo = max(0, _frac_floor(lo) + 1)
        c_hi = min(S, _frac_ceil(hi) - 1)
        for c in range(c_lo, c_hi + 1):
            if abs(c - x) < radius:
                out.add(c)
    return out


def _frac_floor(x: Fraction) -> int:
    return x.numerator // x.denominator


def _frac_ceil(x: Fraction) -> int:
    return -((-x.numerator) // x.denominator)


# ---------------------------------------------------------------------------
# theorem-2 witness (constrained lower half)


def _theorem2_widths(K: int, n: int) -> tuple[int, int, int]:
    header_w = 2 * ceil_log2(K - 1) + 1  # fits any twice-area up to (K-1)^2
    rows_domain = comb(K, n)
    rows_w = 0 if rows_domain == 1 else ceil_log2(rows_domain)
    col_w = ceil_log2(K)
    return header_w, rows_w, col_w


def encode_theorem2(a: GridArrangement) -> WitnessReport:
    """Encode: T_min header, the set of n occupied rows, the upper-half
    columns raw, then the lower-half columns (top to bottom) ranked within
    their row's non-excluded column set with self-delimiting prefixes.

    The exclusions come from the certified forbidding lines of the decoded
    upper half, so the decoder can reproduce them exactly.
    """
    n = a.n
    if n % 2 or n < 2:
        raise ValueError("theorem-2 witness requires an even number (>= 2) of pebbles")
    rows = a.rows()
    if len(set(rows)) != n:
        raise ValueError("pebbles must occupy distinct rows")
    K = a.K
    header_w, rows_w, col_w = _theorem2_widths(K, n)

    T_min = int(min_area_triangle(a, mode="fast").twice_area) if n >= 3 else 0
    header = BitString.from_int(T_min, header_w)

    sorted_rows = tuple(sorted(rows))
    rows_bits = BitString.from_int(rank_combination(sorted_rows, K), rows_w)

    by_row_desc = sorted(a.points, key=lambda p: -p.y)
    upper = by_row_desc[: n // 2]
    lower = by_row_desc[n // 2 :]
    split = lower[0].y  # the (n/2 + 1)-th row from the top divides the halves

    upper_bits = BitString()
    for p in upper:
        upper_bits = upper_bits + BitString.from_int(p.x, col_w)

    # forbidding lines are a function of the upper half alone, so the
    # decoder can rebuild them before reading any lower-half column
    lines_idx, segs, ct, cb = _claim_rect_pairs(list(enumerate(upper)), K)
    flines = ForbiddingLineSet(K, split, tuple(lines_idx), tuple(segs), ct, cb)

    lower_bits = BitString()
    for p in lower:
        excl = sorted(excluded_columns(p.y, flines, T_min, K))
        at = bisect_left(excl, p.x)
        if at < len(excl) and excl[at] == p.x:
            raise ValueError(
                f"internal consistency failure: pebble column {p.x} on row {p.y} "
                "is inside its own excluded set"
            )
        rank = p.x - at
        lower_bits = lower_bits + sd_prime(nat_to_string(rank))

    payload = header + rows_bits + upper_bits + lower_bits
    return WitnessReport("theorem2", payload, len(payload), baseline_length(K, n))


def _decode_theorem2(payload: BitString, K: int, n: int) -> GridArrangement:
    if n % 2 or n < 2:
        raise DecodeError("theorem-2 witness requires an even number (>= 2) of pebbles")
    header_w, rows_w, col_w = _theorem2_widths(K, n)
    reader = BitReader(payload)
    T_min = reader.read_uint(header_w)
    if T_min > (K - 1) ** 2:  # no grid triangle has a larger twice-area
        raise DecodeError(f"twice-area header {T_min} exceeds the grid maximum")
    rows_rank = reader.read_uint(rows_w)
    try:
        sorted_rows = unrank_combination(rows_rank, n, K)
    except ValueError as exc:
        raise DecodeError(f"row-set rank out of range at bit {reader.pos}: {exc}") from None
    rows_desc = sorted(sorted_rows, reverse=True)

    upper = []
    for r in rows_desc[: n // 2]:
        x = reader.read_uint(col_w)
        if x >= K:
            raise DecodeError(f"column {x} out of range at bit {reader.pos}")
        upper.append(GridPoint(x, r))
    split = rows_desc[n // 2]

    lines_idx, segs, ct, cb = _claim_rect_pairs(list(enumerate(upper)), K)
    flines = ForbiddingLineSet(K, split, tuple(lines_idx), tuple(segs), ct, cb)

    pts = list(upper)
    for r in rows_desc[n // 2 :]:
        rank = string_to_nat(sd_unprime(reader))
        excl = sorted(excluded_columns(r, flines, T_min, K))
        col = _unrank_allowed(rank, excl, K)
        pts.append(GridPoint(col, r))
    reader.expect_end()
    try:
        return GridArrangement.from_points(K, [(p.x, p.y) for p in pts])
    except ValueError as exc:
        raise DecodeError(f"decoded points are not a valid arrangement: {exc}") from None


def _unrank_allowed(rank: int, excl_sorted: list[int], K: int) -> int:
    """rank-th column (0-based) of range(K) minus the excluded set."""
    if rank >= K - len(excl_sorted):
        raise DecodeError(f"allowed-column rank {rank} out of range")
    c = rank
    while True:
        k = bisect_right(excl_sorted, c)
        c_new = rank + k
        if c_new == c:
            return c
        c = c_new


# ---------------------------------------------------------------------------
# dispatch and the closed-form bound


_DECODERS = {
    "collinear": _decode_collinear,
    "rowline": _decode_rowline,
    "small_triangle": _decode_small_triangle,
    "theorem2": _decode_theorem2,
}


def decode_witness(kind: str, payload: BitString, K: int, n: int) -> GridArrangement:
    """Reconstruct the arrangement a witness payload encodes.

    Consumes the whole payload; malformed, truncated, or trailing input
    raises DecodeError with the offending bit position.
    """
    if kind not in _DECODERS:
        raise ValueError(f"unknown witness kind {kind!r}")
    return _DECODERS[kind](payload, K, n)


def upper_bound_formula(delta: float, n: int, C1: float = 1e-4, slack: float = 0.0) -> float:
    """Area bound (14*delta + slack) / (4*C1*n^3*log2(e)) for the
    constrained-lower-half argument; slack stands for the additive constant
    the asymptotic analysis leaves unspecified."""
    if delta < 1:
        raise ValueError("delta must be >= 1")
    if n < 3:
        raise ValueError("n must be >= 3")
    if C1 <= 0:
        raise ValueError("C1 must be positive")
    if slack < 0:
        raise ValueError("slack must be nonnegative")
    return (14.0 * delta + slack) / (4.0 * C1 * n**3 * log2(_E))
