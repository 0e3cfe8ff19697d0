"""Text file formats: point sets, grid arrangements, and witness payloads.

All formats are UTF-8 text designed to diff cleanly:

* point set -- one "x y" pair per line, '#' starts a comment; floats are
  written with repr (shortest round-trip decimal), so save/load is
  bit-exact.
* grid -- header line "grid <K> <n>", then n lines "x y" of integers.
* witness -- line 1 "HW1 <kind> K=<K> n=<n>", line 2 the bit string in
  length-prefixed hex.
"""

from __future__ import annotations

from pathlib import Path

from .coding import BitString
from .geometry import GridArrangement, PointSet
from .witnesses import WITNESS_KINDS, WitnessReport


class FormatError(ValueError):
    """A data file violated its format; message names the line."""


def save_pointset(points: PointSet, path) -> None:
    lines = [f"{p.x!r} {p.y!r}" for p in points.points]
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def load_pointset(path) -> PointSet:
    coords = []
    for lineno, raw in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise FormatError(f"{path}:{lineno}: expected 'x y', got {raw!r}")
        try:
            x, y = float(parts[0]), float(parts[1])
        except ValueError:
            raise FormatError(f"{path}:{lineno}: non-numeric coordinate in {raw!r}") from None
        if not (0.0 <= x <= 1.0 and 0.0 <= y <= 1.0):
            raise FormatError(f"{path}:{lineno}: coordinate outside the unit square")
        coords.append((x, y))
    return PointSet.from_coords(coords)


def save_grid(a: GridArrangement, path) -> None:
    lines = [f"grid {a.K} {a.n}"]
    lines.extend(f"{p.x} {p.y}" for p in a.points)
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def load_grid(path) -> GridArrangement:
    rows = []
    header = None
    for lineno, raw in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if header is None:
            parts = line.split()
            if len(parts) != 3 or parts[0] != "grid":
                raise FormatError(f"{path}:{lineno}: expected header 'grid <K> <n>'")
            try:
                header = (int(parts[1]), int(parts[2]))
            except ValueError:
                raise FormatError(f"{path}:{lineno}: non-integer grid header") from None
            continue
        parts = line.split()
        if len(parts) != 2:
            raise FormatError(f"{path}:{lineno}: expected 'x y', got {raw!r}")
        try:
            rows.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise FormatError(f"{path}:{lineno}: non-integer coordinate in {raw!r}") from None
    if header is None:
        raise FormatError(f"{path}: missing 'grid <K> <n>' header")
    K, n = header
    if len(rows) != n:
        raise FormatError(f"{path}: header promises {n} pebbles, found {len(rows)}")
    try:
        return GridArrangement.from_points(K, rows)
    except ValueError as exc:
        raise FormatError(f"{path}: {exc}") from None


def save_witness(report: WitnessReport, K: int, n: int, path) -> None:
    text = f"HW1 {report.kind} K={K} n={n}\n{report.payload.to_hex()}\n"
    Path(path).write_text(text, encoding="utf-8")


def load_witness(path) -> tuple[str, int, int, BitString]:
    """Returns (kind, K, n, payload)."""
    lines = Path(path).read_text(encoding="utf-8").splitlines()
    if len(lines) < 2:
        raise FormatError(f"{path}: witness file needs a header and a payload line")
    parts = lines[0].split()
    if len(parts) != 4 or parts[0] != "HW1":
        raise FormatError(f"{path}:1: expected 'HW1 <kind> K=<K> n=<n>'")
    kind = parts[1]
    if kind not in WITNESS_KINDS:
        raise FormatError(f"{path}:1: unknown witness kind {kind!r}")
    try:
        if not (parts[2].startswith("K=") and parts[3].startswith("n=")):
            raise ValueError
        K = int(parts[2][2:])
        n = int(parts[3][2:])
    except ValueError:
        raise FormatError(f"{path}:1: malformed K=/n= fields") from None
    try:
        payload = BitString.from_hex(lines[1])
    except ValueError as exc:
        raise FormatError(f"{path}:2: {exc}") from None
    return kind, K, n, payload
