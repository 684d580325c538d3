"""Text file format for lattice point sets.

One point per line as space-separated signed integers.  '#' starts a
comment (whole line or trailing).  The dimension is taken from the first
data line and every later line must match it.  Duplicate points are merged
and counted so callers can warn.
"""

from __future__ import annotations

import io
from dataclasses import dataclass
from pathlib import Path
from typing import TextIO

from .lattice import LatticeSet

__all__ = ["PointFormatError", "PointFileReport", "load_points", "loads_points", "dump_points", "dumps_points"]


class PointFormatError(ValueError):
    """Malformed point-set text; message carries the offending line."""


@dataclass(frozen=True)
class PointFileReport:
    points: LatticeSet
    line_count: int
    duplicate_count: int


def _parse(stream: TextIO, source: str) -> PointFileReport:
    seen: set[tuple[int, ...]] = set()
    order: list[tuple[int, ...]] = []
    dim: int | None = None
    duplicates = 0
    data_lines = 0
    for lineno, raw in enumerate(stream, start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        try:
            point = tuple(int(t) for t in tokens)
        except ValueError as exc:
            raise PointFormatError(f"{source}:{lineno}: non-integer token in {tokens!r}") from exc
        if dim is None:
            dim = len(point)
        elif len(point) != dim:
            raise PointFormatError(
                f"{source}:{lineno}: expected {dim} coordinates, got {len(point)}"
            )
        data_lines += 1
        if point in seen:
            duplicates += 1
        else:
            seen.add(point)
            order.append(point)
    if dim is None:
        raise PointFormatError(f"{source}: no data lines")
    return PointFileReport(
        points=LatticeSet(order, dim=dim),
        line_count=data_lines,
        duplicate_count=duplicates,
    )


def load_points(path: str | Path) -> PointFileReport:
    """Parse a point-set file; raises PointFormatError on malformed input."""
    path = Path(path)
    with path.open("r", encoding="utf-8") as fh:
        return _parse(fh, str(path))


def loads_points(text: str, source: str = "<string>") -> PointFileReport:
    return _parse(io.StringIO(text), source)


def dumps_points(points: LatticeSet, header: str | None = None) -> str:
    lines: list[str] = []
    if header:
        lines.extend(f"# {h}" for h in header.splitlines())
    lines.extend(" ".join(str(c) for c in p) for p in points.sorted_points())
    return "\n".join(lines) + "\n"


def dump_points(points: LatticeSet, path: str | Path, header: str | None = None) -> None:
    """Write a point-set file atomically (temp file + rename)."""
    path = Path(path)
    tmp = path.with_name(path.name + ".tmp")
    tmp.write_text(dumps_points(points, header), encoding="utf-8")
    tmp.replace(path)
