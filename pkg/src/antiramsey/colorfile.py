"""Plain-text coloring files.

Layout::

    antiramsey-coloring v1
    n 4 colors 6
    0 1 0
    0 2 1
    1 2 2
    0 3 3
    1 3 4
    2 3 5

Exactly C(n,2) data lines "<u> <v> <color>" with u < v, in colex edge order.
Lines starting with '#' are comments and may appear anywhere.  The reader is
strict: wrong order, duplicate or missing edges, colors outside the declared
range, and trailing data are all rejected with the offending line number, so
parse(serialize(c)) is the identity bit for bit.
"""

from __future__ import annotations

from pathlib import Path
from typing import Iterator

from .core import Coloring, all_edges, edge_count

HEADER = "antiramsey-coloring v1"


class ColoringFormatError(ValueError):
    """Malformed coloring file; `line` is 1-based (0 for end-of-file)."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}" if line else message)
        self.line = line


def format_coloring(c: Coloring) -> str:
    rows = [HEADER, f"n {c.n} colors {c.color_count}"]
    for eid, (u, v) in enumerate(all_edges(c.n)):
        rows.append(f"{u} {v} {c.colors[eid]}")
    return "\n".join(rows) + "\n"


def parse_coloring_text(text: str) -> Coloring:
    lines = _data_lines(text)

    lineno, content = _next(lines, "missing header")
    if content != HEADER:
        raise ColoringFormatError(f"expected header {HEADER!r}", lineno)

    lineno, content = _next(lines, "missing size line")
    fields = content.split()
    if len(fields) != 4 or fields[0] != "n" or fields[2] != "colors":
        raise ColoringFormatError("expected 'n <int> colors <int>'", lineno)
    try:
        n, declared = int(fields[1]), int(fields[3])
    except ValueError:
        raise ColoringFormatError("expected 'n <int> colors <int>'", lineno) from None
    if n < 2:
        raise ColoringFormatError(f"need n >= 2, got {n}", lineno)
    if not 1 <= declared <= edge_count(n):
        raise ColoringFormatError(f"color count {declared} out of range", lineno)

    colors = []
    for u, v in all_edges(n):
        lineno, content = _next(lines, f"missing edge ({u}, {v})")
        fields = content.split()
        try:
            fu, fv, fc = (int(x) for x in fields)
        except ValueError:
            raise ColoringFormatError("expected '<u> <v> <color>'", lineno) from None
        if (fu, fv) != (u, v):
            raise ColoringFormatError(
                f"expected edge ({u}, {v}), got ({fu}, {fv})", lineno
            )
        if not 0 <= fc < declared:
            raise ColoringFormatError(
                f"color {fc} outside declared range 0..{declared - 1}", lineno
            )
        colors.append(fc)

    for lineno, content in lines:
        raise ColoringFormatError(f"trailing data {content!r}", lineno)

    used = set(colors)
    if used != set(range(declared)):
        missing = sorted(set(range(declared)) - used)
        raise ColoringFormatError(
            f"declared {declared} colors but {missing} never appear", 0
        )
    return Coloring(n, tuple(colors))


def _data_lines(text: str) -> Iterator[tuple[int, str]]:
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if stripped.startswith("#"):
            continue
        yield lineno, stripped


def _next(lines: Iterator[tuple[int, str]], missing: str) -> tuple[int, str]:
    for lineno, content in lines:
        return lineno, content
    raise ColoringFormatError(missing, 0)


def read_coloring(path: str | Path) -> Coloring:
    return parse_coloring_text(Path(path).read_text())


def write_coloring(path: str | Path, c: Coloring) -> None:
    Path(path).write_text(format_coloring(c))
