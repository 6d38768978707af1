"""Shared text-output helpers: 15 significant digits, strict CSV."""

from __future__ import annotations

from typing import Iterable, Sequence


def sig15(x: float) -> str:
    """Format a real number to 15 significant digits."""
    v = float(x)
    if v == 0.0:
        v = 0.0  # avoid '-0'
    return f"{v:.15g}"


def csv_text(header: Sequence[str], rows: Iterable[Sequence[str]]) -> str:
    """CSV with a header row, comma separators and LF line endings."""
    lines = [",".join(header)]
    lines.extend(",".join(row) for row in rows)
    return "\n".join(lines) + "\n"


def table_text(
    header: Sequence[str], rows: Iterable[Sequence[str]], notes: Sequence[str] = ()
) -> str:
    """Space-aligned table, optionally preceded by '#' note lines."""
    rows = [list(r) for r in rows]
    widths = [len(h) for h in header]
    for row in rows:
        for i, cell in enumerate(row):
            widths[i] = max(widths[i], len(cell))
    out = [f"# {n}" for n in notes]
    out.append("  ".join(h.ljust(w) for h, w in zip(header, widths)).rstrip())
    for row in rows:
        out.append("  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip())
    return "\n".join(out) + "\n"
