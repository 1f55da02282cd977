"""Interval diagrams (PNG via matplotlib, or plain text) and suite report figures."""

from __future__ import annotations

from collections import defaultdict
from fractions import Fraction
from pathlib import Path
from typing import Sequence

from .model import Representation


def _pyplot():
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    return plt


def text_art(rep: Representation, width: int = 64) -> str:
    """One row per interval: ``[`` and ``]`` for the ends, ``|`` for marks.

    Columns are linear in the coordinate, so nearby points may share a column;
    the exact coordinates follow each row.
    """
    if rep.n == 0:
        return ""
    pts = rep.all_points()
    lo, hi = min(pts), max(pts)
    span = hi - lo or Fraction(1)

    def col(x: Fraction) -> int:
        return round((x - lo) / span * (width - 1))

    label_w = len(str(rep.n - 1))
    lines = []
    for i, iv in enumerate(rep.intervals):
        row = [" "] * width
        a, b = col(iv.left), col(iv.right)
        for c in range(a, b + 1):
            row[c] = "-"
        for m in iv.marks:
            row[col(m)] = "|"
        row[a] = "["
        row[b] = "]"
        coords = " ".join(_fmt(p) for p in iv.points)
        lines.append(f"{i:>{label_w}} {''.join(row).rstrip():<{width}}  ({coords})")
    return "\n".join(lines)


def _fmt(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def draw_rep(rep: Representation, path: str | Path, title: str | None = None) -> Path:
    """Stacked horizontal segments with tick marks; saved to ``path``."""
    plt = _pyplot()
    path = Path(path)
    fig, ax = plt.subplots(figsize=(8, 0.45 * max(rep.n, 2) + 1.2))
    for i, iv in enumerate(rep.intervals):
        y = rep.n - 1 - i
        ax.plot([float(iv.left), float(iv.right)], [y, y], color="black", lw=2, solid_capstyle="butt")
        for end in (iv.left, iv.right):
            ax.plot([float(end)] * 2, [y - 0.18, y + 0.18], color="black", lw=1.5)
        for m in iv.marks:
            ax.plot([float(m)] * 2, [y - 0.3, y + 0.3], color="tab:red", lw=2)
    ax.set_yticks(range(rep.n))
    ax.set_yticklabels([str(rep.n - 1 - y) for y in range(rep.n)])
    ax.set_ylim(-0.8, rep.n - 0.2)
    ax.set_xlabel("position")
    ax.set_ylabel("vertex")
    for side in ("top", "right"):
        ax.spines[side].set_visible(False)
    if title:
        ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def suite_figure(rows: Sequence[dict], path: str | Path, title: str) -> Path:
    """Trials and passes grouped by vertex count."""
    plt = _pyplot()
    path = Path(path)
    total: dict[int, int] = defaultdict(int)
    passed: dict[int, int] = defaultdict(int)
    for r in rows:
        total[r["n"]] += 1
        passed[r["n"]] += int(bool(r["holds"]))
    ns = sorted(total)
    fig, ax = plt.subplots(figsize=(6, 3.5))
    ax.bar(ns, [total[n] for n in ns], color="lightgray", label="trials")
    ax.bar(ns, [passed[n] for n in ns], width=0.5, color="tab:green", label="hold")
    ax.set_xlabel("intervals per representation")
    ax.set_ylabel("count")
    ax.set_title(title)
    ax.legend(frameon=False)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path
