"""Figure rendering for the report paths of the command line interface.

Figures are built directly on matplotlib Figure objects so no interactive
backend is touched; callers pass a target path and get the file written.
"""

from __future__ import annotations

import os
from typing import Sequence

from matplotlib.figure import Figure

from .counting import CountReport


def save_count_figure(report: CountReport, path: str | os.PathLike) -> str:
    """Horizontal bars of exact necklace and class counts per subgroup."""
    rows = list(report.subgroups)
    labels = [
        f"<{','.join(str(g) for g in t.generators)}> |H|={t.order}" for t in rows
    ]
    necklaces = [t.necklaces_exact for t in rows]
    classes = [t.decimation_classes for t in rows]

    fig = Figure(figsize=(8, max(2.5, 0.5 * len(rows) + 1.5)))
    ax = fig.add_subplot(111)
    ypos = range(len(rows))
    ax.barh([y + 0.2 for y in ypos], necklaces, height=0.4, label="necklaces (exact)")
    ax.barh([y - 0.2 for y in ypos], classes, height=0.4, label="decimation classes")
    ax.set_yticks(list(ypos))
    ax.set_yticklabels(labels)
    ax.invert_yaxis()
    ax.set_xlabel("count")
    ax.set_title(f"{report.group}, density {report.density}")
    if max(necklaces + classes, default=0) > 1000:
        ax.set_xscale("log")
    for y, v in zip(ypos, necklaces):
        ax.annotate(str(v), (v, y + 0.2), va="center", fontsize=8)
    for y, v in zip(ypos, classes):
        ax.annotate(str(v), (v, y - 0.2), va="center", fontsize=8)
    ax.legend()
    fig.tight_layout()
    fig.savefig(os.fspath(path), dpi=150)
    return os.fspath(path)


def save_sweep_figure(
    lengths: Sequence[int],
    series: dict[str, Sequence[int]],
    path: str | os.PathLike,
) -> str:
    """Line chart of the counts across a sweep of cyclic group lengths."""
    fig = Figure(figsize=(8, 5))
    ax = fig.add_subplot(111)
    for name, values in series.items():
        ax.plot(list(lengths), [int(v) for v in values], marker="o", label=name)
    all_values = [int(v) for vs in series.values() for v in vs]
    if all_values and min(all_values) > 0:
        ax.set_yscale("log")
    ax.set_xlabel("group length")
    ax.set_ylabel("count")
    ax.grid(True, alpha=0.3)
    ax.legend()
    fig.tight_layout()
    fig.savefig(os.fspath(path), dpi=150)
    return os.fspath(path)
