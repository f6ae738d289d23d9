"""Matplotlib rendering of graphs and report figures (file output only)."""

from __future__ import annotations

import math
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
from matplotlib.patches import FancyArrowPatch

from .graphs import Digraph
from .serialize import _label_str


def draw_digraph(g: Digraph, path: str | Path, title: str = "") -> None:
    """Circular-layout drawing with self-loops drawn as small hooks."""
    n = len(g.vertices)
    pos = {
        v: (math.cos(2 * math.pi * i / n), math.sin(2 * math.pi * i / n))
        for i, v in enumerate(g.vertices)
    }
    size = max(4.0, min(12.0, 0.45 * n))
    fig, ax = plt.subplots(figsize=(size, size))
    for u, v in sorted(g.edges, key=lambda e: (_label_str(e[0]), _label_str(e[1]))):
        x1, y1 = pos[u]
        x2, y2 = pos[v]
        if u == v:
            r = 0.08
            ax.add_patch(
                plt.Circle((x1 * (1 + r * 2), y1 * (1 + r * 2)), r, fill=False, lw=0.8)
            )
            continue
        ax.add_patch(
            FancyArrowPatch(
                (x1, y1),
                (x2, y2),
                arrowstyle="-|>",
                mutation_scale=9,
                connectionstyle="arc3,rad=0.12",
                lw=0.8,
                color="tab:blue",
                shrinkA=10,
                shrinkB=10,
            )
        )
    for v, (x, y) in pos.items():
        ax.plot([x], [y], "o", ms=14, color="whitesmoke", mec="black", zorder=3)
        ax.annotate(
            _label_str(v),
            (x, y),
            ha="center",
            va="center",
            fontsize=7,
            zorder=4,
        )
    ax.set_xlim(-1.35, 1.35)
    ax.set_ylim(-1.35, 1.35)
    ax.set_aspect("equal")
    ax.axis("off")
    if title:
        ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def draw_absorption_chart(rows: list[dict], path: str | Path) -> None:
    """Bar chart of the kernel absorption depths per width."""
    widths = [r["n"] for r in rows]
    x = range(len(widths))
    fig, ax = plt.subplots(figsize=(5, 3.2))
    ax.bar([i - 0.18 for i in x], [r["absorb_all"] for r in rows], width=0.36, label="all words")
    ax.bar([i + 0.18 for i in x], [r["absorb_zero"] for r in rows], width=0.36, label="zero word")
    ax.set_xticks(list(x), [str(w) for w in widths])
    ax.set_xlabel("family width")
    ax.set_ylabel("steps to the kernel")
    ax.legend(frameon=False)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def draw_check_summary(results: list, path: str | Path) -> None:
    """One horizontal bar per scope with pass/fail counts."""
    scopes: dict[str, list[bool]] = {}
    for r in results:
        scopes.setdefault(r.scope, []).append(r.ok)
    names = sorted(scopes)
    passed = [sum(scopes[s]) for s in names]
    failed = [len(scopes[s]) - sum(scopes[s]) for s in names]
    fig, ax = plt.subplots(figsize=(5, 0.5 * len(names) + 1.2))
    y = range(len(names))
    ax.barh(list(y), passed, color="tab:green", label="pass")
    ax.barh(list(y), failed, left=passed, color="tab:red", label="fail")
    ax.set_yticks(list(y), names)
    ax.set_xlabel("checks")
    ax.legend(frameon=False)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
