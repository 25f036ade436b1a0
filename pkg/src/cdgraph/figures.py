"""Rendering of prime graphs to image files."""

from __future__ import annotations

import math

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .prime_graph import Graph, cut_vertices


def render_graph(g: Graph, path: str, title: str | None = None) -> str:
    """Draw the graph with vertices on a circle and save it; cut vertices
    are highlighted.  Returns the path written."""
    n = len(g.vertices)
    fig, ax = plt.subplots(figsize=(4, 4))
    if n == 0:
        ax.text(0.5, 0.5, "empty graph", ha="center", va="center")
        ax.set_axis_off()
    else:
        pos = {}
        for i, v in enumerate(g.vertices):
            ang = math.pi / 2 + 2 * math.pi * i / n
            pos[v] = (math.cos(ang), math.sin(ang))
        for a, b in g.edges:
            (x1, y1), (x2, y2) = pos[a], pos[b]
            ax.plot([x1, x2], [y1, y2], color="0.35", zorder=1, linewidth=1.4)
        cuts = set(cut_vertices(g))
        for v, (x, y) in pos.items():
            color = "#d62728" if v in cuts else "#1f77b4"
            ax.scatter([x], [y], s=600, color=color, zorder=2)
            ax.text(x, y, str(v), ha="center", va="center", color="white",
                    fontsize=11, zorder=3)
        ax.set_xlim(-1.45, 1.45)
        ax.set_ylim(-1.45, 1.45)
        ax.set_aspect("equal")
        ax.set_axis_off()
    if title:
        ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path
