"""Matplotlib rendering of growth curves and oriented balls.

Used by the CLI report paths to drop a figure next to the delimited output;
layout is deterministic (levels bottom-up, vertices ordered by normal form).
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt


def growth_figure(series, path, title="sphere sizes"):
    """Plot one or more growth sequences; series maps label -> list of counts."""
    fig, ax = plt.subplots(figsize=(6, 4))
    for label, counts in series.items():
        ax.plot(range(len(counts)), counts, marker="o", label=label)
    ax.set_xlabel("length")
    ax.set_ylabel("elements")
    ax.set_title(title)
    ax.grid(True, alpha=0.3)
    if len(series) > 1:
        ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def hasse_figure(h, path, max_level=None, title=None):
    """Draw an oriented ball: covers as grey segments, flat edges dashed red."""
    ball = h.ball
    cap = h.usable if max_level is None else max_level
    levels = {}
    for v in range(ball.n_vertices):
        if 0 <= h.dist[v] <= cap:
            levels.setdefault(h.dist[v], []).append(v)
    pos = {}
    for lvl, vs in levels.items():
        vs.sort(key=lambda v: ball.norms[v])
        for i, v in enumerate(vs):
            pos[v] = (i - (len(vs) - 1) / 2.0, lvl)
    fig, ax = plt.subplots(figsize=(7, 5))
    for u in pos:
        for v in h.children[u]:
            if v in pos:
                ax.plot(*zip(pos[u], pos[v]), color="0.6", lw=0.8, zorder=1)
    for u, v in h.flat_edges:
        if u in pos and v in pos:
            ax.plot(*zip(pos[u], pos[v]), color="red", ls="--", lw=1.0, zorder=2)
    xs = [pos[v][0] for v in pos]
    ys = [pos[v][1] for v in pos]
    ax.scatter(xs, ys, s=18, color="navy", zorder=3)
    ax.set_yticks(range(0, cap + 1))
    ax.set_ylabel("distance from basepoint")
    ax.set_xticks([])
    if title:
        ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path
