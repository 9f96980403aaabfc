"""Matplotlib figures for sweep reports and layered Mycielski drawings."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .mycielski import LabeledGraph, display_name, label_of  # noqa: E402
from .orientation import Orientation  # noqa: E402
from .sweep import SweepReport  # noqa: E402

SAT_COLOR = "#2b7bba"
UNSAT_COLOR = "#d6604d"

RC = {
    "font.size": 9,
    "axes.spines.top": False,
    "axes.spines.right": False,
    "axes.titlesize": 10,
    "legend.frameon": False,
    "savefig.dpi": 150,
}


def plot_sweep(report: SweepReport, path) -> None:
    """Search effort per instance, and bipartite vs Sat counts by vertex count."""
    rows = report.rows
    with plt.rc_context(RC):
        fig, (ax_nodes, ax_counts) = plt.subplots(1, 2, figsize=(9, 3.4))

        xs = range(len(rows))
        colors = [SAT_COLOR if r.mu_decision == "Sat" else UNSAT_COLOR for r in rows]
        ax_nodes.scatter(xs, [max(r.nodes, 1) for r in rows], c=colors, s=12)
        ax_nodes.set_yscale("log")
        ax_nodes.set_xlabel("instance")
        ax_nodes.set_ylabel("search nodes")
        ax_nodes.set_title("mu(G) search effort")
        for label, color in (("Sat", SAT_COLOR), ("Unsat", UNSAT_COLOR)):
            ax_nodes.scatter([], [], c=color, s=12, label=label)
        ax_nodes.legend(loc="upper left")

        ns = sorted({r.n for r in rows})
        bip = [sum(r.bipartite for r in rows if r.n == n) for n in ns]
        sat = [sum(r.mu_decision == "Sat" for r in rows if r.n == n) for n in ns]
        total = [sum(1 for r in rows if r.n == n) for n in ns]
        width = 0.28
        ax_counts.bar([n - width for n in ns], total, width, color="0.8", label="graphs")
        ax_counts.bar(ns, bip, width, color="0.45", label="bipartite")
        ax_counts.bar([n + width for n in ns], sat, width, color=SAT_COLOR, label="mu(G) Sat")
        ax_counts.set_xticks(ns)
        ax_counts.set_xlabel("n")
        ax_counts.set_title(f"{len(report.mismatches)} mismatches")
        ax_counts.legend(loc="upper left")

        fig.tight_layout()
        fig.savefig(path)
        plt.close(fig)


def layered_positions(lg: LabeledGraph) -> dict[int, tuple[float, float]]:
    """Originals on top, shadows below them, apex centred at the bottom."""
    n = lg.base_n
    pos = {}
    for v in range(lg.graph.n):
        if v < n:
            pos[v] = (float(v), 2.0)
        elif v < 2 * n:
            pos[v] = (float(v - n), 1.0)
        else:
            pos[v] = ((n - 1) / 2, 0.0)
    return pos


def draw_mycielski(lg: LabeledGraph, path, orientation: Orientation | None = None) -> None:
    g = lg.graph
    pos = layered_positions(lg)
    with plt.rc_context(RC):
        fig, ax = plt.subplots(figsize=(max(3.0, lg.base_n * 0.9), 3.2))
        pairs = orientation.arcs if orientation is not None else g.edges
        style = "-|>" if orientation is not None else "-"
        for t, h in pairs:
            (x0, y0), (x1, y1) = pos[t], pos[h]
            # bend edges inside a row so they do not run through other nodes
            rad = 0.35 if y0 == y1 and abs(x1 - x0) > 1 else 0.0
            ax.annotate(
                "",
                xy=(x1, y1),
                xytext=(x0, y0),
                arrowprops=dict(
                    arrowstyle=style, color="0.3", lw=0.8, shrinkA=8, shrinkB=8,
                    connectionstyle=f"arc3,rad={rad}",
                ),
                zorder=1,
            )
        for v, (x, y) in pos.items():
            ax.scatter([x], [y], s=220, c="white", edgecolors="black", zorder=2)
            ax.text(x, y, display_name(label_of(lg, v)), ha="center", va="center", zorder=3)
        ax.set_xlim(-0.6, max(lg.base_n - 0.4, 0.6))
        ax.set_ylim(-0.4, 2.9)
        ax.set_axis_off()
        fig.tight_layout()
        fig.savefig(path)
        plt.close(fig)
