"""Graphviz DOT rendering."""

from __future__ import annotations

from .graph_core import Graph
from .mycielski import Apex, LabeledGraph, Original, Shadow, display_name, label_of, role_name
from .orientation import Orientation

ROLE_STYLE = {
    "original": 'shape=circle, style=filled, fillcolor="#ffffff"',
    "shadow": 'shape=circle, style=filled, fillcolor="#dddddd"',
    "apex": 'shape=doublecircle, style=filled, fillcolor="#aaaaaa"',
}


def to_dot(
    g: Graph,
    orientation: Orientation | None = None,
    labels: LabeledGraph | None = None,
    name: str = "G",
) -> str:
    """DOT text; directed when ``orientation`` is given.

    With ``labels`` every node carries a ``role`` attribute and the three
    roles are placed on separate ranks (originals, shadows, apex).
    """
    directed = orientation is not None
    lines = [f"{'digraph' if directed else 'graph'} {name} {{"]
    if labels is not None:
        lines.append("  rankdir=TB;")
    for v in range(g.n):
        if labels is None:
            lines.append(f"  {v};")
            continue
        lab = label_of(labels, v)
        role = role_name(lab)
        lines.append(f'  {v} [label="{display_name(lab)}", role="{role}", {ROLE_STYLE[role]}];')
    if labels is not None:
        for kind in (Original, Shadow, Apex):
            members = [str(v) for v in range(g.n) if isinstance(label_of(labels, v), kind)]
            if members:
                lines.append(f"  {{ rank=same; {'; '.join(members)}; }}")
    if directed:
        lines += [f"  {t} -> {h};" for t, h in orientation.arcs]
    else:
        lines += [f"  {u} -- {v};" for u, v in g.edges]
    lines.append("}")
    return "\n".join(lines) + "\n"
