"""Mycielski and extended Mycielski constructions.

For a base graph on ``n`` vertices the result has ``2n + 1`` vertices laid
out as originals ``0..n-1``, shadows ``n..2n-1`` (shadow of ``i`` is
``n + i``) and the apex ``2n``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .graph_core import Graph


@dataclass(frozen=True)
class Original:
    i: int


@dataclass(frozen=True)
class Shadow:
    i: int


@dataclass(frozen=True)
class Apex:
    pass


MycielskiLabel = Union[Original, Shadow, Apex]


@dataclass(frozen=True)
class LabeledGraph:
    graph: Graph
    base_n: int
    extended: bool = False

    @property
    def apex(self) -> int:
        return 2 * self.base_n

    def shadow(self, i: int) -> int:
        return index_of(self, Shadow(i))

    @property
    def labels(self) -> dict[int, MycielskiLabel]:
        return {v: label_of(self, v) for v in range(self.graph.n)}


def mycielski(g: Graph) -> LabeledGraph:
    n = g.n
    edges = list(g.edges)
    for i, j in g.edges:
        edges.append((n + i, j))
        edges.append((i, n + j))
    edges += [(n + i, 2 * n) for i in range(n)]
    return LabeledGraph(Graph(2 * n + 1, tuple(edges)), n)


def extended_mycielski(g: Graph) -> LabeledGraph:
    """Mycielski graph with each shadow ``i'`` joined to every original ``j != i``."""
    n = g.n
    edges = list(g.edges)
    edges += [(n + i, j) for i in range(n) for j in range(n) if j != i]
    edges += [(n + i, 2 * n) for i in range(n)]
    return LabeledGraph(Graph(2 * n + 1, tuple(edges)), n, extended=True)


def label_of(lg: LabeledGraph, v: int) -> MycielskiLabel:
    n = lg.base_n
    if not 0 <= v <= 2 * n:
        raise ValueError(f"vertex {v} out of range for base_n={n}")
    if v < n:
        return Original(v)
    if v < 2 * n:
        return Shadow(v - n)
    return Apex()


def index_of(lg: LabeledGraph, label: MycielskiLabel) -> int:
    n = lg.base_n
    if isinstance(label, Apex):
        return 2 * n
    if not 0 <= label.i < n:
        raise ValueError(f"{label} out of range for base_n={n}")
    return label.i if isinstance(label, Original) else n + label.i


def role_name(label: MycielskiLabel) -> str:
    return type(label).__name__.lower()


def display_name(label: MycielskiLabel) -> str:
    if isinstance(label, Original):
        return str(label.i)
    if isinstance(label, Shadow):
        return f"{label.i}'"
    return "x"


def guess_labels(g: Graph) -> LabeledGraph | None:
    """Recognise ``g`` as ``mu(G)`` or ``mu'(G)`` under the index layout.

    Returns ``None`` when ``g`` does not decompose that way.
    """
    if g.n % 2 == 0:
        return None
    n = (g.n - 1) // 2
    base = Graph(n, tuple(e for e in g.edges if e[1] < n))
    for candidate in (mycielski(base), extended_mycielski(base)):
        if candidate.graph == g:
            return candidate
    return None
