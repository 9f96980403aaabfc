"""Undirected simple graphs on vertices ``0..n-1``.

Vertices are 0-based throughout the package. A cycle ``C_n`` written with
vertices ``1..n`` in the literature is ``0..n-1`` here, with vertex ``i``
adjacent to ``i+1 mod n``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Iterator, TextIO

DEFAULT_ENUMERATION_CAP = 5


class ResourceLimitError(RuntimeError):
    """Raised when a request exceeds a configured size or work budget."""


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph.

    ``edges`` is stored canonically: each pair as ``(u, v)`` with ``u < v``,
    the whole tuple sorted, so equality does not depend on input order.
    """

    n: int
    edges: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"vertex count must be nonnegative, got {self.n}")
        canon = set()
        for e in self.edges:
            u, v = e
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge {e} out of range for n={self.n}")
            pair = (u, v) if u < v else (v, u)
            if pair in canon:
                raise ValueError(f"duplicate edge {pair}")
            canon.add(pair)
        object.__setattr__(self, "edges", tuple(sorted(canon)))

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> tuple[int, ...]:
        """Neighbourhood of each vertex as a bitmask."""
        adj = [0] * self.n
        for u, v in self.edges:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return tuple(adj)

    @cached_property
    def edge_index(self) -> dict[tuple[int, int], int]:
        return {e: i for i, e in enumerate(self.edges)}

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adjacency[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.adjacency[v]))

    def degree(self, v: int) -> int:
        return self.adjacency[v].bit_count()

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        seen = 1
        frontier = 1
        while frontier:
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= self.adjacency[v]
            frontier = nxt & ~seen
            seen |= nxt
        return seen == (1 << self.n) - 1


def _require(cond: bool, msg: str):
    if not cond:
        raise ValueError(msg)


def make_cycle(n: int) -> Graph:
    _require(n >= 3, f"cycle needs at least 3 vertices, got {n}")
    return Graph(n, tuple((i, (i + 1) % n) for i in range(n)))


def make_path(n: int) -> Graph:
    _require(n >= 1, f"path needs at least 1 vertex, got {n}")
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)))


def make_complete(n: int) -> Graph:
    _require(n >= 1, f"complete graph needs at least 1 vertex, got {n}")
    return Graph(n, tuple(combinations(range(n), 2)))


def make_complete_bipartite(a: int, b: int) -> Graph:
    _require(a >= 1 and b >= 1, f"part sizes must be positive, got {a}, {b}")
    return Graph(a + b, tuple((i, a + j) for i in range(a) for j in range(b)))


def make_empty(n: int) -> Graph:
    return Graph(n, ())


@dataclass(frozen=True)
class Bipartition:
    part_a: frozenset[int]
    part_b: frozenset[int]

    def is_valid_for(self, g: Graph) -> bool:
        if self.part_a & self.part_b:
            return False
        if self.part_a | self.part_b != frozenset(range(g.n)):
            return False
        return all((u in self.part_a) != (v in self.part_a) for u, v in g.edges)


@dataclass(frozen=True)
class OddCycleWitness:
    cycle: tuple[int, ...]

    def is_valid_for(self, g: Graph) -> bool:
        c = self.cycle
        if len(c) < 3 or len(c) % 2 == 0 or len(set(c)) != len(c):
            return False
        if any(not 0 <= v < g.n for v in c):
            return False
        return all(g.has_edge(c[i], c[(i + 1) % len(c)]) for i in range(len(c)))


def bipartition(g: Graph) -> Bipartition | OddCycleWitness:
    """Two-colour ``g`` by BFS, or return an odd cycle.

    Components are handled independently; each component's smallest vertex
    is its BFS root and lands in ``part_a``. The odd cycle comes from the
    first same-parity edge met during BFS, closed through the lowest common
    ancestor in the BFS tree, so it is simple but not necessarily chordless.
    """
    color = [-1] * g.n
    parent = [-1] * g.n
    depth = [0] * g.n
    for root in range(g.n):
        if color[root] != -1:
            continue
        color[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in g.neighbors(u):
                if color[w] == -1:
                    color[w] = 1 - color[u]
                    parent[w] = u
                    depth[w] = depth[u] + 1
                    queue.append(w)
                elif color[w] == color[u]:
                    return OddCycleWitness(_close_cycle(u, w, parent, depth))
    part_a = frozenset(v for v in range(g.n) if color[v] == 0)
    part_b = frozenset(v for v in range(g.n) if color[v] == 1)
    return Bipartition(part_a, part_b)


def _close_cycle(u, w, parent, depth):
    left, right = [u], [w]
    while depth[left[-1]] > depth[right[-1]]:
        left.append(parent[left[-1]])
    while depth[right[-1]] > depth[left[-1]]:
        right.append(parent[right[-1]])
    while left[-1] != right[-1]:
        left.append(parent[left[-1]])
        right.append(parent[right[-1]])
    # left ends at the common ancestor; right repeats it
    return tuple(left + right[-2::-1])


def is_bipartite(g: Graph) -> bool:
    return isinstance(bipartition(g), Bipartition)


def induced_subgraph(g: Graph, vs: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Return the subgraph induced on ``vs`` relabelled to ``0..k-1``.

    The second value maps new indices back to vertices of ``g``.
    """
    keep = tuple(sorted(set(vs)))
    for v in keep:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range for n={g.n}")
    new_index = {v: i for i, v in enumerate(keep)}
    edges = tuple(
        (new_index[u], new_index[v]) for u, v in g.edges if u in new_index and v in new_index
    )
    return Graph(len(keep), edges), keep


def enumerate_labeled_graphs(
    n: int, connected_only: bool = False, cap: int = DEFAULT_ENUMERATION_CAP
) -> Iterator[tuple[int, Graph]]:
    """Yield ``(edge_mask, graph)`` for every labelled graph on ``n`` vertices.

    Bit ``i`` of the mask selects the ``i``-th pair of
    ``combinations(range(n), 2)``. Masks are produced in increasing order.
    """
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    if n > cap:
        raise ResourceLimitError(
            f"labelled enumeration on n={n} exceeds cap {cap} "
            f"({2 ** (n * (n - 1) // 2)} graphs)"
        )
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        g = Graph(n, tuple(p for i, p in enumerate(pairs) if mask >> i & 1))
        if connected_only and not g.is_connected():
            continue
        yield mask, g


# edge-list text format: "n m" then one "u v" per line; '#' lines are comments


def format_edge_list(g: Graph, comments: Iterable[str] = ()) -> str:
    lines = [f"{g.n} {g.m}"]
    lines += [f"{u} {v}" for u, v in g.edges]
    lines += [f"# {c}" for c in comments]
    return "\n".join(lines) + "\n"


def _content_lines(text: str) -> list[str]:
    return [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.strip().startswith("#")]


def parse_edge_list(text: str) -> Graph:
    lines = [ln for ln in _content_lines(text) if not ln.startswith("orient:")]
    if not lines:
        raise ValueError("empty edge-list")
    try:
        n, m = (int(t) for t in lines[0].split())
        edges = [tuple(int(t) for t in ln.split()) for ln in lines[1:]]
    except ValueError as exc:
        raise ValueError(f"malformed edge-list: {exc}") from None
    if len(edges) != m:
        raise ValueError(f"header says {m} edges, found {len(edges)}")
    if any(len(e) != 2 for e in edges):
        raise ValueError("each edge line needs exactly two vertices")
    return Graph(n, tuple(edges))


def parse_comments(text: str) -> list[str]:
    return [ln.strip()[1:].strip() for ln in text.splitlines() if ln.strip().startswith("#")]


def write_edge_list(g: Graph, fh: TextIO, comments: Iterable[str] = ()):
    fh.write(format_edge_list(g, comments))


def read_edge_list(fh: TextIO) -> Graph:
    return parse_edge_list(fh.read())
