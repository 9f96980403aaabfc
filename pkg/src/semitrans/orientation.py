"""Orientations of simple graphs and semi-transitivity checking.

Two independent checkers are provided. ``check_semi_transitive_reference``
enumerates directed paths and tests the defining condition literally;
``check_semi_transitive`` works from the reachability closure of the DAG.
Both report the same witness when one exists: the shortcut whose path is
smallest by ``(number of vertices, vertex sequence)``, with the earliest
offending pair of positions on that path.
"""

from __future__ import annotations

import heapq
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Union

from .graph_core import Graph, ResourceLimitError, iter_bits

DEFAULT_PATH_BUDGET = 10**7


@dataclass(frozen=True)
class Orientation:
    """Direction for every edge of ``base``.

    ``arcs[i]`` is the ``(tail, head)`` pair for ``base.edges[i]``.
    """

    base: Graph
    arcs: tuple[tuple[int, int], ...]

    @cached_property
    def succ(self) -> tuple[int, ...]:
        out = [0] * self.base.n
        for t, h in self.arcs:
            out[t] |= 1 << h
        return tuple(out)

    @cached_property
    def pred(self) -> tuple[int, ...]:
        inc = [0] * self.base.n
        for t, h in self.arcs:
            inc[h] |= 1 << t
        return tuple(inc)

    def has_arc(self, tail: int, head: int) -> bool:
        return 0 <= tail < self.base.n and bool(self.succ[tail] >> head & 1)

    @property
    def mask(self) -> int:
        """Bit ``i`` set iff edge ``i`` points from its larger to its smaller end."""
        return sum(1 << i for i, (t, h) in enumerate(self.arcs) if t > h)

    def is_source(self, v: int) -> bool:
        return self.pred[v] == 0

    def is_sink(self, v: int) -> bool:
        return self.succ[v] == 0


def orient(g: Graph, directions: Iterable[tuple[int, int]]) -> Orientation:
    chosen: dict[tuple[int, int], tuple[int, int]] = {}
    for t, h in directions:
        key = (t, h) if t < h else (h, t)
        if key not in g.edge_index:
            raise ValueError(f"({t}, {h}) is not an edge of the graph")
        if key in chosen:
            raise ValueError(f"edge {key} oriented twice")
        chosen[key] = (t, h)
    missing = [e for e in g.edges if e not in chosen]
    if missing:
        raise ValueError(f"edges without a direction: {missing}")
    return Orientation(g, tuple(chosen[e] for e in g.edges))


def orientation_from_mask(g: Graph, mask: int) -> Orientation:
    return Orientation(
        g, tuple((v, u) if mask >> i & 1 else (u, v) for i, (u, v) in enumerate(g.edges))
    )


# -- verdicts --------------------------------------------------------------


@dataclass(frozen=True)
class SemiTransitive:
    pass


@dataclass(frozen=True)
class Cyclic:
    cycle: tuple[int, ...]


@dataclass(frozen=True)
class HasShortcut:
    path: tuple[int, ...]
    violation: tuple[int, int]

    @property
    def shortcut_edge(self) -> tuple[int, int]:
        return (self.path[0], self.path[-1])


Verdict = Union[SemiTransitive, Cyclic, HasShortcut]


def verdict_name(v: Verdict) -> str:
    return type(v).__name__


def verdict_to_json(v: Verdict) -> dict:
    out: dict = {"verdict": verdict_name(v)}
    if isinstance(v, Cyclic):
        out["cycle"] = list(v.cycle)
    elif isinstance(v, HasShortcut):
        out["path"] = list(v.path)
        out["shortcut_edge"] = list(v.shortcut_edge)
        out["violation"] = list(v.violation)
    return out


# -- acyclicity ------------------------------------------------------------


def is_acyclic(o: Orientation) -> list[int] | Cyclic:
    """Topological order (smallest available vertex first) or a directed cycle."""
    n = o.base.n
    indeg = [p.bit_count() for p in o.pred]
    heap = [v for v in range(n) if indeg[v] == 0]
    heapq.heapify(heap)
    order = []
    while heap:
        v = heapq.heappop(heap)
        order.append(v)
        for w in iter_bits(o.succ[v]):
            indeg[w] -= 1
            if indeg[w] == 0:
                heapq.heappush(heap, w)
    if len(order) == n:
        return order
    # every leftover vertex keeps a leftover predecessor; walk back until a repeat
    left = sum(1 << v for v in range(n)) & ~sum(1 << v for v in order)
    v = (left & -left).bit_length() - 1
    walk, seen = [v], {v: 0}
    while True:
        p = o.pred[v] & left
        v = (p & -p).bit_length() - 1
        if v in seen:
            cyc = walk[seen[v]:][::-1]
            break
        seen[v] = len(walk)
        walk.append(v)
    k = cyc.index(min(cyc))
    cyc = cyc[k:] + cyc[:k]
    return Cyclic(tuple(cyc + [cyc[0]]))


# -- closure checker -------------------------------------------------------


def transitive_closure(n: int, succ) -> list[int]:
    """Descendant bitmask of each vertex (Warshall on bit rows)."""
    desc = list(succ)
    for k in range(n):
        bk, dk = 1 << k, desc[k]
        for i in range(n):
            if desc[i] & bk:
                desc[i] |= dk
    return desc


def ancestors_from(n: int, desc) -> list[int]:
    anc = [0] * n
    for u in range(n):
        for v in iter_bits(desc[u]):
            anc[v] |= 1 << u
    return anc


def non_adjacency(g: Graph) -> list[int]:
    full = (1 << g.n) - 1
    return [full & ~g.adjacency[v] & ~(1 << v) for v in range(g.n)]


def arc_has_shortcut(u: int, v: int, desc, anc, nonadj) -> bool:
    """Whether some path ``u ~> a ~> b ~> v`` passes a non-adjacent pair ``a, b``.

    Assumes the closure is acyclic; then reachable adjacent pairs are always
    forward arcs, so a missing forward arc means a non-adjacent pair.
    """
    mid = desc[u] & anc[v]
    if not mid:
        return False
    targets = mid | (1 << v)
    for a in iter_bits(mid | (1 << u)):
        if desc[a] & targets & nonadj[a]:
            return True
    return False


def is_semi_transitive_bits(n: int, succ, nonadj) -> bool:
    desc = transitive_closure(n, succ)
    for i in range(n):
        if desc[i] >> i & 1:
            return False
    anc = ancestors_from(n, desc)
    for u in range(n):
        for v in iter_bits(succ[u]):
            if arc_has_shortcut(u, v, desc, anc, nonadj):
                return False
    return True


def check_semi_transitive(o: Orientation) -> Verdict:
    topo = is_acyclic(o)
    if isinstance(topo, Cyclic):
        return topo
    n = o.base.n
    desc = [0] * n
    for v in reversed(topo):
        d = o.succ[v]
        for w in iter_bits(o.succ[v]):
            d |= desc[w]
        desc[v] = d
    anc = ancestors_from(n, desc)
    nonadj = non_adjacency(o.base)
    if not any(arc_has_shortcut(t, h, desc, anc, nonadj) for t, h in o.arcs):
        return SemiTransitive()
    return _smallest_shortcut(o, desc, anc, nonadj)


def _bfs_distances(o: Orientation) -> list[list[int | None]]:
    n = o.base.n
    dist: list[list[int | None]] = []
    for s in range(n):
        row: list[int | None] = [None] * n
        row[s] = 0
        q = deque([s])
        while q:
            u = q.popleft()
            for w in iter_bits(o.succ[u]):
                if row[w] is None:
                    row[w] = row[u] + 1
                    q.append(w)
        dist.append(row)
    return dist


def _first_violation(path, is_arc) -> tuple[int, int] | None:
    for i in range(len(path)):
        for j in range(i + 1, len(path)):
            if not is_arc(path[i], path[j]):
                return (path[i], path[j])
    return None


def _smallest_shortcut(o: Orientation, desc, anc, nonadj) -> HasShortcut:
    dist = _bfs_distances(o)
    best = None
    for u, v in o.arcs:
        mid = desc[u] & anc[v]
        targets = mid | (1 << v)
        for a in iter_bits(mid | (1 << u)):
            for b in iter_bits(desc[a] & targets & nonadj[a]):
                length = dist[u][a] + dist[a][b] + dist[b][v]
                if best is None or length < best:
                    best = length
    assert best is not None
    # enumerate paths with exactly `best` arcs in lexicographic order
    n = o.base.n
    succ = o.succ
    longest = _longest_distances(o)

    def extend(path):
        depth = len(path) - 1
        last = path[-1]
        if depth == best:
            if o.has_arc(path[0], last):
                bad = _first_violation(path, o.has_arc)
                if bad is not None:
                    return HasShortcut(tuple(path), bad)
            return None
        rest = best - depth
        ends = succ[path[0]]
        for w in iter_bits(succ[last]):
            if not any(
                dist[w][t] is not None and dist[w][t] <= rest - 1 <= longest[w][t]
                for t in iter_bits(ends)
            ):
                continue
            found = extend(path + [w])
            if found is not None:
                return found
        return None

    for s in range(n):
        found = extend([s])
        if found is not None:
            return found
    raise AssertionError("closure reported a shortcut that path search could not rebuild")


def _longest_distances(o: Orientation) -> list[list[int]]:
    n = o.base.n
    topo = is_acyclic(o)
    longest = [[-1] * n for _ in range(n)]
    for s in range(n):
        row = longest[s]
        row[s] = 0
        for u in topo:
            if row[u] < 0:
                continue
            for w in iter_bits(o.succ[u]):
                if row[u] + 1 > row[w]:
                    row[w] = row[u] + 1
    return longest


# -- reference checker -----------------------------------------------------


def check_semi_transitive_reference(
    o: Orientation, budget: int = DEFAULT_PATH_BUDGET
) -> Verdict:
    """Decide semi-transitivity by enumerating every directed simple path.

    A directed cycle is detected whenever a path can step back onto itself.
    For every path whose end points are adjacent, every forward pair on the
    path is tested for an arc. Raises ``ResourceLimitError`` once more than
    ``budget`` paths have been generated.
    """
    n = o.base.n
    arcs = {(t, h) for t, h in o.arcs}
    out = [sorted(h for t, h in arcs if t == v) for v in range(n)]
    count = 0
    best_cycle = None
    best_shortcut = None

    def key(seq):
        return (len(seq), seq)

    stack = [[s] for s in reversed(range(n))]
    while stack:
        path = stack.pop()
        count += 1
        if count > budget:
            raise ResourceLimitError(f"reference checker exceeded {budget} paths")
        first, last = path[0], path[-1]
        if len(path) >= 2 and o.base.has_edge(first, last):
            bad = None
            for i in range(len(path)):
                for j in range(i + 1, len(path)):
                    if (path[i], path[j]) not in arcs:
                        bad = (path[i], path[j])
                        break
                if bad:
                    break
            if bad is not None:
                cand = tuple(path)
                if best_shortcut is None or key(cand) < key(best_shortcut.path):
                    best_shortcut = HasShortcut(cand, bad)
        for w in reversed(out[last]):
            if w in path:
                cyc = tuple(path[path.index(w):] + [w])
                if best_cycle is None or key(cyc) < key(best_cycle):
                    best_cycle = cyc
            else:
                stack.append(path + [w])
    if best_cycle is not None:
        return Cyclic(best_cycle)
    if best_shortcut is not None:
        return best_shortcut
    return SemiTransitive()


# -- witness replay --------------------------------------------------------


def replay_witness(o: Orientation, w: Verdict) -> bool:
    """Check a verdict's claims directly against ``o``."""
    if isinstance(w, SemiTransitive):
        return isinstance(check_semi_transitive(o), SemiTransitive)
    if isinstance(w, Cyclic):
        c = w.cycle
        if len(c) < 4 or c[0] != c[-1] or len(set(c[:-1])) != len(c) - 1:
            return False
        return all(o.has_arc(c[i], c[i + 1]) for i in range(len(c) - 1))
    if isinstance(w, HasShortcut):
        p = w.path
        if len(p) < 4 or len(set(p)) != len(p):
            return False
        if not all(o.has_arc(p[i], p[i + 1]) for i in range(len(p) - 1)):
            return False
        if not o.has_arc(p[0], p[-1]):
            return False
        a, b = w.violation
        if a not in p or b not in p or p.index(a) >= p.index(b):
            return False
        return not o.has_arc(a, b) and not o.base.has_edge(a, b)
    return False


# -- text format -----------------------------------------------------------
# an orientation file is an edge-list followed by one "orient: u>v" line per edge


def format_orientation(o: Orientation) -> str:
    from .graph_core import format_edge_list

    lines = [f"orient: {t}>{h}" for t, h in o.arcs]
    return format_edge_list(o.base) + "\n".join(lines) + "\n"


def parse_orientation(text: str, g: Graph | None = None) -> Orientation:
    """Parse ``orient:`` lines against ``g``.

    When ``g`` is omitted the edge-list in the same text is used; when both
    are present they must agree.
    """
    from .graph_core import parse_edge_list

    embedded = None
    body = [
        ln.strip()
        for ln in text.splitlines()
        if ln.strip() and not ln.strip().startswith(("#", "orient:"))
    ]
    if body:
        embedded = parse_edge_list(text)
    if g is None:
        if embedded is None:
            raise ValueError("orientation text has no edge-list and no graph was given")
        g = embedded
    elif embedded is not None and embedded != g:
        raise ValueError("orientation file's edge-list does not match the graph")
    dirs = []
    for ln in text.splitlines():
        ln = ln.strip()
        if not ln.startswith("orient:"):
            continue
        spec = ln[len("orient:"):].strip()
        try:
            t, h = (int(x) for x in spec.split(">"))
        except ValueError:
            raise ValueError(f"malformed orient line: {ln!r}") from None
        dirs.append((t, h))
    return orient(g, dirs)
