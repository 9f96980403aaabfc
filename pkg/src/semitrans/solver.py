"""Search for semi-transitive orientations.

``solve_exhaustive`` is the brute-force oracle over all direction masks.
``solve`` backtracks edge by edge, keeping descendant/ancestor bitsets of
the partial orientation up to date so that a new arc is rejected as soon as
it closes a cycle or completes a shortcut among already oriented edges.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Callable, Sequence

from .graph_core import Graph, ResourceLimitError, iter_bits
from .orientation import (
    Orientation,
    SemiTransitive,
    arc_has_shortcut,
    check_semi_transitive,
    is_semi_transitive_bits,
    non_adjacency,
)

DEFAULT_EXHAUSTIVE_CAP = 22
AUTO_EXHAUSTIVE_MAX_FREE = 10

EXHAUSTIVE = "exhaustive"
BACKTRACKING = "backtracking"
AUTO = "auto"


@dataclass(frozen=True)
class SolveOptions:
    forced_source: int | None = None
    forced_sink: int | None = None
    mode: str = AUTO
    edge_order: tuple[tuple[int, int], ...] | None = None
    exhaustive_cap: int = DEFAULT_EXHAUSTIVE_CAP

    def validate(self, g: Graph):
        for name in ("forced_source", "forced_sink"):
            v = getattr(self, name)
            if v is not None and not 0 <= v < g.n:
                raise ValueError(f"{name}={v} out of range for n={g.n}")
        if self.mode not in (EXHAUSTIVE, BACKTRACKING, AUTO):
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.edge_order is not None:
            canon = sorted(tuple(sorted(e)) for e in self.edge_order)
            if canon != list(g.edges):
                raise ValueError("custom edge order must be a permutation of the edges")


@dataclass
class SolveStats:
    nodes: int = 0
    cycle_prunes: int = 0
    shortcut_prunes: int = 0
    # wall time; excluded from any golden comparison
    millis: float = 0.0

    def to_json(self) -> dict:
        return {
            "nodes": self.nodes,
            "cycle_prunes": self.cycle_prunes,
            "shortcut_prunes": self.shortcut_prunes,
            "millis": round(self.millis, 3),
        }


@dataclass
class SolveResult:
    orientation: Orientation | None
    stats: SolveStats = field(default_factory=SolveStats)
    method: str = BACKTRACKING

    @property
    def sat(self) -> bool:
        return self.orientation is not None

    @property
    def outcome(self) -> str:
        return "Sat" if self.sat else "Unsat"

    def to_json(self) -> dict:
        cert = None
        if self.orientation is not None:
            cert = [list(a) for a in self.orientation.arcs]
        return {"outcome": self.outcome, "certificate": cert, "stats": self.stats.to_json()}


def _fixed_arcs(g: Graph, opts: SolveOptions) -> dict[int, tuple[int, int]] | None:
    """Edge index -> forced arc, or ``None`` when the constraints clash."""
    fixed: dict[int, tuple[int, int]] = {}
    for i, (u, v) in enumerate(g.edges):
        want = set()
        s = opts.forced_source
        if s is not None and s in (u, v):
            want.add((s, v if s == u else u))
        t = opts.forced_sink
        if t is not None and t in (u, v):
            want.add((v if t == u else u, t))
        if len(want) > 1:
            return None
        if want:
            fixed[i] = want.pop()
    return fixed


def solve_exhaustive(g: Graph, opts: SolveOptions = SolveOptions()) -> SolveResult:
    """Try every direction mask in increasing order; first success wins.

    Bit ``i`` of the mask reverses edge ``i`` (default direction is from the
    smaller to the larger endpoint). Edges pinned by a forced source or sink
    are held fixed and the rest are enumerated.
    """
    opts.validate(g)
    if g.m > opts.exhaustive_cap:
        raise ResourceLimitError(
            f"exhaustive search over {g.m} edges exceeds cap {opts.exhaustive_cap}"
        )
    start = time.perf_counter()
    stats = SolveStats()
    fixed = _fixed_arcs(g, opts)
    if fixed is None:
        stats.millis = (time.perf_counter() - start) * 1000
        return SolveResult(None, stats, EXHAUSTIVE)
    n = g.n
    nonadj = non_adjacency(g)
    base_succ = [0] * n
    for t, h in fixed.values():
        base_succ[t] |= 1 << h
    free = [(i, e) for i, e in enumerate(g.edges) if i not in fixed]
    found = None
    for x in range(1 << len(free)):
        stats.nodes += 1
        succ = list(base_succ)
        for k, (_, (u, v)) in enumerate(free):
            if x >> k & 1:
                succ[v] |= 1 << u
            else:
                succ[u] |= 1 << v
        if is_semi_transitive_bits(n, succ, nonadj):
            found = succ
            break
    stats.millis = (time.perf_counter() - start) * 1000
    if found is None:
        return SolveResult(None, stats, EXHAUSTIVE)
    cert = _orientation_from_succ(g, found)
    assert isinstance(check_semi_transitive(cert), SemiTransitive)
    return SolveResult(cert, stats, EXHAUSTIVE)


def _orientation_from_succ(g: Graph, succ: Sequence[int]) -> Orientation:
    return Orientation(g, tuple((u, v) if succ[u] >> v & 1 else (v, u) for u, v in g.edges))


def search_order(g: Graph, opts: SolveOptions) -> list[int]:
    """Edge indices in branching order.

    Edges at a forced vertex come first, then the rest by decreasing
    endpoint degree sum; ties keep edge order.
    """
    if opts.edge_order is not None:
        index = g.edge_index
        return [index[tuple(sorted(e))] for e in opts.edge_order]
    pinned = {opts.forced_source, opts.forced_sink} - {None}
    first = [i for i, e in enumerate(g.edges) if pinned & set(e)]
    rest = [i for i, e in enumerate(g.edges) if not pinned & set(e)]
    rest.sort(key=lambda i: -(g.degree(g.edges[i][0]) + g.degree(g.edges[i][1])))
    return first + rest


class _Search:
    def __init__(self, g: Graph, opts: SolveOptions, stats: SolveStats):
        self.g = g
        self.n = g.n
        self.nonadj = non_adjacency(g)
        self.desc = [0] * g.n
        self.anc = [0] * g.n
        self.succ = [0] * g.n
        self.stats = stats
        self.opts = opts

    def add(self, t: int, h: int) -> bool:
        desc, anc, succ = self.desc, self.anc, self.succ
        if desc[h] >> t & 1:
            self.stats.cycle_prunes += 1
            return False
        up = anc[t] | (1 << t)
        down = desc[h] | (1 << h)
        for x in iter_bits(up):
            desc[x] |= down
        for y in iter_bits(down):
            anc[y] |= up
        succ[t] |= 1 << h
        # any new shortcut runs over an arc u->v with u above t and v below h
        nonadj = self.nonadj
        for u in iter_bits(up):
            for v in iter_bits(succ[u] & down):
                if arc_has_shortcut(u, v, desc, anc, nonadj):
                    self.stats.shortcut_prunes += 1
                    return False
        return True

    def snapshot(self):
        return self.desc[:], self.anc[:], self.succ[:]

    def restore(self, snap):
        self.desc, self.anc, self.succ = snap[0][:], snap[1][:], snap[2][:]

    def run(self, on_leaf: Callable[[list[int]], bool]) -> bool:
        g, opts = self.g, self.opts
        fixed = _fixed_arcs(g, opts)
        if fixed is None:
            return False
        for t, h in fixed.values():
            if not self.add(t, h):
                return False
        order = [i for i in search_order(g, opts) if i not in fixed]
        edges = [g.edges[i] for i in order]
        depth = len(edges)
        stats = self.stats

        def rec(k: int) -> bool:
            if k == depth:
                if is_semi_transitive_bits(self.n, self.succ, self.nonadj):
                    return on_leaf(self.succ)
                return False
            u, v = edges[k]
            snap = self.snapshot()
            for t, h in ((u, v), (v, u)):
                stats.nodes += 1
                if self.add(t, h) and rec(k + 1):
                    return True
                self.restore(snap)
            return False

        return rec(0)


def iter_solutions(
    g: Graph, opts: SolveOptions = SolveOptions(), limit: int | None = None
) -> tuple[list[Orientation], SolveStats]:
    """All semi-transitive orientations meeting ``opts``, in search order."""
    opts.validate(g)
    stats = SolveStats()
    start = time.perf_counter()
    found: list[Orientation] = []

    def keep(succ):
        found.append(_orientation_from_succ(g, succ))
        return limit is not None and len(found) >= limit

    _Search(g, opts, stats).run(keep)
    stats.millis = (time.perf_counter() - start) * 1000
    return found, stats


def solve(g: Graph, opts: SolveOptions = SolveOptions()) -> SolveResult:
    """Decide whether ``g`` has a semi-transitive orientation.

    ``forced_source``/``forced_sink`` restrict the search to orientations in
    which that vertex has only out-/in-arcs. Since a semi-transitive graph
    always has such an orientation for any chosen vertex, pinning does not
    change the decision, only the work.
    """
    opts.validate(g)
    if opts.mode == EXHAUSTIVE:
        return solve_exhaustive(g, opts)
    if opts.mode == AUTO:
        fixed = _fixed_arcs(g, opts)
        n_free = g.m - (len(fixed) if fixed else 0)
        if n_free <= AUTO_EXHAUSTIVE_MAX_FREE and g.m <= opts.exhaustive_cap:
            return solve_exhaustive(g, opts)
    found, stats = iter_solutions(g, opts, limit=1)
    cert = found[0] if found else None
    if cert is not None:
        assert isinstance(check_semi_transitive(cert), SemiTransitive)
    return SolveResult(cert, stats, BACKTRACKING)


@dataclass
class SourceTheoremReport:
    graph: Graph
    source_ok: dict[int, bool]
    sink_ok: dict[int, bool]

    @property
    def violations(self) -> list[tuple[str, int]]:
        out = [("source", v) for v, ok in self.source_ok.items() if not ok]
        out += [("sink", v) for v, ok in self.sink_ok.items() if not ok]
        return sorted(out, key=lambda p: (p[1], p[0]))

    @property
    def ok(self) -> bool:
        return not self.violations


def verify_source_theorem(g: Graph, mode: str = BACKTRACKING) -> SourceTheoremReport:
    """Check that every vertex can be made a source and a sink."""
    if not solve(g, SolveOptions(mode=mode)).sat:
        raise ValueError("graph has no semi-transitive orientation")
    source_ok, sink_ok = {}, {}
    for v in range(g.n):
        source_ok[v] = solve(g, SolveOptions(forced_source=v, mode=mode)).sat
        sink_ok[v] = solve(g, SolveOptions(forced_sink=v, mode=mode)).sat
    return SourceTheoremReport(g, source_ok, sink_ok)
