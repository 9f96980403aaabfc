"""Explicit orientations for bipartite Mycielskians and odd-cycle diagnostics.

The diagnostics look at an orientation of ``mu(C_n)`` in which the apex is a
source. Each cycle vertex ``i`` sees the shadows of its two cycle
neighbours; it is *red* when both of those shadow edges point into ``i`` and
*blue* when both point out. The colouring obeys three local rules on a
semi-transitive orientation:

1. a blue-red cycle edge always points from blue to red;
2. on a directed 2-path ``i -> i+1 -> i+2`` along the cycle, ``i`` is blue
   and ``i+2`` is red (and mirrored for the opposite direction);
3. every maximal run of one colour has odd length once there are two or
   more runs.

Alternating runs of odd length force an even cycle, which is why odd cycles
admit no such orientation.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .graph_core import Bipartition, Graph, OddCycleWitness, make_cycle
from .mycielski import mycielski
from .orientation import Orientation, is_acyclic, orient


class Color(str, enum.Enum):
    BLUE = "blue"
    RED = "red"


def bipartite_mycielski_orientation(
    g: Graph, parts: Bipartition, tail_part: str = "a"
) -> Orientation:
    """Orient ``mu(g)`` with no directed path longer than two arcs.

    Edges of ``g`` go from one part to the other (``tail_part`` picks which),
    the apex points at every shadow, and every original points at each of
    its shadow neighbours.
    """
    if not parts.is_valid_for(g):
        raise ValueError("not a bipartition of the graph")
    if tail_part not in ("a", "b"):
        raise ValueError(f"tail_part must be 'a' or 'b', got {tail_part!r}")
    tails = parts.part_a if tail_part == "a" else parts.part_b
    lg = mycielski(g)
    n = g.n
    arcs = []
    for u, v in lg.graph.edges:
        if v == lg.apex:
            arcs.append((v, u))
        elif v >= n:
            arcs.append((u, v))
        else:
            arcs.append((u, v) if u in tails else (v, u))
    return orient(lg.graph, arcs)


def longest_path_length(o: Orientation) -> int:
    """Number of arcs on a longest directed path; ``o`` must be acyclic."""
    topo = is_acyclic(o)
    if not isinstance(topo, list):
        raise ValueError("orientation has a directed cycle")
    best = [0] * o.base.n
    for v in topo:
        for w in range(o.base.n):
            if o.has_arc(v, w) and best[v] + 1 > best[w]:
                best[w] = best[v] + 1
    return max(best, default=0)


@dataclass(frozen=True)
class CycleColoring:
    n_c: int
    colors: tuple[Color, ...]

    def __getitem__(self, i: int) -> Color:
        return self.colors[i % self.n_c]


@dataclass(frozen=True)
class MixedDirection:
    """Vertex ``i`` has one shadow edge pointing in and one pointing out."""

    vertex: int


def _cycle_length_of(o: Orientation) -> int:
    total = o.base.n
    n_c = (total - 1) // 2
    if total % 2 == 0 or n_c < 3 or mycielski(make_cycle(n_c)).graph != o.base:
        raise ValueError("orientation is not on the Mycielski graph of a cycle")
    return n_c


def color_cycle(o: Orientation) -> CycleColoring | MixedDirection:
    """Red/blue colouring of the cycle vertices of ``mu(C_n)``.

    Requires the apex to be a source; reorienting to get there is left to
    the solver (pin the apex with ``forced_source``).
    """
    n_c = _cycle_length_of(o)
    apex = 2 * n_c
    if not o.is_source(apex):
        raise ValueError("apex is not a source")
    colors = []
    for i in range(n_c):
        before, after = n_c + (i - 1) % n_c, n_c + (i + 1) % n_c
        into = (o.has_arc(before, i), o.has_arc(after, i))
        if into == (True, True):
            colors.append(Color.RED)
        elif into == (False, False):
            colors.append(Color.BLUE)
        else:
            return MixedDirection(i)
    return CycleColoring(n_c, tuple(colors))


@dataclass(frozen=True)
class PatternDecomposition:
    """Maximal same-colour runs around the cycle, as ``(color, length)``.

    The rotation is canonical: the lexicographically smallest run list.
    """

    runs: tuple[tuple[Color, int], ...]

    @property
    def total(self) -> int:
        return sum(length for _, length in self.runs)

    def to_json(self) -> list:
        return [[c.value, length] for c, length in self.runs]


def _runs_with_starts(coloring: CycleColoring) -> list[tuple[int, Color, int]]:
    n, c = coloring.n_c, coloring.colors
    if len(set(c)) == 1:
        return [(0, c[0], n)]
    # start at a colour change so no run wraps
    s = next(i for i in range(n) if c[i] != c[i - 1])
    runs = []
    i = 0
    while i < n:
        start = (s + i) % n
        length = 1
        while i + length < n and c[(s + i + length) % n] == c[start]:
            length += 1
        runs.append((start, c[start], length))
        i += length
    return runs


def pattern_decomposition(coloring: CycleColoring) -> PatternDecomposition:
    runs = [(color, length) for _, color, length in _runs_with_starts(coloring)]
    key = [(color.value, length) for color, length in runs]
    k = min(range(len(runs)), key=lambda r: key[r:] + key[:r])
    return PatternDecomposition(tuple(runs[k:] + runs[:k]))


@dataclass
class PropertyReport:
    passed: dict[str, bool] = field(default_factory=dict)
    witnesses: dict[str, list] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(self.passed.values())

    def to_json(self) -> dict:
        return {
            name: {"pass": self.passed[name], "witnesses": self.witnesses[name]}
            for name in self.passed
        }


def check_coloring_properties(o: Orientation, coloring: CycleColoring) -> PropertyReport:
    n = coloring.n_c
    report = PropertyReport()

    bad = []
    for i in range(n):
        j = (i + 1) % n
        ci, cj = coloring[i], coloring[j]
        if ci != cj:
            blue, red = (i, j) if ci is Color.BLUE else (j, i)
            if not o.has_arc(blue, red):
                bad.append([i, j])
    report.passed["1"], report.witnesses["1"] = not bad, bad

    forward, backward = [], []
    for i in range(n):
        a, b, c = i, (i + 1) % n, (i + 2) % n
        if o.has_arc(a, b) and o.has_arc(b, c):
            if coloring[a] is not Color.BLUE or coloring[c] is not Color.RED:
                forward.append([a, b, c])
        if o.has_arc(c, b) and o.has_arc(b, a):
            if coloring[c] is not Color.BLUE or coloring[a] is not Color.RED:
                backward.append([c, b, a])
    report.passed["2"], report.witnesses["2"] = not forward, forward
    report.passed["2_mirror"], report.witnesses["2_mirror"] = not backward, backward

    # Same-coloured flanks i and i+m around an opposite run sit m apart, so
    # the run between them has m - 1 vertices: "m even" is "run length odd".
    runs = _runs_with_starts(coloring)
    even = [] if len(runs) < 2 else [[s, length] for s, _, length in runs if length % 2 == 0]
    report.passed["3"], report.witnesses["3"] = not even, even
    return report


@dataclass(frozen=True)
class ParityVerdict:
    consistent: bool
    reason: str


def parity_argument(decomposition: PatternDecomposition) -> ParityVerdict:
    """Check the run structure for the odd/even contradiction.

    With two or more runs the colours alternate, so the run count must be
    even and each run odd, hence an even total. A single run means every
    cycle vertex is a source or a sink of the cycle, which again needs an
    even total.
    """
    runs = decomposition.runs
    total = decomposition.total
    if total % 2:
        return ParityVerdict(False, f"cycle length {total} is odd")
    if len(runs) == 1:
        return ParityVerdict(True, "single run on an even cycle")
    if len(runs) % 2:
        return ParityVerdict(False, f"{len(runs)} runs cannot alternate around a cycle")
    even = [length for _, length in runs if length % 2 == 0]
    if even:
        return ParityVerdict(False, f"runs of even length {even}")
    return ParityVerdict(True, f"{len(runs)} odd runs summing to {total}")


def induced_odd_cycle(g: Graph, witness: OddCycleWitness) -> tuple[int, ...]:
    """Shrink an odd cycle across chords until it is chordless.

    A chord splits an odd cycle into two shorter cycles whose lengths add up
    to the old length plus two, so exactly one of them is odd.
    """
    if not witness.is_valid_for(g):
        raise ValueError("witness is not an odd cycle of the graph")
    cyc = list(witness.cycle)
    while True:
        chord = _find_chord(g, cyc)
        if chord is None:
            return tuple(cyc)
        i, j = chord
        inner = cyc[i:j + 1]
        outer = cyc[j:] + cyc[:i + 1]
        cyc = inner if len(inner) % 2 else outer


def _find_chord(g: Graph, cyc: list[int]) -> tuple[int, int] | None:
    k = len(cyc)
    for i in range(k):
        for j in range(i + 2, k):
            if i == 0 and j == k - 1:
                continue
            if g.has_edge(cyc[i], cyc[j]):
                return i, j
    return None
