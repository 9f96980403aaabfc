import pytest

from semitrans import (
    Graph,
    OddCycleWitness,
    SemiTransitive,
    bipartition,
    check_semi_transitive,
    check_semi_transitive_reference,
    make_complete,
    make_cycle,
    make_empty,
    make_path,
    mycielski,
    orient,
)
from semitrans.certificates import (
    Color,
    CycleColoring,
    MixedDirection,
    PatternDecomposition,
    bipartite_mycielski_orientation,
    check_coloring_properties,
    color_cycle,
    induced_odd_cycle,
    longest_path_length,
    parity_argument,
    pattern_decomposition,
)
from semitrans.graph_core import Bipartition
from semitrans.solver import SolveOptions, iter_solutions, solve

from .conftest import all_graphs

B, R = Color.BLUE, Color.RED


def _apex_source_certificates(k):
    lg = mycielski(make_cycle(k))
    sols, _ = iter_solutions(lg.graph, SolveOptions(forced_source=lg.apex))
    return sols


def test_construction_k2_is_semi_transitive():
    o = bipartite_mycielski_orientation(make_path(2), Bipartition(frozenset({0}), frozenset({1})))
    assert check_semi_transitive(o) == SemiTransitive()
    assert check_semi_transitive_reference(o) == SemiTransitive()


def test_construction_c4_longest_path_two():
    g = make_cycle(4)
    o = bipartite_mycielski_orientation(g, bipartition(g))
    assert longest_path_length(o) == 2
    assert check_semi_transitive(o) == SemiTransitive()


def test_construction_edgeless():
    g = make_empty(3)
    o = bipartite_mycielski_orientation(g, bipartition(g))
    assert set(o.arcs) == {(6, 3), (6, 4), (6, 5)}
    assert longest_path_length(o) == 1
    assert check_semi_transitive(o) == SemiTransitive()


def test_construction_rejects_bad_parts():
    with pytest.raises(ValueError):
        bipartite_mycielski_orientation(make_path(2), Bipartition(frozenset({0, 1}), frozenset()))


def test_construction_tail_part_b():
    g = make_cycle(6)
    parts = bipartition(g)
    o = bipartite_mycielski_orientation(g, parts, tail_part="b")
    assert all(o.has_arc(b, a) for b in parts.part_b for a in parts.part_a if g.has_edge(a, b))
    assert check_semi_transitive(o) == SemiTransitive()


@pytest.mark.parametrize("n", range(1, 7))
def test_construction_sound_on_all_bipartite(n):
    for g in all_graphs(n):
        parts = bipartition(g)
        if isinstance(parts, Bipartition):
            o = bipartite_mycielski_orientation(g, parts)
            assert check_semi_transitive(o) == SemiTransitive()
            assert longest_path_length(o) <= 2


def test_color_constructed_c4():
    # every original points at both neighbouring shadows in the construction
    g = make_cycle(4)
    o = bipartite_mycielski_orientation(g, bipartition(g))
    coloring = color_cycle(o)
    assert coloring == CycleColoring(4, (B, B, B, B))
    assert check_coloring_properties(o, coloring).ok
    assert parity_argument(pattern_decomposition(coloring)).consistent


def test_color_mixed_vertex():
    lg = mycielski(make_cycle(4))
    g = lg.graph
    arcs = []
    for u, v in g.edges:
        if v == lg.apex:
            arcs.append((v, u))
        elif u == 0 and v == 4 + 3:
            arcs.append((v, u))  # 3' -> 0 while 0 -> 1'
        else:
            arcs.append((u, v))
    o = orient(g, arcs)
    assert color_cycle(o) == MixedDirection(0)


def test_color_requires_apex_source_and_cycle_base():
    lg = mycielski(make_cycle(4))
    o = orient(lg.graph, lg.graph.edges)  # apex 8 has the largest index, so every arc enters it
    with pytest.raises(ValueError):
        color_cycle(o)
    p = mycielski(make_path(4)).graph
    with pytest.raises(ValueError):
        color_cycle(orient(p, p.edges))


@pytest.mark.parametrize("k", [4, 6])
def test_solver_certificates_satisfy_properties(k):
    sols = _apex_source_certificates(k)
    assert sols
    shapes = set()
    for o in sols:
        coloring = color_cycle(o)
        assert isinstance(coloring, CycleColoring)
        report = check_coloring_properties(o, coloring)
        assert report.ok, report.to_json()
        decomp = pattern_decomposition(coloring)
        assert parity_argument(decomp).consistent
        shapes.add(decomp.runs)
    if k == 6:
        assert ((B, 3), (R, 3)) in shapes


def test_c8_constructed_runs():
    g = make_cycle(8)
    o = bipartite_mycielski_orientation(g, bipartition(g))
    decomp = pattern_decomposition(color_cycle(o))
    assert decomp.runs == ((B, 8),)
    assert parity_argument(decomp).consistent


def test_property_report_flags_violations():
    lg = mycielski(make_cycle(4))
    o = bipartite_mycielski_orientation(make_cycle(4), bipartition(make_cycle(4)))
    # arc 0->3 would run red -> blue; runs of length 2 are even
    fake = CycleColoring(4, (R, R, B, B))
    report = check_coloring_properties(o, fake)
    assert not report.passed["1"] and report.witnesses["1"] == [[3, 0]]
    assert not report.passed["3"] and report.witnesses["3"]
    assert set(report.to_json()) == {"1", "2", "2_mirror", "3"}
    assert lg.graph == o.base


def test_property_two_both_directions():
    sols = _apex_source_certificates(6)
    fwd = sum(
        1 for o in sols for i in range(6)
        if o.has_arc(i, (i + 1) % 6) and o.has_arc((i + 1) % 6, (i + 2) % 6)
    )
    back = sum(
        1 for o in sols for i in range(6)
        if o.has_arc((i + 2) % 6, (i + 1) % 6) and o.has_arc((i + 1) % 6, i)
    )
    assert fwd > 0 and back > 0


def test_parity_examples():
    assert parity_argument(PatternDecomposition(((B, 1), (R, 1), (B, 1), (R, 1)))).consistent
    assert parity_argument(PatternDecomposition(((B, 3), (R, 3)))).consistent
    assert not parity_argument(PatternDecomposition(((B, 3), (R, 2)))).consistent
    assert not parity_argument(PatternDecomposition(((B, 5),))).consistent
    assert not parity_argument(PatternDecomposition(((B, 2), (R, 2)))).consistent


def test_pattern_canonical_rotation():
    c = CycleColoring(6, (R, R, B, B, B, R))
    assert pattern_decomposition(c).runs == ((B, 3), (R, 3))
    assert pattern_decomposition(c).to_json() == [["blue", 3], ["red", 3]]


@pytest.mark.parametrize("k", [1, 2])
def test_odd_cycles_never_reach_parity(k):
    lg = mycielski(make_cycle(2 * k + 1))
    assert not solve(lg.graph, SolveOptions(forced_source=lg.apex)).sat
    assert _apex_source_certificates(2 * k + 1) == []


def test_induced_odd_cycle_examples():
    c5 = make_cycle(5)
    assert sorted(induced_odd_cycle(c5, OddCycleWitness((0, 1, 2, 3, 4)))) == [0, 1, 2, 3, 4]
    k4 = make_complete(4)
    assert induced_odd_cycle(k4, OddCycleWitness((0, 1, 2))) == (0, 1, 2)
    chorded = Graph(5, c5.edges + ((0, 2),))
    assert sorted(induced_odd_cycle(chorded, OddCycleWitness((0, 1, 2, 3, 4)))) == [0, 1, 2]
    with pytest.raises(ValueError):
        induced_odd_cycle(c5, OddCycleWitness((0, 1, 2)))


def _chordless_odd(g, cyc):
    k = len(cyc)
    if k % 2 == 0 or k < 3:
        return False
    for i in range(k):
        for j in range(i + 1, k):
            consecutive = j == i + 1 or (i == 0 and j == k - 1)
            if g.has_edge(cyc[i], cyc[j]) != consecutive:
                return False
    return True


@pytest.mark.parametrize("n", range(3, 7))
def test_induced_odd_cycle_exhaustive(n):
    for g in all_graphs(n):
        w = bipartition(g)
        if isinstance(w, OddCycleWitness):
            cyc = induced_odd_cycle(g, w)
            assert _chordless_odd(g, cyc)
            # mu of the chordless cycle sits inside mu(g) as an induced subgraph
            k = len(cyc)
            big = mycielski(g).graph
            small = mycielski(make_cycle(k)).graph
            image = list(cyc) + [n + c for c in cyc] + [2 * n]
            for a in range(small.n):
                for b in range(a + 1, small.n):
                    assert small.has_edge(a, b) == big.has_edge(image[a], image[b])
