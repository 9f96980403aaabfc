"""Exit criteria. Each test records one PASS/FAIL line, printed at session end."""

import json
import time
from contextlib import contextmanager

from semitrans import (
    Bipartition,
    Cyclic,
    HasShortcut,
    SemiTransitive,
    bipartition,
    check_semi_transitive,
    check_semi_transitive_reference,
    enumerate_labeled_graphs,
    extended_mycielski,
    make_complete,
    make_complete_bipartite,
    make_cycle,
    make_path,
    mycielski,
    replay_witness,
)
from semitrans.certificates import (
    CycleColoring,
    bipartite_mycielski_orientation,
    check_coloring_properties,
    color_cycle,
    parity_argument,
    pattern_decomposition,
)
from semitrans.cli import main
from semitrans.orientation import orientation_from_mask
from semitrans.solver import SolveOptions, iter_solutions, solve

from .conftest import ACCEPTANCE_RESULTS, all_graphs


@contextmanager
def criterion(name):
    start = time.perf_counter()
    try:
        yield
    except BaseException as exc:
        ACCEPTANCE_RESULTS.append((name, False, f"{type(exc).__name__}: {exc}"[:120]))
        print(f"FAIL  {name}")
        raise
    elapsed = time.perf_counter() - start
    ACCEPTANCE_RESULTS.append((name, True, f"({elapsed:.2f}s)"))
    print(f"PASS  {name}  ({elapsed:.2f}s)")


def _timed(fn, *args):
    start = time.perf_counter()
    out = fn(*args)
    return out, time.perf_counter() - start


def test_odd_cycle_mycielskians_unsat():
    with criterion("mu(C3), mu(C5) exhaustive Unsat; mu(C7) pinned-apex backtracking Unsat"):
        exhaustive = SolveOptions(mode="exhaustive")
        r3, t3 = _timed(solve, mycielski(make_cycle(3)).graph, exhaustive)
        assert r3.outcome == "Unsat" and r3.stats.nodes == 2**12 and t3 < 1
        r5, t5 = _timed(solve, mycielski(make_cycle(5)).graph, exhaustive)
        assert r5.outcome == "Unsat" and r5.stats.nodes == 2**20 and t5 < 120
        lg7 = mycielski(make_cycle(7))
        opts = SolveOptions(forced_source=lg7.apex, mode="backtracking")
        r7, t7 = _timed(solve, lg7.graph, opts)
        assert r7.outcome == "Unsat" and t7 < 600


def test_extended_odd_cycle_mycielskians_unsat():
    with criterion("mu'(C3), mu'(C5) pinned-apex backtracking Unsat"):
        for k, budget in ((3, 60), (5, 1800)):
            lg = extended_mycielski(make_cycle(k))
            opts = SolveOptions(forced_source=lg.apex, mode="backtracking")
            res, elapsed = _timed(solve, lg.graph, opts)
            assert res.outcome == "Unsat" and elapsed < budget


def test_bipartite_direction():
    with criterion("every connected bipartite G, n<=5: construction passes both checkers, mu(G) Sat"):
        start = time.perf_counter()
        count = 0
        for n in range(1, 6):
            for _, g in enumerate_labeled_graphs(n, connected_only=True):
                parts = bipartition(g)
                if not isinstance(parts, Bipartition):
                    continue
                count += 1
                o = bipartite_mycielski_orientation(g, parts)
                assert check_semi_transitive(o) == SemiTransitive()
                assert check_semi_transitive_reference(o) == SemiTransitive()
                assert solve(mycielski(g).graph).sat
        assert count > 0
        assert time.perf_counter() - start < 600


def test_non_bipartite_direction():
    with criterion("every connected non-bipartite G, n<=4: mu(G) Unsat"):
        count = 0
        for n in range(1, 5):
            for _, g in enumerate_labeled_graphs(n, connected_only=True):
                if isinstance(bipartition(g), Bipartition):
                    continue
                count += 1
                assert solve(mycielski(g).graph, SolveOptions(mode="backtracking")).outcome == "Unsat"
        assert count > 0


def test_classification_sweep(tmp_path, capsys):
    with criterion("sweep --max-n 4: zero mismatches over connected labelled graphs"):
        for extra in ([], ["--no-pin-apex"]):
            out_dir = tmp_path / ("free" if extra else "pinned")
            code = main(["sweep", "--max-n", "4", "--out", str(out_dir), *extra])
            payload = json.loads(capsys.readouterr().out)
            assert code == 0
            assert payload["mismatches"] == []
            assert payload["summary"]["graphs"] == 44


def test_checker_equivalence():
    with criterion("closure vs reference checker on every orientation of every graph, n<=4"):
        start = time.perf_counter()
        checked = 0
        for n in range(0, 5):
            for g in all_graphs(n):
                for mask in range(1 << g.m):
                    o = orientation_from_mask(g, mask)
                    fast = check_semi_transitive(o)
                    ref = check_semi_transitive_reference(o)
                    assert type(fast) is type(ref)
                    assert replay_witness(o, fast) and replay_witness(o, ref)
                    if isinstance(fast, HasShortcut):
                        assert len(fast.path) >= 4
                    if isinstance(fast, Cyclic):
                        assert len(fast.cycle) >= 4
                    checked += 1
        assert checked > 0
        assert time.perf_counter() - start < 300


def test_source_theorem():
    with criterion("every vertex can be forced source and sink on C4,C5,C6,K3,K4,P4,mu(C4)"):
        family = [
            make_cycle(4), make_cycle(5), make_cycle(6), make_complete(3),
            make_complete(4), make_path(4), mycielski(make_cycle(4)).graph,
        ]
        for g in family:
            assert solve(g).sat
            for v in range(g.n):
                assert solve(g, SolveOptions(forced_source=v)).sat
                assert solve(g, SolveOptions(forced_sink=v)).sat


def test_proof_diagnostics():
    with criterion("apex-source certificates of mu(C4), mu(C6): properties (1)-(3), parity Consistent"):
        for k in (4, 6):
            lg = mycielski(make_cycle(k))
            sols, _ = iter_solutions(lg.graph, SolveOptions(forced_source=lg.apex))
            assert sols
            for o in sols:
                coloring = color_cycle(o)
                assert isinstance(coloring, CycleColoring)
                assert check_coloring_properties(o, coloring).ok
                assert parity_argument(pattern_decomposition(coloring)).consistent
        lg5 = mycielski(make_cycle(5))
        sols, _ = iter_solutions(lg5.graph, SolveOptions(forced_source=lg5.apex))
        assert sols == []
        assert not solve(lg5.graph, SolveOptions(forced_source=lg5.apex)).sat


def test_construction_counts():
    with criterion("|V(mu)|=2n+1, |E(mu)|=3m+n, |E(mu')|=m+n(n-1)+n; mu'(Kn)=mu(Kn)"):
        graphs = [g for n in range(0, 6) for g in all_graphs(n)]
        graphs += [make_cycle(k) for k in range(3, 12)]
        graphs += [make_complete(k) for k in range(1, 8)]
        graphs += [make_complete_bipartite(a, b) for a in range(1, 4) for b in range(1, 4)]
        for g in graphs:
            n, m = g.n, g.m
            mu = mycielski(g).graph
            assert mu.n == 2 * n + 1 and mu.m == 3 * m + n
            assert extended_mycielski(g).graph.m == m + n * (n - 1) + n
        for n in (2, 3, 4):
            assert extended_mycielski(make_complete(n)).graph.edges == mycielski(make_complete(n)).graph.edges
