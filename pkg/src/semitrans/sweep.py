"""Classification sweeps: bipartiteness of G against solvability of mu(G)."""

from __future__ import annotations

import csv
import io
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field

from .graph_core import (
    DEFAULT_ENUMERATION_CAP,
    Graph,
    ResourceLimitError,
    enumerate_labeled_graphs,
    is_bipartite,
    make_complete,
    make_complete_bipartite,
    make_cycle,
    make_path,
)
from .mycielski import extended_mycielski, mycielski
from .solver import SolveOptions, solve

CSV_COLUMNS = ["id", "n", "m", "bipartite", "mu_decision", "nodes", "millis"]

FAMILY_BUILDERS = {
    "cycle": make_cycle,
    "path": make_path,
    "complete": make_complete,
}


@dataclass
class SweepRow:
    id: str
    n: int
    m: int
    bipartite: bool
    mu_decision: str
    nodes: int
    millis: float
    mu_ext_decision: str | None = None
    ext_nodes: int | None = None

    @property
    def mismatch(self) -> bool:
        if (self.mu_decision == "Sat") != self.bipartite:
            return True
        if self.mu_ext_decision is not None:
            return (self.mu_ext_decision == "Sat") != self.bipartite
        return False


@dataclass
class SweepReport:
    rows: list[SweepRow] = field(default_factory=list)
    extended: bool = False

    @property
    def mismatches(self) -> list[str]:
        return [r.id for r in self.rows if r.mismatch]

    @property
    def summary(self) -> dict:
        return {
            "graphs": len(self.rows),
            "bipartite": sum(r.bipartite for r in self.rows),
            "mu_sat": sum(r.mu_decision == "Sat" for r in self.rows),
            "mu_unsat": sum(r.mu_decision == "Unsat" for r in self.rows),
            "mismatches": len(self.mismatches),
        }

    def to_json(self) -> dict:
        return {
            "summary": self.summary,
            "mismatches": self.mismatches,
            "rows": [asdict(r) for r in self.rows],
        }

    def to_csv(self) -> str:
        cols = CSV_COLUMNS + (["mu_ext_decision"] if self.extended else [])
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(cols)
        for r in self.rows:
            d = asdict(r)
            d["bipartite"] = str(r.bipartite).lower()
            d["millis"] = f"{r.millis:.3f}"
            writer.writerow([d[c] for c in cols])
        return buf.getvalue()

    def write(self, out_dir, stem: str = "sweep"):
        from pathlib import Path

        out = Path(out_dir)
        out.mkdir(parents=True, exist_ok=True)
        (out / f"{stem}.csv").write_text(self.to_csv())
        (out / f"{stem}.json").write_text(json.dumps(self.to_json(), indent=2) + "\n")
        return out / f"{stem}.csv", out / f"{stem}.json"


def parse_family(spec: str) -> list[tuple[str, Graph]]:
    """Expand ``name:lo-hi`` (or ``name:k``) into named graphs.

    ``complete_bipartite:lo-hi`` yields every ``K(a, b)`` with
    ``lo <= a <= b <= hi``.
    """
    name, _, rng = spec.partition(":")
    if not rng:
        raise ValueError(f"family {spec!r} needs a size, e.g. {name}:3-9")
    try:
        lo, _, hi = rng.partition("-")
        lo_i = int(lo)
        hi_i = int(hi) if hi else lo_i
    except ValueError:
        raise ValueError(f"bad size range in {spec!r}") from None
    if name == "complete_bipartite":
        return [
            (f"complete_bipartite{a}x{b}", make_complete_bipartite(a, b))
            for a in range(lo_i, hi_i + 1)
            for b in range(a, hi_i + 1)
        ]
    if name not in FAMILY_BUILDERS:
        raise ValueError(f"unknown family {name!r}")
    return [(f"{name}{k}", FAMILY_BUILDERS[name](k)) for k in range(lo_i, hi_i + 1)]


def sweep_instances(
    max_n: int | None = None,
    families: list[str] = (),
    connected_only: bool = True,
    cap: int = DEFAULT_ENUMERATION_CAP,
) -> list[tuple[str, Graph]]:
    out = []
    if max_n is not None:
        if max_n > cap:
            raise ResourceLimitError(f"--max-n {max_n} exceeds enumeration cap {cap}")
        for n in range(1, max_n + 1):
            for mask, g in enumerate_labeled_graphs(n, connected_only, cap):
                out.append((f"n{n}_mask{mask}", g))
    for spec in families:
        out.extend(parse_family(spec))
    return out


def sweep_row(item: tuple[str, Graph, bool, bool]) -> SweepRow:
    gid, g, extended, pin_apex = item
    lg = mycielski(g)
    opts = SolveOptions(forced_source=lg.apex if pin_apex else None)
    res = solve(lg.graph, opts)
    row = SweepRow(
        gid, g.n, g.m, is_bipartite(g), res.outcome, res.stats.nodes, res.stats.millis
    )
    if extended:
        lx = extended_mycielski(g)
        opts = SolveOptions(forced_source=lx.apex if pin_apex else None)
        rx = solve(lx.graph, opts)
        row.mu_ext_decision, row.ext_nodes = rx.outcome, rx.stats.nodes
    return row


def run_sweep(
    instances: list[tuple[str, Graph]],
    extended: bool = False,
    pin_apex: bool = False,
    jobs: int = 1,
) -> SweepReport:
    """Solve ``mu(G)`` (and optionally ``mu'(G)``) for each instance.

    Rows come back in instance order whatever ``jobs`` is.
    """
    items = [(gid, g, extended, pin_apex) for gid, g in instances]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(sweep_row, items, chunksize=8))
    else:
        rows = [sweep_row(it) for it in items]
    return SweepReport(rows, extended)
