"""Exact small-order extremal values, conjecture checks, and the invariant runner."""

from __future__ import annotations

import itertools
import logging
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional

from .construct import ParamVector, build, edge_count_of, lemma_order_bound, order_of
from .core import (
    AnyGraph,
    ColoredDigraph,
    ColoredGraph,
    DomainError,
    delta_mon,
    write_pcg,
)
from .detect import (
    DEFAULT_MAX_N_DIRECTED,
    DEFAULT_MAX_N_UNDIRECTED,
    SearchLimitError,
    decide_pc_undirected,
    find_pc_cycle_directed,
    find_pc_cycle_exhaustive,
    longest_pc_cycle,
)
from .transform import double

__all__ = [
    "SearchReport",
    "ConjectureReport",
    "VerifyReport",
    "FEASIBILITY_LIMIT",
    "search_space_size",
    "max_pcfree_delta",
    "conjecture_report",
    "verify_suite",
]

log = logging.getLogger(__name__)

FEASIBILITY_LIMIT = 10**9
# Fixed so that chunk boundaries, and therefore every statistic, do not
# depend on the thread count.
_CHUNK_TARGET = 64


@dataclass(frozen=True)
class SearchReport:
    n: int
    c: int
    directed: bool
    max_delta: int
    witness: AnyGraph
    examined: int
    stats: dict = field(default_factory=dict)

    @property
    def mode(self) -> str:
        return "directed" if self.directed else "undirected"

    @property
    def d_exact(self) -> int:
        return self.max_delta + 1

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "c": self.c,
            "mode": self.mode,
            "max_delta": self.max_delta,
            "d_exact": self.d_exact,
            "examined": self.examined,
            "witness": {"n": self.witness.n, "c": self.witness.c,
                        "edges": [list(e) for e in self.witness.edges]},
            "stats": dict(self.stats),
        }


def _pairs(n: int, directed: bool) -> list[tuple[int, int]]:
    if directed:
        return [(u, v) for u in range(n) for v in range(n) if u != v]
    return list(itertools.combinations(range(n), 2))


def search_space_size(n: int, c: int, directed: bool = False) -> int:
    return (c + 1) ** len(_pairs(n, directed))


def _pc_path(adj, src, dst, first_forbidden, last_forbidden) -> bool:
    """Is there a properly colored path ``src -> dst`` with the given end constraints?

    For digraphs ``adj`` is the out-adjacency.  The first edge may not have
    color ``first_forbidden`` and the last may not have ``last_forbidden``.
    """
    on_path = {src}

    def dfs(x, prev):
        for y, col in adj[x].items():
            if col == prev or y in on_path:
                continue
            if y == dst:
                if col != last_forbidden:
                    return True
                continue
            on_path.add(y)
            if dfs(y, col):
                return True
            on_path.discard(y)
        return False

    return dfs(src, first_forbidden)


class _Enumerator:
    """Depth-first enumeration of color assignments to vertex pairs.

    Branches that close a PC cycle are cut (every extension keeps the cycle),
    as are branches whose best achievable minimum degree is below the best
    value found so far in this chunk.
    """

    def __init__(self, n, c, directed):
        self.n, self.c, self.directed = n, c, directed
        self.pairs = _pairs(n, directed)
        P = len(self.pairs)
        # remaining[idx][x]: pairs at position >= idx that can still raise a degree of x
        self.remaining = [[0] * n for _ in range(P + 1)]
        for idx in range(P - 1, -1, -1):
            row = list(self.remaining[idx + 1])
            u, v = self.pairs[idx]
            row[u] += 1
            if not directed:
                row[v] += 1
            self.remaining[idx] = row
        self.adj = [dict() for _ in range(n)]
        self.deg = [[0] * (c + 1) for _ in range(n)]
        self.edges: list[tuple[int, int, int]] = []
        self.best = -1
        self.best_key: Optional[tuple] = None
        self.stats = {"nodes": 0, "leaves": 0, "pruned_pc": 0, "pruned_bound": 0}

    def add(self, u, v, k) -> bool:
        """Add edge/arc; returns False (and leaves state unchanged) if it closes a PC cycle."""
        if _pc_path(self.adj, v, u, k, k):
            return False
        self.adj[u][v] = k
        self.deg[u][k] += 1
        if not self.directed:
            self.adj[v][u] = k
            self.deg[v][k] += 1
        self.edges.append((u, v, k))
        return True

    def remove(self, u, v, k):
        del self.adj[u][v]
        self.deg[u][k] -= 1
        if not self.directed:
            del self.adj[v][u]
            self.deg[v][k] -= 1
        self.edges.pop()

    def _bound(self, idx) -> int:
        rem = self.remaining[idx]
        return min(min(self.deg[x][1:]) + rem[x] for x in range(self.n))

    def run(self, idx):
        self.stats["nodes"] += 1
        P = len(self.pairs)
        if idx == P:
            self.stats["leaves"] += 1
            d = min(min(row[1:]) for row in self.deg)
            key = tuple(self.edges)
            if d > self.best or (d == self.best and key < self.best_key):
                self.best, self.best_key = d, key
            return
        if self.best >= 0 and self._bound(idx) < self.best:
            self.stats["pruned_bound"] += 1
            return
        self.run(idx + 1)
        u, v = self.pairs[idx]
        for k in range(1, self.c + 1):
            if self.add(u, v, k):
                self.run(idx + 1)
                self.remove(u, v, k)
            else:
                self.stats["pruned_pc"] += 1


def _run_chunk(args):
    n, c, directed, prefix = args
    en = _Enumerator(n, c, directed)
    for (u, v), k in zip(en.pairs, prefix):
        if k and not en.add(u, v, k):
            return -1, None, dict(en.stats, pruned_pc=1)
    en.run(len(prefix))
    return en.best, en.best_key, en.stats


def _chunk_depth(c: int, P: int) -> int:
    m = 0
    while m < P and (c + 1) ** m < _CHUNK_TARGET:
        m += 1
    return m


def max_pcfree_delta(
    n: int,
    c: int,
    directed: bool = False,
    threads: int = 1,
    force: bool = False,
    limit: int = FEASIBILITY_LIMIT,
) -> SearchReport:
    """Maximum minimum monochromatic degree over PC-cycle-free instances of order ``n``.

    Every assignment of {absent, 1..c} to vertex pairs (ordered pairs for
    digraphs) is covered.  The witness is the lexicographically smallest
    edge list attaining the maximum.  ``d_exact`` of the report is the
    threshold ``d(n, c)`` (or its directed analogue).
    """
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    if c < 2:
        raise DomainError(f"c must be >= 2, got {c}")
    total = search_space_size(n, c, directed)
    if total > limit and not force:
        raise SearchLimitError(
            f"search space (c+1)^pairs = {total} exceeds {limit}; pass force=True to override"
        )
    P = len(_pairs(n, directed))
    m = _chunk_depth(c, P)
    prefixes = [(n, c, directed, pre) for pre in itertools.product(range(c + 1), repeat=m)]
    if threads > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(_run_chunk, prefixes, chunksize=1))
    else:
        results = [_run_chunk(a) for a in prefixes]

    best, best_key = -1, None
    stats = {"nodes": 0, "leaves": 0, "pruned_pc": 0, "pruned_bound": 0, "chunks": len(prefixes)}
    for d, key, st in results:
        for name, val in st.items():
            stats[name] = stats.get(name, 0) + val
        if key is None:
            continue
        if d > best or (d == best and key < best_key):
            best, best_key = d, key
    cls = ColoredDigraph if directed else ColoredGraph
    witness = cls(n, c, best_key)
    _reverify_witness(witness, best)
    log.info("search n=%d c=%d %s: max delta %d", n, c, "directed" if directed else "undirected", best)
    return SearchReport(n, c, directed, best, witness, total, stats)


def _reverify_witness(W: AnyGraph, delta: int) -> None:
    if W.directed:
        res = find_pc_cycle_directed(W, max_n=max(W.n, DEFAULT_MAX_N_DIRECTED))
    else:
        res = find_pc_cycle_exhaustive(W, max_n=max(W.n, DEFAULT_MAX_N_UNDIRECTED))
    if res.has_pc_cycle or delta_mon(W) != delta:
        raise AssertionError("search witness failed re-verification")


@dataclass(frozen=True)
class ConjectureReport:
    """Comparison of the conjectured PC-cycle length against what the graph has.

    ``verdict`` is one of ``consistent``, ``violated``, ``not-applicable``
    (claimed length below 3) or ``undetermined`` (a PC cycle exists but the
    graph is too large to find the longest one).
    """

    graph: ColoredGraph
    n: int
    c: int
    d: int
    claimed: int
    claimed_base: int
    claimed_strong: Optional[int]
    observed: Optional[int]
    longest_exact: bool
    verdict: str

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "c": self.c,
            "d": self.d,
            "claimed": self.claimed,
            "claimed_min_n_cd": self.claimed_base,
            "claimed_min_n_cd_plus_1": self.claimed_strong,
            "observed": self.observed if self.observed is not None else "none",
            "longest_exact": self.longest_exact,
            "verdict": self.verdict,
        }


def conjecture_report(G: ColoredGraph, max_n_for_longest: int = 10) -> ConjectureReport:
    """Check "a PC cycle of length >= min{n, cd}" (``min{n, cd+1}`` when c > 2)."""
    if G.directed:
        raise DomainError("the conjecture concerns undirected graphs")
    d = delta_mon(G)
    base = min(G.n, G.c * d)
    strong = min(G.n, G.c * d + 1) if G.c > 2 else None
    claimed = strong if strong is not None else base
    if G.n <= max_n_for_longest:
        cyc = longest_pc_cycle(G, max_n=max_n_for_longest)
        observed = len(cyc) if cyc is not None else None
        exact = True
    else:
        res = decide_pc_undirected(G, want_cycle_certificate=True, max_n=max_n_for_longest)
        exact = not res.has_pc_cycle
        observed = len(res.cycle) if res.cycle is not None else None
    if claimed < 3:
        verdict = "not-applicable"
    elif exact:
        verdict = "violated" if (observed or 0) < claimed else "consistent"
    elif observed is not None and observed >= claimed:
        verdict = "consistent"
    else:
        verdict = "undetermined"
    return ConjectureReport(G, G.n, G.c, d, claimed, base, strong, observed, exact, verdict)


@dataclass
class VerifyReport:
    rows: dict = field(default_factory=dict)
    failures: list = field(default_factory=list)

    def record(self, check: str, ok: bool, case: str = "", graph: AnyGraph | None = None):
        row = self.rows.setdefault(check, {"pass": 0, "fail": 0})
        row["pass" if ok else "fail"] += 1
        if not ok:
            self.failures.append({"check": check, "case": case, "graph": graph})

    @property
    def ok(self) -> bool:
        return not self.failures

    def table(self) -> str:
        lines = [f"{'check':<22} {'pass':>6} {'fail':>6}"]
        for name, row in self.rows.items():
            lines.append(f"{name:<22} {row['pass']:>6} {row['fail']:>6}")
        return "\n".join(lines)

    def to_dict(self) -> dict:
        return {
            "ok": self.ok,
            "rows": self.rows,
            "failures": [{k: v for k, v in f.items() if k != "graph"} | {"file": f.get("file")}
                         for f in self.failures],
        }


def _param_vectors(max_sum: int, c: int) -> Iterable[tuple[int, ...]]:
    for p in itertools.product(range(max_sum + 1), repeat=c):
        if sum(p) <= max_sum:
            yield p


def verify_suite(
    max_sum: int = 4,
    colors: Iterable[int] = (2, 3),
    bases: Iterable[int] = (1,),
    mutate: Callable[[ColoredGraph], ColoredGraph] | None = None,
    dump_dir: str | os.PathLike | None = None,
    oracle_max_n: int = DEFAULT_MAX_N_UNDIRECTED,
    directed_max_n: int = 8,
) -> VerifyReport:
    """Run construction, detection and doubling invariants over a parameter grid.

    ``mutate`` is applied to every built graph before checking, which is how
    fault injection is exercised.  Failing cases are written as .pcg files to
    ``dump_dir`` when given.
    """
    report = VerifyReport()
    colors, bases = list(colors), list(bases)
    for c in colors:
        for b in bases:
            for p in _param_vectors(max_sum, c):
                pv = ParamVector(p)
                case = f"p={','.join(map(str, p))} b={b}"
                G = build(pv, b)
                if mutate is not None:
                    G = mutate(G)
                report.record("order", G.n == order_of(pv, b), case, G)
                report.record("edge_count", G.m == edge_count_of(pv, b), case, G)
                report.record("delta_law", delta_mon(G) == min(p), case, G)
                res = decide_pc_undirected(G)
                report.record("pc_free", not res.has_pc_cycle, case, G)
                if not res.has_pc_cycle:
                    report.record("elimination_replay", res.certificate.replay(G), case, G)
                if b == 1 and pv.s >= 1:
                    report.record("lemma_bound", G.n <= lemma_order_bound(pv.s, c), case, G)
                if G.n <= oracle_max_n:
                    ex = find_pc_cycle_exhaustive(G, max_n=oracle_max_n)
                    report.record("oracle_agreement", ex.has_pc_cycle == res.has_pc_cycle, case, G)
                if G.n <= directed_max_n:
                    dd = find_pc_cycle_directed(double(G), max_n=directed_max_n)
                    report.record("doubling", dd.has_pc_cycle == res.has_pc_cycle, case, G)
    if dump_dir is not None and report.failures:
        os.makedirs(dump_dir, exist_ok=True)
        for i, fail in enumerate(report.failures):
            path = os.path.join(dump_dir, f"fail_{i:03d}_{fail['check']}.pcg")
            write_pcg(fail["graph"], path)
            fail["file"] = path
    return report
