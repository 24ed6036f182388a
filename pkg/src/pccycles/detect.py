"""Deciding and certifying properly colored (PC) cycles.

Undirected graphs are decided in polynomial time by separating-vertex
elimination.  A vertex ``z`` separates a connected vertex set ``R`` when every
component of ``R - z`` meets ``z`` in edges of a single color.  No PC cycle can
pass through such a ``z`` (the cycle minus ``z`` is a path inside one
component, so both cycle edges at ``z`` share a color), so ``z`` can be
discarded.  Conversely every PC-cycle-free graph on at least three vertices
has a separating vertex in each component, so a component that admits none
contains a PC cycle.

Directed graphs are handled by exhaustive search only; the problem is
NP-complete there.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Optional, Union

from .core import (
    AnyGraph,
    ColoredDigraph,
    ColoredGraph,
    DomainError,
    PcCycleCertificate,
    PcgError,
)

__all__ = [
    "SearchLimitError",
    "EliminationCertificate",
    "DetectionResult",
    "decide_pc_undirected",
    "find_pc_cycle_exhaustive",
    "find_pc_cycle_directed",
    "longest_pc_cycle",
    "has_pc_cycle",
    "components",
    "separating_vertex",
]

DEFAULT_MAX_N_UNDIRECTED = 12
DEFAULT_MAX_N_DIRECTED = 10


class SearchLimitError(PcgError):
    """An exhaustive search was refused because the input exceeds its limit."""


@dataclass(frozen=True)
class EliminationCertificate:
    """Ordered separating vertices plus the terminal residual sets (size <= 2)."""

    steps: tuple[tuple[int, frozenset[int]], ...]
    terminal: tuple[frozenset[int], ...]

    def replay(self, G: ColoredGraph) -> bool:
        """Re-check every step against ``G`` and that the sets cover ``V(G)``.

        Each residual set must be connected in ``G``, ``z`` must separate it,
        and the components of ``residual - z`` must be exactly the residual
        sets produced by that step.
        """
        pending = {frozenset(comp) for comp in components(G, range(G.n))}
        for z, residual in self.steps:
            if residual not in pending or z not in residual:
                return False
            pending.remove(residual)
            if not _separates(G, z, residual):
                return False
            for comp in components(G, residual - {z}):
                pending.add(frozenset(comp))
        for comp in self.terminal:
            if comp not in pending or len(comp) > 2:
                return False
            pending.remove(comp)
        return not pending

    def to_dict(self) -> dict:
        return {
            "steps": [{"vertex": z, "residual": sorted(r)} for z, r in self.steps],
            "terminal": [sorted(t) for t in self.terminal],
        }


@dataclass(frozen=True)
class DetectionResult:
    has_pc_cycle: bool
    certificate: Union[PcCycleCertificate, EliminationCertificate, None] = None
    # True when a cycle exists but extraction was declined (size limit).
    certificate_declined: bool = False
    stats: dict = field(default_factory=dict)

    @property
    def cycle(self) -> Optional[PcCycleCertificate]:
        return self.certificate if isinstance(self.certificate, PcCycleCertificate) else None

    def to_dict(self) -> dict:
        cert = None
        kind = None
        if isinstance(self.certificate, PcCycleCertificate):
            kind = "cycle"
            cert = self.certificate.to_dict()
        elif isinstance(self.certificate, EliminationCertificate):
            kind = "elimination"
            cert = self.certificate.to_dict()
        return {
            "has_pc_cycle": self.has_pc_cycle,
            "certificate_type": kind,
            "certificate": cert,
            "certificate_declined": self.certificate_declined,
            "stats": dict(self.stats),
        }


def components(G: AnyGraph, vertices) -> list[list[int]]:
    """Connected components (underlying undirected) of ``G[vertices]``, sorted."""
    allowed = set(vertices)
    seen: set[int] = set()
    out = []
    for s in sorted(allowed):
        if s in seen:
            continue
        seen.add(s)
        stack = [s]
        comp = []
        while stack:
            x = stack.pop()
            comp.append(x)
            for y in G.adj[x]:
                if y in allowed and y not in seen:
                    seen.add(y)
                    stack.append(y)
        out.append(sorted(comp))
    return out


def _separates(G: ColoredGraph, z: int, residual) -> bool:
    rest = set(residual)
    rest.discard(z)
    for comp in components(G, rest):
        seen_colors = {G.adj[z][y] for y in comp if y in G.adj[z]}
        if len(seen_colors) > 1:
            return False
    return True


def separating_vertex(G: ColoredGraph, residual) -> Optional[int]:
    """Smallest vertex of ``residual`` that separates it, or None."""
    for z in sorted(residual):
        if _separates(G, z, residual):
            return z
    return None


def _eliminate(G: ColoredGraph, vertices) -> tuple[list, list, list, int]:
    steps = []
    terminal = []
    stuck = []
    work = [frozenset(c) for c in components(G, vertices)]
    work.reverse()
    checks = 0
    while work:
        comp = work.pop()
        if len(comp) <= 2:
            terminal.append(comp)
            continue
        checks += 1
        z = separating_vertex(G, comp)
        if z is None:
            stuck.append(comp)
            continue
        steps.append((z, comp))
        subs = [frozenset(c) for c in components(G, comp - {z})]
        work.extend(reversed(subs))
    return steps, terminal, stuck, checks


def has_pc_cycle(G: ColoredGraph, vertices=None) -> bool:
    """Polynomial PC-cycle test on ``G`` (or ``G[vertices]``)."""
    if vertices is None:
        vertices = range(G.n)
    return bool(_eliminate(G, vertices)[2])


def _shrink(G: ColoredGraph, vertices) -> list[int]:
    # Drop vertices while a PC cycle survives; ends at the vertex set of one cycle.
    keep = sorted(vertices)
    for v in list(keep):
        trial = [x for x in keep if x != v]
        if has_pc_cycle(G, trial):
            keep = trial
    return keep


def decide_pc_undirected(
    G: ColoredGraph,
    want_cycle_certificate: bool = False,
    max_n: int = DEFAULT_MAX_N_UNDIRECTED,
) -> DetectionResult:
    """Decide whether ``G`` has a PC cycle, with a certificate either way.

    Negative verdicts carry an :class:`EliminationCertificate`.  With
    ``want_cycle_certificate`` a positive verdict is accompanied by an
    explicit cycle, found by first shrinking the smallest stuck component to
    a vertex-minimal set that still contains a PC cycle and then searching it
    exhaustively; when that set exceeds ``max_n`` the certificate is declined.
    """
    if G.directed:
        raise DomainError("decide_pc_undirected needs an undirected graph")
    steps, terminal, stuck, checks = _eliminate(G, range(G.n))
    stats = {"steps": len(steps), "separation_checks": checks}
    if not stuck:
        cert = EliminationCertificate(tuple(steps), tuple(terminal))
        return DetectionResult(False, cert, stats=stats)
    stats["stuck_components"] = len(stuck)
    if not want_cycle_certificate:
        return DetectionResult(True, None, stats=stats)
    smallest = min(stuck, key=lambda comp: (len(comp), sorted(comp)))
    core = _shrink(G, smallest)
    stats["shrunk_size"] = len(core)
    if len(core) > max_n:
        return DetectionResult(True, None, certificate_declined=True, stats=stats)
    sub, labels = G.induced(core)
    found = find_pc_cycle_exhaustive(sub, max_n=max_n)
    stats["nodes"] = found.stats.get("nodes", 0)
    cyc = found.cycle
    assert cyc is not None, "elimination and exhaustive search disagree"
    cert = PcCycleCertificate(tuple(labels[v] for v in cyc.vertices), cyc.colors, False)
    return DetectionResult(True, cert, stats=stats)


class _Counter:
    __slots__ = ("nodes",)

    def __init__(self):
        self.nodes = 0


def _cycles(
    G: AnyGraph, length: Optional[int], counter: _Counter
) -> Iterator[tuple[list[int], list[int]]]:
    """PC cycles of ``G`` in lexicographic order of their canonical vertex sequence.

    A cycle is listed once, starting from its smallest vertex; undirected
    cycles are oriented so that the second vertex is smaller than the last.
    ``length`` restricts the output to cycles of exactly that length.
    """
    directed = G.directed
    min_len = 2 if directed else 3
    n = G.n
    adj = [sorted(G.adj[v].items()) for v in range(n)]
    for s in range(n):
        path = [s]
        cols: list[int] = []
        on_path = [False] * n
        on_path[s] = True

        def dfs():
            counter.nodes += 1
            last = path[-1]
            k = len(path)
            if k >= min_len and (length is None or k == length):
                back = G.adj[last].get(s)
                if (
                    back is not None
                    and back != cols[-1]
                    and back != cols[0]
                    and (directed or path[1] < last)
                ):
                    yield list(path), cols + [back]
            if length is not None and k >= length:
                return
            prev = cols[-1] if cols else None
            for y, col in adj[last]:
                if y <= s or on_path[y] or col == prev:
                    continue
                path.append(y)
                cols.append(col)
                on_path[y] = True
                yield from dfs()
                on_path[y] = False
                cols.pop()
                path.pop()

        yield from dfs()


def _check_limit(G: AnyGraph, max_n: int) -> None:
    if G.n > max_n:
        raise SearchLimitError(
            f"exhaustive search refused: n={G.n} exceeds max_n={max_n}"
        )


def _exhaustive(G: AnyGraph, shortest: bool) -> DetectionResult:
    counter = _Counter()
    found = None
    if shortest:
        for length in range(2 if G.directed else 3, G.n + 1):
            found = next(_cycles(G, length, counter), None)
            if found is not None:
                break
    else:
        found = next(_cycles(G, None, counter), None)
    stats = {"nodes": counter.nodes}
    if found is None:
        return DetectionResult(False, None, stats=stats)
    vs, cs = found
    return DetectionResult(
        True, PcCycleCertificate(tuple(vs), tuple(cs), G.directed), stats=stats
    )


def find_pc_cycle_exhaustive(
    G: ColoredGraph, shortest: bool = False, max_n: int = DEFAULT_MAX_N_UNDIRECTED
) -> DetectionResult:
    """Exhaustive DFS over simple cycles of an undirected graph.

    With ``shortest`` the returned cycle has minimum length, ties broken by
    the lexicographically smallest canonical vertex sequence.
    """
    if G.directed:
        raise DomainError("find_pc_cycle_exhaustive needs an undirected graph")
    _check_limit(G, max_n)
    return _exhaustive(G, shortest)


def find_pc_cycle_directed(
    D: ColoredDigraph, max_n: int = DEFAULT_MAX_N_DIRECTED, shortest: bool = False
) -> DetectionResult:
    """Exhaustive DFS over directed simple cycles (length >= 2)."""
    if not D.directed:
        raise DomainError("find_pc_cycle_directed needs a digraph")
    _check_limit(D, max_n)
    return _exhaustive(D, shortest)


def longest_pc_cycle(G: AnyGraph, max_n: int = 10) -> Optional[PcCycleCertificate]:
    """A longest PC cycle (lexicographically first among the longest), or None."""
    _check_limit(G, max_n)
    counter = _Counter()
    for length in range(G.n, (2 if G.directed else 3) - 1, -1):
        found = next(_cycles(G, length, counter), None)
        if found is not None:
            return PcCycleCertificate(tuple(found[0]), tuple(found[1]), G.directed)
    return None
