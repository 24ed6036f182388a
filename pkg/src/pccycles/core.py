"""Edge-colored graphs and digraphs, monochromatic degrees, and the .pcg format.

Vertices are the dense integers ``0..n-1``.  Colors are ``1..c`` everywhere a
caller can see them; the degree table stores color ``i`` in column ``i - 1``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence, Union

import numpy as np

__all__ = [
    "PcgError",
    "DomainError",
    "ParseError",
    "ColoredGraph",
    "ColoredDigraph",
    "PcCycleCertificate",
    "color_degree",
    "degree_table",
    "delta_mon",
    "delta_out_mon",
    "is_pc_cycle",
    "parse",
    "serialize",
    "read_pcg",
    "write_pcg",
]


class PcgError(ValueError):
    """Base class for errors raised by this package."""


class DomainError(PcgError):
    """An argument lies outside the domain of the operation."""


class ParseError(PcgError):
    def __init__(self, message: str, lineno: int | None = None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)


Triple = tuple[int, int, int]


def _check_header(n: int, c: int) -> None:
    if n < 0:
        raise DomainError(f"vertex count must be >= 0, got {n}")
    if c < 1:
        raise DomainError(f"color count must be >= 1, got {c}")


@dataclass(frozen=True)
class ColoredGraph:
    """Simple undirected graph with a color in ``1..c`` on every edge.

    Edges are normalized to ``u < v`` and stored sorted.  ``adj[v]`` maps each
    neighbour of ``v`` to the color of the joining edge.
    """

    n: int
    c: int
    edges: tuple[Triple, ...] = ()
    adj: tuple[dict[int, int], ...] = field(init=False, repr=False, compare=False)

    directed = False

    def __post_init__(self):
        _check_header(self.n, self.c)
        adj: list[dict[int, int]] = [{} for _ in range(self.n)]
        norm = []
        for u, v, k in self.edges:
            u, v, k = int(u), int(v), int(k)
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise DomainError(f"edge ({u}, {v}) has a vertex outside 0..{self.n - 1}")
            if u == v:
                raise DomainError(f"loop at vertex {u}")
            if not 1 <= k <= self.c:
                raise DomainError(f"color {k} outside 1..{self.c}")
            if u > v:
                u, v = v, u
            if v in adj[u]:
                raise DomainError(f"duplicate edge ({u}, {v})")
            adj[u][v] = k
            adj[v][u] = k
            norm.append((u, v, k))
        object.__setattr__(self, "edges", tuple(sorted(norm)))
        object.__setattr__(self, "adj", tuple(adj))

    @property
    def m(self) -> int:
        return len(self.edges)

    def color(self, u: int, v: int) -> int | None:
        """Color of edge ``uv`` or None when absent."""
        if not (0 <= u < self.n):
            return None
        return self.adj[u].get(v)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def induced(self, vertices: Iterable[int]) -> tuple["ColoredGraph", list[int]]:
        """Induced subgraph relabelled ``0..k-1``; also returns the old labels."""
        keep = sorted(set(vertices))
        index = {v: i for i, v in enumerate(keep)}
        edges = [
            (index[u], index[v], k)
            for u, v, k in self.edges
            if u in index and v in index
        ]
        return type(self)(len(keep), self.c, tuple(edges)), keep

    def with_edges(self, edges: Iterable[Triple]) -> "ColoredGraph":
        return type(self)(self.n, self.c, tuple(edges))


@dataclass(frozen=True)
class ColoredDigraph:
    """Loopless digraph with a color in ``1..c`` on every arc.

    At most one arc per ordered pair; antiparallel arcs may differ in color.
    ``adj[v]`` maps out-neighbours to arc colors, ``in_adj[v]`` in-neighbours.
    """

    n: int
    c: int
    edges: tuple[Triple, ...] = ()
    adj: tuple[dict[int, int], ...] = field(init=False, repr=False, compare=False)
    in_adj: tuple[dict[int, int], ...] = field(init=False, repr=False, compare=False)

    directed = True

    def __post_init__(self):
        _check_header(self.n, self.c)
        adj: list[dict[int, int]] = [{} for _ in range(self.n)]
        in_adj: list[dict[int, int]] = [{} for _ in range(self.n)]
        norm = []
        for u, v, k in self.edges:
            u, v, k = int(u), int(v), int(k)
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise DomainError(f"arc ({u}, {v}) has a vertex outside 0..{self.n - 1}")
            if u == v:
                raise DomainError(f"loop at vertex {u}")
            if not 1 <= k <= self.c:
                raise DomainError(f"color {k} outside 1..{self.c}")
            if v in adj[u]:
                raise DomainError(f"duplicate arc ({u}, {v})")
            adj[u][v] = k
            in_adj[v][u] = k
            norm.append((u, v, k))
        object.__setattr__(self, "edges", tuple(sorted(norm)))
        object.__setattr__(self, "adj", tuple(adj))
        object.__setattr__(self, "in_adj", tuple(in_adj))

    @property
    def arcs(self) -> tuple[Triple, ...]:
        return self.edges

    @property
    def m(self) -> int:
        return len(self.edges)

    def color(self, u: int, v: int) -> int | None:
        if not (0 <= u < self.n):
            return None
        return self.adj[u].get(v)

    def degree(self, v: int) -> int:
        """Out-degree."""
        return len(self.adj[v])

    def induced(self, vertices: Iterable[int]) -> tuple["ColoredDigraph", list[int]]:
        keep = sorted(set(vertices))
        index = {v: i for i, v in enumerate(keep)}
        arcs = [
            (index[u], index[v], k)
            for u, v, k in self.edges
            if u in index and v in index
        ]
        return type(self)(len(keep), self.c, tuple(arcs)), keep

    def with_edges(self, edges: Iterable[Triple]) -> "ColoredDigraph":
        return type(self)(self.n, self.c, tuple(edges))


AnyGraph = Union[ColoredGraph, ColoredDigraph]


def color_degree(G: AnyGraph, v: int, i: int) -> int:
    """Number of edges of color ``i`` at ``v`` (outgoing arcs for digraphs)."""
    if not 0 <= v < G.n:
        raise DomainError(f"vertex {v} outside 0..{G.n - 1}")
    if not 1 <= i <= G.c:
        raise DomainError(f"color {i} outside 1..{G.c}")
    return sum(1 for k in G.adj[v].values() if k == i)


def degree_table(G: AnyGraph) -> np.ndarray:
    """``(n, c)`` integer array; entry ``[x, i-1]`` is the color-``i`` degree of x."""
    table = np.zeros((G.n, G.c), dtype=np.int64)
    for x in range(G.n):
        for k in G.adj[x].values():
            table[x, k - 1] += 1
    return table


def delta_mon(G: AnyGraph) -> int:
    """Minimum monochromatic degree over all vertices and colors.

    For a digraph this is the out-degree version, same as :func:`delta_out_mon`.
    """
    if G.n == 0:
        raise DomainError("minimum monochromatic degree of the empty graph is undefined")
    return int(degree_table(G).min())


def delta_out_mon(D: ColoredDigraph) -> int:
    if not D.directed:
        raise DomainError("delta_out_mon needs a digraph")
    return delta_mon(D)


@dataclass(frozen=True)
class PcCycleCertificate:
    """A cycle ``v0 -> v1 -> ... -> v_{k-1} -> v0`` with the color of each step.

    ``colors[j]`` is the color of the edge from ``vertices[j]`` to
    ``vertices[(j + 1) % k]``.
    """

    vertices: tuple[int, ...]
    colors: tuple[int, ...]
    directed: bool = False

    def __len__(self) -> int:
        return len(self.vertices)

    def validate(self, G: AnyGraph) -> bool:
        if G.directed != self.directed:
            return False
        if len(self.colors) != len(self.vertices):
            return False
        if not is_pc_cycle(G, self.vertices):
            return False
        k = len(self.vertices)
        return all(
            G.color(self.vertices[j], self.vertices[(j + 1) % k]) == self.colors[j]
            for j in range(k)
        )

    def format(self) -> str:
        parts = []
        k = len(self.vertices)
        for j in range(k):
            parts.append(f"{self.vertices[j]} -[{self.colors[j]}]-")
        return " ".join(parts) + f"> {self.vertices[0]}"

    def to_dict(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "colors": list(self.colors),
            "directed": self.directed,
            "length": len(self.vertices),
        }


def _cycle_colors(G: AnyGraph, seq: Sequence[int]) -> list[int] | None:
    k = len(seq)
    colors = []
    for j in range(k):
        col = G.color(seq[j], seq[(j + 1) % k])
        if col is None:
            return None
        colors.append(col)
    return colors


def is_pc_cycle(G: AnyGraph, candidate: Sequence[int]) -> bool:
    """True iff ``candidate`` traces a properly colored cycle of ``G``.

    The closing vertex may be repeated at the end or omitted.
    """
    try:
        seq = [int(v) for v in candidate]
    except (TypeError, ValueError):
        return False
    if len(seq) >= 2 and seq[0] == seq[-1]:
        seq = seq[:-1]
    k = len(seq)
    if k < (2 if G.directed else 3):
        return False
    if len(set(seq)) != k or any(not 0 <= v < G.n for v in seq):
        return False
    colors = _cycle_colors(G, seq)
    if colors is None:
        return False
    return all(colors[j] != colors[j - 1] for j in range(k))


def make_certificate(G: AnyGraph, seq: Sequence[int]) -> PcCycleCertificate:
    colors = _cycle_colors(G, seq)
    if colors is None:
        raise DomainError(f"{list(seq)} is not a cycle of the graph")
    return PcCycleCertificate(tuple(seq), tuple(colors), G.directed)


def serialize(G: AnyGraph) -> str:
    """Canonical .pcg text: header, then one ``u v k`` line per edge, ascending."""
    kind = "d" if G.directed else "u"
    lines = [f"pcg {kind} {G.n} {G.c}"]
    lines.extend(f"{u} {v} {k}" for u, v, k in G.edges)
    return "\n".join(lines) + "\n"


def parse(text: str) -> AnyGraph:
    header = None
    edges: list[Triple] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if header is None:
            if len(parts) != 4 or parts[0] != "pcg" or parts[1] not in ("u", "d"):
                raise ParseError("expected header 'pcg <u|d> <n> <c>'", lineno)
            try:
                n, c = int(parts[2]), int(parts[3])
            except ValueError:
                raise ParseError("non-integer vertex or color count", lineno) from None
            if n < 0 or c < 1:
                raise ParseError(f"invalid header counts n={n} c={c}", lineno)
            header = (parts[1] == "d", n, c)
            continue
        directed, n, c = header
        if len(parts) != 3:
            raise ParseError("expected '<u> <v> <k>'", lineno)
        try:
            u, v, k = (int(x) for x in parts)
        except ValueError:
            raise ParseError("non-integer field", lineno) from None
        if u == v:
            raise ParseError(f"loop at vertex {u}", lineno)
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"vertex out of range 0..{n - 1}", lineno)
        if not 1 <= k <= c:
            raise ParseError(f"color {k} out of range 1..{c}", lineno)
        if not directed and u > v:
            raise ParseError("undirected edges must be written with u < v", lineno)
        if (u, v) in seen:
            raise ParseError(f"duplicate {'arc' if directed else 'edge'} ({u}, {v})", lineno)
        seen.add((u, v))
        edges.append((u, v, k))
    if header is None:
        raise ParseError("missing header")
    directed, n, c = header
    cls = ColoredDigraph if directed else ColoredGraph
    return cls(n, c, tuple(edges))


def read_pcg(path) -> AnyGraph:
    with open(path, encoding="ascii") as fh:
        return parse(fh.read())


def write_pcg(G: AnyGraph, path) -> None:
    with open(path, "w", encoding="ascii") as fh:
        fh.write(serialize(G))
