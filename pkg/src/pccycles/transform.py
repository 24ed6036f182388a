"""Doubling an undirected graph into a digraph, and merging colors into two classes."""

from __future__ import annotations

from typing import Callable, Sequence

from .core import AnyGraph, ColoredDigraph, ColoredGraph, DomainError

__all__ = ["double", "merge_colors", "recolor"]


def double(H: ColoredGraph) -> ColoredDigraph:
    """Replace each edge ``uv`` of color ``k`` by arcs ``u->v`` and ``v->u`` of color ``k``.

    PC cycles correspond both ways: a PC cycle of ``H`` traversed in either
    direction is a PC directed cycle of the result, and a monochromatic
    antiparallel pair is never properly colored.
    """
    if H.directed:
        raise DomainError("double needs an undirected graph")
    arcs = []
    for u, v, k in H.edges:
        arcs.append((u, v, k))
        arcs.append((v, u, k))
    return ColoredDigraph(H.n, H.c, tuple(arcs))


def recolor(G: AnyGraph, mapping: Callable[[int], int] | Sequence[int], c_new: int) -> AnyGraph:
    """Apply a color map to every edge, keeping the edge set unchanged.

    ``mapping`` is either a callable or a sequence indexed by ``color - 1``.
    """
    if not callable(mapping):
        table = list(mapping)
        if len(table) != G.c:
            raise DomainError(f"mapping has {len(table)} entries, expected {G.c}")
        mapping = lambda k: table[k - 1]  # noqa: E731
    edges = tuple((u, v, mapping(k)) for u, v, k in G.edges)
    return type(G)(G.n, c_new, edges)


def merge_colors(D: AnyGraph) -> AnyGraph:
    """Map colors ``1..floor(c/2)`` to 1 and the rest to 2.

    A PC cycle of the merged graph is a PC cycle of ``D`` with the same arc
    sequence; the converse fails in general.
    """
    if D.c < 2:
        raise DomainError(f"merge needs c >= 2, got {D.c}")
    half = D.c // 2
    return recolor(D, lambda k: 1 if k <= half else 2, 2)
